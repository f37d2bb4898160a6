//! Compositions and the combinatorial statistics built on them.
//!
//! Colours and rows are 1-based, columns 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::QTRational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

/// A box `(i, j)`: column `i` (1-based), height `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub col: usize,
    pub row: u32,
}

impl Square {
    pub fn new(col: usize, row: u32) -> Self {
        Self { col, row }
    }
}

/// The two orders on compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// Partial sums dominated, compositions distinct.
    Dominance,
    /// `ν ≺ μ`: sorted parts strictly dominated, or equal and `ν` dominated.
    Bracket,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Malformed("a composition needs at least one part".into()));
        }
        Ok(Self { parts })
    }

    pub fn zeros(n: usize) -> Self {
        Self { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn maxpart(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `μ_i`, 1-based.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    /// `(μ_n, …, μ_1)`.
    pub fn reversed(&self) -> Self {
        Self { parts: self.parts.iter().rev().copied().collect() }
    }

    /// Parts sorted in weakly decreasing order.
    pub fn sorted_desc(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, lo: 1, hi: self.n() });
        }
        Ok(())
    }

    fn check_column(&self, j: u32) -> Result<()> {
        if j > self.maxpart() {
            return Err(Error::IndexOutOfRange {
                index: j as usize,
                lo: 0,
                hi: self.maxpart() as usize,
            });
        }
        Ok(())
    }

    /// `η_i = −#{j<i: μ_j>μ_i} − #{j>i: μ_j≥μ_i}`.
    pub fn eta(&self, i: usize) -> Result<i64> {
        self.check_index(i)?;
        let m = self.part(i);
        let before = self.parts[..i - 1].iter().filter(|&&x| x > m).count();
        let after = self.parts[i..].iter().filter(|&&x| x >= m).count();
        Ok(-(before as i64) - after as i64)
    }

    /// `y_i = q^{μ_i} t^{η_i + i − 1}`.
    pub fn eigenvalue_y(&self, i: usize) -> Result<QTRational> {
        let e = self.eta(i)?;
        Ok(QTRational::monomial(self.part(i) as i64, e + i as i64 - 1))
    }

    /// All eigenvalues `(y_1, …, y_n)`.
    pub fn spectrum(&self) -> Vec<QTRational> {
        (1..=self.n()).map(|i| self.eigenvalue_y(i).expect("index in range")).collect()
    }

    /// `γ_{i,j} = −#{k<i: μ_k>μ_i} + #{k>i: j ≤ μ_k < μ_i}`.
    pub fn gamma(&self, i: usize, j: u32) -> Result<i64> {
        self.check_index(i)?;
        self.check_column(j)?;
        let m = self.part(i);
        let before = self.parts[..i - 1].iter().filter(|&&x| x > m).count();
        let after = self.parts[i..].iter().filter(|&&x| j <= x && x < m).count();
        Ok(after as i64 - before as i64)
    }

    /// `α_{i,j} = #{k<i: μ_k=μ_i} + #{k≠i: j<μ_k<μ_i} + #{k>i: μ_k=j}`.
    pub fn alpha(&self, i: usize, j: u32) -> Result<u32> {
        self.check_index(i)?;
        self.check_column(j)?;
        Ok(self.alpha_unchecked(i, j))
    }

    fn alpha_unchecked(&self, i: usize, j: u32) -> u32 {
        let m = self.part(i);
        let mut count = 0;
        for (k0, &x) in self.parts.iter().enumerate() {
            let k = k0 + 1;
            if k < i && x == m {
                count += 1;
            }
            if k != i && j < x && x < m {
                count += 1;
            }
            if k > i && x == j {
                count += 1;
            }
        }
        count
    }

    /// `v_{i,j} = q^{μ_i−j} t^{γ_{i,j}}` when `μ_i > j`, else 0.
    pub fn v_param(&self, i: usize, j: u32) -> Result<QTRational> {
        let g = self.gamma(i, j)?;
        let m = self.part(i);
        if m > j {
            Ok(QTRational::monomial((m - j) as i64, g))
        } else {
            Ok(QTRational::zero())
        }
    }

    /// `Ω_μ = ∏_i ∏_{j<μ_i} (1 − q^{μ_i−j} t^{α_{i,j}})`.
    pub fn omega_norm(&self) -> QTRational {
        let mut acc = QTRational::one();
        for i in 1..=self.n() {
            let m = self.part(i);
            for j in 0..m {
                acc = &acc * &QTRational::one_minus_monomial(m - j, self.alpha_unchecked(i, j));
            }
        }
        acc
    }

    pub fn in_diagram(&self, s: Square) -> bool {
        s.col >= 1 && s.col <= self.n() && s.row >= 1 && s.row <= self.part(s.col)
    }

    pub fn in_extended_diagram(&self, s: Square) -> bool {
        s.col >= 1 && s.col <= self.n() && s.row <= self.part(s.col)
    }

    fn check_square(&self, s: Square) -> Result<()> {
        if !self.in_diagram(s) {
            return Err(Error::SquareOutsideDiagram { col: s.col, row: s.row });
        }
        Ok(())
    }

    /// `l(s) = μ_i − j`.
    pub fn leg(&self, s: Square) -> Result<u32> {
        self.check_square(s)?;
        Ok(self.part(s.col) - s.row)
    }

    /// `a(s) = α_{i,j−1}`.
    pub fn arm(&self, s: Square) -> Result<u32> {
        self.check_square(s)?;
        Ok(self.alpha_unchecked(s.col, s.row - 1))
    }

    /// Columns `k < i` with `j ≤ μ_k ≤ μ_i`.
    pub fn arm_left(&self, s: Square) -> Result<Vec<usize>> {
        self.check_square(s)?;
        let m = self.part(s.col);
        Ok((1..s.col).filter(|&k| s.row <= self.part(k) && self.part(k) <= m).collect())
    }

    /// Columns `k > i` with `j − 1 ≤ μ_k < μ_i`.
    pub fn arm_right(&self, s: Square) -> Result<Vec<usize>> {
        self.check_square(s)?;
        let m = self.part(s.col);
        Ok((s.col + 1..=self.n())
            .filter(|&k| s.row - 1 <= self.part(k) && self.part(k) < m)
            .collect())
    }

    /// All squares of the diagram, column by column.
    pub fn diagram(&self) -> Vec<Square> {
        (1..=self.n()).flat_map(|i| (1..=self.part(i)).map(move |j| Square::new(i, j))).collect()
    }
}

/// Whether `s` attacks `s2`: same row, or `s` one row above, with `s` strictly left.
pub fn attacks(s: Square, s2: Square) -> bool {
    s.col < s2.col && (s.row == s2.row || s.row == s2.row + 1)
}

fn dominated(nu: &[u32], mu: &[u32]) -> bool {
    let mut a = 0u64;
    let mut b = 0u64;
    for (x, y) in nu.iter().zip(mu) {
        a += *x as u64;
        b += *y as u64;
        if a > b {
            return false;
        }
    }
    nu != mu
}

/// Strict comparison `ν < μ` or `ν ≺ μ`.
pub fn precedes(nu: &Composition, mu: &Composition, order: Order) -> Result<bool> {
    if nu.n() != mu.n() {
        return Err(Error::AlphabetMismatch { left: nu.n(), right: mu.n() });
    }
    Ok(match order {
        Order::Dominance => dominated(nu.parts(), mu.parts()),
        Order::Bracket => {
            let (a, b) = (nu.sorted_desc(), mu.sorted_desc());
            if a == b {
                dominated(nu.parts(), mu.parts())
            } else {
                dominated(a.parts(), b.parts())
            }
        }
    })
}

/// All compositions with `n` parts, each at most `maxpart`, in lex order.
pub fn compositions(n: usize, maxpart: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        out.push(Composition { parts: cur.clone() });
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < maxpart {
                cur[k] += 1;
                for x in cur.iter_mut().skip(k + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// All compositions with `n` parts and total size at most `size`.
pub fn compositions_up_to_size(n: usize, size: u32) -> Vec<Composition> {
    compositions(n, size).into_iter().filter(|c| c.size() <= size).collect()
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses a comma-separated list such as `0,4,4,1,5`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad composition part {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}
