//! Non-attacking fillings, their statistics, the combinatorial sum for `f_μ`,
//! and the bijection with μ-legal lattice configurations.

use std::fmt;

use crate::arith::Factored;
use crate::comb::{Composition, Square};
use crate::error::{Error, Result};
use crate::matrixprod::{
    column_factors, column_twists, enumerate_configs, omega_factored, LatticeConfig, MonomialSum,
};
use crate::report::Report;
use crate::xpoly::XPolynomial;

/// A filling of the extended diagram: `sigma[i-1][j]` for `0 ≤ j ≤ μ_i`,
/// with `sigma[i-1][0] = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    pub mu: Composition,
    pub sigma: Vec<Vec<usize>>,
}

/// A filling entry, or the value above the top of a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Entry {
    Colour(usize),
    Infinity,
}

impl Filling {
    pub fn new(mu: Composition, sigma: Vec<Vec<usize>>) -> Result<Self> {
        let f = Self { mu, sigma };
        f.check_shape()?;
        Ok(f)
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.mu.n();
        if self.sigma.len() != n {
            return Err(Error::AlphabetMismatch { left: n, right: self.sigma.len() });
        }
        for (i0, col) in self.sigma.iter().enumerate() {
            if col.len() != self.mu.part(i0 + 1) as usize + 1 {
                return Err(Error::Malformed(format!("column {} has the wrong height", i0 + 1)));
            }
            if col[0] != i0 + 1 {
                return Err(Error::Malformed(format!(
                    "basement of column {} is {}",
                    i0 + 1,
                    col[0]
                )));
            }
            if col.iter().any(|&c| c < 1 || c > n) {
                return Err(Error::Malformed(format!("entry out of range in column {}", i0 + 1)));
            }
        }
        Ok(())
    }

    /// `σ_{i,j}`, or `None` outside the extended diagram.
    pub fn get(&self, i: usize, j: u32) -> Option<usize> {
        self.sigma.get(i.checked_sub(1)?)?.get(j as usize).copied()
    }

    /// `σ_{i,j}` with `∞` above the top of column `i`.
    pub fn entry(&self, i: usize, j: u32) -> Entry {
        self.get(i, j).map_or(Entry::Infinity, Entry::Colour)
    }

    /// Whether no two attacking squares share an entry.
    pub fn is_non_attacking(&self) -> bool {
        let n = self.mu.n();
        for i in 1..=n {
            for j in 0..=self.mu.part(i) {
                let a = self.sigma[i - 1][j as usize];
                for i2 in i + 1..=n {
                    if self.get(i2, j) == Some(a) {
                        return false;
                    }
                    if j >= 1 && self.get(i2, j - 1) == Some(a) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `x^σ = ∏_{j≥1} x_{σ_{i,j}}` as an exponent vector.
    pub fn x_exponents(&self) -> Vec<u32> {
        let mut e = vec![0; self.mu.n()];
        for col in &self.sigma {
            for &c in &col[1..] {
                e[c - 1] += 1;
            }
        }
        e
    }
}

impl fmt::Display for Filling {
    /// Rows top to bottom, blank where a column has ended.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.mu.maxpart();
        for j in (0..=top).rev() {
            let row: Vec<String> = (1..=self.mu.n())
                .map(|i| self.get(i, j).map_or(".".to_string(), |c| c.to_string()))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// All non-attacking fillings, built one height level at a time.
pub fn enumerate_fillings(mu: &Composition) -> Vec<Filling> {
    let n = mu.n();
    let top = mu.maxpart();
    let mut out = Vec::new();
    let mut sigma: Vec<Vec<usize>> = (1..=n).map(|i| vec![i]).collect();
    fill_level(mu, top, 1, &mut sigma, &mut out);
    out
}

fn fill_level(
    mu: &Composition,
    top: u32,
    j: u32,
    sigma: &mut Vec<Vec<usize>>,
    out: &mut Vec<Filling>,
) {
    if j > top {
        out.push(Filling { mu: mu.clone(), sigma: sigma.clone() });
        return;
    }
    let cols: Vec<usize> = (1..=mu.n()).filter(|&i| mu.part(i) >= j).collect();
    fill_square(mu, top, j, &cols, 0, sigma, out);
}

fn fill_square(
    mu: &Composition,
    top: u32,
    j: u32,
    cols: &[usize],
    idx: usize,
    sigma: &mut Vec<Vec<usize>>,
    out: &mut Vec<Filling>,
) {
    if idx == cols.len() {
        fill_level(mu, top, j + 1, sigma, out);
        return;
    }
    let n = mu.n();
    let i = cols[idx];
    for c in 1..=n {
        // same level, any column to the left
        if cols[..idx].iter().any(|&k| sigma[k - 1][j as usize] == c) {
            continue;
        }
        // one level down, any column to the right
        if (i + 1..=n).any(|k| sigma[k - 1].get(j as usize - 1) == Some(&c)) {
            continue;
        }
        sigma[i - 1].push(c);
        fill_square(mu, top, j, cols, idx + 1, sigma, out);
        sigma[i - 1].pop();
    }
}

/// The descent and ascent squares of `dg(μ)`.
pub fn descent_ascent(s: &Filling) -> (Vec<Square>, Vec<Square>) {
    let mut d = Vec::new();
    let mut a = Vec::new();
    for sq in s.mu.diagram() {
        let here = s.sigma[sq.col - 1][sq.row as usize];
        let below = s.sigma[sq.col - 1][sq.row as usize - 1];
        if here > below {
            d.push(sq);
        } else if here < below {
            a.push(sq);
        }
    }
    (d, a)
}

/// `(ord₊, ord₋)`: positive and negative ordered triples.
pub fn ordered_triples(s: &Filling) -> (u32, u32) {
    let n = s.mu.n();
    let (mut pos, mut neg) = (0, 0);
    for sq in s.mu.diagram() {
        let (i, j) = (sq.col, sq.row);
        let mid = Entry::Colour(s.sigma[i - 1][j as usize]);
        for i2 in i + 1..=n {
            let Some(low) = s.get(i2, j - 1) else { continue };
            let low = Entry::Colour(low);
            let high = s.entry(i2, j);
            if high > mid && mid > low {
                pos += 1;
            } else if high < mid && mid < low {
                neg += 1;
            }
        }
    }
    (pos, neg)
}

/// `Δ(σ) = ord₊ − ord₋`.
pub fn triple_delta(s: &Filling) -> i64 {
    let (p, m) = ordered_triples(s);
    i64::from(p) - i64::from(m)
}

/// `(1 − t) / (1 − q^{l+1} t^{a+1})` for a square.
fn turn_factor(mu: &Composition, sq: Square) -> Result<Factored> {
    let l = i64::from(mu.leg(sq)?);
    let a = i64::from(mu.arm(sq)?);
    Ok(Factored::binomial(0, 1, 1)?.mul(&Factored::binomial(l + 1, a + 1, -1)?))
}

/// `q^{l+1} t^{a}` for a square.
fn ascent_monomial(mu: &Composition, sq: Square) -> Result<Factored> {
    Ok(Factored::monomial(i64::from(mu.leg(sq)?) + 1, i64::from(mu.arm(sq)?)))
}

fn hhl_summand_factored(s: &Filling) -> Result<Factored> {
    let (d, a) = descent_ascent(s);
    let mut w = Factored::monomial(0, triple_delta(s));
    for &sq in d.iter().chain(&a) {
        w = w.mul(&turn_factor(&s.mu, sq)?);
    }
    for &sq in &a {
        w = w.mul(&ascent_monomial(&s.mu, sq)?);
    }
    Ok(w)
}

/// The summand `x^σ t^{Δ(σ)} ∏_𝒟 ⋯ ∏_𝒜 ⋯`.
pub fn hhl_summand(s: &Filling) -> Result<XPolynomial> {
    Ok(XPolynomial::term(s.x_exponents(), hhl_summand_factored(s)?.to_qtrational()))
}

/// The sum of [`hhl_summand`] over all non-attacking fillings.
pub fn f_hhl(mu: &Composition) -> Result<XPolynomial> {
    let mut sum = MonomialSum::new(mu.n());
    for s in enumerate_fillings(mu) {
        sum.add(s.x_exponents(), hhl_summand_factored(&s)?);
    }
    sum.finish()
}

/// `𝔐(ξ)`: `σ_{a,j}` is the row of colour `a` in column `j`.
pub fn bijection_m(xi: &LatticeConfig, mu: &Composition) -> Result<Filling> {
    let n = mu.n();
    let basement: Vec<usize> = (1..=n).collect();
    xi.check_legal(mu, &basement)?;
    let mut sigma = Vec::with_capacity(n);
    for a in 1..=n {
        let mut col = Vec::new();
        for j in 0..=mu.part(a) as usize {
            let r = xi.row_of(a, j).ok_or_else(|| {
                Error::IllegalConfiguration(format!("colour {a} missing from column {j}"))
            })?;
            col.push(r);
        }
        sigma.push(col);
    }
    Filling::new(mu.clone(), sigma)
}

/// `𝔐⁻¹(σ)`: `k^{(j)}_{σ_{a,j}} = a`.
pub fn bijection_m_inverse(s: &Filling) -> LatticeConfig {
    let n = s.mu.n();
    let mut k = vec![vec![0; n]; s.mu.maxpart() as usize + 1];
    for (a0, col) in s.sigma.iter().enumerate() {
        for (j, &r) in col.iter().enumerate() {
            k[j][r - 1] = a0 + 1;
        }
    }
    LatticeConfig { k }
}

/// Checks `|Ξ(μ)| = |𝔖(μ)|` and that `𝔐` and `𝔐⁻¹` are mutually inverse.
pub fn bijection_check(mu: &Composition) -> Report {
    let mut r = Report::new(format!("bijection {mu}"));
    let configs = enumerate_configs(mu);
    let fillings = enumerate_fillings(mu);
    r.record(
        "counts",
        configs.len() == fillings.len(),
        format!("{} configurations, {} fillings", configs.len(), fillings.len()),
    );
    let basement: Vec<usize> = (1..=mu.n()).collect();
    for xi in &configs {
        let label = format!("{:?}", xi.k);
        match bijection_m(xi, mu) {
            Ok(s) => {
                let ok = s.is_non_attacking() && bijection_m_inverse(&s) == *xi;
                r.record(label, ok, format!("image\n{s}"));
            }
            Err(e) => r.fail(label, e.to_string()),
        }
    }
    for s in &fillings {
        let xi = bijection_m_inverse(s);
        let ok = xi.check_legal(mu, &basement).is_ok()
            && bijection_m(&xi, mu).is_ok_and(|back| back == *s);
        r.record(format!("filling\n{s}"), ok, "");
    }
    r
}

/// The separate factor identities matching one configuration weight with the
/// corresponding filling summand.
fn match_pieces(xi: &LatticeConfig, s: &Filling) -> Result<Vec<(&'static str, bool, String)>> {
    let mu = &s.mu;
    let n = mu.n();
    let mut allowed = true;
    let mut xexp = vec![0u32; n];
    let mut norm = Factored::one();
    let mut turns = Factored::one();
    let mut t_up = 0u32;
    let mut down = Factored::one();
    for j in 0..xi.k.len() {
        let (left, right) = xi.column(j);
        let cf = column_factors(left, &right, &column_twists(mu, j as u32)?)?;
        allowed &= cf.allowed;
        for &b in &cf.x_rows {
            xexp[b - 1] += 1;
        }
        norm = norm.mul(&cf.norm);
        turns = turns.mul(&cf.turns);
        t_up += cf.t_g + cf.t_h_up;
        down = down.mul(&cf.down);
    }
    let (d, a) = descent_ascent(s);
    let (ord_plus, ord_minus) = ordered_triples(s);
    let mut hhl_turns = Factored::one();
    for &sq in d.iter().chain(&a) {
        hhl_turns = hhl_turns.mul(&turn_factor(mu, sq)?);
    }
    let mut hhl_down = Factored::monomial(0, -i64::from(ord_minus));
    for &sq in &a {
        hhl_down = hhl_down.mul(&ascent_monomial(mu, sq)?);
    }
    let omega_norm = omega_factored(mu).mul(&norm).to_qtrational();
    let turns_q = turns.to_qtrational();
    let hhl_turns_q = hhl_turns.to_qtrational();
    let down_q = down.to_qtrational();
    let hhl_down_q = hhl_down.to_qtrational();
    Ok(vec![
        ("indicators", allowed, String::new()),
        ("x-factor", xexp == s.x_exponents(), format!("{xexp:?} vs {:?}", s.x_exponents())),
        ("omega cancellation", omega_norm.is_one(), format!("{omega_norm}")),
        ("turn denominators", turns_q == hhl_turns_q, format!("{turns_q} vs {hhl_turns_q}")),
        ("t^ord+", t_up == ord_plus, format!("{t_up} vs {ord_plus}")),
        ("ascent piece", down_q == hhl_down_q, format!("{down_q} vs {hhl_down_q}")),
    ])
}

/// For every configuration, `w(ξ) = W(𝔐(ξ))` exactly, plus each factor identity.
pub fn weight_match_check(mu: &Composition) -> Report {
    let mut r = Report::new(format!("weight match {mu}"));
    for xi in enumerate_configs(mu) {
        let label = format!("{:?}", xi.k);
        let res = (|| -> Result<()> {
            let s = bijection_m(&xi, mu)?;
            let w = crate::matrixprod::config_weight(&xi, mu)?;
            let h = hhl_summand(&s)?;
            r.record(format!("{label} weight"), w == h, format!("{w} vs {h}"));
            for (name, ok, detail) in match_pieces(&xi, &s)? {
                r.record(format!("{label} {name}"), ok, detail);
            }
            Ok(())
        })();
        if let Err(e) = res {
            r.fail(label, e.to_string());
        }
    }
    r
}
