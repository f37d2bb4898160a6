//! Column operators in closed form, μ-legal lattice configurations on the
//! cylinder, and the matrix-product evaluation of `f_μ` and `f^ρ_μ`.

use std::collections::{BTreeMap, BTreeSet};

use crate::arith::{Factored, FactoredSum, QTRational};
use crate::comb::Composition;
use crate::error::{Error, Result};
use crate::hecke::apply_t;
use crate::report::Report;
use crate::vertex::{row_operator_apply, RowParam, TruncatedState};
use crate::xpoly::XPolynomial;

/// A twist parameter: zero, or the monomial `q^q t^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Zero,
    Monomial { q: i64, t: i64 },
}

impl Twist {
    pub fn is_zero(&self) -> bool {
        matches!(self, Twist::Zero)
    }

    pub fn to_qtrational(&self) -> QTRational {
        match *self {
            Twist::Zero => QTRational::zero(),
            Twist::Monomial { q, t } => QTRational::monomial(q, t),
        }
    }

    fn factored(&self) -> Factored {
        match *self {
            Twist::Zero => Factored::zero(),
            Twist::Monomial { q, t } => Factored::monomial(q, t),
        }
    }

    /// `(1 − v t^s)^e`.
    fn one_minus(&self, s: u32, e: i32) -> Result<Factored> {
        match *self {
            Twist::Zero => Ok(Factored::one()),
            Twist::Monomial { q, t } => Factored::binomial(q, t + i64::from(s), e),
        }
    }
}

/// `v_{i,j}(μ)` as a [`Twist`].
pub fn twist(mu: &Composition, i: usize, j: u32) -> Result<Twist> {
    let g = mu.gamma(i, j)?;
    let m = mu.part(i);
    Ok(if m > j { Twist::Monomial { q: i64::from(m - j), t: g } } else { Twist::Zero })
}

/// The twists of column `j`, indexed by colour (slot 0 unused).
pub fn column_twists(mu: &Composition, j: u32) -> Result<Vec<Twist>> {
    let mut v = vec![Twist::Zero];
    for i in 1..=mu.n() {
        v.push(twist(mu, i, j)?);
    }
    Ok(v)
}

/// Left and right edge states of one column, read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnBoundary {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl ColumnBoundary {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        let b = Self { left, right };
        b.check()?;
        Ok(b)
    }

    pub fn n(&self) -> usize {
        self.left.len()
    }

    fn check(&self) -> Result<()> {
        let n = self.left.len();
        if self.right.len() != n {
            return Err(Error::AlphabetMismatch { left: n, right: self.right.len() });
        }
        let mut left_mult = vec![0u32; n + 1];
        let mut right_mult = vec![0u32; n + 1];
        for (&i, &j) in self.left.iter().zip(&self.right) {
            if i > n || j > n {
                return Err(Error::Inadmissible(format!("colour out of range in {self:?}")));
            }
            left_mult[i] += 1;
            right_mult[j] += 1;
        }
        for k in 1..=n {
            if left_mult[k] > 1 || right_mult[k] > left_mult[k] {
                return Err(Error::Inadmissible(format!(
                    "colour {k} has multiplicities {} and {}",
                    left_mult[k], right_mult[k]
                )));
            }
        }
        Ok(())
    }

    /// The colours leaving through the top, as a binary vector.
    pub fn top_exit(&self) -> Vec<u32> {
        let n = self.n();
        let mut e = vec![0; n];
        for &i in &self.left {
            if i >= 1 && !self.right.contains(&i) {
                e[i - 1] = 1;
            }
        }
        e
    }
}

/// Colours exiting through the top (`p`) and through the right (`q`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourData {
    pub p: BTreeSet<usize>,
    pub q: BTreeSet<usize>,
}

/// Rows where colours enter (`a`) and exit to the right (`b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinates {
    pub a: BTreeMap<usize, usize>,
    pub b: BTreeMap<usize, usize>,
}

pub fn colour_data(left: &[usize], right: &[usize]) -> Result<ColourData> {
    ColumnBoundary::new(left.to_vec(), right.to_vec())?;
    let mut p = BTreeSet::new();
    let mut q = BTreeSet::new();
    for &i in left.iter().filter(|&&i| i >= 1) {
        if right.contains(&i) {
            q.insert(i);
        } else {
            p.insert(i);
        }
    }
    Ok(ColourData { p, q })
}

pub fn coordinates(left: &[usize], right: &[usize]) -> Result<Coordinates> {
    ColumnBoundary::new(left.to_vec(), right.to_vec())?;
    let rows = |v: &[usize]| -> BTreeMap<usize, usize> {
        v.iter().enumerate().filter(|(_, &c)| c >= 1).map(|(r, &c)| (c, r + 1)).collect()
    };
    Ok(Coordinates { a: rows(left), b: rows(right) })
}

/// Whether `x` lies in the cyclic open interval `(a, b)` of `{1, …, n}`.
pub fn in_cyclic_interval(a: usize, b: usize, x: usize, n: usize) -> bool {
    use std::cmp::Ordering;
    match a.cmp(&b) {
        Ordering::Less => a < x && x < b,
        Ordering::Greater => (a < x && x <= n) || (1 <= x && x < b),
        Ordering::Equal => false,
    }
}

/// The exponents `f`, `g`, `h` of a column.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ColumnExponents {
    pub f: BTreeMap<usize, u32>,
    pub g: BTreeMap<usize, u32>,
    pub h: BTreeMap<usize, u32>,
}

pub fn exponents_fgh(data: &ColourData, coords: &Coordinates, n: usize) -> ColumnExponents {
    let mut out = ColumnExponents::default();
    for &p in data.p.iter().chain(&data.q) {
        let smaller: Vec<usize> = data.q.iter().copied().filter(|&l| l < p).collect();
        out.f.insert(p, smaller.len() as u32);
        let ap = coords.a[&p];
        if data.p.contains(&p) {
            let g = smaller.iter().filter(|l| ap < coords.b[l]).count();
            out.g.insert(p, g as u32);
        } else {
            let bp = coords.b[&p];
            let h = smaller.iter().filter(|l| in_cyclic_interval(ap, bp, coords.b[l], n)).count();
            out.h.insert(p, h as u32);
        }
    }
    out
}

/// The closed-form column component split into the pieces that the
/// weight-matching argument compares one at a time.
#[derive(Clone, Debug)]
pub struct ColumnFactors {
    /// `false` when some `p > ℓ` has `a_p = b_ℓ`.
    pub allowed: bool,
    /// `Σ_{p∈P} g(p)`.
    pub t_g: u32,
    /// `b_p` for each `p ∈ Q`.
    pub x_rows: Vec<usize>,
    /// `∏_{p∈P∪Q} 1/(1 − v_p t^{f(p)})`.
    pub norm: Factored,
    /// `∏_{p∈Q, a_p≠b_p} (1 − t)/(1 − v_p t^{f(p)+1})`.
    pub turns: Factored,
    /// `Σ h(p)` over `p ∈ Q` with `a_p < b_p`.
    pub t_h_up: u32,
    /// `∏ v_p t^{h(p)}` over `p ∈ Q` with `a_p > b_p`.
    pub down: Factored,
}

impl ColumnFactors {
    pub fn coefficient(&self) -> Factored {
        if !self.allowed {
            return Factored::zero();
        }
        Factored::monomial(0, i64::from(self.t_g + self.t_h_up))
            .mul(&self.norm)
            .mul(&self.turns)
            .mul(&self.down)
    }
}

pub fn column_factors(left: &[usize], right: &[usize], v: &[Twist]) -> Result<ColumnFactors> {
    let n = left.len();
    let data = colour_data(left, right)?;
    if v.len() != n + 1 {
        return Err(Error::AlphabetMismatch { left: n + 1, right: v.len() });
    }
    for (r, tw) in v.iter().enumerate().skip(1) {
        if !tw.is_zero() && !data.p.contains(&r) && !data.q.contains(&r) {
            return Err(Error::NonzeroTwist { colour: r });
        }
    }
    let coords = coordinates(left, right)?;
    let ex = exponents_fgh(&data, &coords, n);
    let mut allowed = true;
    for &p in data.p.iter().chain(&data.q) {
        for &l in data.q.iter().filter(|&&l| l < p) {
            if coords.a[&p] == coords.b[&l] {
                allowed = false;
            }
        }
    }
    let t_g = data.p.iter().map(|p| ex.g[p]).sum();
    let x_rows = data.q.iter().map(|p| coords.b[p]).collect();
    let mut norm = Factored::one();
    for &p in data.p.iter().chain(&data.q) {
        norm = norm.mul(&v[p].one_minus(ex.f[&p], -1)?);
    }
    let mut turns = Factored::one();
    let mut t_h_up = 0;
    let mut down = Factored::one();
    let one_minus_t = Factored::binomial(0, 1, 1)?;
    for &p in &data.q {
        let (ap, bp) = (coords.a[&p], coords.b[&p]);
        if ap == bp {
            continue;
        }
        turns = turns.mul(&one_minus_t).mul(&v[p].one_minus(ex.f[&p] + 1, -1)?);
        if ap < bp {
            t_h_up += ex.h[&p];
        } else {
            down = down.mul(&v[p].factored()).mul(&Factored::monomial(0, i64::from(ex.h[&p])));
        }
    }
    Ok(ColumnFactors { allowed, t_g, x_rows, norm, turns, t_h_up, down })
}

/// One column weight: an `x`-monomial (with any `q` shifts from the row
/// parameters folded into the coefficient).
#[derive(Clone, Debug)]
pub struct ColumnWeight {
    pub xexp: Vec<u32>,
    pub coeff: Factored,
}

fn column_weight(
    left: &[usize],
    right: &[usize],
    v: &[Twist],
    rows: &[RowParam],
    nvars: usize,
) -> Result<ColumnWeight> {
    let cf = column_factors(left, right, v)?;
    let mut coeff = cf.coefficient();
    let mut xexp = vec![0; nvars];
    for &b in &cf.x_rows {
        let rp = rows[b - 1];
        xexp[rp.var - 1] += 1;
        coeff = coeff.mul(&Factored::monomial(i64::from(rp.qpow), 0));
    }
    Ok(ColumnWeight { xexp, coeff })
}

/// `⟨𝓘| Λ_v(𝐞_P) |𝓙⟩` in closed form, with row `r` carrying `rows[r-1]`.
pub fn column_component(
    left: &[usize],
    right: &[usize],
    v: &[Twist],
    rows: &[RowParam],
) -> Result<XPolynomial> {
    if rows.len() != left.len() {
        return Err(Error::AlphabetMismatch { left: left.len(), right: rows.len() });
    }
    let nvars = rows.first().map_or(left.len(), |r| r.nvars);
    let w = column_weight(left, right, v, rows, nvars)?;
    Ok(XPolynomial::term(w.xexp, w.coeff.to_qtrational()))
}

/// Standard rows: row `r` carries `x_r`.
pub fn plain_rows(n: usize) -> Vec<RowParam> {
    (1..=n).map(|r| RowParam::plain(n, r)).collect()
}

/// The rotation constant `κ` in its colour-data form.
pub fn kappa_ratio(left: &[usize], right: &[usize], v: &[Twist]) -> Result<QTRational> {
    let n = left.len();
    let data = colour_data(left, right)?;
    let (i_n, j_n) = (left[n - 1], right[n - 1]);
    let mut k = QTRational::one();
    if j_n >= 1 {
        let c = data.p.iter().filter(|&&a| a > j_n).count() as i64;
        k = &k * &QTRational::monomial(0, c);
        let vj = v[j_n].to_qtrational();
        k = k.checked_div(&vj)?;
    }
    if data.p.contains(&i_n) {
        let c = data.q.iter().filter(|&&a| i_n > a).count() as i64;
        k = &k * &QTRational::monomial(0, -c);
    }
    if data.q.contains(&i_n) {
        k = &k * &v[i_n].to_qtrational();
    }
    Ok(k)
}

/// Moves the top entry to the bottom.
pub fn rotate_up(v: &[usize]) -> Vec<usize> {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    out.push(v[n - 1]);
    out.extend_from_slice(&v[..n - 1]);
    out
}

/// Rows of a rotated column after `x_i → x_{i−1}`: row 1 carries `x_n`.
pub fn rotated_rows(n: usize) -> Vec<RowParam> {
    (1..=n).map(|r| RowParam::plain(n, if r == 1 { n } else { r - 1 })).collect()
}

/// Checks `component(𝓘,𝓙) = κ · component(rotated)` for one boundary.
pub fn kappa_check(left: &[usize], right: &[usize], v: &[Twist]) -> Result<bool> {
    let n = left.len();
    let lhs = column_component(left, right, v, &plain_rows(n))?;
    let rot = column_component(&rotate_up(left), &rotate_up(right), v, &rotated_rows(n))?;
    if rot.is_zero() {
        return Ok(lhs.is_zero());
    }
    let k = kappa_ratio(left, right, v)?;
    Ok(lhs == rot.scale(&k))
}

/// A configuration: `k[j][r-1]` is the colour on the horizontal edge entering
/// column `j` in row `r`; `k[0]` is the left boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeConfig {
    pub k: Vec<Vec<usize>>,
}

impl LatticeConfig {
    pub fn n(&self) -> usize {
        self.k.first().map_or(0, Vec::len)
    }

    /// Left and right states of column `j`, the right of the last being empty.
    pub fn column(&self, j: usize) -> (&[usize], Vec<usize>) {
        let right = self.k.get(j + 1).cloned().unwrap_or_else(|| vec![0; self.n()]);
        (&self.k[j], right)
    }

    /// The row holding colour `a` in column `j`, if any.
    pub fn row_of(&self, a: usize, j: usize) -> Option<usize> {
        self.k.get(j)?.iter().position(|&c| c == a).map(|r| r + 1)
    }

    /// Checks the three legality constraints against `μ` and the basement.
    pub fn check_legal(&self, mu: &Composition, basement: &[usize]) -> Result<()> {
        let n = mu.n();
        let big_n = mu.maxpart() as usize;
        if self.k.len() != big_n + 1 || self.k.iter().any(|c| c.len() != n) {
            return Err(Error::IllegalConfiguration("wrong shape".into()));
        }
        if self.k[0] != basement {
            return Err(Error::IllegalConfiguration("basement mismatch".into()));
        }
        for (j, col) in self.k.iter().enumerate() {
            for a in 1..=n {
                let count = col.iter().filter(|&&c| c == a).count();
                let want = usize::from(j as u32 <= mu.part(a));
                if count != want {
                    return Err(Error::IllegalConfiguration(format!(
                        "colour {a} appears {count} times in column {j}"
                    )));
                }
            }
            if col.iter().any(|&c| c > n) {
                return Err(Error::IllegalConfiguration("colour out of range".into()));
            }
        }
        for j in 0..big_n {
            for r in 0..n {
                let (x, y) = (self.k[j][r], self.k[j + 1][r]);
                if y >= 1 && x > y {
                    return Err(Error::IllegalConfiguration(format!(
                        "row {} has {x} followed by {y} at column {j}",
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Checks that `rho` is a permutation of `1..=n`.
pub fn check_permutation(rho: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if rho.len() != n {
        return Err(Error::AlphabetMismatch { left: n, right: rho.len() });
    }
    for &r in rho {
        if r < 1 || r > n || seen[r] {
            return Err(Error::Malformed(format!("{rho:?} is not a permutation of 1..={n}")));
        }
        seen[r] = true;
    }
    Ok(())
}

/// All μ-legal configurations with the identity basement.
pub fn enumerate_configs(mu: &Composition) -> Vec<LatticeConfig> {
    enumerate_configs_with(mu, &identity(mu.n())).expect("identity is a permutation")
}

/// All μ-legal configurations whose left boundary lists `basement` bottom to top.
pub fn enumerate_configs_with(mu: &Composition, basement: &[usize]) -> Result<Vec<LatticeConfig>> {
    let n = mu.n();
    check_permutation(basement, n)?;
    let big_n = mu.maxpart() as usize;
    let mut out = Vec::new();
    let mut cols = vec![basement.to_vec()];
    extend_configs(mu, big_n, &mut cols, &mut out);
    Ok(out)
}

fn extend_configs(
    mu: &Composition,
    big_n: usize,
    cols: &mut Vec<Vec<usize>>,
    out: &mut Vec<LatticeConfig>,
) {
    let j = cols.len();
    if j > big_n {
        out.push(LatticeConfig { k: cols.clone() });
        return;
    }
    let n = mu.n();
    let active: Vec<usize> = (1..=n).filter(|&a| mu.part(a) as usize >= j).collect();
    let prev = cols[j - 1].clone();
    let mut col = vec![0; n];
    place(&active, 0, &prev, &mut col, &mut |c| {
        cols.push(c.to_vec());
        extend_configs(mu, big_n, cols, out);
        cols.pop();
    });
}

/// Injective placements of `active[idx..]` into free rows of `col`, never
/// putting a colour to the right of a larger one.
fn place(
    active: &[usize],
    idx: usize,
    prev: &[usize],
    col: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if idx == active.len() {
        emit(col);
        return;
    }
    let a = active[idx];
    for r in 0..col.len() {
        if col[r] != 0 || prev[r] > a {
            continue;
        }
        col[r] = a;
        place(active, idx + 1, prev, col, emit);
        col[r] = 0;
    }
}

/// Product of column weights of a configuration given in row positions, with
/// no `Ω` factor.
fn lattice_weight(
    mu: &Composition,
    cols: &[Vec<usize>],
    rows: &[RowParam],
) -> Result<ColumnWeight> {
    let n = mu.n();
    let mut xexp = vec![0; n];
    let mut coeff = Factored::one();
    let zeros = vec![0; n];
    for j in 0..cols.len() {
        let right = cols.get(j + 1).unwrap_or(&zeros);
        let v = column_twists(mu, j as u32)?;
        let w = column_weight(&cols[j], right, &v, rows, n)?;
        coeff = coeff.mul(&w.coeff);
        if coeff.is_zero() {
            return Ok(ColumnWeight { xexp: vec![0; n], coeff });
        }
        for (a, b) in xexp.iter_mut().zip(&w.xexp) {
            *a += b;
        }
    }
    Ok(ColumnWeight { xexp, coeff })
}

/// `Ω_μ` in factored form.
pub fn omega_factored(mu: &Composition) -> Factored {
    let mut acc = Factored::one();
    for i in 1..=mu.n() {
        let m = mu.part(i);
        for j in 0..m {
            let a = mu.alpha(i, j).expect("j < μ_i");
            let f = Factored::binomial(i64::from(m - j), i64::from(a), 1).expect("q-degree ≥ 1");
            acc = acc.mul(&f);
        }
    }
    acc
}

fn config_weight_factored(xi: &LatticeConfig, mu: &Composition) -> Result<ColumnWeight> {
    let rows = plain_rows(mu.n());
    let mut w = lattice_weight(mu, &xi.k, &rows)?;
    w.coeff = w.coeff.mul(&omega_factored(mu));
    Ok(w)
}

/// The weight `w(ξ)` of a configuration, including the `Ω_μ` prefactor.
pub fn config_weight(xi: &LatticeConfig, mu: &Composition) -> Result<XPolynomial> {
    xi.check_legal(mu, &xi.k[0])?;
    let w = config_weight_factored(xi, mu)?;
    Ok(XPolynomial::term(w.xexp, w.coeff.to_qtrational()))
}

/// Sums factored terms per `x`-monomial.
#[derive(Clone, Debug)]
pub struct MonomialSum {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, FactoredSum>,
}

impl MonomialSum {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, xexp: Vec<u32>, c: Factored) {
        if !c.is_zero() {
            self.terms.entry(xexp).or_default().add(c);
        }
    }

    pub fn finish(&self) -> Result<XPolynomial> {
        let mut out = XPolynomial::zero(self.nvars);
        for (e, s) in &self.terms {
            out.add_term(e.clone(), s.to_qtrational()?);
        }
        Ok(out)
    }
}

/// `f^ρ_μ = Ω_μ ⟨𝒞_{ρ_1}(x_1) ⋯ 𝒞_{ρ_n}(x_n)⟩_μ`; `ρ = None` gives `f_μ`.
pub fn f_matrix_product(mu: &Composition, rho: Option<&[usize]>) -> Result<XPolynomial> {
    let n = mu.n();
    let basement = rho.map_or_else(|| identity(n), <[usize]>::to_vec);
    let omega = omega_factored(mu);
    let rows = plain_rows(n);
    let mut sum = MonomialSum::new(n);
    for xi in enumerate_configs_with(mu, &basement)? {
        let w = lattice_weight(mu, &xi.k, &rows)?;
        sum.add(w.xexp, w.coeff.mul(&omega));
    }
    sum.finish()
}

/// The empty state on the right followed by `|μ⟩`: site `j` holds the colours
/// with `μ_a = j`.
pub fn composition_state(mu: &Composition) -> TruncatedState {
    let n = mu.n();
    let big_n = mu.maxpart() as usize;
    let mut s = TruncatedState::empty(n, big_n);
    for a in 1..=n {
        s.sites[mu.part(a) as usize][a - 1] += 1;
    }
    s
}

/// `⟨∅| 𝒞_1(x_1) ⋯ 𝒞_n(x_n) |μ⟩`, computed row by row from the top.
pub fn hall_littlewood_q0(mu: &Composition) -> Result<XPolynomial> {
    let n = mu.n();
    let mut states: BTreeMap<TruncatedState, XPolynomial> = BTreeMap::new();
    states.insert(composition_state(mu), XPolynomial::one(n));
    for r in (1..=n).rev() {
        let mut next: BTreeMap<TruncatedState, XPolynomial> = BTreeMap::new();
        for (top, w) in &states {
            for (bottom, x) in row_operator_apply(r, RowParam::plain(n, r), top)? {
                let entry = next.entry(bottom).or_insert_with(|| XPolynomial::zero(n));
                *entry = &*entry + &(w * &x);
            }
        }
        states = next;
    }
    let empty = TruncatedState::empty(n, mu.maxpart() as usize);
    Ok(states.remove(&empty).unwrap_or_else(|| XPolynomial::zero(n)))
}

/// The frozen configuration: every colour stays in its own row.
pub fn frozen_config(mu: &Composition) -> LatticeConfig {
    let n = mu.n();
    let k = (0..=mu.maxpart())
        .map(|j| (1..=n).map(|a| if mu.part(a) >= j { a } else { 0 }).collect())
        .collect();
    LatticeConfig { k }
}

/// `Coeff[⟨𝒞_1 ⋯ 𝒞_n⟩_μ; x^μ]` from the frozen configuration, paired with `1/Ω_μ`.
pub fn frozen_coefficient(mu: &Composition) -> Result<(QTRational, QTRational)> {
    let xi = frozen_config(mu);
    let w = lattice_weight(mu, &xi.k, &plain_rows(mu.n()))?;
    if w.xexp != mu.parts() {
        return Err(Error::InvariantViolation(format!(
            "frozen configuration has monomial {:?}",
            w.xexp
        )));
    }
    let frozen = w.coeff.to_qtrational();
    let inv_omega = mu.omega_norm().inv()?;
    Ok((frozen, inv_omega))
}

/// Checks the frozen coefficient against `1/Ω_μ` and that no other
/// configuration reaches `x^μ`.
pub fn frozen_check(mu: &Composition) -> Report {
    let mut r = Report::new(format!("frozen {mu}"));
    match frozen_coefficient(mu) {
        Ok((a, b)) => r.record("frozen = 1/Ω", a == b, format!("{a} vs {b}")),
        Err(e) => r.fail("frozen = 1/Ω", e.to_string()),
    }
    let frozen = frozen_config(mu);
    let rows = plain_rows(mu.n());
    let mut others = 0;
    for xi in enumerate_configs(mu) {
        if xi == frozen {
            continue;
        }
        match lattice_weight(mu, &xi.k, &rows) {
            Ok(w) if !w.coeff.is_zero() && w.xexp == mu.parts() => others += 1,
            Ok(_) => {}
            Err(e) => r.fail(format!("{:?}", xi.k), e.to_string()),
        }
    }
    r.record("unique x^μ configuration", others == 0, format!("{others} others"));
    r
}

/// Reorders label-indexed columns into row positions given by `order`.
fn arrange(xi: &LatticeConfig, order: &[usize]) -> Vec<Vec<usize>> {
    xi.k.iter().map(|col| order.iter().map(|&b| col[b - 1]).collect()).collect()
}

/// `Z_l` and `Z_r` for one label-indexed configuration.
pub fn z_pair(
    mu: &Composition,
    i: usize,
    xi: &LatticeConfig,
) -> Result<(XPolynomial, XPolynomial)> {
    z_pair_with(mu, i, xi, &|m, j| column_twists(m, j))
}

type TwistFn = dyn Fn(&Composition, u32) -> Result<Vec<Twist>>;

fn z_pair_with(
    mu: &Composition,
    i: usize,
    xi: &LatticeConfig,
    twists: &TwistFn,
) -> Result<(XPolynomial, XPolynomial)> {
    let n = mu.n();
    let others: Vec<usize> = (1..=n).filter(|&b| b != i).collect();
    let mut l_order = others.clone();
    l_order.push(i);
    let mut r_order = vec![i];
    r_order.extend(&others);
    let l_rows: Vec<RowParam> =
        l_order.iter().map(|&b| RowParam { nvars: n, var: b, qpow: u32::from(b == i) }).collect();
    let r_rows: Vec<RowParam> = r_order.iter().map(|&b| RowParam::plain(n, b)).collect();
    let eval = |order: &[usize], rows: &[RowParam]| -> Result<XPolynomial> {
        let cols = arrange(xi, order);
        let mut xexp = vec![0; n];
        let mut coeff = Factored::one();
        let zeros = vec![0; n];
        for j in 0..cols.len() {
            let right = cols.get(j + 1).unwrap_or(&zeros);
            let w = column_weight(&cols[j], right, &twists(mu, j as u32)?, rows, n)?;
            coeff = coeff.mul(&w.coeff);
            for (a, b) in xexp.iter_mut().zip(&w.xexp) {
                *a += b;
            }
        }
        Ok(XPolynomial::term(xexp, coeff.to_qtrational()))
    };
    Ok((eval(&l_order, &l_rows)?, eval(&r_order, &r_rows)?))
}

/// Checks `Z_l / Z_r = q^{μ_i} t^{γ_{i,0}}` for every internal configuration.
pub fn cyclic_check(mu: &Composition, i: usize) -> Report {
    cyclic_check_with(mu, i, &|m, j| column_twists(m, j))
}

pub fn cyclic_check_with(mu: &Composition, i: usize, twists: &TwistFn) -> Report {
    let mut r = Report::new(format!("cyclic {mu} i={i}"));
    let gamma = match mu.gamma(i, 0) {
        Ok(g) => g,
        Err(e) => {
            r.fail("index", e.to_string());
            return r;
        }
    };
    let ratio = QTRational::monomial(i64::from(mu.part(i)), gamma);
    for xi in enumerate_configs(mu) {
        let label = format!("{:?}", xi.k);
        match z_pair_with(mu, i, &xi, twists) {
            Ok((zl, zr)) => {
                let ok = !zr.is_zero() && zl == zr.scale(&ratio);
                let ok = ok || (zl.is_zero() && zr.is_zero());
                r.record(label, ok, format!("Z_l = {zl}, Z_r = {zr}"));
            }
            Err(e) => r.fail(label, e.to_string()),
        }
    }
    r
}

/// `T_i^{-1} f^ρ = t^{-1} f^{𝔰_i ρ}` for every `i` with `ρ_i < ρ_{i+1}`.
pub fn exchange_rho_check(mu: &Composition, rho: &[usize]) -> Report {
    let mut r = Report::new(format!("exchange {mu} rho={rho:?}"));
    let n = mu.n();
    let res = (|| -> Result<()> {
        let f = f_matrix_product(mu, Some(rho))?;
        let t_inv = QTRational::monomial(0, -1);
        for i in 1..n {
            if rho[i - 1] >= rho[i] {
                continue;
            }
            let mut s = rho.to_vec();
            s.swap(i - 1, i);
            let lhs = apply_t(&f, i, true)?;
            let rhs = f_matrix_product(mu, Some(&s))?.scale(&t_inv);
            r.record(format!("i={i}"), lhs == rhs, format!("{lhs} vs {rhs}"));
        }
        Ok(())
    })();
    if let Err(e) = res {
        r.fail("evaluation", e.to_string());
    }
    r
}

/// `f^ρ(x_1, …, q x_n) = t^{n−2ρ_n+1} y_{ρ_n} f^{ωρ}(x_n, x_1, …, x_{n−1})`.
pub fn cyclic_rho_check(mu: &Composition, rho: &[usize]) -> Report {
    let mut r = Report::new(format!("cyclic {mu} rho={rho:?}"));
    let n = mu.n();
    let res = (|| -> Result<bool> {
        let lhs = f_matrix_product(mu, Some(rho))?.q_scale_var(n, 1);
        let mut w = vec![rho[n - 1]];
        w.extend_from_slice(&rho[..n - 1]);
        // g(x_n, x_1, …): exponent of x_1 moves to x_n, of x_k to x_{k−1}.
        let perm: Vec<usize> = (1..=n).map(|k| if k == 1 { n } else { k - 1 }).collect();
        let g = f_matrix_product(mu, Some(&w))?.permute_vars(&perm);
        let c = &QTRational::monomial(0, n as i64 - 2 * rho[n - 1] as i64 + 1)
            * &mu.eigenvalue_y(rho[n - 1])?;
        Ok(lhs == g.scale(&c))
    })();
    match res {
        Ok(ok) => r.record("identity", ok, ""),
        Err(e) => r.fail("evaluation", e.to_string()),
    }
    r
}

/// Every permutation of `1..=n` in lex order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n + 1];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 1..=n {
            if !used[a] {
                used[a] = true;
                cur.push(a);
                go(n, cur, used, out);
                cur.pop();
                used[a] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// `1/(1 − v t^s)` as a rational function, for tests and callers.
pub fn geometric(v: &Twist, s: u32) -> Result<QTRational> {
    Ok(v.one_minus(s, -1)?.to_qtrational())
}
