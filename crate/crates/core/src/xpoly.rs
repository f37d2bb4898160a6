//! Sparse polynomials in x₁..xₙ with coefficients in ℚ(q, t).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{BigRational, QTRational};
use crate::error::{Error, Result};

/// Exponent vector of a monomial in x₁..xₙ.
pub type Exponents = Vec<u32>;

/// Binary operations on [`XPolynomial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XpOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct XPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, QTRational>,
}

impl XPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, QTRational::one())
    }

    pub fn constant(nvars: usize, c: QTRational) -> Self {
        Self::term(vec![0; nvars], c)
    }

    /// Single term `c x^e`; the alphabet size is `e.len()`.
    pub fn term(e: Exponents, c: QTRational) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::term(e, QTRational::one())
    }

    pub fn monomial(e: &[u32]) -> Self {
        Self::term(e.to_vec(), QTRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lex order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &QTRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponents> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, e: Exponents, c: QTRational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AlphabetMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(e, x * y);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &QTRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coeffs(|x| x * c)
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &[u32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRational) -> QTRational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Fallible coefficient map.
    pub fn try_map_coeffs(&self, f: impl Fn(&QTRational) -> Result<QTRational>) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes a value for `q` in every coefficient.
    pub fn subs_q(&self, q: &BigRational) -> Result<Self> {
        self.try_map_coeffs(|c| c.subs_q(q))
    }

    /// Reorders variables: the exponent of `x_k` moves to slot `perm[k-1]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (k, &a) in e.iter().enumerate() {
                f[perm[k] - 1] = a;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// `p(x_n, …, x_1)`.
    pub fn reverse_vars(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let f: Exponents = e.iter().rev().copied().collect();
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `x_i → q^k x_i`.
    pub fn q_scale_var(&self, i: usize, k: i64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let f = QTRational::monomial(k * e[i - 1] as i64, 0);
            out.add_term(e.clone(), c * &f);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn coefficient_of(&self, nu: &[u32]) -> Result<QTRational> {
        if nu.len() != self.nvars {
            return Err(Error::AlphabetMismatch { left: self.nvars, right: nu.len() });
        }
        Ok(self.terms.get(nu).cloned().unwrap_or_else(QTRational::zero))
    }

    fn check_adjacent(&self, i: usize) -> Result<()> {
        if i < 1 || i + 1 > self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.nvars.saturating_sub(1),
            });
        }
        Ok(())
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        self.check_adjacent(i)?;
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.swap(i - 1, i);
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// `(ω h)(x_1, …, x_n) = h(x_2, …, x_n, q x_1)`.
    pub fn cyclic_omega(&self) -> Self {
        let n = self.nvars;
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            if n == 0 {
                out.add_term(e.clone(), c.clone());
                continue;
            }
            let mut f = vec![0; n];
            f[1..].copy_from_slice(&e[..n - 1]);
            f[0] = e[n - 1];
            out.add_term(f, c * &QTRational::monomial(e[n - 1] as i64, 0));
        }
        out
    }

    /// `(p − s_i p) / (x_i − x_{i+1})`, computed by genuine division.
    pub fn divided_difference_div(&self, i: usize) -> Result<Self> {
        let numer = self.checked_sub(&self.swap_vars(i)?)?;
        let n = self.nvars;
        // Group by the exponent of x_i; each group has x_i stripped.
        let mut by_deg: BTreeMap<u32, XPolynomial> = BTreeMap::new();
        for (e, c) in &numer.terms {
            let mut f = e.clone();
            let d = f[i - 1];
            f[i - 1] = 0;
            by_deg.entry(d).or_insert_with(|| Self::zero(n)).add_term(f, c.clone());
        }
        let Some(&top) = by_deg.keys().next_back() else {
            return Ok(Self::zero(n));
        };
        let mut next_shift = vec![0; n];
        next_shift[i] = 1;
        let mut xi = vec![0; n];
        xi[i - 1] = 1;
        // Synthetic division by (x_i − x_{i+1}).
        let mut quotient = Self::zero(n);
        let mut carry = Self::zero(n);
        for d in (0..=top).rev() {
            let a = by_deg.remove(&d).unwrap_or_else(|| Self::zero(n));
            let cur = a.checked_add(&carry)?;
            if d == 0 {
                if !cur.is_zero() {
                    return Err(Error::InvariantViolation(format!(
                        "divided difference left remainder {cur}"
                    )));
                }
                break;
            }
            let mut e = vec![0; n];
            e[i - 1] = d - 1;
            quotient = quotient.checked_add(&cur.shift(&e))?;
            carry = cur.shift(&next_shift);
        }
        Ok(quotient)
    }

    /// Terms in display order: the bracket order on reversed exponents,
    /// greatest first.
    pub fn display_terms(&self) -> Vec<(&Exponents, &QTRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| display_cmp(b, a));
        v
    }

    pub fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.display_terms().into_iter().enumerate() {
            let (neg, body) = render_term(e, c, latex);
            match (k, neg) {
                (0, true) => out.push_str("- "),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    /// Terms sorted in graded lex order, greatest first.
    pub fn graded_terms(&self) -> Vec<(&Exponents, &QTRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| graded_cmp(b, a));
        v
    }
}

fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn display_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let ra: Vec<u32> = a.iter().rev().copied().collect();
    let rb: Vec<u32> = b.iter().rev().copied().collect();
    let mut sa = ra.clone();
    let mut sb = rb.clone();
    sa.sort_unstable_by(|x, y| y.cmp(x));
    sb.sort_unstable_by(|x, y| y.cmp(x));
    graded_cmp(&sa, &sb).then_with(|| ra.cmp(&rb))
}

fn render_monomial(e: &[u32], latex: bool) -> String {
    let mut parts = Vec::new();
    for (k, &a) in e.iter().enumerate() {
        let v = match (latex, k + 1) {
            (true, i) if i < 10 => format!("x_{i}"),
            (true, i) => format!("x_{{{i}}}"),
            (false, i) => format!("x{i}"),
        };
        match a {
            0 => {}
            1 => parts.push(v),
            _ if latex => parts.push(format!("{v}^{{{a}}}")),
            _ => parts.push(format!("{v}^{a}")),
        }
    }
    parts.join(if latex { " " } else { "*" })
}

/// Renders one term without its sign; returns whether it is negative.
fn render_term(e: &[u32], c: &QTRational, latex: bool) -> (bool, String) {
    let mono = render_monomial(e, latex);
    let neg_simple = c.is_polynomial() && c.numer().len() == 1 && {
        let (_, lc) = c.numer().leading().expect("nonzero");
        lc < &BigRational::from_integer(0.into())
    };
    let c_abs = if neg_simple { -c } else { c.clone() };
    let coeff = if c_abs.is_one() {
        String::new()
    } else if c_abs.is_polynomial() && c_abs.numer().len() > 1 {
        format!("({})", c_abs.render(latex))
    } else {
        c_abs.render(latex)
    };
    let body = match (coeff.is_empty(), mono.is_empty()) {
        (true, true) => "1".to_string(),
        (true, false) => mono,
        (false, true) => coeff,
        (false, false) if latex => format!("{coeff} {mono}"),
        (false, false) => format!("{coeff}*{mono}"),
    };
    (neg_simple, body)
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPolynomial[{}]({self})", self.nvars)
    }
}

/// Applies one of the ring operations.
pub fn xp_arith(a: &XPolynomial, b: &XPolynomial, op: XpOp) -> Result<XPolynomial> {
    match op {
        XpOp::Add => a.checked_add(b),
        XpOp::Sub => a.checked_sub(b),
        XpOp::Mul => a.checked_mul(b),
    }
}

impl std::ops::Add for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        self.checked_add(rhs).expect("alphabet sizes agree")
    }
}

impl std::ops::Sub for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        self.checked_sub(rhs).expect("alphabet sizes agree")
    }
}

impl std::ops::Mul for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        self.checked_mul(rhs).expect("alphabet sizes agree")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Exponents,
    coeff: QTRational,
}

#[derive(Serialize, Deserialize)]
struct XPolynomialJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for XPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        XPolynomialJson {
            nvars: self.nvars,
            terms: self
                .graded_terms()
                .into_iter()
                .map(|(e, c)| TermJson { exps: e.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for XPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = XPolynomialJson::deserialize(d)?;
        let mut p = XPolynomial::zero(raw.nvars);
        for t in raw.terms {
            if t.exps.len() != raw.nvars {
                return Err(D::Error::custom(Error::AlphabetMismatch {
                    left: raw.nvars,
                    right: t.exps.len(),
                }));
            }
            p.add_term(t.exps, t.coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> XPolynomial {
        XPolynomial::var(n, i)
    }

    fn c_mu01() -> QTRational {
        (&QTRational::q() * &QTRational::one_minus_monomial(0, 1))
            .checked_div(&QTRational::one_minus_monomial(1, 1))
            .unwrap()
    }

    #[test]
    fn products_and_squares() {
        assert_eq!(&x(2, 1) * &x(2, 2), XPolynomial::monomial(&[1, 1]));
        let s = &x(2, 1) + &x(2, 2);
        let mut expect = XPolynomial::monomial(&[2, 0]);
        expect.add_term(vec![1, 1], QTRational::from_int(2));
        expect.add_term(vec![0, 2], QTRational::one());
        assert_eq!(&s * &s, expect);
    }

    #[test]
    fn cancellation_leaves_single_term() {
        let c = c_mu01();
        let p = &x(2, 2) + &x(2, 1).scale(&c);
        assert_eq!(&p - &x(2, 2), x(2, 1).scale(&c));
    }

    #[test]
    fn alphabet_mismatch() {
        assert_eq!(
            xp_arith(&x(2, 1), &x(3, 1), XpOp::Add),
            Err(Error::AlphabetMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn coefficient_lookup() {
        let c = c_mu01();
        let p = &x(2, 2) + &x(2, 1).scale(&c);
        assert_eq!(p.coefficient_of(&[1, 0]).unwrap(), c);
        assert!(p.coefficient_of(&[1, 1]).unwrap().is_zero());
        assert!(XPolynomial::one(3).coefficient_of(&[0, 0, 0]).unwrap().is_one());
    }

    #[test]
    fn swap_examples() {
        assert_eq!(x(2, 1).swap_vars(1).unwrap(), x(2, 2));
        let m = XPolynomial::monomial(&[1, 1]);
        assert_eq!(m.swap_vars(1).unwrap(), m);
        let m = XPolynomial::monomial(&[2, 1]);
        assert_eq!(m.swap_vars(1).unwrap(), XPolynomial::monomial(&[1, 2]));
        assert!(m.swap_vars(2).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(x(2, 1).cyclic_omega(), x(2, 2));
        assert_eq!(x(2, 2).cyclic_omega(), x(2, 1).scale(&QTRational::q()));
        assert_eq!(XPolynomial::one(2).cyclic_omega(), XPolynomial::one(2));
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(x(2, 1).divided_difference_div(1).unwrap(), XPolynomial::one(2));
        let sq = XPolynomial::monomial(&[2, 0]);
        assert_eq!(sq.divided_difference_div(1).unwrap(), &x(2, 1) + &x(2, 2));
        let sym = XPolynomial::monomial(&[1, 1]);
        assert!(sym.divided_difference_div(1).unwrap().is_zero());
    }

    #[test]
    fn render_f01() {
        let p = &x(2, 2) + &x(2, 1).scale(&c_mu01());
        assert_eq!(p.render(true), "x_2 + \\frac{q(1-t)}{1-qt} x_1");
        assert_eq!(p.render(false), "x2 + q*(1 - t)/(1 - q*t)*x1");
    }

    #[test]
    fn render_powers_and_signs() {
        let mut p = XPolynomial::monomial(&[2, 0]);
        p.add_term(vec![1, 1], QTRational::from_int(-3));
        assert_eq!(p.render(false), "x1^2 - 3*x1*x2");
        assert_eq!(p.render(true), "x_1^{2} - 3 x_1 x_2");
    }

    #[test]
    fn json_round_trip() {
        let p = &x(2, 2) + &x(2, 1).scale(&c_mu01());
        let s = serde_json::to_string(&p).unwrap();
        let back: XPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
