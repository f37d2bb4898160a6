//! Sparse polynomials in the two parameters q and t over ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fmt_rational;

/// Exponent pair `(q, t)`. The derived `Ord` is the fixed lex order,
/// q-degree major and t-degree minor.
pub type QTExp = (u32, u32);

/// A polynomial in `q` and `t` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<QTExp, BigRational>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c q^a t^b`.
    pub fn monomial(c: BigRational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// Builds a polynomial from `(q exponent, t exponent, coefficient)` triples,
    /// merging repeated keys.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigRational)>,
    {
        let mut p = Self::zero();
        for (a, b, c) in iter {
            p.add_term((a, b), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: QTExp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&(0, 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&QTExp, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lex-greatest term.
    pub fn leading(&self) -> Option<(QTExp, &BigRational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self { terms: self.terms.iter().map(|(e, x)| ((e.0 + a, e.1 + b), x.clone())).collect() }
    }

    /// Largest monomial `q^a t^b` dividing every term; `(0, 0)` for zero.
    pub fn monomial_content(&self) -> QTExp {
        let mut it = self.terms.keys();
        let Some(&(mut a, mut b)) = it.next() else {
            return (0, 0);
        };
        for e in it {
            a = a.min(e.0);
            b = b.min(e.1);
        }
        (a, b)
    }

    /// Divides by `q^a t^b`, which must divide every term.
    pub(crate) fn unshift(&self, a: u32, b: u32) -> Self {
        Self { terms: self.terms.iter().map(|(e, x)| ((e.0 - a, e.1 - b), x.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so that the lex-greatest coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.len() == 1 {
            let inv = dc.recip();
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                if e.0 < de.0 || e.1 < de.1 {
                    return None;
                }
                terms.insert((e.0 - de.0, e.1 - de.1), c * &inv);
            }
            return Some(Self { terms });
        }
        let inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading() {
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let e = (re.0 - de.0, re.1 - de.1);
            let c = rc * &inv;
            for (fe, fc) in &d.terms {
                rem.add_term((fe.0 + e.0, fe.1 + e.1), -(fc * &c));
            }
            quot.terms.insert(e, c);
        }
        Some(quot)
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(q, e.0) * pow_rat(t, e.1);
        }
        acc
    }

    /// Substitutes a value for `q`, leaving a polynomial in `t` alone.
    pub fn subs_q(&self, q: &BigRational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term((0, e.1), c * pow_rat(q, e.0));
        }
        out
    }

    /// Least common multiple of coefficient denominators.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        l
    }

    /// Sign of the coefficient of the lowest term in display order.
    pub(crate) fn display_sign_negative(&self) -> bool {
        self.display_order().first().is_some_and(|(_, c)| c.is_negative())
    }

    /// Terms ascending by total degree, then descending q-degree.
    pub(crate) fn display_order(&self) -> Vec<(QTExp, BigRational)> {
        let mut v: Vec<(QTExp, BigRational)> =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| (a.0 + a.1).cmp(&(b.0 + b.1)).then_with(|| b.0.cmp(&a.0)));
        v
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<QTExp, BigRational> {
        &self.terms
    }
}

pub(crate) fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

impl Add for &QTPolynomial {
    type Output = QTPolynomial;
    fn add(self, rhs: &QTPolynomial) -> QTPolynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QTPolynomial {
    type Output = QTPolynomial;
    fn sub(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &QTPolynomial {
    type Output = QTPolynomial;
    fn mul(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = QTPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term((a.0 + b.0, a.1 + b.1), x * y);
            }
        }
        out
    }
}

impl Neg for &QTPolynomial {
    type Output = QTPolynomial;
    fn neg(self) -> QTPolynomial {
        QTPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QTPolynomial {
            type Output = QTPolynomial;
            fn $m(self, rhs: QTPolynomial) -> QTPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QTPolynomial {
    type Output = QTPolynomial;
    fn neg(self) -> QTPolynomial {
        -&self
    }
}

/// Writes a monomial `q^a t^b` in the given style; empty for `(0, 0)`.
pub(crate) fn fmt_qt_monomial(a: u32, b: u32, latex: bool) -> String {
    let mut parts = Vec::new();
    for (name, k) in [("q", a), ("t", b)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ if latex && k > 9 => parts.push(format!("{name}^{{{k}}}")),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join(if latex { "" } else { "*" })
}

impl QTPolynomial {
    /// Human-readable form; `latex` switches to TeX conventions.
    pub fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms = self.display_order();
        let mut out = String::new();
        for (k, ((a, b), c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if latex {
                out.push(if neg { '-' } else { '+' });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = fmt_qt_monomial(*a, *b, latex);
            let coeff = if latex { fmt_rational_latex(&abs) } else { fmt_rational(&abs) };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if latex {
                out.push_str(&coeff);
                out.push_str(&mono);
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn fmt_rational_latex(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(c: i64, a: u32, b: u32) -> QTPolynomial {
        QTPolynomial::monomial(BigRational::from_integer(c.into()), a, b)
    }

    #[test]
    fn exact_division_of_difference_of_squares() {
        let a = &QTPolynomial::one() - &qt(1, 2, 2);
        let d = &QTPolynomial::one() - &qt(1, 1, 1);
        let quo = a.div_exact(&d).unwrap();
        assert_eq!(quo, &QTPolynomial::one() + &qt(1, 1, 1));
        assert!(d.div_exact(&qt(1, 1, 0)).is_none());
    }

    #[test]
    fn terms_are_descending_lex() {
        let p = &(&qt(1, 0, 3) + &qt(2, 1, 0)) + &qt(3, 1, 1);
        let keys: Vec<QTExp> = p.terms().map(|(e, _)| *e).collect();
        assert_eq!(keys, vec![(1, 1), (1, 0), (0, 3)]);
    }

    #[test]
    fn render_orders_by_degree() {
        let p = &QTPolynomial::one() - &qt(1, 1, 1);
        assert_eq!(p.render(false), "1 - q*t");
        assert_eq!(p.render(true), "1-qt");
    }
}
