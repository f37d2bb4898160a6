//! Canonical elements of the rational function field ℚ(q, t).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::qt_gcd;
use super::qtpoly::{fmt_qt_monomial, QTPolynomial};
use super::{parse_rational, ArithOp};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` with `den` monic in the lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: QTPolynomial,
    den: QTPolynomial,
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTRational {
    pub fn zero() -> Self {
        Self { num: QTPolynomial::zero(), den: QTPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QTPolynomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QTPolynomial::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(QTPolynomial::constant(c))
    }

    pub fn from_poly(p: QTPolynomial) -> Self {
        Self { num: p, den: QTPolynomial::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(QTPolynomial::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPolynomial::t())
    }

    /// `q^a t^b` with possibly negative exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let pos = QTPolynomial::monomial(BigRational::one(), a.max(0) as u32, b.max(0) as u32);
        let neg =
            QTPolynomial::monomial(BigRational::one(), (-a).max(0) as u32, (-b).max(0) as u32);
        Self { num: pos, den: neg }
    }

    /// `1 - q^a t^b` for nonnegative exponents.
    pub fn one_minus_monomial(a: u32, b: u32) -> Self {
        Self::from_poly(&QTPolynomial::one() - &QTPolynomial::monomial(BigRational::one(), a, b))
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: QTPolynomial, den: QTPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = qt_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::normalized(num, den))
    }

    /// Scales so the denominator is monic; assumes the pair is coprime.
    fn normalized(num: QTPolynomial, den: QTPolynomial) -> Self {
        let (_, lc) = den.leading().expect("nonzero denominator");
        if lc.is_one() {
            return Self { num, den };
        }
        let inv = lc.recip();
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn numer(&self) -> &QTPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &QTPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(Error::VanishingDenominator {
                q: Box::new(q.clone()),
                t: Box::new(t.clone()),
            });
        }
        Ok(self.num.eval(q, t) / d)
    }

    /// Substitutes a value for `q`.
    pub fn subs_q(&self, q: &BigRational) -> Result<Self> {
        let d = self.den.subs_q(q);
        if d.is_zero() {
            return Err(Error::VanishingDenominator {
                q: Box::new(q.clone()),
                t: Box::new(BigRational::zero()),
            });
        }
        Self::new(self.num.subs_q(q), d)
    }

    pub fn render(&self, latex: bool) -> String {
        render_fraction(self, latex)
    }
}

/// Applies one of the four field operations.
pub fn field_arith(a: &QTRational, b: &QTRational, op: ArithOp) -> Result<QTRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Exact value at a rational point.
pub fn qt_eval(a: &QTRational, q: &BigRational, t: &BigRational) -> Result<BigRational> {
    a.eval(q, t)
}

fn add_impl(a: &QTRational, b: &QTRational, negate_b: bool) -> QTRational {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return QTRational { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        return QTRational::new(num, a.den.clone()).expect("nonzero denominator");
    }
    let g = qt_gcd(&a.den, &b.den).expect("nonzero denominators");
    if g.is_one() {
        let num = &(&a.num * &b.den) + &(&bn * &a.den);
        let den = &a.den * &b.den;
        // Any common factor of num and den must divide g = 1 in this case.
        return if num.is_zero() { QTRational::zero() } else { QTRational::normalized(num, den) };
    }
    let ad = a.den.div_exact(&g).expect("gcd divides");
    let bd = b.den.div_exact(&g).expect("gcd divides");
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return QTRational::zero();
    }
    let g2 = qt_gcd(&num, &g).expect("nonzero");
    let den = &(&ad * &b.den);
    if g2.is_one() {
        QTRational::normalized(num, den.clone())
    } else {
        QTRational::normalized(
            num.div_exact(&g2).expect("gcd divides"),
            den.div_exact(&g2).expect("gcd divides"),
        )
    }
}

fn mul_impl(a: &QTRational, b: &QTRational) -> QTRational {
    if a.is_zero() || b.is_zero() {
        return QTRational::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return QTRational { num: &a.num * &b.num, den: QTPolynomial::one() };
    }
    let g1 = qt_gcd(&a.num, &b.den).expect("nonzero");
    let g2 = qt_gcd(&b.num, &a.den).expect("nonzero");
    let an = a.num.div_exact(&g1).expect("gcd divides");
    let bd = b.den.div_exact(&g1).expect("gcd divides");
    let bn = b.num.div_exact(&g2).expect("gcd divides");
    let ad = a.den.div_exact(&g2).expect("gcd divides");
    QTRational::normalized(&an * &bn, &ad * &bd)
}

impl Add for &QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        add_impl(self, rhs, false)
    }
}

impl Sub for &QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        add_impl(self, rhs, true)
    }
}

impl Mul for &QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        mul_impl(self, rhs)
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QTRational {
            type Output = QTRational;
            fn $m(self, rhs: QTRational) -> QTRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<QTPolynomial> for QTRational {
    fn from(p: QTPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QTRational {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn render_poly_factored(p: &QTPolynomial, latex: bool, standalone: bool) -> String {
    let (a, b) = p.monomial_content();
    let rest = p.unshift(a, b);
    if rest.len() <= 1 || (a, b) == (0, 0) {
        let s = p.render(latex);
        return if !standalone && p.len() > 1 { format!("({s})") } else { s };
    }
    let mono = fmt_qt_monomial(a, b, latex);
    if latex {
        format!("{mono}({})", rest.render(true))
    } else {
        format!("{mono}*({})", rest.render(false))
    }
}

fn render_fraction(r: &QTRational, latex: bool) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let (num, den) = if r.den.display_sign_negative() {
        (-&r.num, -&r.den)
    } else {
        (r.num.clone(), r.den.clone())
    };
    if den.is_one() {
        return render_poly_factored(&num, latex, true);
    }
    if latex {
        format!(
            "\\frac{{{}}}{{{}}}",
            render_poly_factored(&num, true, true),
            render_poly_factored(&den, true, true)
        )
    } else {
        format!(
            "{}/{}",
            render_poly_factored(&num, false, false),
            render_poly_factored(&den, false, false)
        )
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTRational({self})")
    }
}

type JsonTerm = (u32, u32, String);

#[derive(Serialize, Deserialize)]
struct QTRationalJson {
    num: Vec<JsonTerm>,
    den: Vec<JsonTerm>,
}

fn poly_to_json(p: &QTPolynomial) -> Vec<JsonTerm> {
    p.terms().map(|(&(a, b), c)| (a, b, format!("{}/{}", c.numer(), c.denom()))).collect()
}

fn poly_from_json(terms: &[JsonTerm]) -> Result<QTPolynomial> {
    let mut v = Vec::with_capacity(terms.len());
    for (a, b, c) in terms {
        v.push((*a, *b, parse_rational(c)?));
    }
    Ok(QTPolynomial::from_terms(v))
}

impl Serialize for QTRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QTRationalJson { num: poly_to_json(&self.num), den: poly_to_json(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = QTRationalJson::deserialize(d)?;
        let num = poly_from_json(&raw.num).map_err(D::Error::custom)?;
        let den = poly_from_json(&raw.den).map_err(D::Error::custom)?;
        QTRational::new(num, den).map_err(D::Error::custom)
    }
}

impl QTRational {
    /// Integer-valued constant, if the element is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.den.is_one() && self.num.is_constant() {
            let c = self.num.coeff(0, 0);
            if c.is_integer() {
                return Some(c.to_integer());
            }
        }
        None
    }
}
