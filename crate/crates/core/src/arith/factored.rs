//! Products of monomials and binomials `1 − q^a t^b`, and sums of them over a
//! shared denominator.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qtpoly::QTPolynomial;
use super::qtrational::QTRational;
use crate::error::{Error, Result};

/// `c · q^a t^b · ∏ (1 − q^x t^y)^{e}` with integer exponents `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    coeff: BigRational,
    qexp: i64,
    texp: i64,
    binomials: BTreeMap<(i64, i64), i32>,
}

impl Factored {
    pub fn zero() -> Self {
        Self { coeff: BigRational::zero(), qexp: 0, texp: 0, binomials: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self { coeff: BigRational::one(), qexp: 0, texp: 0, binomials: BTreeMap::new() }
    }

    pub fn monomial(a: i64, b: i64) -> Self {
        Self { qexp: a, texp: b, ..Self::one() }
    }

    /// `(1 − q^a t^b)^e` for any signs of `a`, `b`.
    ///
    /// Stored as a power of the polynomial `q^{a⁻} t^{b⁻} − q^{a⁺} t^{b⁺}`,
    /// oriented so that the key is positive in lex order.
    pub fn binomial(a: i64, b: i64, e: i32) -> Result<Self> {
        if a == 0 && b == 0 {
            return if e > 0 {
                Ok(Self::zero())
            } else if e == 0 {
                Ok(Self::one())
            } else {
                Err(Error::DivisionByZero)
            };
        }
        let mut f = Self::one();
        if e == 0 {
            return Ok(f);
        }
        // 1 − q^a t^b = q^{−a⁻} t^{−b⁻} (q^{a⁻} t^{b⁻} − q^{a⁺} t^{b⁺})
        f.qexp = -i64::from(e) * (-a).max(0);
        f.texp = -i64::from(e) * (-b).max(0);
        let (key, flip) =
            if a < 0 || (a == 0 && b < 0) { ((-a, -b), true) } else { ((a, b), false) };
        if flip && e % 2 != 0 {
            f.coeff = -f.coeff;
        }
        f.binomials.insert(key, e);
        Ok(f)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut f = self.clone();
        f.coeff = &f.coeff * c;
        f
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut binomials = self.binomials.clone();
        for (&k, &e) in &other.binomials {
            let slot = binomials.entry(k).or_insert(0);
            *slot += e;
            if *slot == 0 {
                binomials.remove(&k);
            }
        }
        Self {
            coeff: &self.coeff * &other.coeff,
            qexp: self.qexp + other.qexp,
            texp: self.texp + other.texp,
            binomials,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self {
            coeff: self.coeff.recip(),
            qexp: -self.qexp,
            texp: -self.texp,
            binomials: self.binomials.iter().map(|(&k, &e)| (k, -e)).collect(),
        })
    }

    pub fn to_qtrational(&self) -> QTRational {
        let mut sum = FactoredSum::new();
        sum.add(self.clone());
        sum.to_qtrational().expect("a nonzero denominator")
    }
}

/// `q^{a⁻} t^{b⁻} − q^{a⁺} t^{b⁺}`.
fn binomial_poly(a: i64, b: i64) -> QTPolynomial {
    let lo = QTPolynomial::monomial(BigRational::one(), (-a).max(0) as u32, (-b).max(0) as u32);
    let hi = QTPolynomial::monomial(BigRational::one(), a.max(0) as u32, b.max(0) as u32);
    &lo - &hi
}

/// A sum of [`Factored`] terms, brought to a common denominator only once.
#[derive(Clone, Debug, Default)]
pub struct FactoredSum {
    terms: Vec<Factored>,
}

impl FactoredSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, f: Factored) {
        if !f.is_zero() {
            self.terms.push(f);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_qtrational(&self) -> Result<QTRational> {
        if self.terms.is_empty() {
            return Ok(QTRational::zero());
        }
        let qmin = self.terms.iter().map(|f| f.qexp).min().unwrap_or(0);
        let tmin = self.terms.iter().map(|f| f.texp).min().unwrap_or(0);
        let mut den_exps: BTreeMap<(i64, i64), i32> = BTreeMap::new();
        for f in &self.terms {
            for (&k, &e) in &f.binomials {
                if e < 0 {
                    let slot = den_exps.entry(k).or_insert(0);
                    *slot = (*slot).max(-e);
                }
            }
        }
        let mut powers: BTreeMap<((i64, i64), i32), QTPolynomial> = BTreeMap::new();
        let mut power = |k: (i64, i64), e: i32| -> QTPolynomial {
            powers.entry((k, e)).or_insert_with(|| binomial_poly(k.0, k.1).pow(e as u32)).clone()
        };
        let mut num = QTPolynomial::zero();
        for f in &self.terms {
            let mut p = QTPolynomial::monomial(
                f.coeff.clone(),
                (f.qexp - qmin) as u32,
                (f.texp - tmin) as u32,
            );
            for (&k, &e) in &f.binomials {
                if e > 0 {
                    p = &p * &power(k, e);
                }
            }
            for (&k, &d) in &den_exps {
                let own = f.binomials.get(&k).map_or(0, |&e| (-e).max(0));
                if d > own {
                    p = &p * &power(k, d - own);
                }
            }
            num = &num + &p;
        }
        // Cancel shared binomials by trial division before the general gcd.
        let mut den = QTPolynomial::one();
        for (&k, &d) in &den_exps {
            let b = binomial_poly(k.0, k.1);
            let mut left = d;
            while left > 0 {
                match num.div_exact(&b) {
                    Some(quo) => {
                        num = quo;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den = &den * &power(k, left);
            }
        }
        let num = num.shift(qmin.max(0) as u32, tmin.max(0) as u32);
        let den = den.shift((-qmin).max(0) as u32, (-tmin).max(0) as u32);
        QTRational::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn single_term_matches_field_arithmetic() {
        let f = Factored::monomial(1, -1)
            .mul(&Factored::binomial(0, 1, 1).unwrap())
            .mul(&Factored::binomial(1, 1, -1).unwrap())
            .scale(&rat(3, 2));
        let expected = &(&QTRational::monomial(1, -1) * &QTRational::one_minus_monomial(0, 1))
            .checked_div(&QTRational::one_minus_monomial(1, 1))
            .unwrap()
            .scale(&rat(3, 2));
        assert_eq!(f.to_qtrational(), *expected);
    }

    #[test]
    fn sums_cancel_common_factors() {
        // 1/(1−q) − q/(1−q) = 1
        let mut s = FactoredSum::new();
        s.add(Factored::binomial(1, 0, -1).unwrap());
        s.add(
            Factored::monomial(1, 0).mul(&Factored::binomial(1, 0, -1).unwrap()).scale(&rat(-1, 1)),
        );
        assert_eq!(s.to_qtrational().unwrap(), QTRational::one());
    }

    #[test]
    fn reducible_binomials_are_reduced() {
        // (1−q)/(1−q²) = 1/(1+q)
        let f = Factored::binomial(1, 0, 1).unwrap().mul(&Factored::binomial(2, 0, -1).unwrap());
        let expected =
            QTRational::one().checked_div(&(&QTRational::one() + &QTRational::q())).unwrap();
        assert_eq!(f.to_qtrational(), expected);
    }

    #[test]
    fn mixed_sign_binomials() {
        // (1 − q t^{-1}) = (t − q)/t and (1 − q^{-1} t) = −(t − q)/q
        let a = Factored::binomial(1, -1, 1).unwrap();
        let b = Factored::binomial(-1, 1, -1).unwrap();
        let expected = QTRational::monomial(1, -1).scale(&rat(-1, 1));
        assert_eq!(a.mul(&b).to_qtrational(), expected);
        let direct = &QTRational::one() - &QTRational::monomial(1, -1);
        assert_eq!(a.to_qtrational(), direct);
        assert!(Factored::binomial(0, 0, 1).unwrap().is_zero());
        assert!(Factored::binomial(0, 0, -1).is_err());
    }

    #[test]
    fn empty_sum_is_zero() {
        assert!(FactoredSum::new().to_qtrational().unwrap().is_zero());
        assert!(Factored::zero().to_qtrational().is_zero());
    }

    #[test]
    fn inverse_round_trips() {
        let f =
            Factored::monomial(2, -3).mul(&Factored::binomial(1, 2, 2).unwrap()).scale(&rat(-5, 7));
        assert_eq!(f.mul(&f.inv().unwrap()).to_qtrational(), QTRational::one());
    }
}
