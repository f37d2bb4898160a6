//! Bivariate gcd over ℚ[q, t] by content/primitive-part recursion,
//! treating polynomials as elements of ℤ[q][t].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qtpoly::QTPolynomial;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Coefficients in ℤ[q] indexed by t-degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TPoly(Vec<UPoly>);

impl TPoly {
    /// Clears denominators and converts.
    fn from_qt(p: &QTPolynomial) -> TPoly {
        let l = p.denominator_lcm();
        let dt = p.degree_t() as usize;
        let dq = p.degree_q() as usize;
        let mut rows = vec![vec![BigInt::zero(); dq + 1]; dt + 1];
        for (&(a, b), c) in p.raw_terms() {
            rows[b as usize][a as usize] = (c * BigRational::from_integer(l.clone())).to_integer();
        }
        let mut out = TPoly(
            rows.into_iter()
                .map(|r| {
                    let mut u = UPoly(r);
                    u.trim();
                    u
                })
                .collect(),
        );
        out.trim();
        out
    }

    fn to_qt(&self) -> QTPolynomial {
        QTPolynomial::from_terms(self.0.iter().enumerate().flat_map(|(b, u)| {
            u.0.iter()
                .enumerate()
                .map(move |(a, c)| (a as u32, b as u32, BigRational::from_integer(c.clone())))
        }))
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.0.last().expect("nonzero")
    }

    /// gcd in ℤ[q] of all coefficients.
    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.degree() == 0 && g.0.first().is_some_and(|x| x.is_one()) {
                break;
            }
        }
        g
    }

    fn div_content(&self, c: &UPoly) -> TPoly {
        if c.is_one() {
            return self.clone();
        }
        TPoly(
            self.0
                .iter()
                .map(|x| x.div_exact(c).expect("content divides every coefficient"))
                .collect(),
        )
    }

    fn primitive(&self) -> TPoly {
        let c = self.content();
        let mut p = self.div_content(&c);
        if p.lc().lc() < BigInt::zero() {
            p = TPoly(p.0.iter().map(|x| x.neg()).collect());
        }
        p
    }

    /// Pseudo-remainder by `d` in ℤ[q][t].
    fn prem(&self, d: &TPoly) -> TPoly {
        let mut r = self.clone();
        let dl = d.lc().clone();
        let dd = d.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.lc().clone();
            let mut next: Vec<UPoly> = r.0.iter().map(|c| c.mul(&dl)).collect();
            for (j, c) in d.0.iter().enumerate() {
                next[j + shift] = next[j + shift].sub(&rl.mul(c));
            }
            r = TPoly(next);
            r.trim();
            // Keep coefficient growth in check.
            if !r.is_zero() {
                r = r.primitive();
            }
        }
        r
    }
}

/// Greatest common divisor of two bivariate polynomials, scaled so that the
/// lex-greatest term has coefficient 1.
pub fn qt_gcd(a: &QTPolynomial, b: &QTPolynomial) -> Result<QTPolynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(QTPolynomial::one());
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let m = (ma.0.min(mb.0), ma.1.min(mb.1));
    let a = a.unshift(ma.0, ma.1);
    let b = b.unshift(mb.0, mb.1);
    let core = if a.is_constant() || b.is_constant() {
        QTPolynomial::one()
    } else if a.div_exact(&b).is_some() {
        b.monic()
    } else if b.div_exact(&a).is_some() {
        a.monic()
    } else {
        tpoly_gcd(&TPoly::from_qt(&a), &TPoly::from_qt(&b)).to_qt().monic()
    };
    Ok(core.shift(m.0, m.1))
}

fn tpoly_gcd(a: &TPoly, b: &TPoly) -> TPoly {
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let (mut x, mut y) = (a.div_content(&ca), b.div_content(&cb));
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.degree() > 0 {
        let r = x.prem(&y);
        if r.is_zero() {
            break;
        }
        x = y;
        y = r.primitive();
    }
    let g =
        if y.degree() == 0 { TPoly(vec![UPoly::constant(BigInt::one())]) } else { y.primitive() };
    TPoly(g.0.iter().map(|u| u.mul(&c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(c: i64, a: u32, b: u32) -> QTPolynomial {
        QTPolynomial::monomial(BigRational::from_integer(c.into()), a, b)
    }

    fn one_minus(a: u32, b: u32) -> QTPolynomial {
        &QTPolynomial::one() - &qt(1, a, b)
    }

    #[test]
    fn gcd_equal_inputs() {
        let p = one_minus(1, 1);
        assert_eq!(qt_gcd(&p, &p).unwrap(), p.monic());
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let g = qt_gcd(&one_minus(2, 2), &one_minus(1, 1)).unwrap();
        assert_eq!(g, one_minus(1, 1).monic());
    }

    #[test]
    fn gcd_of_coprime_variables() {
        assert_eq!(qt_gcd(&qt(1, 1, 0), &qt(1, 0, 1)).unwrap(), QTPolynomial::one());
    }

    #[test]
    fn gcd_both_zero_rejected() {
        assert_eq!(qt_gcd(&QTPolynomial::zero(), &QTPolynomial::zero()), Err(Error::ZeroGcd));
    }

    #[test]
    fn gcd_recovers_hidden_factor() {
        // (1 - q t^2)(q + t + 3) and (1 - q t^2)(q^2 - t)
        let f = one_minus(1, 2);
        let a = &f * &(&(&qt(1, 1, 0) + &qt(1, 0, 1)) + &qt(3, 0, 0));
        let b = &f * &(&qt(1, 2, 0) - &qt(1, 0, 1));
        assert_eq!(qt_gcd(&a, &b).unwrap(), f.monic());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let half = BigRational::new(1.into(), 2.into());
        let a = (&QTPolynomial::constant(half.clone()) - &qt(1, 1, 0)).scale(&half);
        let b = &(&QTPolynomial::one() - &qt(2, 1, 0)) * &qt(1, 0, 1);
        assert_eq!(qt_gcd(&a, &b).unwrap(), (&qt(1, 1, 0) - &QTPolynomial::constant(half)).monic());
    }
}
