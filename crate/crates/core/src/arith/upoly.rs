//! Dense univariate polynomials over ℤ, the coefficient ring of the
//! recursive bivariate gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients indexed by degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct UPoly(pub(crate) Vec<BigInt>);

impl UPoly {
    pub(crate) fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub(crate) fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; zero polynomial reports 0.
    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub(crate) fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = other.0.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigInt::zero(),
            });
        }
        let mut p = UPoly(out);
        p.trim();
        p
    }

    pub(crate) fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub(crate) fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = UPoly(out);
        p.trim();
        p
    }

    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub(crate) fn div_scalar(&self, c: &BigInt) -> UPoly {
        UPoly(self.0.iter().map(|x| x / c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub(crate) fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Exact division over ℤ; `None` when `d` does not divide `self`.
    pub(crate) fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.0.clone();
        let dl = d.lc();
        let dd = d.degree();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.0.iter().enumerate() {
                rem[k + j] -= &qk * c;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut q = UPoly(quot);
        q.trim();
        Some(q)
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &UPoly) -> UPoly {
        let mut r = self.clone();
        let dl = d.lc();
        let dd = d.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.lc();
            let mut next: Vec<BigInt> = r.0.iter().map(|c| c * &dl).collect();
            for (j, c) in d.0.iter().enumerate() {
                next[j + shift] -= &rl * c;
            }
            r = UPoly(next);
            r.trim();
        }
        r
    }

    /// Greatest common divisor over ℤ, primitive with positive leading coefficient.
    pub(crate) fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.primitive_with_content();
        }
        if other.is_zero() {
            return self.primitive_with_content();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.degree() > 0 {
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            a = b;
            b = r.primitive();
        }
        let g = if b.degree() == 0 { UPoly::constant(BigInt::one()) } else { b };
        UPoly(g.0.iter().map(|x| x * &c).collect())
    }

    fn primitive_with_content(&self) -> UPoly {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        let mut u = UPoly(cs.iter().map(|&c| BigInt::from(c)).collect());
        u.trim();
        u
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1 + q)(1 - q) and (1 + q)(2 + q)
        let a = p(&[1, 0, -1]);
        let b = p(&[2, 3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(p(&[4, 4]).gcd(&p(&[6, 6])), p(&[2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
    }
}
