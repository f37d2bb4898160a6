//! The polynomial representation of the affine Hecke algebra: Hecke
//! generators, the cyclic generator, and Cherednik–Dunkl operators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::QTRational;
use crate::comb::Composition;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::xpoly::XPolynomial;

/// Which operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    T,
    Tinv,
    Omega,
    Y,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeOperatorSpec {
    pub kind: OperatorKind,
    pub index: usize,
}

impl HeckeOperatorSpec {
    pub fn apply(&self, p: &XPolynomial) -> Result<XPolynomial> {
        match self.kind {
            OperatorKind::T => apply_t(p, self.index, false),
            OperatorKind::Tinv => apply_t(p, self.index, true),
            OperatorKind::Omega => Ok(p.cyclic_omega()),
            OperatorKind::Y => apply_y(p, self.index),
            OperatorKind::S => p.swap_vars(self.index),
        }
    }
}

/// `a x_i + b x_{i+1}` as a polynomial.
fn linear(n: usize, i: usize, a: QTRational, b: QTRational) -> XPolynomial {
    let mut p = XPolynomial::var(n, i).scale(&a);
    p = &p + &XPolynomial::var(n, i + 1).scale(&b);
    p
}

/// Shared shape of both Hecke realizations:
/// `T p = t p − L · dd(p)` and `T⁻¹ p = t⁻¹ (p − L · dd(p))`.
fn hecke_with(
    p: &XPolynomial,
    i: usize,
    inverse: bool,
    a: QTRational,
    b: QTRational,
) -> Result<XPolynomial> {
    let dd = p.divided_difference_div(i)?;
    let corr = linear(p.nvars(), i, a, b).checked_mul(&dd)?;
    if inverse {
        Ok(p.checked_sub(&corr)?.scale(&QTRational::monomial(0, -1)))
    } else {
        p.scale(&QTRational::t()).checked_sub(&corr)
    }
}

/// `T_i` or `T_i⁻¹` acting on `p`.
pub fn apply_t(p: &XPolynomial, i: usize, inverse: bool) -> Result<XPolynomial> {
    hecke_with(p, i, inverse, QTRational::one(), -QTRational::t())
}

/// `Y_i = T_{i−1}⋯T_1 · ω · T_{n−1}⁻¹⋯T_i⁻¹`, rightmost factor first.
pub fn apply_y(p: &XPolynomial, i: usize) -> Result<XPolynomial> {
    let n = p.nvars();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange { index: i, lo: 1, hi: n });
    }
    let mut h = p.clone();
    for k in i..n {
        h = apply_t(&h, k, true)?;
    }
    h = h.cyclic_omega();
    for k in 1..i {
        h = apply_t(&h, k, false)?;
    }
    Ok(h)
}

/// The reversed-alphabet generator `T̃_i` or its inverse.
pub fn apply_t_tilde(p: &XPolynomial, i: usize, inverse: bool) -> Result<XPolynomial> {
    hecke_with(p, i, inverse, QTRational::t(), -QTRational::one())
}

/// `(ω̃ h)(x_1, …, x_n) = h(q x_n, x_1, …, x_{n−1})`.
pub fn omega_tilde(p: &XPolynomial) -> XPolynomial {
    let n = p.nvars();
    let mut out = XPolynomial::zero(n);
    for (e, c) in p.terms() {
        if n == 0 {
            out.add_term(e.clone(), c.clone());
            continue;
        }
        let mut f = vec![0; n];
        f[..n - 1].copy_from_slice(&e[1..]);
        f[n - 1] = e[0];
        out.add_term(f, c * &QTRational::monomial(e[0] as i64, 0));
    }
    out
}

/// `Ỹ_i = T̃_i⋯T̃_{n−1} · ω̃ · T̃_1⁻¹⋯T̃_{i−1}⁻¹`, rightmost factor first.
pub fn apply_y_tilde(p: &XPolynomial, i: usize) -> Result<XPolynomial> {
    let n = p.nvars();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange { index: i, lo: 1, hi: n });
    }
    let mut h = p.clone();
    for k in (1..i).rev() {
        h = apply_t_tilde(&h, k, true)?;
    }
    h = omega_tilde(&h);
    for k in (i..n).rev() {
        h = apply_t_tilde(&h, k, false)?;
    }
    Ok(h)
}

fn first_difference(a: &XPolynomial, b: &XPolynomial) -> String {
    let diff = a - b;
    let first = diff.terms().next().map(|(e, _)| e.clone());
    match first {
        Some(e) => format!(
            "at x^{e:?}: {} vs {}",
            a.coefficient_of(&e).unwrap_or_default(),
            b.coefficient_of(&e).unwrap_or_default()
        ),
        None => String::new(),
    }
}

/// Checks `Y_i f = y_i(μ) f` for every `i`.
pub fn verify_eigen(f: &XPolynomial, mu: &Composition) -> Report {
    let mut r = Report::new(format!("eigen {mu}"));
    if f.nvars() != mu.n() {
        r.fail("alphabet", Error::AlphabetMismatch { left: f.nvars(), right: mu.n() }.to_string());
        return r;
    }
    for i in 1..=mu.n() {
        let label = format!("Y_{i}");
        let lhs = match apply_y(f, i) {
            Ok(x) => x,
            Err(e) => {
                r.fail(label, e.to_string());
                continue;
            }
        };
        let rhs = f.scale(&mu.eigenvalue_y(i).expect("index in range"));
        if lhs == rhs {
            r.pass(label);
        } else {
            r.fail(label, first_difference(&lhs, &rhs));
        }
    }
    r
}

/// A random polynomial of total degree at most `deg` with small integer
/// coefficients, each multiplied by a random `q^a t^b` with `a, b ≤ 1`.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, deg: u32, terms: usize) -> XPolynomial {
    let mut p = XPolynomial::zero(n);
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let mut budget = rng.gen_range(0..=deg);
        while budget > 0 {
            e[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        let c = QTRational::from_int(rng.gen_range(-3..=3))
            * QTRational::monomial(rng.gen_range(0..=1), rng.gen_range(0..=1));
        p.add_term(e, c);
    }
    p
}

fn compare(
    r: &mut Report,
    label: String,
    lhs: Result<XPolynomial>,
    rhs: Result<XPolynomial>,
    witness: &XPolynomial,
) {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => r.pass(label),
        (Ok(a), Ok(b)) => r.fail(label, format!("witness {witness}: {}", first_difference(&a, &b))),
        (Err(e), _) | (_, Err(e)) => r.fail(label, e.to_string()),
    }
}

/// Quadratic, braid, far-commutation and Y-commutation relations on random
/// polynomials with symbolic `q, t`.
pub fn verify_hecke_relations(n: usize, samples: usize, seed: u64) -> Report {
    let mut r = Report::new(format!("hecke relations n={n}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = |p: &XPolynomial, i| apply_t(p, i, false);
    for s in 0..samples {
        let p = random_polynomial(&mut rng, n, 3, 4);
        for i in 1..n {
            // (T_i − t)(T_i + 1) p = T_i² p + (1 − t) T_i p − t p
            let lhs = (|| {
                let tp = t(&p, i)?;
                let ttp = t(&tp, i)?;
                let one_minus_t = QTRational::one_minus_monomial(0, 1);
                ttp.checked_add(&tp.scale(&one_minus_t))?.checked_sub(&p.scale(&QTRational::t()))
            })();
            compare(
                &mut r,
                format!("sample {s}: quadratic T_{i}"),
                lhs,
                Ok(XPolynomial::zero(n)),
                &p,
            );
            let inv = apply_t(&p, i, false).and_then(|x| apply_t(&x, i, true));
            compare(&mut r, format!("sample {s}: inverse T_{i}"), inv, Ok(p.clone()), &p);
        }
        for i in 1..n.saturating_sub(1) {
            let lhs = t(&p, i).and_then(|x| t(&x, i + 1)).and_then(|x| t(&x, i));
            let rhs = t(&p, i + 1).and_then(|x| t(&x, i)).and_then(|x| t(&x, i + 1));
            compare(&mut r, format!("sample {s}: braid T_{i}"), lhs, rhs, &p);
        }
        for i in 1..n {
            for j in i + 2..n {
                let lhs = t(&p, j).and_then(|x| t(&x, i));
                let rhs = t(&p, i).and_then(|x| t(&x, j));
                compare(&mut r, format!("sample {s}: far T_{i} T_{j}"), lhs, rhs, &p);
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                let lhs = apply_y(&p, j).and_then(|x| apply_y(&x, i));
                let rhs = apply_y(&p, i).and_then(|x| apply_y(&x, j));
                compare(&mut r, format!("sample {s}: [Y_{i}, Y_{j}]"), lhs, rhs, &p);
            }
        }
    }
    r
}

/// Checks `Y_{n−i+1} h = R Ỹ_i R h` for every `i`, where `R` reverses the alphabet.
pub fn verify_reversal(h: &XPolynomial) -> Report {
    let n = h.nvars();
    let mut r = Report::new("reversal");
    for i in 1..=n {
        let lhs = apply_y(h, n - i + 1);
        let rhs = apply_y_tilde(&h.reverse_vars(), i).map(|x| x.reverse_vars());
        compare(&mut r, format!("Y_{} vs tilde Y_{i}", n - i + 1), lhs, rhs, h);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> XPolynomial {
        XPolynomial::var(n, i)
    }

    fn f01() -> XPolynomial {
        let c = (&QTRational::q() * &QTRational::one_minus_monomial(0, 1))
            .checked_div(&QTRational::one_minus_monomial(1, 1))
            .unwrap();
        &x(2, 2) + &x(2, 1).scale(&c)
    }

    #[test]
    fn t_on_constants_and_x1() {
        let one = XPolynomial::one(3);
        assert_eq!(apply_t(&one, 2, false).unwrap(), one.scale(&QTRational::t()));
        let expect = &x(2, 1).scale(&(&QTRational::t() - &QTRational::one()))
            + &x(2, 2).scale(&QTRational::t());
        assert_eq!(apply_t(&x(2, 1), 1, false).unwrap(), expect);
        assert_eq!(apply_t(&x(2, 2), 1, false).unwrap(), x(2, 1));
        assert!(apply_t(&x(2, 1), 2, false).is_err());
    }

    #[test]
    fn y_examples() {
        assert_eq!(apply_y(&x(2, 1), 1).unwrap(), x(2, 1).scale(&QTRational::q()));
        let f = f01();
        assert_eq!(apply_y(&f, 2).unwrap(), f.scale(&QTRational::monomial(1, 1)));
        for n in 1..=4 {
            for i in 1..=n {
                let one = XPolynomial::one(n);
                let y = apply_y(&one, i).unwrap();
                assert_eq!(y, one.scale(&QTRational::monomial(0, 2 * i as i64 - n as i64 - 1)));
            }
        }
    }

    #[test]
    fn eigen_reports() {
        let mu = Composition::new(vec![1, 0]).unwrap();
        assert!(verify_eigen(&x(2, 1), &mu).passed());
        assert!(verify_eigen(&XPolynomial::one(3), &Composition::zeros(3)).passed());
        let bad = verify_eigen(&x(2, 2), &mu);
        assert!(!bad.passed());
        assert!(verify_eigen(&f01(), &Composition::new(vec![0, 1]).unwrap()).passed());
    }

    #[test]
    fn relations_on_spec_witnesses() {
        let p = x(2, 1);
        let tp = apply_t(&p, 1, false).unwrap();
        let ttp = apply_t(&tp, 1, false).unwrap();
        let quad =
            &(&ttp + &tp.scale(&QTRational::one_minus_monomial(0, 1))) - &p.scale(&QTRational::t());
        assert!(quad.is_zero());
        let p = x(3, 2);
        let t = |p: &XPolynomial, i| apply_t(p, i, false).unwrap();
        assert_eq!(t(&t(&t(&p, 1), 2), 1), t(&t(&t(&p, 2), 1), 2));
        let p = x(2, 1);
        assert_eq!(
            apply_y(&apply_y(&p, 2).unwrap(), 1).unwrap(),
            apply_y(&apply_y(&p, 1).unwrap(), 2).unwrap()
        );
    }

    #[test]
    fn random_relations() {
        for n in 2..=3 {
            let r = verify_hecke_relations(n, 3, 7);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn reversal_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            for _ in 0..3 {
                let h = random_polynomial(&mut rng, n, 3, 4);
                let r = verify_reversal(&h);
                assert!(r.passed(), "{r}");
            }
        }
    }
}
