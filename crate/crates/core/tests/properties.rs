//! Property tests for the algebraic layers.

use macdonald_core::arith::{Factored, FactoredSum};
use macdonald_core::hecke::apply_t;
use macdonald_core::matrixprod::{colour_data, kappa_check, Twist};
use macdonald_core::{BigRational, QTPolynomial, QTRational, XPolynomial};
use proptest::prelude::*;

fn rational(c: i64) -> BigRational {
    BigRational::from_integer(c.into())
}

fn qt_poly() -> impl Strategy<Value = QTPolynomial> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..=3), 0..4).prop_map(|terms| {
        let mut p = QTPolynomial::zero();
        for (a, b, c) in terms {
            p = &p + &QTPolynomial::monomial(rational(c), a, b);
        }
        p
    })
}

fn nonzero_poly() -> impl Strategy<Value = QTPolynomial> {
    qt_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qt_rational() -> impl Strategy<Value = QTRational> {
    (qt_poly(), nonzero_poly()).prop_map(|(n, d)| QTRational::new(n, d).unwrap())
}

fn x_poly(n: usize) -> impl Strategy<Value = XPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), qt_rational()), 0..4).prop_map(
        move |terms| {
            let mut p = XPolynomial::zero(n);
            for (e, c) in terms {
                p.add_term(e, c);
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in qt_rational(), b in qt_rational(), c in qt_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in qt_poly(), d in nonzero_poly(), k in nonzero_poly()) {
        let plain = QTRational::new(n.clone(), d.clone()).unwrap();
        let scaled = QTRational::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(plain, scaled);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in qt_rational(),
        b in qt_rational(),
        qn in -7i64..=7,
        tn in 2i64..=9,
    ) {
        let (q, t) = (BigRational::new(qn.into(), 5.into()), BigRational::new(tn.into(), 3.into()));
        if let (Ok(x), Ok(y)) = (a.eval(&q, &t), b.eval(&q, &t)) {
            prop_assert_eq!((&a + &b).eval(&q, &t).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).eval(&q, &t).unwrap(), &x * &y);
        }
    }

    #[test]
    fn factored_sums_match_field_sums(
        terms in prop::collection::vec(
            (-2i64..=2, -2i64..=2, prop::collection::vec((0i64..3, 0i64..3, -2i32..=2), 0..3), -3i64..=3),
            0..5,
        )
    ) {
        let mut sum = FactoredSum::new();
        let mut naive = QTRational::zero();
        for (a, b, binomials, c) in terms {
            let mut f = Factored::monomial(a, b).scale(&rational(c));
            let mut g = QTRational::monomial(a, b).scale(&rational(c));
            for (x, y, e) in binomials {
                if x == 0 && y == 0 {
                    continue;
                }
                f = f.mul(&Factored::binomial(x, y, e).unwrap());
                let base = &QTRational::one() - &QTRational::monomial(x, y);
                g = &g * &base.pow(i64::from(e)).unwrap();
            }
            prop_assert_eq!(f.to_qtrational(), g.clone());
            sum.add(f);
            naive = &naive + &g;
        }
        prop_assert_eq!(sum.to_qtrational().unwrap(), naive);
    }

    #[test]
    fn swap_is_an_involution(p in x_poly(3), i in 1usize..3) {
        prop_assert_eq!(p.swap_vars(i).unwrap().swap_vars(i).unwrap(), p);
    }

    #[test]
    fn omega_to_the_n_scales_every_variable(p in x_poly(3)) {
        let mut lhs = p.clone();
        for _ in 0..3 {
            lhs = lhs.cyclic_omega();
        }
        let mut rhs = p.clone();
        for i in 1..=3 {
            rhs = rhs.q_scale_var(i, 1);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_identity(p in x_poly(3), i in 1usize..3) {
        let d = p.divided_difference_div(i).unwrap();
        let diff = &XPolynomial::var(3, i) - &XPolynomial::var(3, i + 1);
        prop_assert_eq!(&diff * &d, &p - &p.swap_vars(i).unwrap());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in x_poly(2),
        b in x_poly(2),
        c in x_poly(2),
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn hecke_inverse_round_trip(p in x_poly(3), i in 1usize..3) {
        let back = apply_t(&apply_t(&p, i, false).unwrap(), i, true).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rotation_constant_on_random_columns(
        perm in Just((1usize..=4).collect::<Vec<_>>()).prop_shuffle(),
        keep in prop::collection::vec(0u8..3, 4),
        targets in Just((0usize..4).collect::<Vec<_>>()).prop_shuffle(),
        twists in prop::collection::vec((1i64..4, -2i64..3), 5),
    ) {
        // colour perm[r] sits in row r+1 unless dropped; kept colours either
        // exit right at a shuffled row or leave through the top
        let n = 4;
        let mut left = vec![0; n];
        let mut right = vec![0; n];
        for r in 0..n {
            if keep[r] == 0 {
                continue;
            }
            left[r] = perm[r];
            if keep[r] == 2 {
                right[targets[r]] = perm[r];
            }
        }
        let data = colour_data(&left, &right).unwrap();
        let mut v = vec![Twist::Zero; n + 1];
        for &c in data.p.iter().chain(&data.q) {
            let (a, b) = twists[c];
            v[c] = Twist::Monomial { q: a, t: b };
        }
        prop_assert!(kappa_check(&left, &right, &v).unwrap());
    }
}
