//! Polynomials frozen from an independent computer-algebra computation of the
//! normalized joint eigenvector, compared against both routes.

use macdonald_core::hhl::f_hhl;
use macdonald_core::matrixprod::f_matrix_product;
use macdonald_core::{BigRational, Composition, QTPolynomial, QTRational, XPolynomial};

type Terms<'a> = &'a [(u32, u32, i64)];

fn poly(terms: Terms) -> QTPolynomial {
    let mut p = QTPolynomial::zero();
    for &(a, b, c) in terms {
        p = &p + &QTPolynomial::monomial(BigRational::from_integer(c.into()), a, b);
    }
    p
}

fn golden(mu: &[u32], table: &[(&[u32], Terms, Terms)]) {
    let mut expected = XPolynomial::zero(mu.len());
    for &(e, num, den) in table {
        let c = QTRational::new(poly(num), poly(den)).unwrap();
        expected.add_term(e.to_vec(), c);
    }
    let mu = Composition::new(mu.to_vec()).unwrap();
    assert_eq!(f_matrix_product(&mu, None).unwrap(), expected, "matrix route {mu}");
    assert_eq!(f_hhl(&mu).unwrap(), expected, "hhl route {mu}");
}

#[test]
fn frozen_oracle_values() {
    golden(
        &[0, 2],
        &[
            (&[2, 0], &[(2, 1, 1), (2, 0, -1)], &[(2, 1, 1), (0, 0, -1)]),
            (&[1, 1], &[(2, 1, 1), (2, 0, -1), (1, 1, 1), (1, 0, -1)], &[(2, 1, 1), (0, 0, -1)]),
            (&[0, 2], &[(0, 0, 1)], &[(0, 0, 1)]),
        ],
    );
    golden(&[1, 1], &[(&[1, 1], &[(0, 0, 1)], &[(0, 0, 1)])]);
    golden(
        &[0, 0, 1],
        &[
            (&[1, 0, 0], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[0, 1, 0], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[0, 0, 1], &[(0, 0, 1)], &[(0, 0, 1)]),
        ],
    );
    golden(
        &[0, 1, 1],
        &[
            (&[1, 1, 0], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[1, 0, 1], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[0, 1, 1], &[(0, 0, 1)], &[(0, 0, 1)]),
        ],
    );
    golden(
        &[2, 1, 0],
        &[
            (&[2, 1, 0], &[(0, 0, 1)], &[(0, 0, 1)]),
            (&[1, 1, 1], &[(0, 2, 1), (0, 1, -1)], &[(1, 2, 1), (0, 0, -1)]),
        ],
    );
    golden(
        &[1, 0, 2],
        &[
            (
                &[2, 1, 0],
                &[(3, 3, 1), (3, 2, -2), (3, 1, 1)],
                &[(3, 3, 1), (2, 2, -1), (1, 1, -1), (0, 0, 1)],
            ),
            (&[2, 0, 1], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[1, 2, 0], &[(2, 2, 1), (2, 1, -1)], &[(2, 2, 1), (0, 0, -1)]),
            (
                &[1, 1, 1],
                &[(3, 3, 1), (3, 2, -1), (2, 3, 1), (2, 2, -2), (2, 1, 1), (1, 1, -1), (1, 0, 1)],
                &[(3, 3, 1), (2, 2, -1), (1, 1, -1), (0, 0, 1)],
            ),
            (&[1, 0, 2], &[(0, 0, 1)], &[(0, 0, 1)]),
        ],
    );
    golden(
        &[0, 2, 1],
        &[
            (
                &[2, 1, 0],
                &[(3, 3, 1), (3, 2, -2), (3, 1, 1)],
                &[(3, 3, 1), (2, 2, -1), (1, 1, -1), (0, 0, 1)],
            ),
            (&[2, 0, 1], &[(2, 2, 1), (2, 1, -1)], &[(2, 2, 1), (0, 0, -1)]),
            (&[1, 2, 0], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (
                &[1, 1, 1],
                &[(3, 3, 1), (3, 2, -1), (2, 3, 1), (2, 2, -2), (2, 1, 1), (1, 1, -1), (1, 0, 1)],
                &[(3, 3, 1), (2, 2, -1), (1, 1, -1), (0, 0, 1)],
            ),
            (&[0, 2, 1], &[(0, 0, 1)], &[(0, 0, 1)]),
        ],
    );
    golden(
        &[2, 0, 1],
        &[
            (&[2, 1, 0], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[2, 0, 1], &[(0, 0, 1)], &[(0, 0, 1)]),
            (&[1, 1, 1], &[(0, 1, 1), (0, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
        ],
    );
    golden(
        &[1, 2, 0],
        &[
            (&[2, 1, 0], &[(1, 1, 1), (1, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
            (&[1, 2, 0], &[(0, 0, 1)], &[(0, 0, 1)]),
            (&[1, 1, 1], &[(0, 1, 1), (0, 0, -1)], &[(1, 1, 1), (0, 0, -1)]),
        ],
    );
    golden(
        &[0, 1, 0, 1],
        &[
            (
                &[1, 1, 0, 0],
                &[(2, 4, 1), (2, 3, -1), (1, 1, -1), (1, 0, 1)],
                &[(2, 4, 1), (1, 2, -2), (0, 0, 1)],
            ),
            (
                &[1, 0, 1, 0],
                &[(2, 4, 1), (2, 3, -2), (2, 2, 1)],
                &[(2, 4, 1), (1, 2, -2), (0, 0, 1)],
            ),
            (&[1, 0, 0, 1], &[(1, 2, 1), (1, 1, -1)], &[(1, 2, 1), (0, 0, -1)]),
            (&[0, 1, 1, 0], &[(1, 2, 1), (1, 1, -1)], &[(1, 2, 1), (0, 0, -1)]),
            (&[0, 1, 0, 1], &[(0, 0, 1)], &[(0, 0, 1)]),
        ],
    );
}
