//! Exact arithmetic: rationals, polynomials in (q, t) and the field ℚ(q, t).

mod factored;
mod gcd;
mod qtpoly;
mod qtrational;
mod upoly;

pub use factored::{Factored, FactoredSum};
pub use gcd::qt_gcd;
pub use num_rational::BigRational;
pub use qtpoly::{QTExp, QTPolynomial};
pub use qtrational::{field_arith, qt_eval, QTRational};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// The four field operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Formats an integer as `a` and any other rational as `a/b`.
pub fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let d = parse(b)?;
            if d == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(parse(a)?, d))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

/// Shorthand for the rational `a/b`.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}
