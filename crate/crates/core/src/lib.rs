//! Exact computation of nonsymmetric Macdonald polynomials by several
//! independent routes, with verifiers for the identities that connect them.

pub mod arith;
pub mod comb;
pub mod error;
pub mod hecke;
pub mod hhl;
pub mod matrixprod;
pub mod report;
pub mod vertex;
pub mod xpoly;

pub use arith::{BigRational, QTPolynomial, QTRational};
pub use comb::{Composition, Square};
pub use error::{Error, Result};
pub use xpoly::XPolynomial;
