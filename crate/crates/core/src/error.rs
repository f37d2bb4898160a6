use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by the arithmetic, operator and lattice layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("denominator vanishes at q = {q}, t = {t}")]
    VanishingDenominator { q: Box<BigRational>, t: Box<BigRational> },

    #[error("alphabet size mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("square ({col}, {row}) lies outside the diagram")]
    SquareOutsideDiagram { col: usize, row: u32 },

    #[error("inadmissible column boundary: {0}")]
    Inadmissible(String),

    #[error("twist parameter of colour {colour} must vanish outside the colour data")]
    NonzeroTwist { colour: usize },

    #[error("illegal lattice configuration: {0}")]
    IllegalConfiguration(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
