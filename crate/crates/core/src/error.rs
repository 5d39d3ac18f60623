//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enum. Variants carry enough context to reconstruct the
/// failing call; [`Error::code`] gives a stable machine-readable tag used by
/// the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0} is not prime (or is >= 2^31)")]
    NotPrime(u64),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("not symmetric: coefficient changes under transposition of factors {i} and {j}")]
    NotSymmetric { i: usize, j: usize },
    #[error("margin rows must all sum to the same tensor degree: {0}")]
    BadMargins(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("tensor alphabet is not the algebra basis: {0}")]
    BadAlphabet(String),
    #[error("images do not span the target algebra")]
    NotSurjective,
    #[error("V not sufficiently big for this point")]
    NotSufficientlyBig,
    #[error("unsupported base ring: {0}")]
    UnsupportedBase(String),
    #[error("configuration lies on a diagonal")]
    OnDiagonal,
    #[error("degenerate chart: delta(x,x) = 0")]
    DegenerateChart,
    #[error("point outside chart")]
    PointOutsideChart,
    #[error("images not a basis")]
    NotABasis,
    #[error("algebra is not etale over its base")]
    NotEtale,
    #[error("exceeds configured bounds: {0}")]
    BoundsExceeded(String),
    #[error("division by a non-unit: {0}")]
    NotInvertible(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Stable machine-readable code for CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "syntax_error",
            Error::UnknownVariable(_) => "unknown_variable",
            Error::NotPrime(_) => "not_prime",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::EmptyInput(_) => "empty_input",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::BadMargins(_) => "bad_margins",
            Error::InvalidAlgebra(_) => "invalid_algebra",
            Error::BadAlphabet(_) => "bad_alphabet",
            Error::NotSurjective => "not_surjective",
            Error::NotSufficientlyBig => "not_sufficiently_big",
            Error::UnsupportedBase(_) => "unsupported_base",
            Error::OnDiagonal => "on_diagonal",
            Error::DegenerateChart => "degenerate_chart",
            Error::PointOutsideChart => "point_outside_chart",
            Error::NotABasis => "not_a_basis",
            Error::NotEtale => "not_etale",
            Error::BoundsExceeded(_) => "bounds_exceeded",
            Error::NotInvertible(_) => "not_invertible",
            Error::UnknownSuite(_) => "unknown_suite",
            Error::Invalid(_) => "invalid",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
