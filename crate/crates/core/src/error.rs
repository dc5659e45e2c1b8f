use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("invalid scalar literal {0:?}")]
    ParseScalar(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("integer shift class undefined: beta[{beta}] - alpha[{alpha}] is an integer")]
    IntegerDifference { alpha: usize, beta: usize },

    #[error("no admissible matching: no pair with alpha_i - beta_j a nonnegative integer")]
    NoAdmissibleMatching,

    #[error("operator must be monic with positive order: {0}")]
    InvalidOperator(String),

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("matrix {index} is singular")]
    Singular { index: usize },

    #[error("A[{i}]·A[{j}]^-1 is not a pseudo-reflection")]
    NotPseudoReflection { i: usize, j: usize },

    #[error("no common frame: {0}")]
    NoCommonFrame(String),

    #[error("not a common eigenvalue: {0}")]
    NotCommonEigenvalue(String),

    #[error("subspace is not invariant under matrix {index}")]
    NotInvariant { index: usize },

    #[error("subspace must be nontrivial and proper")]
    TrivialSubspace,

    #[error("characteristic polynomials have constant gcd")]
    ConstantGcd,

    #[error("zero is not allowed in a spectrum")]
    ZeroInSpectrum,

    #[error("spectra share the common value {0}")]
    CommonSpectralValue(String),

    #[error("spectrum-intersection hypothesis violated: {0}")]
    SpectrumIntersection(String),

    #[error("normal form requires shared columns, frame shares rows")]
    RowFrame,

    #[error("reducible parameters: alpha[{alpha}] - beta[{beta}] is an integer")]
    ReducibleParameters { alpha: usize, beta: usize },

    #[error("parameter {0} is not real; numeric monodromy needs real rational parameters")]
    NonRealParameter(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
