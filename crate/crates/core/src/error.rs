use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime below 2^62")]
    InvalidPrime(u64),

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("degree {degree} is not below the characteristic {prime}; squarefree part may be wrong")]
    Inseparable { degree: usize, prime: u64 },

    #[error("polynomial is not bihomogeneous: `{first}` and `{second}` have different bidegrees")]
    NotHomogeneous { first: String, second: String },

    #[error("base point (0:0) is not a point of P^1")]
    DegeneratePoint,

    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("index {0} out of range 1..=5")]
    IndexOutOfRange(usize),

    #[error("matrix is not twist-homogeneous: entry ({i},{j}) violates the twist constraints")]
    NotTwistHomogeneous { i: usize, j: usize },

    #[error("Groebner step budget of {budget} pair reductions exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("general fibre is trigonal at {point}; the slope equality hypotheses fail")]
    GenericFibreTrigonal { point: String },

    #[error("degenerate fibre: {0}")]
    DegenerateFibre(String),

    #[error("no zero-residual window of length >= 3 in the Hilbert fit; values {values:?}")]
    FitFailed { values: Vec<(u32, i64)> },

    #[error("mismatched fields in arithmetic: {0}")]
    FieldMismatch(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
