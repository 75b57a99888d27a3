use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("set is not a subgroup")]
    NotASubgroup,

    #[error("size bound exceeded for {what}: needs {needed}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        needed: usize,
        bound: usize,
    },

    #[error("additive identity {add} differs from multiplicative identity {mul}")]
    IdentityMismatch { add: usize, mul: usize },

    #[error("brace law fails at a={a}, b={b}, c={c}: a∘(b+c) != a∘b - a + a∘c")]
    BraceLawViolation { a: usize, b: usize, c: usize },

    #[error("set is not an ideal")]
    NotAnIdeal,

    #[error("action is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("map is not a brace automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("multiplicative group has no unique subgroup of index 2")]
    NoIndexTwoSubgroup,

    #[error("tau must be a brace automorphism of order dividing 2")]
    TauOrderInvalid,

    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),

    #[error("star-product closure exceeded the cap of {cap} distinct subgroups")]
    ClosureCapExceeded { cap: usize },

    #[error("unsupported order {order}: {reason}")]
    UnsupportedOrder { order: usize, reason: String },

    #[error("search failed: {0}")]
    SearchFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BoundExceeded { .. } | Error::ClosureCapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
