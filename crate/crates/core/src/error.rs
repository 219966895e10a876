use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base mismatch: `{left}` vs `{right}`")]
    BaseMismatch { left: String, right: String },

    #[error("no value given for symbol `{0}`")]
    MissingSymbol(String),

    #[error("Lefschetz value `{0}` is not a unit of Z[L, L^-1]")]
    NonInvertibleLefschetz(String),

    #[error("invalid generator symbol: {0}")]
    InvalidSymbol(String),

    #[error("cone is empty")]
    EmptyCone,

    #[error("degree form is not positive on the closed cone minus the origin")]
    NotSummable,

    #[error("degree must be positive, got {0}")]
    InvalidDegree(i64),

    #[error("linear form has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("stratum `{0}` has no discrepancy (nu)")]
    MissingDiscrepancy(String),

    #[error("stratum `{0}` has no auxiliary orders (M)")]
    MissingOrders(String),

    #[error("stratum `{0}` has no form order (alpha) and the gauge is explicit")]
    MissingFormOrder(String),

    #[error("invalid linear form: {0}")]
    InvalidForm(String),

    #[error("invalid symbol identification: {0}")]
    InvalidIdentification(String),

    #[error("invalid resolution data:\n{0}")]
    Validation(String),

    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
