use thiserror::Error;

/// Errors raised by the algebra, topology, mapping and cover operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{num}/{den} lies outside the unit interval")]
    OutOfUnitInterval { num: i64, den: i64 },
    #[error("malformed grade `{0}` (expected \"0\", \"1\" or \"p/q\")")]
    MalformedGrade(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("operands live over different contexts")]
    ContextMismatch,
    #[error("closure exceeded the cap of {cap} members")]
    CapExceeded { cap: usize },
    #[error("family does not cover the target: deficiency at ({parameter}, {point})")]
    NotACover { parameter: String, point: String },
    #[error("exact subcover search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },
    #[error("mapping is not total: no image for `{0}`")]
    NonTotalMapping(String),
    #[error("invalid generator settings: {0}")]
    InvalidGeneratorSettings(String),
}
