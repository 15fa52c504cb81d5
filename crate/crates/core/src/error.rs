use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u128),
    #[error("modulus {0} exceeds the supported range (at most 2^64 - 1)")]
    ModulusTooLarge(u128),
    #[error("cannot factor {value}: cofactor {cofactor} is beyond the trial-division bound {bound}")]
    FactorizationBound { value: u128, cofactor: u128, bound: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid label {label} on edge v{u}v{v}: {reason}")]
    InvalidLabel { u: usize, v: usize, label: u128, reason: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vector has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex index {index} out of range 1..={n}")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("not a spline: edge v{u}v{v} with label {label} sees difference {difference}")]
    NotASpline { u: usize, v: usize, label: u128, difference: u128 },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("enumeration oracle infeasible: budget of {budget} search nodes exceeded")]
    OracleInfeasible { budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
