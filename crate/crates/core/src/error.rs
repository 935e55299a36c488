use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system: family {family} rank {rank}")]
    UnsupportedRootSystem { family: String, rank: usize },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector length {got} does not match rank {rank}")]
    LengthMismatch { got: usize, rank: usize },
    #[error("{0} is not a positive root of this system")]
    NotARoot(String),
    #[error("wedge degree {j} out of range 0..={max}")]
    WedgeDegreeOutOfRange { j: usize, max: usize },
    #[error("multiset size cap exceeded: {size} > {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("invalid scenario parameters: {0}")]
    InvalidScenario(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("dominance violation: {0}")]
    NotDominating(String),
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("sampling did not stabilize: {0}")]
    NotStabilized(String),
}

pub type Result<T> = std::result::Result<T, Error>;
