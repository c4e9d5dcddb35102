use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root system rank must be at least 1")]
    EmptyRank,

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight {0:?} is not P-dominant (only the last coordinate may be negative)")]
    NotParabolicDominant(Vec<i64>),

    #[error("weight {0:?} is not G-dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("partition {parts:?} has more than {rank} rows")]
    TooManyRows { parts: Vec<u32>, rank: usize },

    #[error("exterior power {j} out of range for rank {rank}")]
    WedgeOutOfRange { j: u32, rank: usize },

    #[error("wedge index j_{slot} = {j} exceeds its bound {bound}")]
    SlotBound { slot: usize, j: u32, bound: u32 },

    #[error("expected {expected} wedge factors, got {found}")]
    FactorCount { expected: usize, found: usize },

    #[error("isotropic index k must be at least 1")]
    ZeroIndex,

    #[error("projective dimension n = {n} must be odd")]
    EvenDimension { n: usize },

    #[error("projective dimension n = {n} is below 2k+1 = {min}")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("cohomology is only computed on LG(k), i.e. n = 2k+1 (got n = {n}, k = {k})")]
    NotLagrangian { k: usize, n: usize },

    #[error("a concrete twist is required")]
    SymbolicTwist,

    #[error("multiplicity overflowed 64 bits")]
    MultiplicityOverflow,

    #[error("could not start worker pool: {0}")]
    ThreadPool(String),

    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
