use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type `{0}`: {1}")]
    InvalidType(String, &'static str),
    #[error("cannot parse weight `{0}`")]
    WeightParse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("node {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("xi must be a nonzero dominant weight")]
    ZeroXi,
    #[error("negative multiplicity in an actual character")]
    NegativeMultiplicity,
    #[error("{0} is not a positive root")]
    NotAPositiveRoot(String),
    #[error("root subset does not span an abelian ideal of the Borel: {0}")]
    NotAnIdeal(String),
    #[error("({mu}, {grade}) is not in the poset")]
    OutsideGamma { mu: String, grade: u32 },
    #[error("weight {weight} violates the Jacobi-Trudi restriction: {reason}")]
    JtRestriction { weight: String, reason: String },
    #[error("stable-range precondition violated: {0}")]
    NotStable(String),
    #[error("Koike-Terada route not calibrated for {0}")]
    NotCalibrated(String),
    #[error("{0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
