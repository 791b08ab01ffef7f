use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("line {line}: {message}")]
    Located { line: usize, message: String },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("subspace is not a unital subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("extension is not depth two ({0} quasibase missing)")]
    NotDepthTwo(&'static str),

    #[error("base algebra has no symmetric separability element")]
    NotKanzakiSeparable,

    #[error("map does not descend to the quotient: {0}")]
    DoesNotDescend(String),

    #[error("invalid coaction: {0}")]
    InvalidCoaction(String),

    #[error("invalid Hopf structure: {0}")]
    InvalidHopf(String),

    #[error("Galois map is not bijective onto its corner")]
    NotGalois,

    #[error("no nondegenerate left integral found")]
    NoIntegral,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("instance lacks `{0}` required by this command")]
    MissingBlock(&'static str),

    #[error("unknown command `{0}`")]
    UnknownCommand(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
