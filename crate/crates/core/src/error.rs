use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {0}")]
    InvalidType(String),

    #[error("cannot parse type label `{0}` (expected e.g. A4, B2, G2)")]
    ParseType(String),

    #[error("weight {0:?} is not dominant integral")]
    NotDominant(Vec<i64>),

    #[error("weight has {got} coordinates, rank is {rank}")]
    RankMismatch { got: usize, rank: usize },

    #[error("{what}: {count} exceeds the configured ceiling {ceiling}")]
    ScaleExceeded {
        what: &'static str,
        count: u128,
        ceiling: u128,
    },

    #[error("element is not in W_f^(2): some n_phi exceeds 1")]
    NotInWf2,

    #[error("root set is not an abelian ideal of the positive roots")]
    NotAbelianIdeal,

    #[error("no dominant alcove matches the given ideal")]
    NoMatchingAlcove,

    #[error("partition has {parts} nonzero parts, at most {max} allowed")]
    TooManyParts { parts: usize, max: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
