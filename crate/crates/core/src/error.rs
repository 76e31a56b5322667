use crate::semigroup::Diagnostics;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ideals must be nonempty subsets")]
    EmptySubset,
    #[error("{what} is limited to {max} elements, got {n}")]
    SizeBound {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("element {0} is not an ordered idempotent")]
    NotIdempotent(String),
    #[error("invalid structure: {0}")]
    Invalid(#[from] Diagnostics),
    #[error("order must be discrete for a plain semigroup")]
    NotDiscrete,
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("bad predicate expression: {0}")]
    Expression(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
