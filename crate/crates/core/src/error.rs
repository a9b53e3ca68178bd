use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("cannot parse exact rational from {0:?}")]
    Parse(String),
    #[error("cache for kind {cache} used for kind {requested}")]
    KindMismatch {
        cache: crate::KernelKind,
        requested: crate::KernelKind,
    },
    #[error("invalid cache file: {0}")]
    CacheFile(String),
}
