//! Exact kernel sequences over integer compositions.
//!
//! The kernels `K_b(n)` and `K_e(n)` are signed sums over the compositions
//! of `n` with weights `1/(2b+1)!` and `1/(2b)!` per part. They are
//! computed three ways (recursion, composition sum, Hessenberg
//! determinant), scaled into Bernoulli and Euler numbers, and used to build
//! the coefficients of truncated Gamma, digamma, polygamma and Hurwitz zeta
//! expansions.

pub mod compositions;
mod error;
pub mod exactnum;
pub mod kernels;
pub mod oracles;
pub mod sequences;
pub mod specfun;

pub use compositions::{Composition, Compositions};
pub use error::Error;
pub use exactnum::ExactRational;
pub use kernels::{KernelCache, KernelKind, Method};
