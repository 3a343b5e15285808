//! Non-semisimple quantum invariants from the unrolled quantum group of
//! `sl(2)` at `q = exp(iπ/r)`: the renormalized link invariant, closed
//! 3-manifold invariants from surgery presentations, and graded dimensions of
//! the associated TQFT state spaces.

pub mod diagram;
pub mod error;
pub mod exec;
pub mod invariant;
pub mod json;
pub mod linalg;
pub mod qscalar;
pub mod repcat;
pub mod selftest;
pub mod tqftdim;

pub use error::{Error, Result};
pub use exec::{configure_threads, Exec};
pub use qscalar::{Degree, QScalar, RootParams};
