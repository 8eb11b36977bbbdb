//! Exact computations for the degenerate double affine Hecke algebra of
//! type A: periodic skew diagrams, their semisimple irreducible modules,
//! intertwiner products with symbolic limits, and embeddings of those
//! modules into Verma modules.

pub mod algebra;
pub mod cli;
pub mod daha;
pub mod diagram;
pub mod embedding;
pub mod error;
pub mod semisimple;
pub mod weyl;

pub use error::{DahaError, Result};
