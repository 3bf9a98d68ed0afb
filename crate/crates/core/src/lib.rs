//! Exact generation of Catalan-like triangular arrays and verification of
//! log-concavity, strong q-log-convexity/concavity and total positivity.
//!
//! All arithmetic is exact over the rationals. Statements about infinite
//! sequences and matrices are checked on finite truncations and every report
//! records the range it certifies.

pub mod algebra;
pub mod conditions;
pub mod error;
pub mod oeis;
pub mod properties;
pub mod transforms;
pub mod triangles;

pub use error::{Error, Result};
