//! Exact rational computations with quadratic Lie algebras, their Weil
//! algebras, Clifford and enveloping algebras, and the maps between them.

pub mod algebra;
pub mod clifford;
pub mod element;
pub mod enveloping;
pub mod error;
pub mod liealg;
pub mod matrix;
pub mod relative;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod series;
pub mod supercomm;
pub mod verify;
pub mod weil;

pub use element::{Element, Parity};
pub use error::{Error, Result};
pub use scalar::Scalar;
