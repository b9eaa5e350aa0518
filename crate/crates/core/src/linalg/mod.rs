//! Exact linear algebra over prime fields, the computational substrate for
//! everything else. All operations are pure functions on immutable inputs
//! and all pivoting follows the leftmost-column/topmost-row rule, so every
//! downstream computation is byte-deterministic.

mod echelon;
mod field;
mod matrix;
mod subspace;

pub use echelon::Echelon;
pub use field::PrimeField;
pub use matrix::{FMatrix, FVector};
pub use subspace::Subspace;
