//! Homological invariants of finite connected graded algebras over prime
//! fields, and from them certified numerical estimates of the categorical
//! entropy and categorical polynomial entropy of the grading-twist functor
//! on the stable module category.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: exact linear algebra over F_p (bit-packed for p = 2);
//! - [`algebra`]: finite connected graded algebras, optional Hopf structure,
//!   built-in examples, Frobenius orientations, duality;
//! - [`module`]: finite-dimensional graded left modules, homogeneous maps,
//!   kernels/cokernels, twists, syzygies, exactness certification;
//! - [`homology`]: minimal free resolutions, bigraded Ext with Yoneda
//!   products, the cobar oracle, stable (Tate) Ext, Poincaré series,
//!   growth fitting and partition counts;
//! - [`entropy`]: staircases, towers, pyramids, the recursive complexity
//!   bound with replayable witnesses, and entropy reports;
//! - [`registry`]: the built-in algebra registry used by the CLI;
//! - [`accept`]: the acceptance suite shared by tests and the CLI.

pub mod accept;
pub mod algebra;
pub mod entropy;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod module;
pub mod registry;

pub use error::{Error, Result};
pub use linalg::{Echelon, FMatrix, FVector, PrimeField};
