//! Exact construction and numeric verification of Darboux–Crum and
//! Krein–Adler deformations of shape-invariant quantum systems.
//!
//! The [`algebra`] module provides exact arithmetic over ℚ(i), [`ortho`]
//! the classical polynomial families, [`systems`] the eleven solvable
//! systems, [`deform`] the Wronskian constructions and [`verify`] the
//! exact and floating-point checks that tie them together.

pub mod algebra;
pub mod deform;
pub mod error;
pub mod numeric;
pub mod ortho;
pub mod systems;
pub mod verify;

pub use algebra::{GaussianRational, Poly, PolyMatrix, Rational};
pub use deform::{DeletionSpec, IndexSet};
pub use error::{Error, Result};
pub use systems::{ParamVec, SystemId};
pub use verify::{CheckResult, GridSpec, Status, Summary, VerificationReport};
