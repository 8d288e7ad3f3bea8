//! Exact Chevalley-Eilenberg cohomology, wedge pairings and Hodge theory for
//! Lie algebras, with a decision procedure for whether an almost complex
//! structure on a 4-dimensional unimodular Lie algebra is tamed by (or
//! compatible with) a symplectic form.
//!
//! All arithmetic is over exact rationals, so every verdict (ranks,
//! signatures, positivity) is a discrete, reproducible decision.

pub mod acceptance;
pub mod acs;
pub mod catalog;
pub mod error;
pub mod exterior;
pub mod hodge;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod pairing;
pub mod sample;
pub mod scalar;
pub mod subspace;
pub mod sweep;
pub mod tameness;

pub use acs::AlmostComplexStructure;
pub use error::{Error, Result};
pub use exterior::{evaluate, KForm, KVector, MultiIndex};
pub use lie::LieAlgebra;
pub use linalg::Matrix;
pub use pairing::{Orientation, SignatureReport};
pub use hodge::{Hodge, InnerProduct};
pub use scalar::Scalar;
pub use subspace::Subspace;
