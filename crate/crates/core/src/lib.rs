//! Exact computations with completions of rational Lie algebras.
//!
//! The linear-algebra and Lie-algebra layers are generic over [`Scalar`];
//! the aliases below fix the two instantiations used throughout: Q itself
//! and a number field `E = Q[t]/(q)`.

pub mod arith;
pub mod completion;
pub mod error;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod rng;
pub mod scalar;
pub mod sigma;

pub use arith::{FieldAutomorphism, FieldElement, NumberField};
pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

pub type QMatrix = linalg::Matrix<Rational>;
pub type EMatrix = linalg::Matrix<FieldElement>;
pub type QSubspace = linalg::Subspace<Rational>;
pub type ESubspace = linalg::Subspace<FieldElement>;
pub type QLieAlgebra = lie::LieAlgebra<Rational>;
pub type ELieAlgebra = lie::LieAlgebra<FieldElement>;
