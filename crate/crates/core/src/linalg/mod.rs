//! Exact linear algebra over Q or a number field.

mod matrix;
mod restrict;
mod subspace;

pub use matrix::{dot, is_zero_vec, unit, vec_add, vec_scale, vec_sub, Matrix};
pub use restrict::{
    extend_span, extend_vector, lift_matrix, lift_vector, multiplication_matrix,
    restrict_scalars, restrict_subspace, restrict_vector,
};
pub use subspace::{subspace_ops, Subspace, SubspaceOp, SubspaceOpResult};
