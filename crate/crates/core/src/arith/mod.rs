//! Exact arithmetic over Q and over algebraic number fields.

mod automorphism;
mod irreducible;
mod number_field;
pub mod poly;

pub use automorphism::{apply_automorphism, field_automorphisms, FieldAutomorphism};
pub use irreducible::{check_irreducible, monic_integer_form};
pub use number_field::{
    nf_arith, nf_inverse, ArithOp, FieldElement, NumberField, DEFAULT_MAX_DEGREE,
};
