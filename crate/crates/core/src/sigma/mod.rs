//! The two-sorted structures `M = K u E` and the axioms describing completions.

mod axioms;
mod model;

pub use axioms::{
    check_axioms, matrix_holds, AxiomVerdict, CheckMode, Witness, AXIOM_COUNT, TORSION_LIMIT,
};
pub use model::{Constant, Element, TwoSortedStructure};

/// Explanation for the one statement about fields that has no finite check.
pub fn counterexample_note() -> &'static str {
    "NOTE (not checkable): for a finite-dimensional rational Lie algebra L, the class of fields E \
over which L is a Lie algebra is not elementary. Any first-order theory of that class has Q as a \
model, so by the Lowenheim-Skolem theorem it has models of every infinite cardinality, while \
dim_Q L = [E:Q] * dim_E L forces [E:Q] to be finite. This is a statement about all models of a \
theory; no computation on a single structure instantiates it, so nothing is checked."
}
