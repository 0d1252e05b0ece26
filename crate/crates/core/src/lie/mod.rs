//! Lie algebras over exact fields given by structure constants.

mod algebra;
mod maps;
mod structure;

pub use algebra::{
    base_change, make_algebra, restrict_algebra, LieAlgebra, NamedAlgebra, TableDefect, Validation,
};
pub use maps::{check_embedding, check_homomorphism, HomMode, HomWitness, LinearMap};
pub use structure::{
    bracket_subspaces, center, centralizer, centroid, centroid_system, ideal_closure, ideal_defect,
    is_ideal, series, CentroidReport, SeriesKind, SeriesReport, CENTROID_SAMPLES,
};
