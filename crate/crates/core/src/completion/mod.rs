//! Base change, entangled ideals and the completions they define.

mod checks;
mod quotient;
mod tensor;
mod twist;

pub use checks::{
    companion_matrix, default_prop1_polynomial, degree_bound, potential_dim_check, preservation_check,
    prop1_construct, verify_scalar_action, ActionFailure, ActionReport, BoundReport, CentralizerSample,
    Potential, PreservationReport, Prop1Report, SeriesComparison,
};
pub use quotient::{quotient_completion, Completion};
pub use tensor::{is_entangled, tensor_product, TensorAlgebra};
pub use twist::{
    conjugation_check, sigma_tensor_f, twisted_completion, twisted_ideal, ConjugationCheck, TwistData,
    TwistedIdeal,
};
