use std::sync::Arc;

use crate::arith::{FieldElement, NumberField};
use crate::completion::TensorAlgebra;
use crate::error::{Error, Result};
use crate::lie::{check_embedding, LieAlgebra};
use crate::linalg::{unit, Matrix, Subspace};
use crate::scalar::Rational;

/// `K = (E (x)_Q L) / N` for an entangled ideal `N`.
///
/// `K` uses the cosets of the unit vectors at the non-pivot coordinates of
/// `N`'s echelon basis as its basis.
#[derive(Clone, Debug)]
pub struct Completion {
    tensor: TensorAlgebra,
    kernel: Subspace<FieldElement>,
    complement: Vec<usize>,
    k: LieAlgebra<FieldElement>,
    projection: Matrix<FieldElement>,
}

pub fn quotient_completion(tensor: &TensorAlgebra, n: &Subspace<FieldElement>) -> Result<Completion> {
    if let Some(a) = tensor.entanglement_witness(n)? {
        let parts: Vec<String> = a.iter().map(|c| c.to_string()).collect();
        return Err(Error::NotEntangled {
            witness: parts.join(", "),
        });
    }
    let field = tensor.field();
    let dim = tensor.dim();
    let complement = n.non_pivots();
    let m = complement.len();
    let reduce = |v: &[FieldElement]| -> Vec<FieldElement> {
        let r = n.reduce(v);
        complement.iter().map(|&c| r[c].clone().in_field(field)).collect()
    };
    let columns: Vec<Vec<FieldElement>> = (0..dim).map(|j| reduce(&unit(dim, j))).collect();
    let projection = Matrix::from_columns(&columns, m)?;

    let algebra = tensor.algebra();
    let mut brackets = Vec::new();
    for (a, &p) in complement.iter().enumerate() {
        for (b, &q) in complement.iter().enumerate().skip(a + 1) {
            let v = reduce(&algebra.structure(p, q));
            if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                brackets.push((a, b, v));
            }
        }
    }
    let names = complement
        .iter()
        .map(|&c| format!("[{}]", algebra.basis_names()[c]))
        .collect();
    let k = LieAlgebra::new(field, m, brackets, Some(names))?;

    let completion = Completion {
        tensor: tensor.clone(),
        kernel: n.clone(),
        complement,
        k,
        projection,
    };
    // the embedding is injective and spans K because N is entangled; recheck
    if let Some(w) = check_embedding(tensor.base(), &completion.k, completion.embedding())? {
        return Err(Error::InternalInvariantViolation(format!(
            "quotient embedding is not a Q-embedding: {w}"
        )));
    }
    if completion.projection.rank() != m {
        return Err(Error::InternalInvariantViolation(
            "image of L does not span the quotient".into(),
        ));
    }
    Ok(completion)
}

impl Completion {
    pub fn field(&self) -> &Arc<NumberField> {
        self.tensor.field()
    }

    pub fn tensor(&self) -> &TensorAlgebra {
        &self.tensor
    }

    /// The rational algebra `L`.
    pub fn source(&self) -> &LieAlgebra<Rational> {
        self.tensor.base()
    }

    /// The quotient algebra `K`.
    pub fn algebra(&self) -> &LieAlgebra<FieldElement> {
        &self.k
    }

    /// The entangled ideal `N`.
    pub fn kernel(&self) -> &Subspace<FieldElement> {
        &self.kernel
    }

    /// Tensor coordinates used as the basis of `K`.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn dim(&self) -> usize {
        self.k.dim()
    }

    /// The `E`-linear projection `E (x) L -> K`.
    pub fn projection(&self) -> &Matrix<FieldElement> {
        &self.projection
    }

    /// `a -> 1 (x) a + N`; since `1 (x) e_j` is the `j`-th unit vector this
    /// is the projection matrix applied to rational vectors.
    pub fn embedding(&self) -> &Matrix<FieldElement> {
        &self.projection
    }

    pub fn project(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.projection.mul_vec(v)
    }

    pub fn embed(&self, a: &[Rational]) -> Result<Vec<FieldElement>> {
        self.project(&self.tensor.one_tensor(a))
    }
}
