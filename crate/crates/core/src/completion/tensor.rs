use std::sync::Arc;

use crate::arith::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::lie::{base_change, ideal_defect, restrict_algebra, LieAlgebra};
use crate::linalg::{lift_vector, restrict_subspace, unit, Subspace};
use crate::scalar::Rational;

/// `E (x)_Q L` for a rational algebra `L` of dimension `n`: an `E`-algebra
/// on the basis `1 (x) v_1, ..., 1 (x) v_n` with the structure constants of `L`.
///
/// Its Q-restriction has dimension `n d`, with coordinate `j*d + s` the
/// coefficient of `t^s (x) v_j`; the copy `1 (x) L` is spanned by the
/// coordinates `j*d`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    field: Arc<NumberField>,
    base: LieAlgebra<Rational>,
    algebra: LieAlgebra<FieldElement>,
    one_tensor_l: Subspace<Rational>,
}

pub fn tensor_product(field: &Arc<NumberField>, l: &LieAlgebra<Rational>) -> TensorAlgebra {
    let d = field.degree();
    let n = l.dim();
    let one_tensor_l = Subspace::from_vectors(n * d, (0..n).map(|j| unit(n * d, j * d)).collect())
        .expect("unit vectors of length nd");
    TensorAlgebra {
        field: field.clone(),
        base: l.clone(),
        algebra: base_change(l, field),
        one_tensor_l,
    }
}

impl TensorAlgebra {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// The rational algebra `L`.
    pub fn base(&self) -> &LieAlgebra<Rational> {
        &self.base
    }

    pub fn algebra(&self) -> &LieAlgebra<FieldElement> {
        &self.algebra
    }

    /// `1 (x) L` inside the Q-restriction.
    pub fn one_tensor_l(&self) -> &Subspace<Rational> {
        &self.one_tensor_l
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn restricted_dim(&self) -> usize {
        self.algebra.dim() * self.field.degree()
    }

    pub fn restricted(&self) -> LieAlgebra<Rational> {
        restrict_algebra(&self.algebra)
    }

    /// `1 (x) a` for `a` in `L`.
    pub fn one_tensor(&self, a: &[Rational]) -> Vec<FieldElement> {
        lift_vector(a, &self.field)
    }

    /// `E (x) I` for a Q-subspace `I` of `L`.
    pub fn extend_ideal(&self, i: &Subspace<Rational>) -> Result<Subspace<FieldElement>> {
        if i.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: i.ambient_dim(),
            });
        }
        Subspace::from_vectors(
            self.dim(),
            i.basis_vectors().iter().map(|v| self.one_tensor(v)).collect(),
        )
    }

    /// Intersects `N` with `1 (x) L` in the Q-restriction: `None` when the
    /// intersection is zero, otherwise some nonzero `a` with `1 (x) a` in `N`. Fails if `N` is not an ideal.
    pub fn entanglement_witness(&self, n: &Subspace<FieldElement>) -> Result<Option<Vec<Rational>>> {
        if n.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: n.ambient_dim(),
            });
        }
        if let Some((basis, vector)) = ideal_defect(&self.algebra, n) {
            return Err(Error::NotAnIdeal { basis, vector });
        }
        let meet = restrict_subspace(n, &self.field).intersect(&self.one_tensor_l)?;
        let d = self.field.degree();
        Ok(meet
            .basis_vectors()
            .into_iter()
            .next()
            .map(|w| (0..self.dim()).map(|j| w[j * d].clone()).collect()))
    }
}

/// `N` is entangled iff it meets `1 (x) L` only in zero.
pub fn is_entangled(tensor: &TensorAlgebra, n: &Subspace<FieldElement>) -> Result<bool> {
    Ok(tensor.entanglement_witness(n)?.is_none())
}
