//! Restriction of scalars from a number field `E` of degree `d` to Q.
//!
//! `E^n` is identified with `Q^{nd}` through the ordered basis
//! `e_1, t e_1, ..., t^{d-1} e_1, e_2, ...`: coordinate `i*d + s` of the
//! restricted vector is the coefficient of `t^s` in the `i`-th entry. Every
//! module that moves between the two views goes through these functions.

use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{FieldElement, NumberField};
use crate::error::Result;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Rational;

pub fn restrict_vector(v: &[FieldElement], field: &NumberField) -> Vec<Rational> {
    let d = field.degree();
    v.iter().flat_map(|x| x.coords(d)).collect()
}

/// Inverse of [`restrict_vector`]: groups `d` rational coordinates into one field element.
pub fn extend_vector(w: &[Rational], field: &Arc<NumberField>) -> Vec<FieldElement> {
    let d = field.degree();
    assert_eq!(w.len() % d, 0, "restricted vector length must be a multiple of the degree");
    w.chunks(d)
        .map(|c| FieldElement::from_poly(field, c.to_vec()))
        .collect()
}

/// Matrix over Q of multiplication by `x` on the power basis of `E`.
pub fn multiplication_matrix(x: &FieldElement, field: &Arc<NumberField>) -> Matrix<Rational> {
    let d = field.degree();
    let columns: Vec<Vec<Rational>> = (0..d)
        .map(|s| (x * &field.power_basis(s)).coords(d))
        .collect();
    Matrix::from_columns(&columns, d).expect("d columns of length d")
}

/// The `(rows*d) x (cols*d)` rational matrix of an `E`-linear map.
pub fn restrict_scalars(m: &Matrix<FieldElement>, field: &Arc<NumberField>) -> Matrix<Rational> {
    let d = field.degree();
    let mut out = Matrix::zeros(m.rows() * d, m.cols() * d);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let entry = m.get(i, j);
            if entry.is_zero() {
                continue;
            }
            let block = multiplication_matrix(entry, field);
            for r in 0..d {
                for s in 0..d {
                    out.set(i * d + r, j * d + s, block.get(r, s).clone());
                }
            }
        }
    }
    out
}

/// The Q-span of an `E`-subspace, inside `Q^{nd}`.
pub fn restrict_subspace(s: &Subspace<FieldElement>, field: &Arc<NumberField>) -> Subspace<Rational> {
    let d = field.degree();
    let mut vectors = Vec::with_capacity(s.dim() * d);
    for v in s.basis_vectors() {
        for t in 0..d {
            let lambda_t = field.power_basis(t);
            let scaled: Vec<FieldElement> = v.iter().map(|x| &lambda_t * x).collect();
            vectors.push(restrict_vector(&scaled, field));
        }
    }
    Subspace::from_vectors(s.ambient_dim() * d, vectors).expect("restricted vectors have length nd")
}

/// The `E`-span of rational vectors in `Q^{nd}`.
pub fn extend_span(vectors: &[Vec<Rational>], n: usize, field: &Arc<NumberField>) -> Result<Subspace<FieldElement>> {
    let extended = vectors.iter().map(|w| extend_vector(w, field)).collect();
    Subspace::from_vectors(n, extended)
}

/// Lifts a rational matrix to a matrix over `E`.
pub fn lift_matrix(m: &Matrix<Rational>, field: &Arc<NumberField>) -> Matrix<FieldElement> {
    m.map(|x| field.from_rational(x.clone()))
}

pub fn lift_vector(v: &[Rational], field: &Arc<NumberField>) -> Vec<FieldElement> {
    v.iter().map(|x| field.from_rational(x.clone())).collect()
}
