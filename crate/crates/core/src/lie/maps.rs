use std::fmt;

use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{restrict_scalars, Matrix};
use crate::scalar::{Rational, Scalar};

/// A linear map between coordinate spaces; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<T> {
    matrix: Matrix<T>,
}

impl<T: Scalar> LinearMap<T> {
    pub fn new(matrix: Matrix<T>) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        self.matrix.mul_vec(v)
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(LinearMap::new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomMode {
    Hom,
    Embedding,
    Automorphism,
}

#[derive(Clone, Debug, PartialEq)]
pub enum HomWitness<T> {
    /// `phi[e_i, e_j] != [phi e_i, phi e_j]`.
    Bracket { i: usize, j: usize },
    /// A nonzero vector in the kernel.
    NotInjective(Vec<T>),
    NotSurjective { rank: usize, target_dim: usize },
    Shape(String),
}

impl<T: fmt::Display> fmt::Display for HomWitness<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomWitness::Bracket { i, j } => write!(f, "bracket fails on (e{}, e{})", i + 1, j + 1),
            HomWitness::NotInjective(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "kernel contains [{}]", parts.join(", "))
            }
            HomWitness::NotSurjective { rank, target_dim } => {
                write!(f, "rank {rank} < target dimension {target_dim}")
            }
            HomWitness::Shape(s) => f.write_str(s),
        }
    }
}

/// Checks `phi[e_i, e_j] = [phi e_i, phi e_j]` on all basis pairs, plus
/// injectivity (embedding) or bijectivity onto the same algebra (automorphism).
pub fn check_homomorphism<T: Scalar>(
    source: &LieAlgebra<T>,
    target: &LieAlgebra<T>,
    phi: &LinearMap<T>,
    mode: HomMode,
) -> Option<HomWitness<T>> {
    let m = phi.matrix();
    if m.cols() != source.dim() || m.rows() != target.dim() {
        return Some(HomWitness::Shape(format!(
            "matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            target.dim(),
            source.dim()
        )));
    }
    if mode == HomMode::Automorphism && source != target {
        return Some(HomWitness::Shape("automorphisms need source = target".into()));
    }
    let images: Vec<Vec<T>> = (0..source.dim()).map(|j| m.column(j)).collect();
    for i in 0..source.dim() {
        for j in i + 1..source.dim() {
            let lhs = m.mul_vec(&source.structure(i, j)).expect("shape checked");
            if lhs != target.bracket(&images[i], &images[j]) {
                return Some(HomWitness::Bracket { i, j });
            }
        }
    }
    if mode == HomMode::Hom {
        return None;
    }
    let kernel = m.kernel();
    if let Some(v) = kernel.basis_vectors().into_iter().next() {
        return Some(HomWitness::NotInjective(v));
    }
    if mode == HomMode::Automorphism && m.rank() < target.dim() {
        return Some(HomWitness::NotSurjective {
            rank: m.rank(),
            target_dim: target.dim(),
        });
    }
    None
}

/// Checks that `images` (columns over `E`) define a Q-embedding of the
/// rational algebra `source` into the `E`-algebra `target`.
pub fn check_embedding(
    source: &LieAlgebra<Rational>,
    target: &LieAlgebra<FieldElement>,
    images: &Matrix<FieldElement>,
) -> Result<Option<HomWitness<Rational>>> {
    if images.cols() != source.dim() || images.rows() != target.dim() {
        return Err(Error::DimensionMismatch(format!(
            "embedding matrix is {}x{}, expected {}x{}",
            images.rows(),
            images.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let field = target.field();
    let lift = |v: &[Rational]| -> Vec<FieldElement> { v.iter().map(|c| field.from_rational(c.clone())).collect() };
    let columns: Vec<Vec<FieldElement>> = (0..source.dim()).map(|j| images.column(j)).collect();
    for i in 0..source.dim() {
        for j in i + 1..source.dim() {
            let lhs = images.mul_vec(&lift(&source.structure(i, j)))?;
            if lhs != target.bracket(&columns[i], &columns[j]) {
                return Ok(Some(HomWitness::Bracket { i, j }));
            }
        }
    }
    // injectivity over Q: the restricted images must be Q-independent
    let d = field.degree();
    let restricted = restrict_scalars(images, field);
    let mut q_columns = Vec::with_capacity(source.dim());
    for j in 0..source.dim() {
        // column of e_j over Q is the block column j*d (the image of 1 * e_j)
        q_columns.push(restricted.column(j * d));
    }
    let q_matrix = Matrix::from_columns(&q_columns, target.dim() * d)?;
    if let Some(v) = q_matrix.kernel().basis_vectors().into_iter().next() {
        return Ok(Some(HomWitness::NotInjective(v)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use crate::lie::{base_change, make_algebra, NamedAlgebra};
    use crate::scalar::rat;

    fn h() -> LieAlgebra<Rational> {
        make_algebra(NamedAlgebra::Heisenberg, &NumberField::rationals())
    }

    fn m(rows: &[&[i64]]) -> LinearMap<Rational> {
        LinearMap::new(
            Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), rows[0].len())
                .unwrap(),
        )
    }

    #[test]
    fn identity_is_automorphism() {
        assert_eq!(check_homomorphism(&h(), &h(), &LinearMap::identity(3), HomMode::Automorphism), None);
    }

    #[test]
    fn rotation_is_automorphism() {
        // x -> y, y -> -x, z -> z
        let f = m(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(check_homomorphism(&h(), &h(), &f, HomMode::Automorphism), None);
    }

    #[test]
    fn scaling_centre_breaks_brackets() {
        let f = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert_eq!(
            check_homomorphism(&h(), &h(), &f, HomMode::Hom),
            Some(HomWitness::Bracket { i: 0, j: 1 })
        );
    }

    #[test]
    fn zero_map_is_hom_but_not_embedding() {
        let z = m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(check_homomorphism(&h(), &h(), &z, HomMode::Hom), None);
        assert!(matches!(
            check_homomorphism(&h(), &h(), &z, HomMode::Embedding),
            Some(HomWitness::NotInjective(_))
        ));
    }

    #[test]
    fn heisenberg_embeds_in_n_plus_three() {
        let e = NumberField::new(vec![rat(-2), rat(0), rat(1)]).unwrap();
        let target: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::NPlus(3), &e);
        // x -> E12, y -> E23, z -> E13
        let one = e.one();
        let zero = e.zero();
        let images = Matrix::from_rows(
            vec![
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![zero.clone(), zero.clone(), one.clone()],
                vec![zero.clone(), one.clone(), zero.clone()],
            ],
            3,
        )
        .unwrap();
        assert_eq!(check_embedding(&h(), &target, &images).unwrap(), None);
        let hb = base_change(&h(), &e);
        assert!(hb.validate().passed());
    }

    #[test]
    fn q_dependent_images_are_not_injective() {
        // abelian(2) -> E with e1 -> 1, e2 -> 2: Q-dependent
        let e = NumberField::new(vec![rat(-2), rat(0), rat(1)]).unwrap();
        let a = make_algebra::<Rational>(NamedAlgebra::Abelian(2), &NumberField::rationals());
        let target: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Abelian(1), &e);
        let images = Matrix::from_rows(vec![vec![e.one(), e.from_rational(rat(2))]], 2).unwrap();
        assert!(matches!(check_embedding(&a, &target, &images).unwrap(), Some(HomWitness::NotInjective(_))));
        // e1 -> 1, e2 -> sqrt2 is injective over Q
        let images = Matrix::from_rows(vec![vec![e.one(), e.generator()]], 2).unwrap();
        assert_eq!(check_embedding(&a, &target, &images).unwrap(), None);
    }
}
