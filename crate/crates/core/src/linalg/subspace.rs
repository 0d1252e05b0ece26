use crate::error::{Error, Result};
use crate::linalg::matrix::{is_zero_vec, Matrix};
use crate::scalar::Scalar;

/// A subspace of `T^n`, stored as the nonzero rows of a reduced row-echelon
/// basis. The representation is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

/// Operation selector for [`subspace_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Sum,
    Intersect,
    /// `a ⊇ b`
    Contains,
    /// `a ⊆ b`; for a one-dimensional `a` this is membership of its vector.
    Member,
}

#[derive(Clone, PartialEq, Debug)]
pub enum SubspaceOpResult<T> {
    Subspace(Subspace<T>),
    Bool(bool),
}

impl<T: Scalar> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        let m = Matrix::from_rows(vectors, ambient)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix<T>) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(rows, m.cols()).expect("rows of rref"),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// The reduced row-echelon basis (one row per basis vector).
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots of the echelon basis, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its echelon reduction against the basis; zero iff `v` is in the subspace.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = out[j].clone() - c.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[T]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(is_zero_vec(&self.reduce(v)))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        self.check_len(v.len())?;
        if !is_zero_vec(&self.reduce(v)) {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Self::from_vectors(self.ambient, rows)
    }

    /// Intersection through the left kernel of the stacked bases.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let a = self.dim();
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        let stacked = Matrix::from_rows(rows, self.ambient)?;
        let relations = stacked.transpose().kernel();
        let mut vectors = Vec::new();
        for z in relations.basis_vectors() {
            let mut v = vec![T::zero(); self.ambient];
            for (i, coeff) in z.iter().take(a).enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (j, b) in self.basis.row(i).iter().enumerate() {
                    v[j] = v[j].clone() + coeff.clone() * b.clone();
                }
            }
            vectors.push(v);
        }
        Self::from_vectors(self.ambient, vectors)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other
            .basis_vectors()
            .iter()
            .all(|v| is_zero_vec(&self.reduce(v))))
    }

    /// Image under the linear map `m` (column convention, `m.cols() == ambient`).
    pub fn image(&self, m: &Matrix<T>) -> Result<Self> {
        let vectors = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_vectors(m.rows(), vectors)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: len,
            });
        }
        Ok(())
    }
}

pub fn subspace_ops<T: Scalar>(
    a: &Subspace<T>,
    b: &Subspace<T>,
    op: SubspaceOp,
) -> Result<SubspaceOpResult<T>> {
    Ok(match op {
        SubspaceOp::Sum => SubspaceOpResult::Subspace(a.sum(b)?),
        SubspaceOp::Intersect => SubspaceOpResult::Subspace(a.intersect(b)?),
        SubspaceOp::Contains => SubspaceOpResult::Bool(a.contains(b)?),
        SubspaceOp::Member => SubspaceOpResult::Bool(b.contains(a)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn span(vs: &[&[i64]]) -> Subspace<Rational> {
        let n = vs[0].len();
        Subspace::from_vectors(
            n,
            vs.iter()
                .map(|v| v.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn intersect_with_zero() {
        let v = span(&[&[1, 2, 3], &[0, 1, 1]]);
        let z = Subspace::zero(3);
        assert_eq!(v.intersect(&z).unwrap(), z);
    }

    #[test]
    fn sum_of_axes() {
        let s = span(&[&[1, 0, 0]]).sum(&span(&[&[0, 1, 0]])).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), span(&[&[1, 1, 0]]));
    }

    #[test]
    fn containment_and_membership() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let line = span(&[&[2, 3, 0]]);
        assert_eq!(
            subspace_ops(&a, &line, SubspaceOp::Contains).unwrap(),
            SubspaceOpResult::Bool(true)
        );
        assert_eq!(
            subspace_ops(&line, &a, SubspaceOp::Member).unwrap(),
            SubspaceOpResult::Bool(true)
        );
        assert_eq!(
            subspace_ops(&line, &a, SubspaceOp::Contains).unwrap(),
            SubspaceOpResult::Bool(false)
        );
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subspace::<Rational>::full(2);
        let b = Subspace::<Rational>::full(3);
        assert_eq!(
            a.sum(&b).unwrap_err(),
            Error::AmbientMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let a = span(&[&[1, 0, 2], &[0, 1, 1]]);
        let v = vec![rat(3), rat(-1), rat(5)];
        assert_eq!(a.coordinates(&v).unwrap(), Some(vec![rat(3), rat(-1)]));
        assert_eq!(a.coordinates(&[rat(0), rat(0), rat(1)]).unwrap(), None);
    }
}
