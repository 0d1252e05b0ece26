use std::fmt;

use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::rng::Lcg;
use crate::scalar::Scalar;

/// `C_L(x) = ker ad(x)`.
pub fn centralizer<T: Scalar>(l: &LieAlgebra<T>, x: &[T]) -> Subspace<T> {
    l.ad(x).kernel()
}

/// Elements commuting with every basis vector: the kernel of the stacked
/// `ad(e_i)` matrices.
pub fn center<T: Scalar>(l: &LieAlgebra<T>) -> Subspace<T> {
    let n = l.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        rows.extend(l.ad(&l.basis_vector(i)).row_vectors());
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Matrix::from_rows(rows, n).expect("rows of length n").kernel()
}

/// `[A, B]` as the span of brackets of basis vectors.
pub fn bracket_subspaces<T: Scalar>(l: &LieAlgebra<T>, a: &Subspace<T>, b: &Subspace<T>) -> Subspace<T> {
    let mut vectors = Vec::new();
    for u in a.basis_vectors() {
        for v in b.basis_vectors() {
            vectors.push(l.bracket(&u, &v));
        }
    }
    Subspace::from_vectors(l.dim(), vectors).expect("brackets have length n")
}

/// First pair `(basis index, subspace basis index)` with `[e_i, v]` outside `s`.
pub fn ideal_defect<T: Scalar>(l: &LieAlgebra<T>, s: &Subspace<T>) -> Option<(usize, usize)> {
    for (k, v) in s.basis_vectors().iter().enumerate() {
        for i in 0..l.dim() {
            if !is_zero_vec(&s.reduce(&l.bracket(&l.basis_vector(i), v))) {
                return Some((i, k));
            }
        }
    }
    None
}

pub fn is_ideal<T: Scalar>(l: &LieAlgebra<T>, s: &Subspace<T>) -> bool {
    ideal_defect(l, s).is_none()
}

/// Smallest ideal containing `gens`, by saturation.
pub fn ideal_closure<T: Scalar>(l: &LieAlgebra<T>, gens: &[Vec<T>]) -> Result<Subspace<T>> {
    let n = l.dim();
    let mut current = Subspace::from_vectors(n, gens.to_vec())?;
    let mut frontier = current.basis_vectors();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..n {
                let w = l.bracket(&l.basis_vector(i), v);
                let r = current.reduce(&w);
                if !is_zero_vec(&r) {
                    current = current.sum(&Subspace::from_vectors(n, vec![r.clone()])?)?;
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    Ok(current)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

impl SeriesKind {
    pub fn label(self) -> &'static str {
        match self {
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::Derived => "derived",
        }
    }
}

/// Dimensions of `gamma_1, gamma_2, ...` or `L^(0), L^(1), ...` up to the
/// first zero term or the first repeated dimension.
#[derive(Clone, Debug)]
pub struct SeriesReport<T> {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
    pub terms: Vec<Subspace<T>>,
    pub terminated_at_zero: bool,
    /// Nilpotency class or derived length when the series reaches zero.
    pub class_or_length: Option<usize>,
}

impl<T> fmt::Display for SeriesReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        let (word, failure) = match self.kind {
            SeriesKind::LowerCentral => ("class", "not nilpotent"),
            SeriesKind::Derived => ("length", "not solvable"),
        };
        write!(f, "{} dims: {} {}: ", self.kind.label(), dims.join(","), word)?;
        match self.class_or_length {
            Some(c) => write!(f, "{c}"),
            None => f.write_str(failure),
        }
    }
}

pub fn series<T: Scalar>(l: &LieAlgebra<T>, kind: SeriesKind) -> SeriesReport<T> {
    let n = l.dim();
    let full = Subspace::full(n);
    let mut terms = vec![full.clone()];
    // dimensions strictly drop until they stabilise, so n + 1 steps suffice
    for _ in 0..=n {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = match kind {
            SeriesKind::LowerCentral => bracket_subspaces(l, &full, last),
            SeriesKind::Derived => bracket_subspaces(l, last, last),
        };
        let repeated = next.dim() == last.dim();
        terms.push(next);
        if repeated {
            break;
        }
    }
    let dims: Vec<usize> = terms.iter().map(|t| t.dim()).collect();
    let terminated_at_zero = terms.last().map_or(true, |t| t.is_zero());
    SeriesReport {
        kind,
        class_or_length: terminated_at_zero.then(|| dims.len() - 1),
        dims,
        terms,
        terminated_at_zero,
    }
}

/// Centroid `{alpha : [alpha x, y] = alpha [x, y]}` with structural flags.
#[derive(Clone, Debug)]
pub struct CentroidReport<T> {
    /// Basis of the solution space, as `n x n` matrices acting on columns.
    pub basis: Vec<Matrix<T>>,
    pub contains_identity: bool,
    pub closed_under_multiplication: bool,
    pub commutative: bool,
    /// Checked on every basis element and on seeded random combinations.
    pub every_nonzero_invertible: bool,
}

impl<T> CentroidReport<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_field(&self) -> bool {
        self.contains_identity
            && self.closed_under_multiplication
            && self.commutative
            && self.every_nonzero_invertible
    }
}

/// The `n^3 x n^2` system whose kernel is the centroid; unknown `p*n + q`
/// is the entry `alpha[p][q]`.
pub fn centroid_system<T: Scalar>(l: &LieAlgebra<T>) -> Matrix<T> {
    let n = l.dim();
    let mut rows = Vec::with_capacity(n * n * n);
    let table: Vec<Vec<Vec<T>>> = (0..n)
        .map(|i| (0..n).map(|j| l.structure(i, j)).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // sum_p c_pj^k alpha_pi - sum_l c_ij^l alpha_kl = 0
                let mut row = vec![T::zero(); n * n];
                for p in 0..n {
                    let c = &table[p][j][k];
                    if !c.is_zero() {
                        row[p * n + i] = row[p * n + i].clone() + c.clone();
                    }
                }
                for m in 0..n {
                    let c = &table[i][j][m];
                    if !c.is_zero() {
                        row[k * n + m] = row[k * n + m].clone() - c.clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows, n * n).expect("rows of length n^2")
}

pub const CENTROID_SAMPLES: usize = 20;

pub fn centroid<T: Scalar>(l: &LieAlgebra<T>, seed: u64) -> CentroidReport<T> {
    let n = l.dim();
    let space = if n == 0 {
        Subspace::zero(0)
    } else {
        centroid_system(l).kernel()
    };
    let to_matrix = |v: &[T]| Matrix::new(n, n, v.to_vec()).expect("n^2 entries");
    let flatten = |m: &Matrix<T>| -> Vec<T> { (0..n).flat_map(|i| m.row(i).to_vec()).collect() };
    let basis: Vec<Matrix<T>> = space.basis_vectors().iter().map(|v| to_matrix(v)).collect();
    let identity = flatten(&Matrix::identity(n));
    let contains_identity = space.contains_vector(&identity).unwrap_or(false);

    let mut closed = true;
    let mut commutative = true;
    for a in &basis {
        for b in &basis {
            let ab = a.mul(b).expect("square");
            if closed && !space.contains_vector(&flatten(&ab)).unwrap_or(false) {
                closed = false;
            }
            if commutative && ab != b.mul(a).expect("square") {
                commutative = false;
            }
        }
    }

    let invertible_or_zero = |m: &Matrix<T>| m.is_zero() || m.inverse().is_some();
    let mut every_nonzero_invertible = basis.iter().all(invertible_or_zero);
    if every_nonzero_invertible && !basis.is_empty() {
        let mut rng = Lcg::new(seed);
        for _ in 0..CENTROID_SAMPLES {
            let mut m = Matrix::zeros(n, n);
            for b in &basis {
                let c = T::from_rational(&rng.rational());
                m = m.add(&b.scale(&c)).expect("same shape");
            }
            if !invertible_or_zero(&m) {
                every_nonzero_invertible = false;
                break;
            }
        }
    }
    CentroidReport {
        basis,
        contains_identity,
        closed_under_multiplication: closed,
        commutative,
        every_nonzero_invertible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use crate::lie::{make_algebra, NamedAlgebra};
    use crate::scalar::{rat, Rational};
    use num_traits::Zero;

    fn alg(name: NamedAlgebra) -> LieAlgebra<Rational> {
        make_algebra(name, &NumberField::rationals())
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace<Rational> {
        Subspace::from_vectors(n, vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    #[test]
    fn centralizers_in_heisenberg() {
        let h = alg(NamedAlgebra::Heisenberg);
        assert_eq!(centralizer(&h, &v(&[1, 0, 0])), span(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(centralizer(&h, &v(&[0, 0, 1])).dim(), 3);
        let a = alg(NamedAlgebra::Abelian(4));
        assert_eq!(centralizer(&a, &v(&[1, 2, 3, 4])).dim(), 4);
    }

    #[test]
    fn centers() {
        assert_eq!(center(&alg(NamedAlgebra::Heisenberg)), span(3, &[&[0, 0, 1]]));
        assert!(center(&alg(NamedAlgebra::Sl2)).is_zero());
        assert_eq!(center(&alg(NamedAlgebra::Abelian(3))).dim(), 3);
    }

    #[test]
    fn closures() {
        let h = alg(NamedAlgebra::Heisenberg);
        assert!(ideal_closure(&h, &[]).unwrap().is_zero());
        assert_eq!(
            ideal_closure(&h, &[v(&[1, 0, 0])]).unwrap(),
            span(3, &[&[1, 0, 0], &[0, 0, 1]])
        );
        let s = alg(NamedAlgebra::Sl2);
        assert_eq!(ideal_closure(&s, &[v(&[1, 0, 0])]).unwrap().dim(), 3);
    }

    #[test]
    fn series_examples() {
        let h = alg(NamedAlgebra::Heisenberg);
        let lc = series(&h, SeriesKind::LowerCentral);
        assert_eq!(lc.dims, vec![3, 1, 0]);
        assert_eq!(lc.to_string(), "lower_central dims: 3,1,0 class: 2");
        assert_eq!(series(&h, SeriesKind::Derived).class_or_length, Some(2));

        let a = alg(NamedAlgebra::Abelian(2));
        assert_eq!(series(&a, SeriesKind::LowerCentral).class_or_length, Some(1));
        assert_eq!(series(&a, SeriesKind::Derived).class_or_length, Some(1));

        let s = alg(NamedAlgebra::Sl2);
        let lc = series(&s, SeriesKind::LowerCentral);
        assert_eq!(lc.dims, vec![3, 3]);
        assert_eq!(lc.to_string(), "lower_central dims: 3,3 class: not nilpotent");
        assert_eq!(series(&s, SeriesKind::Derived).class_or_length, None);

        assert_eq!(series(&alg(NamedAlgebra::NPlus(4)), SeriesKind::LowerCentral).dims, vec![6, 3, 1, 0]);
    }

    #[test]
    fn centroid_examples() {
        let a = centroid(&alg(NamedAlgebra::Abelian(3)), 0);
        assert_eq!(a.dim(), 9);
        assert!(!a.is_field());
        let s = centroid(&alg(NamedAlgebra::Sl2), 0);
        assert_eq!(s.dim(), 1);
        assert!(s.is_field());
        let h = centroid(&alg(NamedAlgebra::Heisenberg), 0);
        assert_eq!(h.dim(), 3);
        assert!(h.contains_identity && h.closed_under_multiplication && h.commutative);
        assert!(!h.every_nonzero_invertible);
    }

    #[test]
    fn heisenberg_centroid_has_the_expected_shape() {
        // alpha(x) = a x + c z, alpha(y) = a y + c' z, alpha(z) = a z
        let h = centroid(&alg(NamedAlgebra::Heisenberg), 0);
        for m in &h.basis {
            assert_eq!(m.get(0, 0), m.get(1, 1));
            assert_eq!(m.get(1, 1), m.get(2, 2));
            assert!(m.get(0, 1).is_zero() && m.get(1, 0).is_zero());
            assert!(m.get(0, 2).is_zero() && m.get(1, 2).is_zero());
        }
    }
}
