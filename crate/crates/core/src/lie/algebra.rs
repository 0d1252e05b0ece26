use std::sync::Arc;

use crate::arith::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::linalg::{restrict_vector, unit, vec_add, Matrix};
use crate::scalar::{Rational, Scalar};

/// A finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = sum_k c_ij^k e_k`.
///
/// Only the pairs `i < j` are stored; `[e_j, e_i]` is read as `-[e_i, e_j]`
/// and `[e_i, e_i] = 0`, so the bracket is alternating by construction.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra<T> {
    field: Arc<NumberField>,
    dim: usize,
    table: Vec<Vec<T>>,
    basis_names: Vec<String>,
}

/// First failure found by [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableDefect {
    /// `[e_i, e_i] != 0` in a full table.
    NotAlternating { i: usize },
    /// `[e_i, e_j] != -[e_j, e_i]` in a full table.
    NotAntisymmetric { i: usize, j: usize },
    /// The Jacobi sum for the basis triple does not vanish.
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub triples_checked: usize,
    pub defect: Option<TableDefect>,
}

impl Validation {
    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl<T: Scalar> LieAlgebra<T> {
    /// Builds an algebra from the brackets `(i, j, [e_i, e_j])` with `i < j`;
    /// unlisted pairs bracket to zero.
    pub fn new(
        field: &Arc<NumberField>,
        dim: usize,
        brackets: Vec<(usize, usize, Vec<T>)>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut alg = Self::abelian(field, dim);
        if let Some(names) = basis_names {
            if names.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "{} basis names for dimension {dim}",
                    names.len()
                )));
            }
            alg.basis_names = names;
        }
        for (i, j, value) in brackets {
            if i >= j {
                return Err(Error::Encoding(format!("bracket pair ({i}, {j}) must have i < j")));
            }
            if j >= dim {
                return Err(Error::Encoding(format!(
                    "bracket pair ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket ({i}, {j}) has {} coordinates, expected {dim}",
                    value.len()
                )));
            }
            alg.table[pair_index(dim, i, j)] = value;
        }
        Ok(alg)
    }

    /// Reads a full `n x n` table `[e_i, e_j]`, returning the alternating and
    /// antisymmetry defects instead of silently dropping the lower half.
    pub fn from_full_table(
        field: &Arc<NumberField>,
        full: Vec<Vec<Vec<T>>>,
    ) -> Result<std::result::Result<Self, TableDefect>> {
        let n = full.len();
        for (i, row) in full.iter().enumerate() {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::DimensionMismatch(format!("row {i} of the full table")));
            }
        }
        for i in 0..n {
            if full[i][i].iter().any(|c| !c.is_zero()) {
                return Ok(Err(TableDefect::NotAlternating { i }));
            }
            for j in i + 1..n {
                if vec_add(&full[i][j], &full[j][i]).iter().any(|c| !c.is_zero()) {
                    return Ok(Err(TableDefect::NotAntisymmetric { i, j }));
                }
            }
        }
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                brackets.push((i, j, full[i][j].clone()));
            }
        }
        Ok(Ok(Self::new(field, n, brackets, None)?))
    }

    pub fn abelian(field: &Arc<NumberField>, dim: usize) -> Self {
        LieAlgebra {
            field: field.clone(),
            dim,
            table: vec![vec![T::zero(); dim]; dim * dim.saturating_sub(1) / 2],
            basis_names: default_names(dim),
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.basis_names = names;
        Ok(self)
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn structure(&self, i: usize, j: usize) -> Vec<T> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            Ordering::Greater => self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(|c| -c.clone())
                .collect(),
            Ordering::Equal => vec![T::zero(); self.dim],
        }
    }

    /// Replaces `[e_i, e_j]` (`i < j`); used to build mutated tables.
    pub fn set_structure(&mut self, i: usize, j: usize, value: Vec<T>) -> Result<()> {
        if i >= j || j >= self.dim || value.len() != self.dim {
            return Err(Error::Encoding(format!("cannot set bracket ({i}, {j})")));
        }
        let idx = pair_index(self.dim, i, j);
        self.table[idx] = value;
        Ok(())
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<T>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = &self.table[pair_index(self.dim, i, j)];
                if v.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<T> {
        unit(self.dim, i)
    }

    pub fn bracket(&self, u: &[T], v: &[T]) -> Vec<T> {
        assert_eq!(u.len(), self.dim, "bracket operand length");
        assert_eq!(v.len(), self.dim, "bracket operand length");
        let mut out = vec![T::zero(); self.dim];
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                // u_i v_j - u_j v_i multiplies [e_i, e_j]
                let mut coeff = T::zero();
                if !u[i].is_zero() && !v[j].is_zero() {
                    coeff = u[i].clone() * v[j].clone();
                }
                if !u[j].is_zero() && !v[i].is_zero() {
                    coeff = coeff - u[j].clone() * v[i].clone();
                }
                if coeff.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(&self.table[pair_index(self.dim, i, j)]) {
                    if !c.is_zero() {
                        *o = o.clone() + coeff.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x): v -> [x, v]` (column `j` is `[x, e_j]`).
    pub fn ad(&self, x: &[T]) -> Matrix<T> {
        let columns: Vec<Vec<T>> = (0..self.dim)
            .map(|j| self.bracket(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(&columns, self.dim).expect("n columns of length n")
    }

    /// Jacobi on every basis triple `i < j < k` (antisymmetry holds by encoding).
    pub fn validate(&self) -> Validation {
        let n = self.dim;
        let mut checked = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    checked += 1;
                    if !self.jacobi_vanishes(i, j, k) {
                        return Validation {
                            triples_checked: checked,
                            defect: Some(TableDefect::Jacobi { i, j, k }),
                        };
                    }
                }
            }
        }
        Validation {
            triples_checked: checked,
            defect: None,
        }
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0`.
    pub fn jacobi_vanishes(&self, i: usize, j: usize, k: usize) -> bool {
        let e = |a| self.basis_vector(a);
        let s = vec_add(
            &vec_add(
                &self.bracket(&self.structure(i, j), &e(k)),
                &self.bracket(&self.structure(j, k), &e(i)),
            ),
            &self.bracket(&self.structure(k, i), &e(j)),
        );
        s.iter().all(|c| c.is_zero())
    }

    /// The same structure constants read over another scalar type.
    pub fn map_scalars<U: Scalar>(&self, field: &Arc<NumberField>, f: impl Fn(&T) -> U) -> LieAlgebra<U> {
        LieAlgebra {
            field: field.clone(),
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|v| v.iter().map(&f).collect())
                .collect(),
            basis_names: self.basis_names.clone(),
        }
    }
}

/// Library algebras accepted by [`make_algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedAlgebra {
    Abelian(usize),
    Heisenberg,
    Sl2,
    /// Strictly upper triangular `n x n` matrices.
    NPlus(usize),
}

impl std::str::FromStr for NamedAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_n = |rest: &str| -> Result<usize> {
            rest.trim_start_matches('(')
                .trim_end_matches(')')
                .parse()
                .map_err(|_| Error::Parse(format!("bad algebra name {s:?}")))
        };
        match s {
            "heisenberg" => Ok(NamedAlgebra::Heisenberg),
            "sl2" => Ok(NamedAlgebra::Sl2),
            _ if s.starts_with("abelian") => Ok(NamedAlgebra::Abelian(parse_n(&s[7..])?)),
            _ if s.starts_with("n_plus") => Ok(NamedAlgebra::NPlus(parse_n(&s[6..])?)),
            _ => Err(Error::Parse(format!("unknown algebra {s:?}"))),
        }
    }
}

pub fn make_algebra<T: Scalar>(name: NamedAlgebra, field: &Arc<NumberField>) -> LieAlgebra<T> {
    let int = |n: i64| T::from_int(n);
    let vec_of = |n: usize, entries: &[(usize, i64)]| -> Vec<T> {
        let mut v = vec![T::zero(); n];
        for &(k, c) in entries {
            v[k] = int(c);
        }
        v
    };
    let names = |xs: &[&str]| Some(xs.iter().map(|s| s.to_string()).collect());
    match name {
        NamedAlgebra::Abelian(n) => LieAlgebra::abelian(field, n),
        NamedAlgebra::Heisenberg => LieAlgebra::new(
            field,
            3,
            vec![(0, 1, vec_of(3, &[(2, 1)]))],
            names(&["x", "y", "z"]),
        )
        .expect("heisenberg table"),
        // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
        NamedAlgebra::Sl2 => LieAlgebra::new(
            field,
            3,
            vec![
                (0, 1, vec_of(3, &[(2, 1)])),
                (0, 2, vec_of(3, &[(0, -2)])),
                (1, 2, vec_of(3, &[(1, 2)])),
            ],
            names(&["e", "f", "h"]),
        )
        .expect("sl2 table"),
        NamedAlgebra::NPlus(n) => n_plus(field, n),
    }
}

/// `n+_n`: basis `E_ij` (`i < j`) in lexicographic order,
/// `[E_ij, E_kl] = d_jk E_il - d_li E_kj`.
fn n_plus<T: Scalar>(field: &Arc<NumberField>, n: usize) -> LieAlgebra<T> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let dim = pairs.len();
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p);
    let mut brackets = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            let mut v = vec![T::zero(); dim];
            if j == k {
                let c = index((i, l)).expect("i < l");
                v[c] = v[c].clone() + T::one();
            }
            if l == i {
                let c = index((k, j)).expect("k < j");
                v[c] = v[c].clone() - T::one();
            }
            if v.iter().any(|x| !x.is_zero()) {
                brackets.push((a, b, v));
            }
        }
    }
    let names = pairs
        .iter()
        .map(|&(i, j)| format!("E{}{}", i + 1, j + 1))
        .collect();
    LieAlgebra::new(field, dim, brackets, Some(names)).expect("n_plus table")
}

/// The Q-algebra underlying an algebra over `E`, on the basis
/// `e_1, t e_1, ..., t^{d-1} e_1, e_2, ...`.
pub fn restrict_algebra(l: &LieAlgebra<FieldElement>) -> LieAlgebra<Rational> {
    let field = l.field();
    let d = field.degree();
    let n = l.dim();
    let nd = n * d;
    let element = |idx: usize| -> Vec<FieldElement> {
        let mut v = vec![FieldElement::constant(Rational::from_integer(0.into())); n];
        v[idx / d] = field.power_basis(idx % d);
        v
    };
    let mut brackets = Vec::new();
    for a in 0..nd {
        for b in a + 1..nd {
            let v = restrict_vector(&l.bracket(&element(a), &element(b)), field);
            if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                brackets.push((a, b, v));
            }
        }
    }
    let names = (0..nd)
        .map(|idx| {
            let base = &l.basis_names()[idx / d];
            match idx % d {
                0 => base.clone(),
                1 => format!("t*{base}"),
                s => format!("t^{s}*{base}"),
            }
        })
        .collect();
    LieAlgebra::new(&NumberField::rationals(), nd, brackets, Some(names)).expect("restricted table")
}

/// `L` over Q read over `E`: same structure constants, scalars in `E`.
pub fn base_change(l: &LieAlgebra<Rational>, field: &Arc<NumberField>) -> LieAlgebra<FieldElement> {
    l.map_scalars(field, |c| field.from_rational(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q() -> Arc<NumberField> {
        NumberField::rationals()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn library_algebras_validate() {
        for name in [
            NamedAlgebra::Abelian(4),
            NamedAlgebra::Heisenberg,
            NamedAlgebra::Sl2,
            NamedAlgebra::NPlus(3),
            NamedAlgebra::NPlus(4),
            NamedAlgebra::NPlus(5),
        ] {
            let l: LieAlgebra<Rational> = make_algebra(name, &q());
            assert!(l.validate().passed(), "{name:?}");
        }
    }

    #[test]
    fn heisenberg_bracket() {
        let h: LieAlgebra<Rational> = make_algebra(NamedAlgebra::Heisenberg, &q());
        assert_eq!(h.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
        assert_eq!(h.bracket(&v(&[0, 1, 0]), &v(&[1, 0, 0])), v(&[0, 0, -1]));
        assert_eq!(h.validate().triples_checked, 1);
    }

    #[test]
    fn sl2_h_e_is_two_e() {
        let s: LieAlgebra<Rational> = make_algebra(NamedAlgebra::Sl2, &q());
        assert_eq!(s.bracket(&v(&[0, 0, 1]), &v(&[1, 0, 0])), v(&[2, 0, 0]));
        assert_eq!(s.bracket(&v(&[0, 0, 1]), &v(&[0, 1, 0])), v(&[0, -2, 0]));
        let u = v(&[3, -1, 2]);
        assert_eq!(s.bracket(&u, &u), v(&[0, 0, 0]));
    }

    #[test]
    fn n_plus_three_is_heisenberg_shaped() {
        let n3: LieAlgebra<Rational> = make_algebra(NamedAlgebra::NPlus(3), &q());
        assert_eq!(n3.dim(), 3);
        assert_eq!(n3.basis_names(), ["E12", "E13", "E23"]);
        // [E12, E23] = E13
        assert_eq!(n3.structure(0, 2), v(&[0, 1, 0]));
        assert_eq!(n3.nonzero_brackets().len(), 1);
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        // [e1,e2] = e1 but [e2,e1] = +e1
        let full = vec![
            vec![v(&[0, 0]), v(&[1, 0])],
            vec![v(&[1, 0]), v(&[0, 0])],
        ];
        let res = LieAlgebra::from_full_table(&q(), full).unwrap();
        assert_eq!(res.unwrap_err(), TableDefect::NotAntisymmetric { i: 0, j: 1 });
    }

    #[test]
    fn broken_jacobi_has_witness() {
        let mut s: LieAlgebra<Rational> = make_algebra(NamedAlgebra::Sl2, &q());
        s.set_structure(0, 1, v(&[1, 0, 1])).unwrap();
        assert_eq!(
            s.validate().defect,
            Some(TableDefect::Jacobi { i: 0, j: 1, k: 2 })
        );
    }

    #[test]
    fn parser_rejects_bad_pairs() {
        assert!(LieAlgebra::<Rational>::new(&q(), 3, vec![(1, 0, v(&[0, 0, 1]))], None).is_err());
        assert!(LieAlgebra::<Rational>::new(&q(), 3, vec![(0, 3, v(&[0, 0, 1]))], None).is_err());
        assert!(LieAlgebra::<Rational>::new(&q(), 3, vec![(0, 1, v(&[0, 1]))], None).is_err());
    }

    #[test]
    fn restriction_of_heisenberg_over_sqrt2() {
        let e = NumberField::new(v(&[-2, 0, 1])).unwrap();
        let h: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Heisenberg, &e);
        let r = restrict_algebra(&h);
        assert_eq!(r.dim(), 6);
        assert!(r.validate().passed());
        // [t x, t y] = 2 z
        assert_eq!(r.structure(1, 3), v(&[0, 0, 0, 0, 2, 0]));
        assert_eq!(r.basis_names()[1], "t*x");
    }

    #[test]
    fn named_algebra_parsing() {
        assert_eq!("abelian(3)".parse::<NamedAlgebra>().unwrap(), NamedAlgebra::Abelian(3));
        assert_eq!("n_plus(4)".parse::<NamedAlgebra>().unwrap(), NamedAlgebra::NPlus(4));
        assert!("so3".parse::<NamedAlgebra>().is_err());
    }
}
