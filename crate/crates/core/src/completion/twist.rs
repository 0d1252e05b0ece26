use crate::arith::{FieldAutomorphism, FieldElement, NumberField};
use crate::completion::{quotient_completion, tensor_product, Completion, TensorAlgebra};
use crate::error::{Error, Result};
use crate::lie::{check_homomorphism, ideal_defect, restrict_algebra, HomMode, LieAlgebra, LinearMap};
use crate::linalg::{extend_vector, restrict_subspace, restrict_vector, Matrix, Subspace};
use crate::scalar::Rational;

/// `(I, f, sigma)` for an algebra `L` over `E`: a Q-ideal `I` and a
/// Q-automorphism `f` of the Q-restriction of `L`, and `sigma` in `Aut(E)`.
#[derive(Clone, Debug)]
pub struct TwistData {
    ideal: Subspace<Rational>,
    f: LinearMap<Rational>,
    sigma: FieldAutomorphism,
}

impl TwistData {
    /// `ideal` and `f` live on the Q-restriction of `l` (dimension `dim l * [E:Q]`).
    pub fn new(
        l: &LieAlgebra<FieldElement>,
        ideal: Subspace<Rational>,
        f: Matrix<Rational>,
        sigma: FieldAutomorphism,
    ) -> Result<Self> {
        if !NumberField::same_field(l.field(), sigma.field()) {
            return Err(Error::FieldMismatch);
        }
        let lq = restrict_algebra(l);
        if ideal.ambient_dim() != lq.dim() {
            return Err(Error::AmbientMismatch {
                left: lq.dim(),
                right: ideal.ambient_dim(),
            });
        }
        if let Some((basis, vector)) = ideal_defect(&lq, &ideal) {
            return Err(Error::NotAnIdeal { basis, vector });
        }
        let f = LinearMap::new(f);
        if let Some(w) = check_homomorphism(&lq, &lq, &f, HomMode::Automorphism) {
            return Err(Error::NotAutomorphism(w.to_string()));
        }
        Ok(TwistData { ideal, f, sigma })
    }

    /// `(L, id, id)`.
    pub fn trivial(l: &LieAlgebra<FieldElement>) -> Self {
        let n = l.dim() * l.field().degree();
        TwistData {
            ideal: Subspace::full(n),
            f: LinearMap::identity(n),
            sigma: FieldAutomorphism::identity(l.field()),
        }
    }

    pub fn ideal(&self) -> &Subspace<Rational> {
        &self.ideal
    }

    pub fn f(&self) -> &LinearMap<Rational> {
        &self.f
    }

    pub fn sigma(&self) -> &FieldAutomorphism {
        &self.sigma
    }

    pub fn is_full(&self) -> bool {
        self.ideal.dim() == self.ideal.ambient_dim()
    }

    /// `(f(I), id, id)`.
    pub fn untwisted_image(&self) -> Result<TwistData> {
        let n = self.ideal.ambient_dim();
        Ok(TwistData {
            ideal: self.ideal.image(self.f.matrix())?,
            f: LinearMap::identity(n),
            sigma: FieldAutomorphism::identity(self.sigma.field()),
        })
    }
}

/// Scalar action of `x` on the Q-restriction of `l`.
pub(crate) fn act(l: &LieAlgebra<FieldElement>, x: &FieldElement, a: &[Rational]) -> Vec<Rational> {
    let field = l.field();
    let v: Vec<FieldElement> = extend_vector(a, field).iter().map(|c| x * c).collect();
    restrict_vector(&v, field)
}

/// An ideal of `E (x)_Q L` together with its tensor algebra.
#[derive(Clone, Debug)]
pub struct TwistedIdeal {
    pub tensor: TensorAlgebra,
    pub ideal: Subspace<FieldElement>,
}

/// `N(I, f, sigma) = { sum x_i (x) a_i in E (x) I : sum sigma(x_i) f(a_i) = 0 }`
/// inside `E (x)_Q L_Q`, with `L_Q` the Q-restriction of `l`.
pub fn twisted_ideal(l: &LieAlgebra<FieldElement>, twist: &TwistData) -> Result<TwistedIdeal> {
    let field = l.field();
    let d = field.degree();
    let lq = restrict_algebra(l);
    let n = lq.dim();
    let tensor = tensor_product(field, &lq);
    let basis = twist.ideal.basis_vectors();
    let r = basis.len();
    if r == 0 {
        return Ok(TwistedIdeal {
            tensor,
            ideal: Subspace::zero(n),
        });
    }
    // column (k, s): sigma(t^s) f(b_k), a vector of the Q-restriction
    let images: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| twist.f.apply(b))
        .collect::<Result<_>>()?;
    let mut columns = Vec::with_capacity(r * d);
    for fb in &images {
        for s in 0..d {
            let scalar = twist.sigma.apply(&field.power_basis(s))?;
            columns.push(act(l, &scalar, fb));
        }
    }
    let evaluation = Matrix::from_columns(&columns, n)?;
    let relations = evaluation.kernel();

    let mut vectors = Vec::with_capacity(relations.dim());
    for y in relations.basis_vectors() {
        let mut v = vec![field.zero(); n];
        for (k, b) in basis.iter().enumerate() {
            let yk = FieldElement::from_poly(field, y[k * d..(k + 1) * d].to_vec());
            for (vj, bj) in v.iter_mut().zip(b) {
                if !num_traits::Zero::is_zero(bj) {
                    *vj = &*vj + &yk.scale(bj);
                }
            }
        }
        vectors.push(v);
    }
    let ideal = Subspace::from_vectors(n, vectors)?;
    if ideal.dim() * d != relations.dim() {
        return Err(Error::InternalInvariantViolation(format!(
            "N(I,f,sigma) is not E-stable: Q-dimension {} vs E-dimension {}",
            relations.dim(),
            ideal.dim()
        )));
    }
    match tensor.entanglement_witness(&ideal) {
        Ok(None) => {}
        Ok(Some(a)) => {
            return Err(Error::InternalInvariantViolation(format!(
                "N(I,f,sigma) contains 1 (x) a for a = {a:?}"
            )))
        }
        Err(Error::NotAnIdeal { basis, vector }) => {
            return Err(Error::InternalInvariantViolation(format!(
                "N(I,f,sigma) is not an ideal (basis {basis}, vector {vector})"
            )))
        }
        Err(e) => return Err(e),
    }
    Ok(TwistedIdeal { tensor, ideal })
}

/// `K(I, f, sigma) = (E (x) L) / N(I, f, sigma)`.
pub fn twisted_completion(l: &LieAlgebra<FieldElement>, twist: &TwistData) -> Result<Completion> {
    let t = twisted_ideal(l, twist)?;
    quotient_completion(&t.tensor, &t.ideal)
}

/// The Q-linear map `sigma (x) f` on the Q-restriction of `E (x)_Q L_Q`:
/// `x (x) a -> sigma(x) (x) f(a)`, i.e. the Kronecker product `F (x) S`.
pub fn sigma_tensor_f(f: &Matrix<Rational>, sigma: &FieldAutomorphism) -> Matrix<Rational> {
    let s = sigma.matrix();
    let d = s.rows();
    let n = f.rows();
    Matrix::from_fn(n * d, n * d, |row, col| {
        f.get(row / d, col / d).clone() * s.get(row % d, col % d).clone()
    })
}

/// Both sides of `(sigma (x) f)(N(I,f,sigma)) = N(f(I),1,1)` as Q-subspaces.
#[derive(Clone, Debug)]
pub struct ConjugationCheck {
    pub image: Subspace<Rational>,
    pub untwisted: Subspace<Rational>,
}

impl ConjugationCheck {
    pub fn holds(&self) -> bool {
        self.image == self.untwisted
    }
}

pub fn conjugation_check(l: &LieAlgebra<FieldElement>, twist: &TwistData) -> Result<ConjugationCheck> {
    let field = l.field();
    let twisted = twisted_ideal(l, twist)?;
    let untwisted = twisted_ideal(l, &twist.untwisted_image()?)?;
    let map = sigma_tensor_f(twist.f.matrix(), &twist.sigma);
    Ok(ConjugationCheck {
        image: restrict_subspace(&twisted.ideal, field).image(&map)?,
        untwisted: restrict_subspace(&untwisted.ideal, field),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field_automorphisms;
    use crate::lie::{center, make_algebra, NamedAlgebra};
    use crate::scalar::rat;
    use std::sync::Arc;

    fn field(cs: &[i64]) -> Arc<NumberField> {
        NumberField::new(cs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn untwisted_heisenberg_over_sqrt2() {
        let e = field(&[-2, 0, 1]);
        let h: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Heisenberg, &e);
        let t = twisted_ideal(&h, &TwistData::trivial(&h)).unwrap();
        assert_eq!(t.tensor.dim(), 6);
        assert_eq!(t.ideal.dim(), 3);
        let k = twisted_completion(&h, &TwistData::trivial(&h)).unwrap();
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn untwisted_heisenberg_over_cube_root() {
        let e = field(&[-2, 0, 0, 1]);
        let h: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Heisenberg, &e);
        let t = twisted_ideal(&h, &TwistData::trivial(&h)).unwrap();
        assert_eq!(t.ideal.dim(), 6);
        assert_eq!(twisted_completion(&h, &TwistData::trivial(&h)).unwrap().dim(), 3);
    }

    #[test]
    fn centre_twisted_by_conjugation() {
        let e = field(&[-2, 0, 1]);
        let h: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Heisenberg, &e);
        let lq = restrict_algebra(&h);
        let conj = field_automorphisms(&e).unwrap()[1].clone();
        let twist = TwistData::new(&h, center(&lq), Matrix::identity(6), conj).unwrap();
        let k = twisted_completion(&h, &twist).unwrap();
        assert_eq!(k.dim(), 5);
        let plain = twisted_completion(&h, &twist.untwisted_image().unwrap()).unwrap();
        assert_eq!(plain.dim(), 5);
        assert!(conjugation_check(&h, &twist).unwrap().holds());
    }

    #[test]
    fn kronecker_layout_matches_restriction_order() {
        let e = field(&[-2, 0, 1]);
        let conj = field_automorphisms(&e).unwrap()[1].clone();
        let f = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]], 2).unwrap();
        let m = sigma_tensor_f(&f, &conj);
        // t (x) v_1 -> -t (x) v_2: column 1 has -1 at row 3
        assert_eq!(m.column(1), vec![rat(0), rat(0), rat(0), rat(-1)]);
    }

    #[test]
    fn twist_inputs_are_validated() {
        let e = field(&[-2, 0, 1]);
        let h: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Heisenberg, &e);
        let id = FieldAutomorphism::identity(&e);
        let x = Subspace::from_vectors(6, vec![crate::linalg::unit(6, 0)]).unwrap();
        assert!(matches!(
            TwistData::new(&h, x, Matrix::identity(6), id.clone()),
            Err(Error::NotAnIdeal { .. })
        ));
        let mut scale = Matrix::identity(6);
        scale.set(4, 4, rat(2));
        assert!(matches!(
            TwistData::new(&h, Subspace::full(6), scale, id),
            Err(Error::NotAutomorphism(_))
        ));
    }
}
