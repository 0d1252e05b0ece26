//! Algebraic number fields `Q[t]/(q)` and their elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::irreducible::check_irreducible;
use super::poly::{self, QPoly};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Default cap on the degree of a minimal polynomial.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// A number field presented as `Q[t]/(q)` for a monic irreducible `q`.
///
/// The generator is the residue class of `t`; no complex embedding is chosen.
/// Degree 1 encodes Q itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    minpoly: QPoly,
}

impl NumberField {
    /// Builds the field, verifying monicity and irreducibility with the default degree cap.
    pub fn new(minpoly: Vec<Rational>) -> Result<Arc<Self>> {
        Self::with_max_degree(minpoly, DEFAULT_MAX_DEGREE)
    }

    pub fn with_max_degree(minpoly: Vec<Rational>, max_degree: usize) -> Result<Arc<Self>> {
        let minpoly = poly::trimmed(minpoly);
        let degree = poly::degree(&minpoly).ok_or(Error::ConstantPolynomial)?;
        if degree == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !minpoly[degree].is_one() {
            return Err(Error::NotMonic);
        }
        if !check_irreducible(&minpoly, max_degree)? {
            return Err(Error::NotIrreducible(poly::render(&minpoly, "t")));
        }
        Ok(Arc::new(NumberField { minpoly }))
    }

    /// Q presented as `Q[t]/(t)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            minpoly: vec![Rational::zero(), Rational::one()],
        })
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn same_field(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.minpoly == b.minpoly
    }

    /// The residue class of `t`.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_poly(self, vec![Rational::zero(), Rational::one()])
    }

    /// `t^i` reduced.
    pub fn power_basis(self: &Arc<Self>, i: usize) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); i + 1];
        coeffs[i] = Rational::one();
        FieldElement::from_poly(self, coeffs)
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> FieldElement {
        FieldElement::from_poly(self, vec![q])
    }

    /// Element with exactly `degree` power-basis coordinates.
    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> Result<FieldElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::DimensionMismatch(format!(
                "field element needs {} coordinates, got {}",
                self.degree(),
                coeffs.len()
            )));
        }
        Ok(FieldElement::from_poly(self, coeffs))
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_poly(self, Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_poly(self, vec![Rational::one()])
    }

    /// Renders the minimal polynomial, e.g. `-2 + t^2`.
    pub fn describe(&self) -> String {
        if self.minpoly == [Rational::zero(), Rational::one()] {
            "Q".to_string()
        } else {
            format!("Q[t]/({})", poly::render(&self.minpoly, "t"))
        }
    }
}

/// An element of a number field, stored as a reduced polynomial in the generator.
///
/// Rational constants may be built without a field (`field == None`); they
/// combine with elements of any field. Two elements carrying different fields
/// cannot be combined.
#[derive(Clone)]
pub struct FieldElement {
    field: Option<Arc<NumberField>>,
    poly: QPoly,
}

impl FieldElement {
    pub(crate) fn from_poly(field: &Arc<NumberField>, p: QPoly) -> Self {
        let p = poly::trimmed(p);
        let poly = if p.len() > field.degree() {
            poly::rem(&p, &field.minpoly)
        } else {
            p
        };
        FieldElement {
            field: Some(field.clone()),
            poly,
        }
    }

    /// A field-agnostic rational constant.
    pub fn constant(q: Rational) -> Self {
        FieldElement {
            field: None,
            poly: poly::trimmed(vec![q]),
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Attaches `field` to a constant (no-op if already in that field).
    pub fn in_field(mut self, field: &Arc<NumberField>) -> Self {
        if self.field.is_none() {
            self.field = Some(field.clone());
        }
        self
    }

    /// Power-basis coordinates padded to `degree` entries.
    pub fn coords(&self, degree: usize) -> Vec<Rational> {
        let mut out = self.poly.clone();
        out.resize(degree.max(out.len()), Rational::zero());
        out
    }

    /// Coordinates padded to the degree of the element's field (length 1 for constants).
    pub fn coeffs(&self) -> Vec<Rational> {
        let d = self.field.as_ref().map_or(1, |f| f.degree());
        self.coords(d)
    }

    /// The reduced polynomial representative, trimmed.
    pub fn poly(&self) -> &[Rational] {
        &self.poly
    }

    /// The rational value if the element is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.poly.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.poly[0].clone()),
            _ => None,
        }
    }

    fn join(a: &Self, b: &Self) -> Result<Option<Arc<NumberField>>> {
        match (&a.field, &b.field) {
            (Some(x), Some(y)) => {
                if NumberField::same_field(x, y) {
                    Ok(Some(x.clone()))
                } else {
                    Err(Error::FieldMismatch)
                }
            }
            (Some(x), None) | (None, Some(x)) => Ok(Some(x.clone())),
            (None, None) => Ok(None),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let field = Self::join(self, other)?;
        Ok(FieldElement {
            field,
            poly: poly::add(&self.poly, &other.poly),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let field = Self::join(self, other)?;
        Ok(FieldElement {
            field,
            poly: poly::sub(&self.poly, &other.poly),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let field = Self::join(self, other)?;
        let prod = poly::mul(&self.poly, &other.poly);
        let poly = match &field {
            Some(f) if prod.len() > f.degree() => poly::rem(&prod, &f.minpoly),
            _ => prod,
        };
        Ok(FieldElement { field, poly })
    }

    /// Inverse via the extended Euclidean algorithm against the minimal polynomial.
    pub fn try_inverse(&self) -> Result<Self> {
        if self.poly.is_empty() {
            return Err(Error::DivisionByZero);
        }
        match &self.field {
            None => Ok(FieldElement::constant(self.poly[0].recip())),
            Some(f) => {
                let (g, s, _) = poly::xgcd(&self.poly, &f.minpoly);
                // g is a unit because the minimal polynomial is irreducible
                if g.len() != 1 {
                    return Err(Error::InternalInvariantViolation(
                        "element shares a factor with the minimal polynomial".into(),
                    ));
                }
                Ok(FieldElement::from_poly(f, s))
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement {
            field: self.field.clone(),
            poly: poly::scale(&self.poly, q),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::constant(Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Field operation selector for [`nf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked field arithmetic: fails with `FieldMismatch` when the operands
/// belong to different fields.
pub fn nf_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

pub fn nf_inverse(a: &FieldElement) -> Result<FieldElement> {
    a.try_inverse()
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if let (Some(x), Some(y)) = (&self.field, &other.field) {
            if !NumberField::same_field(x, y) {
                return false;
            }
        }
        self.poly == other.poly
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly::render(&self.poly, "t"))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch in arithmetic")
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field,
            poly: poly::neg(&self.poly),
        }
    }
}

impl<'a> Neg for &'a FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -self.clone()
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::constant(Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};

    fn sqrt2() -> Arc<NumberField> {
        NumberField::new(vec![rat(-2), rat(0), rat(1)]).unwrap()
    }

    fn el(f: &Arc<NumberField>, cs: &[i64]) -> FieldElement {
        f.element(cs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let f = sqrt2();
        let s = f.generator();
        assert_eq!(nf_arith(&s, &s, ArithOp::Mul).unwrap(), el(&f, &[2, 0]));
    }

    #[test]
    fn conjugate_sum_cancels() {
        let f = sqrt2();
        let sum = nf_arith(&el(&f, &[1, 1]), &el(&f, &[1, -1]), ArithOp::Add).unwrap();
        assert_eq!(sum, el(&f, &[2, 0]));
    }

    #[test]
    fn product_reduces_mod_minpoly() {
        // (1+t)(3+t) = 3 + 4t + t^2 = 5 + 4t
        let f = sqrt2();
        let p = nf_arith(&el(&f, &[1, 1]), &el(&f, &[3, 1]), ArithOp::Mul).unwrap();
        assert_eq!(p, el(&f, &[5, 4]));
    }

    #[test]
    fn inverses() {
        let f = sqrt2();
        assert_eq!(nf_inverse(&f.one()).unwrap(), f.one());
        assert_eq!(
            nf_inverse(&f.generator()).unwrap(),
            f.element(vec![rat(0), frac(1, 2)]).unwrap()
        );
        assert_eq!(nf_inverse(&el(&f, &[1, 1])).unwrap(), el(&f, &[-1, 1]));
        assert_eq!(nf_inverse(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = sqrt2().generator();
        let cube = NumberField::new(vec![rat(-2), rat(0), rat(0), rat(1)]).unwrap();
        let b = cube.generator();
        assert_eq!(nf_arith(&a, &b, ArithOp::Add), Err(Error::FieldMismatch));
    }

    #[test]
    fn constructor_rejects_bad_minpolys() {
        assert_eq!(
            NumberField::new(vec![rat(-1), rat(0), rat(1)]).unwrap_err(),
            Error::NotIrreducible("-1 + t^2".into())
        );
        assert_eq!(
            NumberField::new(vec![rat(-2), rat(0), rat(2)]).unwrap_err(),
            Error::NotMonic
        );
        assert_eq!(
            NumberField::new(vec![rat(3)]).unwrap_err(),
            Error::ConstantPolynomial
        );
    }

    #[test]
    fn element_arity_is_checked() {
        assert!(sqrt2().element(vec![rat(1)]).is_err());
    }

    #[test]
    fn rendering() {
        let f = sqrt2();
        assert_eq!(el(&f, &[5, -4]).to_string(), "5 - 4*t");
        assert_eq!(f.describe(), "Q[t]/(-2 + t^2)");
        assert_eq!(NumberField::rationals().describe(), "Q");
    }
}
