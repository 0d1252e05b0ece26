use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{FieldElement, NumberField};
use crate::completion::Completion;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{restrict_vector, vec_add, Matrix};
use crate::scalar::Rational;

/// An element of `M = K u E`.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Scalar(FieldElement),
    Vector(Vec<FieldElement>),
}

impl Element {
    /// The predicate `q`.
    pub fn is_scalar(&self) -> bool {
        matches!(self, Element::Scalar(_))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(x) => write!(f, "s({x})"),
            Element::Vector(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "v({})", parts.join("; "))
            }
        }
    }
}

/// A constant symbol `a*`: the element `a` of `L` and its interpretation in `K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Constant {
    pub label: String,
    pub element: Vec<Rational>,
    pub image: Vec<FieldElement>,
}

/// The structure `M = K u E` of the language `(0, 1, +, x, q, a*)` with the
/// spanning witnesses `v_1, ..., v_n`.
#[derive(Clone, Debug)]
pub struct TwoSortedStructure {
    scalars: Arc<NumberField>,
    carrier: LieAlgebra<FieldElement>,
    source: LieAlgebra<Rational>,
    constants: Vec<Constant>,
    l_basis: Vec<Vec<FieldElement>>,
}

impl TwoSortedStructure {
    pub fn new(
        carrier: LieAlgebra<FieldElement>,
        source: LieAlgebra<Rational>,
        constants: Vec<Constant>,
        l_basis: Vec<Vec<FieldElement>>,
    ) -> Result<Self> {
        let m = carrier.dim();
        let n = source.dim();
        for c in &constants {
            if c.element.len() != n {
                return Err(Error::Encoding(format!(
                    "constant {} names an element of length {}, expected {n}",
                    c.label,
                    c.element.len()
                )));
            }
            if c.image.len() != m {
                return Err(Error::Encoding(format!(
                    "constant {} has an image of length {}, expected {m}",
                    c.label,
                    c.image.len()
                )));
            }
        }
        for (i, a) in constants.iter().enumerate() {
            if constants[..i].iter().any(|b| b.label == a.label) {
                return Err(Error::Encoding(format!("duplicate constant {}", a.label)));
            }
        }
        if let Some(v) = l_basis.iter().find(|v| v.len() != m) {
            return Err(Error::Encoding(format!(
                "spanning vector of length {}, expected {m}",
                v.len()
            )));
        }
        let scalars = carrier.field().clone();
        let carrier = carrier.map_scalars(&scalars, |c| c.clone().in_field(&scalars));
        let constants = constants
            .into_iter()
            .map(|c| Constant {
                image: c.image.into_iter().map(|x| x.in_field(&scalars)).collect(),
                ..c
            })
            .collect();
        let l_basis = l_basis
            .into_iter()
            .map(|v| v.into_iter().map(|x| x.in_field(&scalars)).collect())
            .collect();
        Ok(TwoSortedStructure {
            scalars,
            carrier,
            source,
            constants,
            l_basis,
        })
    }

    /// `K` with `a* = 1 (x) a + N` for the basis of `L`, and `v_i = e_i*`.
    pub fn from_completion(k: &Completion) -> Result<Self> {
        let source = k.source().clone();
        let n = source.dim();
        let mut constants = Vec::with_capacity(n);
        for (j, label) in source.basis_names().iter().enumerate() {
            let element = crate::linalg::unit::<Rational>(n, j);
            constants.push(Constant {
                label: label.clone(),
                image: k.embed(&element)?,
                element,
            });
        }
        let l_basis = constants.iter().map(|c| c.image.clone()).collect();
        Self::new(k.algebra().clone(), source, constants, l_basis)
    }

    pub fn scalars(&self) -> &Arc<NumberField> {
        &self.scalars
    }

    pub fn carrier(&self) -> &LieAlgebra<FieldElement> {
        &self.carrier
    }

    pub fn carrier_mut(&mut self) -> &mut LieAlgebra<FieldElement> {
        &mut self.carrier
    }

    pub fn source(&self) -> &LieAlgebra<Rational> {
        &self.source
    }

    pub fn constants(&self) -> &[Constant] {
        &self.constants
    }

    pub fn l_basis(&self) -> &[Vec<FieldElement>] {
        &self.l_basis
    }

    pub fn l_basis_mut(&mut self) -> &mut Vec<Vec<FieldElement>> {
        &mut self.l_basis
    }

    pub fn zero(&self) -> Element {
        Element::Scalar(self.scalars.zero())
    }

    pub fn one(&self) -> Element {
        Element::Scalar(self.scalars.one())
    }

    /// `0*`.
    pub fn zero_star(&self) -> Element {
        Element::Vector(vec![self.scalars.zero(); self.carrier.dim()])
    }

    /// Sum in `E`, sum in `K`, and `0*` for mixed arguments.
    pub fn add(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a + b),
            (Element::Vector(u), Element::Vector(v)) => Element::Vector(vec_add(u, v)),
            _ => self.zero_star(),
        }
    }

    /// Product in `E`, bracket in `K`, and the scalar product for mixed arguments.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a * b),
            (Element::Vector(u), Element::Vector(v)) => Element::Vector(self.carrier.bracket(u, v)),
            (Element::Scalar(a), Element::Vector(v)) | (Element::Vector(v), Element::Scalar(a)) => {
                Element::Vector(v.iter().map(|c| a * c).collect())
            }
        }
    }

    /// `m x = x + ... + x` (`m` summands, `m >= 1`).
    pub fn multiple(&self, m: usize, x: &Element) -> Element {
        let mut acc = x.clone();
        for _ in 1..m {
            acc = self.add(&acc, x);
        }
        acc
    }

    /// `-x` in its own sort.
    pub fn negate(&self, x: &Element) -> Element {
        match x {
            Element::Scalar(a) => Element::Scalar(-a),
            Element::Vector(v) => Element::Vector(v.iter().map(|c| -c).collect()),
        }
    }

    /// The Q-basis `t^s` of `E`.
    pub fn scalar_basis(&self) -> Vec<Element> {
        (0..self.scalars.degree())
            .map(|s| Element::Scalar(self.scalars.power_basis(s)))
            .collect()
    }

    /// The `E`-basis of `K`.
    pub fn vector_basis(&self) -> Vec<Element> {
        (0..self.carrier.dim())
            .map(|i| Element::Vector(self.unit(i)))
            .collect()
    }

    /// The Q-basis `t^s e_i` of `K`.
    pub fn vector_q_basis(&self) -> Vec<Element> {
        let d = self.scalars.degree();
        (0..self.carrier.dim() * d)
            .map(|idx| {
                let mut v = vec![self.scalars.zero(); self.carrier.dim()];
                v[idx / d] = self.scalars.power_basis(idx % d);
                Element::Vector(v)
            })
            .collect()
    }

    fn unit(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![self.scalars.zero(); self.carrier.dim()];
        v[i] = self.scalars.one();
        v
    }

    /// Coefficients `x_i` in `E` with `x = sum x_i v_i`, if any.
    pub fn spanning_coefficients(&self, x: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        let m = self.carrier.dim();
        if self.l_basis.is_empty() {
            return Ok(x.iter().all(|c| c.is_zero()).then(Vec::new));
        }
        let a = Matrix::from_columns(&self.l_basis, m)?;
        a.solve(x)
    }

    /// `a*` for `a` in the Q-span of the provided constants, by linear extension.
    pub fn star(&self, a: &[Rational]) -> Result<Option<Vec<FieldElement>>> {
        let n = self.source.dim();
        if self.constants.is_empty() {
            return Ok(a.iter().all(|c| c.is_zero()).then(|| vec![self.scalars.zero(); self.carrier.dim()]));
        }
        let elements: Vec<Vec<Rational>> = self.constants.iter().map(|c| c.element.clone()).collect();
        let coeffs = match Matrix::from_columns(&elements, n)?.solve(a)? {
            Some(c) => c,
            None => return Ok(None),
        };
        let mut out = vec![self.scalars.zero(); self.carrier.dim()];
        for (c, k) in coeffs.iter().zip(&self.constants) {
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(&k.image) {
                    *o = &*o + &x.scale(c);
                }
            }
        }
        Ok(Some(out))
    }

    /// Q-restriction of a carrier vector.
    pub(crate) fn restrict(&self, v: &[FieldElement]) -> Vec<Rational> {
        restrict_vector(v, &self.scalars)
    }
}
