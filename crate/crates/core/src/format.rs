//! JSON encodings of fields, algebras, twists, completions and structures.
//!
//! Rationals are written `p/q` (or `p`), field elements as polynomials in
//! `t` such as `1 - 1/2*t^2`. On input a field element may also be an array
//! of `d` rational strings (power-basis coordinates).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arith::{FieldAutomorphism, FieldElement, NumberField};
use crate::completion::{Completion, TwistData};
use crate::error::{Error, Result};
use crate::lie::{ideal_closure, restrict_algebra, LieAlgebra};
use crate::linalg::{unit, Matrix};
use crate::scalar::{Rational, Scalar};
use crate::sigma::{Constant, TwoSortedStructure};

pub fn read_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if den == num_bigint::BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Parses `c0 + c1*t + c2*t^2 ...` (terms in any order, `t` may repeat) and
/// reduces modulo the minimal polynomial.
pub fn parse_element(field: &Arc<NumberField>, s: &str) -> Result<FieldElement> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a field element: {s:?}"));
    if compact.is_empty() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let (negative, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        let (coeff, power) = match body.find('t') {
            None => (parse_rational(body).map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let c = match &body[..pos] {
                    "" => Rational::from_int(1),
                    pre => parse_rational(pre.strip_suffix('*').ok_or_else(bad)?).map_err(|_| bad())?,
                };
                let power = match &body[pos + 1..] {
                    "" => 1,
                    rest => rest
                        .strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?,
                };
                (c, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::from_int(0));
        }
        let c = if negative { -coeff } else { coeff };
        coeffs[power] = coeffs[power].clone() + c;
    }
    Ok(FieldElement::from_poly(field, coeffs))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rational,
    NumberField { minpoly: Vec<String> },
}

impl FieldSpec {
    pub fn build(&self, max_degree: usize) -> Result<Arc<NumberField>> {
        match self {
            FieldSpec::Rational => Ok(NumberField::rationals()),
            FieldSpec::NumberField { minpoly } => {
                let coeffs = minpoly.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?;
                NumberField::with_max_degree(coeffs, max_degree)
            }
        }
    }

    pub fn of(field: &NumberField) -> Self {
        if field.describe() == "Q" {
            FieldSpec::Rational
        } else {
            FieldSpec::NumberField {
                minpoly: field.minpoly().iter().map(|c| c.to_string()).collect(),
            }
        }
    }
}

/// A field element as a string or as power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Text(String),
    Coords(Vec<String>),
}

impl ElementSpec {
    pub fn build(&self, field: &Arc<NumberField>) -> Result<FieldElement> {
        match self {
            ElementSpec::Text(s) => parse_element(field, s),
            ElementSpec::Coords(cs) => {
                let coeffs = cs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
                field.element(coeffs).map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }

    pub fn of<T: Scalar>(x: &T) -> Self {
        ElementSpec::Text(x.to_string())
    }
}

pub fn build_vector(field: &Arc<NumberField>, v: &[ElementSpec]) -> Result<Vec<FieldElement>> {
    v.iter().map(|x| x.build(field)).collect()
}

pub fn build_rational_vector(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|x| parse_rational(x)).collect()
}

pub fn vector_spec<T: Scalar>(v: &[T]) -> Vec<ElementSpec> {
    v.iter().map(ElementSpec::of).collect()
}

pub fn matrix_spec<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<ElementSpec>> {
    m.row_vectors().iter().map(|r| vector_spec(r)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub k: usize,
    pub coeff: ElementSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub value: Vec<TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
}

impl AlgebraFile {
    pub fn of<T: Scalar>(l: &LieAlgebra<T>) -> Self {
        AlgebraFile {
            field: FieldSpec::of(l.field()),
            dim: l.dim(),
            basis_names: Some(l.basis_names().to_vec()),
            brackets: l
                .nonzero_brackets()
                .into_iter()
                .map(|(i, j, v)| BracketSpec {
                    i,
                    j,
                    value: v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| TermSpec {
                            k,
                            coeff: ElementSpec::of(c),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn build(&self, max_degree: usize) -> Result<LieAlgebra<FieldElement>> {
        let field = self.field.build(max_degree)?;
        let n = self.dim;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i >= b.j || b.j >= n {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) needs i < j < {n}",
                    b.i, b.j
                )));
            }
            let mut v = vec![field.zero(); n];
            for t in &b.value {
                if t.k >= n {
                    return Err(Error::Parse(format!("basis index {} out of range", t.k)));
                }
                let c = t.coeff.build(&field)?;
                v[t.k] = &v[t.k] + &c;
            }
            brackets.push((b.i, b.j, v));
        }
        if let Some(names) = &self.basis_names {
            if names.len() != n {
                return Err(Error::Parse(format!("{} basis names for dimension {n}", names.len())));
            }
        }
        LieAlgebra::new(&field, n, brackets, self.basis_names.clone()).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The algebra read over Q; the field must have degree one.
    pub fn build_rational(&self, max_degree: usize) -> Result<LieAlgebra<Rational>> {
        let l = self.build(max_degree)?;
        if l.field().degree() != 1 {
            return Err(Error::Parse("expected an algebra over Q".into()));
        }
        Ok(l.map_scalars(&NumberField::rationals(), |c| {
            c.as_rational().expect("degree one elements are rational")
        }))
    }
}

/// `{"ideal_gens", "f_matrix", "sigma_root"}` for an algebra `L` over `E`;
/// vectors and `f` are in the coordinates of the Q-restriction of `L`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistFile {
    pub ideal_gens: Vec<Vec<String>>,
    pub f_matrix: Vec<Vec<String>>,
    pub sigma_root: ElementSpec,
}

impl TwistFile {
    /// `I` is the ideal generated by `ideal_gens`.
    pub fn build(&self, l: &LieAlgebra<FieldElement>) -> Result<TwistData> {
        let field = l.field();
        let n = l.dim() * field.degree();
        let gens = self
            .ideal_gens
            .iter()
            .map(|g| build_rational_vector(g))
            .collect::<Result<Vec<_>>>()?;
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::Parse(format!("ideal generator of length {}, expected {n}", g.len())));
        }
        let ideal = ideal_closure(&restrict_algebra(l), &gens)?;
        let rows = self
            .f_matrix
            .iter()
            .map(|r| build_rational_vector(r))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(Error::Parse(format!("f_matrix has {} rows, expected {n}", rows.len())));
        }
        let f = Matrix::from_rows(rows, n).map_err(|e| Error::Parse(e.to_string()))?;
        let root = self.sigma_root.build(field)?;
        let sigma = FieldAutomorphism::new(field, root)?;
        TwistData::new(l, ideal, f, sigma)
    }

    pub fn identity(l: &LieAlgebra<FieldElement>) -> Self {
        let field = l.field();
        let n = l.dim() * field.degree();
        let id: Matrix<Rational> = Matrix::identity(n);
        let rows = |m: &Matrix<Rational>| -> Vec<Vec<String>> {
            m.row_vectors().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
        };
        TwistFile {
            ideal_gens: rows(&id),
            f_matrix: rows(&id),
            sigma_root: ElementSpec::Text(field.generator().to_string()),
        }
    }
}

/// A completion: `K` in the algebra format, the embedding of `L`, the
/// entangled ideal and `L` itself; optionally the constants and spanning list of
/// a two-sorted structure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletionFile {
    #[serde(flatten)]
    pub algebra: AlgebraFile,
    pub embedding: Vec<Vec<ElementSpec>>,
    #[serde(rename = "N_basis")]
    pub n_basis: Vec<Vec<ElementSpec>>,
    pub source: AlgebraFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constants: Option<BTreeMap<String, Vec<ElementSpec>>>,
    #[serde(rename = "L_basis", default, skip_serializing_if = "Option::is_none")]
    pub l_basis: Option<Vec<String>>,
}

impl CompletionFile {
    pub fn of(k: &Completion) -> Self {
        CompletionFile {
            algebra: AlgebraFile::of(k.algebra()),
            embedding: matrix_spec(k.embedding()),
            n_basis: k.kernel().basis_vectors().iter().map(|v| vector_spec(v)).collect(),
            source: AlgebraFile::of(k.source()),
            constants: None,
            l_basis: None,
        }
    }

    /// Adds `a* = image of a` for every basis label of `L`, and `v_i` in basis order.
    pub fn with_structure(mut self) -> Self {
        let names = self.source.basis_names.clone().unwrap_or_default();
        let columns: Vec<Vec<ElementSpec>> = (0..self.source.dim)
            .map(|j| self.embedding.iter().map(|row| row[j].clone()).collect())
            .collect();
        self.constants = Some(names.iter().cloned().zip(columns).collect());
        self.l_basis = Some(names);
        self
    }

    /// The two-sorted structure. Constant labels must be basis names of `L`;
    /// `L_basis` lists labels and defaults to all basis names in order.
    pub fn structure(&self, max_degree: usize) -> Result<TwoSortedStructure> {
        let k = self.algebra.build(max_degree)?;
        let source = self.source.build_rational(max_degree)?;
        let field = k.field().clone();
        let n = source.dim();
        let names = source.basis_names().to_vec();
        let constants_spec = self
            .constants
            .clone()
            .ok_or_else(|| Error::Encoding("structure file needs \"constants\"".into()))?;
        let mut constants = Vec::with_capacity(constants_spec.len());
        for (j, label) in names.iter().enumerate() {
            if let Some(v) = constants_spec.get(label) {
                constants.push(Constant {
                    label: label.clone(),
                    element: unit(n, j),
                    image: build_vector(&field, v)?,
                });
            }
        }
        if let Some(extra) = constants_spec.keys().find(|l| !names.contains(l)) {
            return Err(Error::Encoding(format!("constant {extra} is not a basis label of L")));
        }
        let order = self.l_basis.clone().unwrap_or(names);
        let mut l_basis = Vec::with_capacity(order.len());
        for label in &order {
            let c = constants
                .iter()
                .find(|c| &c.label == label)
                .ok_or_else(|| Error::Encoding(format!("L_basis names unknown constant {label}")))?;
            l_basis.push(c.image.clone());
        }
        TwoSortedStructure::new(k, source, constants, l_basis)
    }
}
