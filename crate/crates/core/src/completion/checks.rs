use std::sync::Arc;

use crate::arith::{FieldElement, NumberField};
use crate::completion::twist::act;
use crate::completion::{Completion, TwistData};
use crate::error::{Error, Result};
use crate::lie::{centralizer, restrict_algebra, series, LieAlgebra, SeriesKind, SeriesReport};
use crate::linalg::{restrict_scalars, restrict_vector, Matrix, Subspace};
use crate::rng::Lcg;
use crate::scalar::Rational;

/// One failed instance of `x . a-bar = (f^-1(sigma(x) f(a)))-bar`.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionFailure {
    /// Index of `a` in the Q-basis of `L`.
    pub basis: usize,
    pub scalar: FieldElement,
    pub lhs: Vec<FieldElement>,
    pub rhs: Vec<FieldElement>,
}

#[derive(Clone, Debug)]
pub struct ActionReport {
    pub scalars: Vec<FieldElement>,
    pub checks: usize,
    pub failures: Vec<ActionFailure>,
    /// Every coset of `K` is `a-bar` for some `a` in `L`.
    pub surjective: bool,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.surjective
    }
}

/// Checks the scalar action of `K(L, f, sigma)` against its closed form for
/// `x` in `{1, t, random}` and every Q-basis vector `a` of `L`.
pub fn verify_scalar_action(
    l: &LieAlgebra<FieldElement>,
    twist: &TwistData,
    completion: &Completion,
    seed: u64,
) -> Result<ActionReport> {
    if !twist.is_full() {
        return Err(Error::Unsupported(
            "the scalar action formula is stated for I = L only".into(),
        ));
    }
    let field = l.field();
    let n = l.dim() * field.degree();
    if completion.source().dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "completion of a {}-dimensional algebra, expected {n}",
            completion.source().dim()
        )));
    }
    let f_inv = twist
        .f()
        .inverse()
        .ok_or_else(|| Error::InternalInvariantViolation("f is not invertible".into()))?;
    let mut rng = Lcg::new(seed);
    let scalars = vec![field.one(), field.generator(), rng.nonzero_scalar::<FieldElement>(field)];
    let mut failures = Vec::new();
    let mut checks = 0;
    for x in &scalars {
        let sx = twist.sigma().apply(x)?;
        for j in 0..n {
            let a = crate::linalg::unit::<Rational>(n, j);
            let lhs: Vec<FieldElement> = completion.embed(&a)?.iter().map(|c| x * c).collect();
            let moved = act(l, &sx, &twist.f().apply(&a)?);
            let rhs = completion.embed(&f_inv.apply(&moved)?)?;
            checks += 1;
            if lhs != rhs {
                failures.push(ActionFailure {
                    basis: j,
                    scalar: x.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    let image = restrict_scalars(completion.embedding(), field);
    let surjective = image.rank() == completion.dim() * field.degree();
    Ok(ActionReport {
        scalars,
        checks,
        failures,
        surjective,
    })
}

/// A series of `L` next to the same series of `K`.
#[derive(Clone, Debug)]
pub struct SeriesComparison {
    pub source: SeriesReport<Rational>,
    pub completion: SeriesReport<FieldElement>,
    /// First `n` (1-based) where `gamma_n(K)` differs from the image of `E (x) gamma_n(L)`.
    pub mismatch: Option<usize>,
}

impl SeriesComparison {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none() && self.source.class_or_length == self.completion.class_or_length
    }
}

#[derive(Clone, Debug)]
pub struct PreservationReport {
    pub lower_central: SeriesComparison,
    pub derived: SeriesComparison,
}

impl PreservationReport {
    pub fn holds(&self) -> bool {
        self.lower_central.holds() && self.derived.holds()
    }
}

fn compare(completion: &Completion, kind: SeriesKind) -> Result<SeriesComparison> {
    let source = series(completion.source(), kind);
    let target = series(completion.algebra(), kind);
    let steps = source.terms.len().max(target.terms.len());
    let mut mismatch = None;
    for s in 0..steps {
        let ls = &source.terms[s.min(source.terms.len() - 1)];
        let ks = &target.terms[s.min(target.terms.len() - 1)];
        let images = ls
            .basis_vectors()
            .iter()
            .map(|a| completion.embed(a))
            .collect::<Result<Vec<_>>>()?;
        if Subspace::from_vectors(completion.dim(), images)? != *ks {
            mismatch = Some(s + 1);
            break;
        }
    }
    Ok(SeriesComparison {
        source,
        completion: target,
        mismatch,
    })
}

/// Lower central and derived series of `L` and `K`, compared term by term.
pub fn preservation_check(completion: &Completion) -> Result<PreservationReport> {
    Ok(PreservationReport {
        lower_central: compare(completion, SeriesKind::LowerCentral)?,
        derived: compare(completion, SeriesKind::Derived)?,
    })
}

/// `E = Q[t]/(q)` acting on `Q^n` through the companion matrix of `q`.
#[derive(Clone, Debug)]
pub struct Prop1Report {
    pub field: Arc<NumberField>,
    /// Matrix of `t`.
    pub companion: Matrix<Rational>,
    /// Matrices of `t^0, ..., t^(n-1)`.
    pub action: Vec<Matrix<Rational>>,
    pub annihilated: bool,
    pub samples: usize,
    /// A sampled `v` whose orbit `v, t v, ...` is dependent.
    pub dependent: Option<Vec<Rational>>,
}

impl Prop1Report {
    pub fn one_dimensional(&self) -> bool {
        self.annihilated && self.dependent.is_none()
    }
}

/// `t^n - 2`.
pub fn default_prop1_polynomial(n: usize) -> Vec<Rational> {
    let mut q = vec![Rational::from_integer(0.into()); n + 1];
    q[0] = Rational::from_integer((-2).into());
    q[n] = Rational::from_integer(1.into());
    q
}

pub fn companion_matrix(q: &[Rational]) -> Matrix<Rational> {
    let n = q.len() - 1;
    Matrix::from_fn(n, n, |i, j| {
        if j + 1 == n {
            -q[i].clone()
        } else if i == j + 1 {
            Rational::from_integer(1.into())
        } else {
            Rational::from_integer(0.into())
        }
    })
}

pub fn prop1_construct(
    n: usize,
    q: Option<Vec<Rational>>,
    samples: usize,
    seed: u64,
    max_degree: usize,
) -> Result<Prop1Report> {
    if n == 0 {
        return Err(Error::DimensionMismatch("n must be positive".into()));
    }
    let q = q.unwrap_or_else(|| default_prop1_polynomial(n));
    if q.len() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "polynomial of degree {} for n = {n}",
            q.len().saturating_sub(1)
        )));
    }
    let field = NumberField::with_max_degree(q.clone(), max_degree)?;
    let m = companion_matrix(&q);
    let mut action = vec![Matrix::identity(n)];
    for _ in 1..n {
        let next = action.last().expect("nonempty").mul(&m)?;
        action.push(next);
    }
    let mut value = Matrix::zeros(n, n);
    for c in q.iter().rev() {
        value = value.mul(&m)?.add(&Matrix::identity(n).scale(c))?;
    }
    let annihilated = value.is_zero();

    let rationals = NumberField::rationals();
    let mut rng = Lcg::new(seed);
    let mut dependent = None;
    for _ in 0..samples {
        let v: Vec<Rational> = rng.nonzero_vector(&rationals, n);
        let orbit = action
            .iter()
            .map(|p| p.mul_vec(&v))
            .collect::<Result<Vec<_>>>()?;
        if Matrix::from_columns(&orbit, n)?.rank() != n {
            dependent = Some(v);
            break;
        }
    }
    Ok(Prop1Report {
        field,
        companion: m,
        action,
        annihilated,
        samples,
        dependent,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralizerSample {
    pub x: Vec<FieldElement>,
    /// `x` is a Q-basis vector of the restriction rather than a random draw.
    pub basis: bool,
    pub dim_q: usize,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub degree: usize,
    pub samples: Vec<CentralizerSample>,
}

impl BoundReport {
    /// Upper bound on `min_x dim_Q C_L(x)`; the true minimum is not computed.
    pub fn min_sampled(&self) -> usize {
        self.samples.iter().map(|s| s.dim_q).min().unwrap_or(0)
    }
}

/// `dim_Q C_L(x)` for the Q-basis of the restriction and `samples` random
/// nonzero `x`; fails with `LemmaViolation` if one is below `[E:Q]`.
pub fn degree_bound(l: &LieAlgebra<FieldElement>, samples: usize, seed: u64) -> Result<BoundReport> {
    let field = l.field();
    let d = field.degree();
    let n = l.dim();
    let lq = restrict_algebra(l);
    let mut points = Vec::with_capacity(n * d + samples);
    for idx in 0..n * d {
        let mut x = vec![field.zero(); n];
        x[idx / d] = field.power_basis(idx % d);
        points.push((x, true));
    }
    let mut rng = Lcg::new(seed);
    for _ in 0..samples {
        if n == 0 {
            break;
        }
        points.push((rng.nonzero_vector::<FieldElement>(field, n), false));
    }
    let mut out = Vec::with_capacity(points.len());
    for (i, (x, basis)) in points.into_iter().enumerate() {
        let dim_q = centralizer(&lq, &restrict_vector(&x, field)).dim();
        if dim_q < d {
            return Err(Error::LemmaViolation {
                sample: format!("sample {i}"),
                centralizer_dim: dim_q,
                degree: d,
            });
        }
        out.push(CentralizerSample { x, basis, dim_q });
    }
    Ok(BoundReport { degree: d, samples: out })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    pub feasible: bool,
    /// `[E:Q] = n / m` when `m` divides `n`.
    pub degree: Option<usize>,
    pub explanation: String,
}

/// Necessary conditions for a completion of an `n`-dimensional rational
/// algebra of `E`-dimension `m`: `m | n` and `n / m <= bound`.
pub fn potential_dim_check(n: usize, m: usize, bound: Option<usize>) -> Result<Potential> {
    if n == 0 || m == 0 {
        return Err(Error::DimensionMismatch("dimensions must be positive".into()));
    }
    if n % m != 0 {
        return Ok(Potential {
            feasible: false,
            degree: None,
            explanation: format!("infeasible: {m} does not divide {n}"),
        });
    }
    let d = n / m;
    Ok(match bound {
        Some(b) if d > b => Potential {
            feasible: false,
            degree: Some(d),
            explanation: format!("infeasible: [E:Q] = {d} exceeds the centralizer bound {b}"),
        },
        Some(b) => Potential {
            feasible: true,
            degree: Some(d),
            explanation: format!("feasible: [E:Q] = {d} <= {b}"),
        },
        None => Potential {
            feasible: true,
            degree: Some(d),
            explanation: format!("feasible: [E:Q] = {d}"),
        },
    })
}
