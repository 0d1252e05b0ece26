use std::fmt;

use num_traits::Zero;

use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rng::Lcg;
use crate::scalar::{rat, Rational};
use crate::sigma::{Element, TwoSortedStructure};

pub const AXIOM_COUNT: usize = 25;

/// Largest `m` tried for the torsion scheme.
pub const TORSION_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Exact checks on basis tuples, complete by multilinearity.
    Structural,
    /// Seeded random tuples; a falsification aid only.
    Sampled { samples: usize, seed: u64 },
}

impl CheckMode {
    pub fn label(self) -> &'static str {
        match self {
            CheckMode::Structural => "structural",
            CheckMode::Sampled { .. } => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Values of the universally quantified variables.
    Tuple(Vec<Element>),
    /// Constant symbols (`a*`) falsifying an instance of a scheme.
    Constants(Vec<String>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self {
            Witness::Tuple(xs) => xs.iter().map(|x| x.to_string()).collect(),
            Witness::Constants(ls) => ls.iter().map(|l| format!("{l}*")).collect(),
        };
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomVerdict {
    pub id: usize,
    pub mode: CheckMode,
    pub passed: bool,
    /// Instances evaluated.
    pub instances: usize,
    pub witness: Option<Witness>,
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AXIOM {} {}", self.id, if self.passed { "PASS" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sort {
    Scalar,
    Vector,
    Any,
}

fn sorts(id: usize) -> &'static [Sort] {
    use Sort::*;
    match id {
        1 | 2 => &[Scalar, Scalar],
        3 | 7 => &[Scalar, Scalar, Scalar],
        19 | 20 => &[Scalar, Scalar, Vector],
        4 | 6 | 8 | 24 => &[Scalar],
        5 => &[Any],
        9 | 10 => &[Vector, Vector],
        11 | 13 | 14 | 25 => &[Vector],
        12 | 15 => &[Vector, Vector, Vector],
        16 => &[Any, Vector, Vector],
        17 => &[Scalar, Vector],
        18 => &[Scalar, Vector, Vector],
        _ => &[],
    }
}

fn fits(sort: Sort, x: &Element) -> bool {
    match sort {
        Sort::Scalar => x.is_scalar(),
        Sort::Vector => !x.is_scalar(),
        Sort::Any => true,
    }
}

/// Evaluates the quantifier-free matrix of axiom `id` on `tuple`, existential
/// quantifiers included (their witnesses are constructed). Axiom 24 takes
/// `(x, m)` with `m` a positive integer scalar. `None` for the constant schemes
/// 21 to 23 and for tuples of the wrong length.
///
/// Axiom 9 is read as `~q(x + y) & ~q(x * y)`.
pub fn matrix_holds(m: &TwoSortedStructure, id: usize, tuple: &[Element]) -> Option<bool> {
    let arity = if id == 24 { 2 } else { sorts(id).len() };
    if arity == 0 || tuple.len() != arity {
        return None;
    }
    if !sorts(id).iter().zip(tuple).all(|(s, x)| fits(*s, x)) {
        return Some(true);
    }
    let add = |a: &Element, b: &Element| m.add(a, b);
    let mul = |a: &Element, b: &Element| m.mul(a, b);
    let x = &tuple[0];
    let y = tuple.get(1);
    let z = tuple.get(2);
    Some(match id {
        1 => {
            let y = y?;
            add(x, y).is_scalar() && mul(x, y).is_scalar()
        }
        2 => {
            let y = y?;
            add(x, y) == add(y, x) && mul(x, y) == mul(y, x)
        }
        3 => {
            let (y, z) = (y?, z?);
            add(&add(x, y), z) == add(x, &add(y, z)) && mul(&mul(x, y), z) == mul(x, &mul(y, z))
        }
        4 => add(x, &m.zero()) == *x,
        5 => mul(&m.one(), x) == *x,
        6 => {
            let w = m.negate(x);
            w.is_scalar() && add(x, &w) == m.zero()
        }
        7 => {
            let (y, z) = (y?, z?);
            mul(x, &add(y, z)) == add(&mul(x, y), &mul(x, z))
        }
        8 => {
            let Element::Scalar(a) = x else { return Some(true) };
            if a.is_zero() {
                return Some(true);
            }
            match a.try_inverse() {
                Ok(inv) => mul(x, &Element::Scalar(inv)) == m.one(),
                Err(_) => false,
            }
        }
        9 => {
            let y = y?;
            !add(x, y).is_scalar() && !mul(x, y).is_scalar()
        }
        10 => {
            let y = y?;
            add(x, y) == add(y, x)
        }
        11 => mul(x, x) == m.zero_star(),
        12 => {
            let (y, z) = (y?, z?);
            add(&add(x, y), z) == add(x, &add(y, z))
        }
        13 => add(x, &m.zero_star()) == *x,
        14 => {
            let w = m.negate(x);
            !w.is_scalar() && add(x, &w) == m.zero_star()
        }
        15 => {
            let (y, z) = (y?, z?);
            let s = add(
                &add(&mul(&mul(x, y), z), &mul(&mul(y, z), x)),
                &mul(&mul(z, x), y),
            );
            s == m.zero_star()
        }
        16 => {
            let (y, z) = (y?, z?);
            mul(x, &add(y, z)) == add(&mul(x, y), &mul(x, z))
        }
        17 => !mul(x, y?).is_scalar(),
        18 => {
            let (y, z) = (y?, z?);
            let a = mul(x, &mul(y, z));
            a == mul(&mul(x, y), z) && a == mul(y, &mul(x, z))
        }
        19 => {
            let (y, z) = (y?, z?);
            mul(&mul(x, y), z) == mul(x, &mul(y, z))
        }
        20 => {
            let (y, z) = (y?, z?);
            mul(&add(x, y), z) == add(&mul(x, z), &mul(y, z))
        }
        24 => {
            let Element::Scalar(count) = y? else { return None };
            let count = count.as_rational()?;
            if !count.is_integer() || count <= rat(0) {
                return None;
            }
            let times: usize = count.to_integer().try_into().ok()?;
            m.multiple(times, x) != m.zero() || *x == m.zero()
        }
        25 => {
            let Element::Vector(v) = x else { return Some(true) };
            matches!(m.spanning_coefficients(v), Ok(Some(_)))
        }
        _ => return None,
    })
}

fn tuples(pools: &[&[Element]]) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = vec![Vec::new()];
    for pool in pools {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for t in &out {
            for x in pool.iter() {
                let mut u = t.clone();
                u.push(x.clone());
                next.push(u);
            }
        }
        out = next;
    }
    out
}

fn first_failure(
    m: &TwoSortedStructure,
    id: usize,
    candidates: impl IntoIterator<Item = Vec<Element>>,
) -> (usize, Option<Witness>) {
    let mut count = 0;
    for t in candidates {
        count += 1;
        if matrix_holds(m, id, &t) == Some(false) {
            return (count, Some(Witness::Tuple(t)));
        }
    }
    (count, None)
}

/// Basis tuples that decide the axiom exactly.
fn structural_tuples(m: &TwoSortedStructure, id: usize) -> Vec<Vec<Element>> {
    let s = m.scalar_basis();
    let vq = m.vector_q_basis();
    let ve = m.vector_basis();
    let any: Vec<Element> = s.iter().chain(&vq).cloned().collect();
    match id {
        1 | 2 => tuples(&[&s, &s]),
        3 | 7 => tuples(&[&s, &s, &s]),
        4 | 6 => tuples(&[&s]),
        8 => {
            // nonzero elements only matter; Q-basis and a few combinations
            let field = m.scalars();
            let mut pool = s.clone();
            let mut total = field.zero();
            for k in 0..field.degree() {
                let t = field.power_basis(k);
                total = &total + &t;
                pool.push(Element::Scalar(&field.one() + &t));
            }
            pool.push(Element::Scalar(total));
            tuples(&[&pool])
        }
        5 => tuples(&[&any]),
        9 | 10 => tuples(&[&vq, &vq]),
        11 => {
            let mut pool = vq.clone();
            for i in 0..vq.len() {
                for j in i + 1..vq.len() {
                    pool.push(m.add(&vq[i], &vq[j]));
                }
            }
            tuples(&[&pool])
        }
        12 => tuples(&[&vq, &vq, &vq]),
        13 | 14 => tuples(&[&vq]),
        15 => {
            let mut out = Vec::new();
            for i in 0..ve.len() {
                for j in i + 1..ve.len() {
                    for k in j + 1..ve.len() {
                        out.push(vec![ve[i].clone(), ve[j].clone(), ve[k].clone()]);
                    }
                }
            }
            out
        }
        16 => tuples(&[&any, &vq, &vq]),
        17 => tuples(&[&s, &vq]),
        18 => tuples(&[&s, &vq, &vq]),
        19 | 20 => tuples(&[&s, &s, &vq]),
        24 => {
            let counts: Vec<Element> = (1..=TORSION_LIMIT as i64)
                .map(|c| Element::Scalar(m.scalars().from_rational(rat(c))))
                .collect();
            tuples(&[&s, &counts])
        }
        25 => tuples(&[&ve]),
        _ => Vec::new(),
    }
}

fn random_element(m: &TwoSortedStructure, rng: &mut Lcg, sort: Sort) -> Element {
    let sort = match sort {
        Sort::Any if rng.below(2) == 0 => Sort::Scalar,
        Sort::Any => Sort::Vector,
        s => s,
    };
    match sort {
        Sort::Scalar => Element::Scalar(rng.scalar(m.scalars())),
        _ => Element::Vector(rng.vector(m.scalars(), m.carrier().dim())),
    }
}

fn sampled_tuples(m: &TwoSortedStructure, id: usize, samples: usize, rng: &mut Lcg) -> Vec<Vec<Element>> {
    (0..samples)
        .map(|i| {
            if id == 24 {
                let x = Element::Scalar(rng.nonzero_scalar(m.scalars()));
                let c = (i % TORSION_LIMIT + 1) as i64;
                vec![x, Element::Scalar(m.scalars().from_rational(rat(c)))]
            } else {
                sorts(id).iter().map(|s| random_element(m, rng, *s)).collect()
            }
        })
        .collect()
}

fn labels(m: &TwoSortedStructure, idx: &[usize]) -> Witness {
    Witness::Constants(idx.iter().map(|&i| m.constants()[i].label.clone()).collect())
}

/// Relations among the named elements versus relations among their images.
fn constant_kernels(m: &TwoSortedStructure) -> Result<(crate::linalg::Subspace<Rational>, crate::linalg::Subspace<Rational>)> {
    let cs = m.constants();
    let elements: Vec<Vec<Rational>> = cs.iter().map(|c| c.element.clone()).collect();
    let images: Vec<Vec<Rational>> = cs.iter().map(|c| m.restrict(&c.image)).collect();
    let n = m.source().dim();
    let q = m.carrier().dim() * m.scalars().degree();
    Ok((
        Matrix::from_columns(&elements, n)?.kernel(),
        Matrix::from_columns(&images, q)?.kernel(),
    ))
}

fn support(c: &[Rational]) -> Vec<usize> {
    c.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// `a != b => a* != b*`: no relation among the images that fails among the elements.
fn axiom22_structural(m: &TwoSortedStructure) -> Result<(usize, Option<Witness>)> {
    let cs = m.constants();
    if cs.is_empty() {
        return Ok((0, None));
    }
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if cs[i].element != cs[j].element && cs[i].image == cs[j].image {
                return Ok((1, Some(labels(m, &[i, j]))));
            }
        }
    }
    let (rel_l, rel_k) = constant_kernels(m)?;
    for c in rel_k.basis_vectors() {
        if !rel_l.contains_vector(&c)? {
            return Ok((1, Some(labels(m, &support(&c)))));
        }
    }
    Ok((1, None))
}

/// Additivity: every Q-relation among the named elements holds among the
/// images; bracket: `[a*, b*] = [a, b]*` for every pair of constants.
fn axiom23_structural(m: &TwoSortedStructure) -> Result<(usize, Option<Witness>)> {
    let cs = m.constants();
    if cs.is_empty() {
        return Ok((0, None));
    }
    let (rel_l, rel_k) = constant_kernels(m)?;
    for c in rel_l.basis_vectors() {
        if !rel_k.contains_vector(&c)? {
            return Ok((1, Some(labels(m, &support(&c)))));
        }
    }
    let mut count = 1;
    for i in 0..cs.len() {
        for j in i..cs.len() {
            let ab = m.source().bracket(&cs[i].element, &cs[j].element);
            let Some(star) = m.star(&ab)? else { continue };
            count += 1;
            if m.carrier().bracket(&cs[i].image, &cs[j].image) != star {
                return Ok((count, Some(labels(m, &[i, j]))));
            }
        }
    }
    Ok((count, None))
}

fn random_combination(m: &TwoSortedStructure, rng: &mut Lcg) -> Vec<Rational> {
    let n = m.source().dim();
    let mut a = vec![rat(0); n];
    for c in m.constants() {
        let k = rat(rng.small_int(crate::rng::COEFF_RANGE));
        for (x, e) in a.iter_mut().zip(&c.element) {
            *x = x.clone() + k.clone() * e.clone();
        }
    }
    a
}

fn constant_sampled(
    m: &TwoSortedStructure,
    id: usize,
    samples: usize,
    rng: &mut Lcg,
) -> Result<(usize, Option<Witness>)> {
    if m.constants().is_empty() {
        return Ok((0, None));
    }
    for i in 0..samples {
        let a = random_combination(m, rng);
        let b = random_combination(m, rng);
        let (Some(sa), Some(sb)) = (m.star(&a)?, m.star(&b)?) else { continue };
        let tuple = || Witness::Tuple(vec![Element::Vector(sa.clone()), Element::Vector(sb.clone())]);
        let failed = match id {
            22 => a != b && sa == sb,
            _ => {
                let sum: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                let additive = m.star(&sum)?.map_or(true, |s| {
                    s == sa.iter().zip(&sb).map(|(x, y)| x + y).collect::<Vec<FieldElement>>()
                });
                let bracket = m
                    .star(&m.source().bracket(&a, &b))?
                    .map_or(true, |s| s == m.carrier().bracket(&sa, &sb));
                !(additive && bracket)
            }
        };
        if failed {
            return Ok((i + 1, Some(tuple())));
        }
    }
    Ok((samples, None))
}

fn verdict(id: usize, mode: CheckMode, (instances, witness): (usize, Option<Witness>)) -> AxiomVerdict {
    AxiomVerdict {
        id,
        mode,
        passed: witness.is_none(),
        instances,
        witness,
    }
}

/// All 25 verdicts in order.
pub fn check_axioms(m: &TwoSortedStructure, mode: CheckMode) -> Result<Vec<AxiomVerdict>> {
    if let CheckMode::Sampled { samples: 0, .. } = mode {
        return Err(Error::Encoding("sampled mode needs at least one sample".into()));
    }
    let mut rng = match mode {
        CheckMode::Sampled { seed, .. } => Some(Lcg::new(seed)),
        CheckMode::Structural => None,
    };
    let mut out = Vec::with_capacity(AXIOM_COUNT);
    for id in 1..=AXIOM_COUNT {
        let result = match (id, mode, rng.as_mut()) {
            // constants are carrier vectors of the right length by construction
            (21, _, _) => (m.constants().len(), None),
            (22, CheckMode::Structural, _) => axiom22_structural(m)?,
            (23, CheckMode::Structural, _) => axiom23_structural(m)?,
            (22 | 23, CheckMode::Sampled { samples, .. }, Some(rng)) => constant_sampled(m, id, samples, rng)?,
            (_, CheckMode::Structural, _) => first_failure(m, id, structural_tuples(m, id)),
            (_, CheckMode::Sampled { samples, .. }, Some(rng)) => {
                let ts = sampled_tuples(m, id, samples, rng);
                first_failure(m, id, ts)
            }
            _ => unreachable!("sampled mode always has a generator"),
        };
        out.push(verdict(id, mode, result));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use crate::completion::{twisted_completion, TwistData};
    use crate::lie::{make_algebra, LieAlgebra, NamedAlgebra};

    fn heisenberg_completion() -> TwoSortedStructure {
        let e = NumberField::new(vec![rat(-2), rat(0), rat(1)]).unwrap();
        let h: LieAlgebra<FieldElement> = make_algebra(NamedAlgebra::Heisenberg, &e);
        let k = twisted_completion(&h, &TwistData::trivial(&h)).unwrap();
        TwoSortedStructure::from_completion(&k).unwrap()
    }

    #[test]
    fn completion_satisfies_sigma() {
        let m = heisenberg_completion();
        let vs = check_axioms(&m, CheckMode::Structural).unwrap();
        assert_eq!(vs.len(), 25);
        for v in &vs {
            assert!(v.passed, "{v}");
        }
        let sampled = check_axioms(&m, CheckMode::Sampled { samples: 50, seed: 0 }).unwrap();
        assert!(sampled.iter().all(|v| v.passed));
    }

    #[test]
    fn jacobi_mutation_fails_axiom_15() {
        let mut m = heisenberg_completion();
        let e = m.scalars().clone();
        // [b_0, b_2] = b_0 next to [b_0, b_1] = t b_2
        assert_eq!(m.carrier().structure(0, 1), vec![e.zero(), e.zero(), e.generator()]);
        m.carrier_mut().set_structure(0, 2, vec![e.one(), e.zero(), e.zero()]).unwrap();
        let vs = check_axioms(&m, CheckMode::Structural).unwrap();
        let v15 = &vs[14];
        assert!(!v15.passed);
        let Some(Witness::Tuple(t)) = &v15.witness else { panic!() };
        assert_eq!(t.len(), 3);
        assert_eq!(matrix_holds(&m, 15, t), Some(false));
    }

    #[test]
    fn short_spanning_list_fails_axiom_25() {
        let mut m = heisenberg_completion();
        // y* and (t*y)* span the same E-line, so one of them can go
        m.l_basis_mut().remove(2);
        assert!(check_axioms(&m, CheckMode::Structural).unwrap().iter().all(|v| v.passed));
        m.l_basis_mut().remove(2);
        let vs = check_axioms(&m, CheckMode::Structural).unwrap();
        let failed: Vec<String> = vs.iter().filter(|v| !v.passed).map(|v| v.to_string()).collect();
        assert_eq!(failed.len(), 1, "{failed:?}");
        assert!(failed[0].starts_with("AXIOM 25 FAIL"));
    }

    #[test]
    fn colliding_constants_fail_axiom_22() {
        let mut m = heisenberg_completion();
        let cs = m.constants().to_vec();
        let mut bad = cs.clone();
        bad[1].image = bad[0].image.clone();
        m = TwoSortedStructure::new(m.carrier().clone(), m.source().clone(), bad, m.l_basis().to_vec()).unwrap();
        let vs = check_axioms(&m, CheckMode::Structural).unwrap();
        assert!(!vs[21].passed);
        assert_eq!(vs[21].witness, Some(Witness::Constants(vec![cs[0].label.clone(), cs[1].label.clone()])));
    }

    #[test]
    fn axiom_nine_reading() {
        let m = heisenberg_completion();
        let x = m.vector_basis();
        assert_eq!(matrix_holds(&m, 9, &[x[0].clone(), x[1].clone()]), Some(true));
        assert!(!m.mul(&x[0], &x[1]).is_scalar());
    }

    #[test]
    fn verdict_lines() {
        let v = AxiomVerdict {
            id: 3,
            mode: CheckMode::Structural,
            passed: false,
            instances: 1,
            witness: Some(Witness::Constants(vec!["x".into()])),
        };
        assert_eq!(v.to_string(), "AXIOM 3 FAIL witness=(x*)");
    }
}
