use std::fs;
use std::path::Path;
use std::sync::Arc;

use liecomp_core::completion::{
    degree_bound, potential_dim_check, preservation_check, prop1_construct, quotient_completion,
    tensor_product, twisted_completion, verify_scalar_action, Completion, TwistData,
};
use liecomp_core::format::{
    build_vector, parse_element, parse_rational, read_json, to_json, AlgebraFile, CompletionFile, ElementSpec,
    TwistFile,
};
use liecomp_core::lie::{center, centralizer, centroid, series, LieAlgebra, SeriesKind, TableDefect};
use liecomp_core::linalg::{Matrix, Subspace};
use liecomp_core::sigma::{check_axioms, counterexample_note, CheckMode};
use liecomp_core::{ELieAlgebra, Error, FieldElement, NumberField, QLieAlgebra, Result, Scalar};

use crate::report::{plural, vector, vectors, yes_no, Report};
use crate::{Command, CompletionArgs, Global, ModeChoice, SeriesChoice};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path, g: &Global) -> Result<ELieAlgebra> {
    read_json::<AlgebraFile>(&read(path)?)?.build(g.max_degree)
}

fn load_rational(path: &Path, g: &Global) -> Result<QLieAlgebra> {
    read_json::<AlgebraFile>(&read(path)?)?.build_rational(g.max_degree)
}

fn parse_field(minpoly: &str, g: &Global) -> Result<Arc<NumberField>> {
    let coeffs = minpoly.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    NumberField::with_max_degree(coeffs, g.max_degree)
}

fn load_subspace(path: &Path, field: &Arc<NumberField>, dim: usize) -> Result<Subspace<FieldElement>> {
    let rows: Vec<Vec<ElementSpec>> = read_json(&read(path)?)?;
    let vectors = rows.iter().map(|r| build_vector(field, r)).collect::<Result<Vec<_>>>()?;
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::Parse(format!("vector of length {}, expected {dim}", v.len())));
    }
    Subspace::from_vectors(dim, vectors)
}

fn field_line(report: &mut Report, field: &NumberField) {
    report.line("field", format!("field: {}", field.describe()));
}

fn matrix<T: Scalar>(m: &Matrix<T>) -> String {
    let rows: Vec<String> = m
        .row_vectors()
        .iter()
        .map(|r| {
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn bracket_lines<T: Scalar>(report: &mut Report, l: &LieAlgebra<T>) {
    let names = l.basis_names();
    let brackets = l.nonzero_brackets();
    if brackets.is_empty() {
        report.line("bracket", "all brackets vanish");
    }
    for (i, j, v) in brackets {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let c = c.to_string();
                match c.as_str() {
                    "1" => names[k].clone(),
                    _ if c.contains(' ') => format!("({c})*{}", names[k]),
                    _ => format!("{c}*{}", names[k]),
                }
            })
            .collect();
        report.line("bracket", format!("[{}, {}] = {}", names[i], names[j], terms.join(" + ")));
    }
}

pub fn run(command: &Command, g: &Global, report: &mut Report) -> Result<()> {
    match command {
        Command::Validate { algebra } => {
            let l = load_algebra(algebra, g)?;
            let v = l.validate();
            let checked = plural(v.triples_checked, "triple");
            match v.defect {
                None => report.line("jacobi", format!("Jacobi OK ({checked} checked)")),
                Some(TableDefect::Jacobi { i, j, k }) => report.fail(
                    "jacobi",
                    format!("Jacobi FAIL witness=({}, {}, {}) ({checked} checked)", i + 1, j + 1, k + 1),
                ),
                Some(d) => report.fail("jacobi", format!("table FAIL {d:?}")),
            }
        }
        Command::Series { algebra, kind } => {
            let l = load_algebra(algebra, g)?;
            if matches!(kind, SeriesChoice::LowerCentral | SeriesChoice::Both) {
                report.line("lower_central", series(&l, SeriesKind::LowerCentral));
            }
            if matches!(kind, SeriesChoice::Derived | SeriesChoice::Both) {
                report.line("derived", series(&l, SeriesKind::Derived));
            }
        }
        Command::Centroid { algebra } => {
            let l = load_algebra(algebra, g)?;
            let c = centroid(&l, g.seed);
            report.line("dim", format!("centroid dim: {}", c.dim()));
            report.line("identity", format!("contains identity: {}", yes_no(c.contains_identity)));
            report.line(
                "closed",
                format!("closed under multiplication: {}", yes_no(c.closed_under_multiplication)),
            );
            report.line("commutative", format!("commutative: {}", yes_no(c.commutative)));
            report.line(
                "invertible",
                format!("every nonzero element invertible: {}", yes_no(c.every_nonzero_invertible)),
            );
            report.line("is_field", format!("is a field: {}", yes_no(c.is_field())));
            for (i, b) in c.basis.iter().enumerate() {
                report.line("basis", format!("basis {}: {}", i + 1, matrix(b)));
            }
        }
        Command::Centralizer { algebra, x } => {
            let l = load_algebra(algebra, g)?;
            let x = x
                .split(',')
                .map(|s| parse_element(l.field(), s))
                .collect::<Result<Vec<_>>>()?;
            if x.len() != l.dim() {
                return Err(Error::Parse(format!("vector of length {}, expected {}", x.len(), l.dim())));
            }
            let c = centralizer(&l, &x);
            report.line("dim", format!("centralizer dim: {}", c.dim()));
            report.line("basis", format!("basis: {}", vectors(&c.basis_vectors())));
        }
        Command::Center { algebra } => {
            let l = load_algebra(algebra, g)?;
            let c = center(&l);
            report.line("dim", format!("center dim: {}", c.dim()));
            report.line("basis", format!("basis: {}", vectors(&c.basis_vectors())));
        }
        Command::Tensor { algebra, minpoly } => {
            let l = load_rational(algebra, g)?;
            let field = parse_field(minpoly, g)?;
            let t = tensor_product(&field, &l);
            field_line(report, &field);
            report.line("dim_l", format!("dim_Q L = {}", l.dim()));
            report.line("dim_e", format!("dim_E E (x) L = {}", t.dim()));
            report.line("dim_q", format!("dim_Q E (x) L = {}", t.restricted_dim()));
            report.line("one_tensor", format!("dim_Q 1 (x) L = {}", t.one_tensor_l().dim()));
            let v = t.algebra().validate();
            if v.passed() {
                report.line("jacobi", format!("Jacobi OK ({} checked)", plural(v.triples_checked, "triple")));
            } else {
                report.fail("jacobi", "Jacobi FAIL");
            }
        }
        Command::Entangled { algebra, minpoly, ideal } => {
            let l = load_rational(algebra, g)?;
            let field = parse_field(minpoly, g)?;
            let t = tensor_product(&field, &l);
            let n = load_subspace(ideal, &field, t.dim())?;
            field_line(report, &field);
            report.line("dim", format!("dim_E N = {}", n.dim()));
            match t.entanglement_witness(&n)? {
                None => report.line("entangled", "entangled: yes"),
                Some(a) => report.fail("entangled", format!("entangled: no witness=1 (x) {}", vector(&a))),
            }
        }
        Command::Complete(args) => {
            let built = build_completion(args, g)?;
            let k = &built.completion;
            field_line(report, k.field());
            if let Some(twist) = &built.twisted {
                report.line(
                    "twist",
                    format!(
                        "twist: dim_Q I = {}, sigma(t) = {}",
                        twist.ideal().dim(),
                        twist.sigma().image_of_generator()
                    ),
                );
            }
            report.line("dim_l", format!("dim_Q L = {}", k.source().dim()));
            report.line("dim_tensor", format!("dim_E E (x) L = {}", k.tensor().dim()));
            report.line("dim_n", format!("dim_E N = {}", k.kernel().dim()));
            report.line("dim_k", format!("dim_E K = {}", k.dim()));
            report.line("embedding", "embedding injective: yes");
            bracket_lines(report, k.algebra());
            if let Some(path) = &args.write {
                let file = CompletionFile::of(k).with_structure();
                fs::write(path, to_json(&file) + "\n")
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                report.line("written", format!("wrote {}", path.display()));
            }
        }
        Command::VerifyAction { algebra, twist } => {
            let l = load_algebra(algebra, g)?;
            let twist = load_twist(twist.as_deref(), &l)?;
            let k = twisted_completion(&l, &twist)?;
            let r = verify_scalar_action(&l, &twist, &k, g.seed)?;
            field_line(report, l.field());
            let n = k.source().dim();
            for x in &r.scalars {
                let bad: Vec<_> = r.failures.iter().filter(|f| &f.scalar == x).collect();
                if bad.is_empty() {
                    report.line("action", format!("x = {x}: {n} of {n} basis vectors OK"));
                }
                for f in bad {
                    report.fail(
                        "action",
                        format!(
                            "x = {x}: FAIL witness=(x, a_{}) lhs={} rhs={}",
                            f.basis + 1,
                            vector(&f.lhs),
                            vector(&f.rhs)
                        ),
                    );
                }
            }
            if r.surjective {
                report.line("surjective", "every coset is a-bar: yes");
            } else {
                report.fail("surjective", "every coset is a-bar: no");
            }
        }
        Command::Preserve(args) => {
            let built = build_completion(args, g)?;
            let r = preservation_check(&built.completion)?;
            field_line(report, built.completion.field());
            for cmp in [&r.lower_central, &r.derived] {
                let label = cmp.source.kind.label();
                report.line(label, format!("L: {}", cmp.source));
                report.line(label, format!("K: {}", cmp.completion));
                match cmp.mismatch {
                    None => report.line(label, format!("{label} terms of K = images of E (x) terms of L: yes")),
                    Some(i) => report.fail(label, format!("{label} terms of K = images of E (x) terms of L: FAIL at n = {i}")),
                }
                if cmp.source.class_or_length != cmp.completion.class_or_length {
                    report.fail(label, format!("{label}: class or length differs"));
                }
            }
        }
        Command::Prop1 { n, q } => {
            let q = q
                .as_deref()
                .map(|s| s.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
                .transpose()?;
            let r = prop1_construct(*n, q, g.samples as usize, g.seed, g.max_degree)?;
            field_line(report, &r.field);
            report.line("action", format!("action(t) = {}", matrix(&r.companion)));
            if r.annihilated {
                report.line("annihilated", "q(action(t)) = 0: yes");
            } else {
                report.fail("annihilated", "q(action(t)) = 0: no");
            }
            match &r.dependent {
                None => report.line(
                    "orbits",
                    format!("independent orbits: {} of {} samples", r.samples, r.samples),
                ),
                Some(v) => report.fail("orbits", format!("independent orbits: FAIL witness={}", vector(v))),
            }
            if r.one_dimensional() {
                report.line("dim_e", "dim_E = 1");
            }
        }
        Command::Bound { algebra } => {
            let l = load_algebra(algebra, g)?;
            let r = degree_bound(&l, g.samples as usize, g.seed)?;
            field_line(report, l.field());
            report.line("degree", format!("[E:Q] = {}", r.degree));
            let dims = |basis: bool| -> String {
                let ds: Vec<String> = r
                    .samples
                    .iter()
                    .filter(|s| s.basis == basis)
                    .map(|s| s.dim_q.to_string())
                    .collect();
                ds.join(",")
            };
            report.line("basis", format!("basis dim_Q C(x): {}", dims(true)));
            report.line("sampled", format!("sampled dim_Q C(x): {}", dims(false)));
            report.line(
                "min",
                format!("min sampled dim_Q C(x) = {} (upper bound for the minimum over L)", r.min_sampled()),
            );
            report.line("lemma", format!("[E:Q] <= dim_Q C(x) on all {}: yes", plural(r.samples.len(), "sample")));
        }
        Command::Potential { n, m, bound } => {
            let p = potential_dim_check(*n, *m, *bound)?;
            if p.feasible {
                report.line("potential", p.explanation);
            } else {
                report.fail("potential", p.explanation);
            }
        }
        Command::Axioms { structure, mode } => {
            let file: CompletionFile = read_json(&read(structure)?)?;
            let m = file.structure(g.max_degree).map_err(|e| match e {
                Error::Encoding(_) | Error::Parse(_) => e,
                other => Error::Encoding(other.to_string()),
            })?;
            let mode = match mode {
                ModeChoice::Structural => CheckMode::Structural,
                ModeChoice::Sampled => CheckMode::Sampled {
                    samples: g.samples as usize,
                    seed: g.seed,
                },
            };
            for v in check_axioms(&m, mode)? {
                if v.passed {
                    report.line("axiom", v);
                } else {
                    report.fail("axiom", v);
                }
            }
        }
        Command::Note => report.line("note", counterexample_note()),
    }
    Ok(())
}

pub struct Built {
    pub completion: Completion,
    pub twisted: Option<TwistData>,
}

fn load_twist(path: Option<&Path>, l: &ELieAlgebra) -> Result<TwistData> {
    match path {
        Some(p) => read_json::<TwistFile>(&read(p)?)?.build(l),
        None => Ok(TwistData::trivial(l)),
    }
}

fn build_completion(args: &CompletionArgs, g: &Global) -> Result<Built> {
    match &args.minpoly {
        Some(minpoly) => {
            let l = load_rational(&args.algebra, g)?;
            let field = parse_field(minpoly, g)?;
            let t = tensor_product(&field, &l);
            let n = match &args.ideal {
                Some(p) => load_subspace(p, &field, t.dim())?,
                None => Subspace::zero(t.dim()),
            };
            Ok(Built {
                completion: quotient_completion(&t, &n)?,
                twisted: None,
            })
        }
        None => {
            let l = load_algebra(&args.algebra, g)?;
            let twist = load_twist(args.twist.as_deref(), &l)?;
            Ok(Built {
                completion: twisted_completion(&l, &twist)?,
                twisted: Some(twist),
            })
        }
    }
}
