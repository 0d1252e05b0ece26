//! Field automorphisms of `E = Q[t]/(q)`.
//!
//! An automorphism is fixed by the image of the generator, which must be a
//! root of `q` lying in `E`. Roots are found exactly:
//!
//! 1. rescale to the monic integer polynomial `q~` with root `mu = D*t`;
//! 2. bound the coordinates of any root `beta = sum c_i mu^i`: with `G` the
//!    trace form of the power basis, `c = G^{-1} (Tr(beta mu^j))_j`, the traces
//!    are integers bounded by `d * R^{j+1}` (`R` a Cauchy root bound), so
//!    `Delta * c_i` is an integer of absolute value at most `H`;
//! 3. pick a prime `p` not dividing `disc(q~)`, split `F_p[t]/(q~)` into
//!    fields with Berlekamp's algorithm and enumerate the roots of `q~` in each;
//! 4. Hensel-lift every combination to precision `p^e > 2H`, read off the
//!    balanced residues and keep the candidates that are exact roots.
//!
//! Every root of `q~` in `E` reduces to one of the enumerated combinations,
//! so the search is complete.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::irreducible::monic_integer_form;
use super::number_field::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Rational;

/// An automorphism `sigma` of a number field, determined by `sigma(t)`.
#[derive(Clone, Debug)]
pub struct FieldAutomorphism {
    field: Arc<NumberField>,
    image: FieldElement,
    powers: Vec<FieldElement>,
}

impl FieldAutomorphism {
    /// Validates that `image` is a root of the minimal polynomial whose powers
    /// span the field.
    pub fn new(field: &Arc<NumberField>, image: FieldElement) -> Result<Self> {
        if let Some(f) = image.field() {
            if !NumberField::same_field(f, field) {
                return Err(Error::FieldMismatch);
            }
        }
        let image = image.in_field(field);
        let value = field
            .minpoly()
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| &(&acc * &image) + &field.from_rational(c.clone()));
        if !value.is_zero() {
            return Err(Error::InvalidAutomorphism(format!(
                "{image} is not a root of the minimal polynomial"
            )));
        }
        let d = field.degree();
        let mut powers = Vec::with_capacity(d);
        let mut acc = field.one();
        for _ in 0..d {
            powers.push(acc.clone());
            acc = &acc * &image;
        }
        let aut = FieldAutomorphism {
            field: field.clone(),
            image,
            powers,
        };
        if aut.matrix().rank() != d {
            return Err(Error::InvalidAutomorphism(format!(
                "{} does not generate the field",
                aut.image
            )));
        }
        Ok(aut)
    }

    pub fn identity(field: &Arc<NumberField>) -> Self {
        let d = field.degree();
        FieldAutomorphism {
            field: field.clone(),
            image: field.generator(),
            powers: (0..d).map(|i| field.power_basis(i)).collect(),
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn image_of_generator(&self) -> &FieldElement {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.field.generator()
    }

    /// `sum coeffs[i] * sigma(t)^i`.
    pub fn apply(&self, a: &FieldElement) -> Result<FieldElement> {
        if let Some(f) = a.field() {
            if !NumberField::same_field(f, &self.field) {
                return Err(Error::FieldMismatch);
            }
        }
        let d = self.field.degree();
        let mut out = self.field.zero();
        for (c, p) in a.coords(d).iter().zip(&self.powers) {
            if !c.is_zero() {
                out = &out + &p.scale(c);
            }
        }
        Ok(out)
    }

    /// Rational matrix of `sigma` on the power basis (column `s` is `sigma(t^s)`).
    pub fn matrix(&self) -> Matrix<Rational> {
        let d = self.field.degree();
        let columns: Vec<Vec<Rational>> = self.powers.iter().map(|p| p.coords(d)).collect();
        Matrix::from_columns(&columns, d).expect("d columns of length d")
    }
}

impl PartialEq for FieldAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        NumberField::same_field(&self.field, &other.field) && self.image == other.image
    }
}

pub fn apply_automorphism(sigma: &FieldAutomorphism, a: &FieldElement) -> Result<FieldElement> {
    sigma.apply(a)
}

/// All automorphisms of `field`, identity first, the rest ordered by the
/// coordinates of the image of the generator.
pub fn field_automorphisms(field: &Arc<NumberField>) -> Result<Vec<FieldAutomorphism>> {
    let mut out = vec![FieldAutomorphism::identity(field)];
    if field.degree() == 1 {
        return Ok(out);
    }
    let mut others: Vec<FieldAutomorphism> = roots_in_field(field)?
        .into_iter()
        .filter_map(|r| FieldAutomorphism::new(field, r).ok())
        .filter(|a| !a.is_identity())
        .collect();
    let d = field.degree();
    others.sort_by(|a, b| a.image.coords(d).cmp(&b.image.coords(d)));
    others.dedup();
    out.extend(others);
    Ok(out)
}

const ENUMERATION_LIMIT: u64 = 400_000;
const COMBINATION_LIMIT: u64 = 50_000;
const PRIMES_TRIED: usize = 60;
const PRIMES_COMPARED: usize = 12;

/// Roots of the minimal polynomial that lie in the field.
fn roots_in_field(field: &Arc<NumberField>) -> Result<Vec<FieldElement>> {
    let q = field.minpoly();
    let d = field.degree();
    let scale = q
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let qt = monic_integer_form(q);

    let sums = power_sums(&qt, 2 * d - 1);
    let gram = Matrix::from_fn(d, d, |i, j| Rational::from_integer(sums[i + j].clone()));
    let disc = gram
        .determinant()
        .expect("square")
        .to_integer();
    let gram_inv = gram
        .inverse()
        .ok_or_else(|| Error::InternalInvariantViolation("minimal polynomial is not separable".into()))?;
    let delta = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .fold(BigInt::one(), |acc, (i, j)| acc.lcm(gram_inv.get(i, j).denom()));
    let cauchy = BigInt::one()
        + qt[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
    let mut height = Rational::zero();
    for i in 0..d {
        let mut row = Rational::zero();
        let mut r_pow = cauchy.clone();
        for j in 0..d {
            row += gram_inv.get(i, j).abs() * Rational::from_integer(&r_pow * BigInt::from(d));
            r_pow *= &cauchy;
        }
        let scaled = row * Rational::from_integer(delta.clone());
        if scaled > height {
            height = scaled;
        }
    }
    let height = height.ceil().to_integer();
    let needed = &height * 2 + 1;

    let plan = choose_prime(&qt, &disc)?;
    let p = plan.p;
    let qbar: Vec<u64> = qt.iter().map(|c| reduce_mod(c, p)).collect();

    // CRT idempotents of F_p[t]/(qbar)
    let idempotents: Vec<Vec<u64>> = plan
        .factors
        .iter()
        .map(|f| {
            let cofactor = fp::divrem(&qbar, f, p).0;
            let (_, s, _) = fp::xgcd(&fp::rem(&cofactor, f, p), f, p);
            fp::rem(&fp::mul(&cofactor, &s, p), &qbar, p)
        })
        .collect();

    let mut roots = Vec::new();
    let mut choice = vec![0usize; plan.roots.len()];
    loop {
        let mut beta = Vec::new();
        for (k, &c) in choice.iter().enumerate() {
            let term = fp::mul(&idempotents[k], &plan.roots[k][c], p);
            beta = fp::add(&beta, &term, p);
        }
        let beta = fp::rem(&beta, &qbar, p);
        if let Some(coords) = lift_and_reconstruct(&qt, &qbar, &beta, p, &needed, &delta, &height) {
            // beta~ = sum c_i mu^i and sigma(t) = beta~ / D with mu^i = D^i t^i
            let image: Vec<Rational> = coords
                .into_iter()
                .enumerate()
                .map(|(i, c)| {
                    let factor = Rational::from_integer(num_traits::pow(scale.clone(), i))
                        / Rational::from_integer(scale.clone());
                    c * factor
                })
                .collect();
            roots.push(FieldElement::from_poly(field, image));
        }
        // odometer over component roots
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(roots);
            }
            choice[k] += 1;
            if choice[k] < plan.roots[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

struct PrimePlan {
    p: u64,
    factors: Vec<Vec<u64>>,
    roots: Vec<Vec<Vec<u64>>>,
}

fn choose_prime(qt: &[BigInt], disc: &BigInt) -> Result<PrimePlan> {
    let mut candidates = Vec::new();
    for p in small_primes(20_000) {
        if candidates.len() == PRIMES_TRIED {
            break;
        }
        if (disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let qbar: Vec<u64> = qt.iter().map(|c| reduce_mod(c, p)).collect();
        let cost: u64 = fp::factor_degrees(&qbar, p)
            .into_iter()
            .map(|k| p.saturating_pow(k as u32))
            .fold(0u64, |a, b| a.saturating_add(b));
        if cost <= ENUMERATION_LIMIT {
            candidates.push((cost, p));
        }
    }
    candidates.sort_unstable();
    let mut best: Option<(u64, PrimePlan)> = None;
    for (_, p) in candidates.into_iter().take(PRIMES_COMPARED) {
        let qbar: Vec<u64> = qt.iter().map(|c| reduce_mod(c, p)).collect();
        let factors = fp::berlekamp(&qbar, p);
        let roots: Vec<Vec<Vec<u64>>> = factors
            .iter()
            .map(|f| fp::roots_in_residue_field(&qbar, f, p))
            .collect();
        let combos = roots
            .iter()
            .fold(1u64, |acc, r| acc.saturating_mul(r.len() as u64));
        if combos == 0 || combos > COMBINATION_LIMIT {
            continue;
        }
        if best.as_ref().map_or(true, |(c, _)| combos < *c) {
            best = Some((combos, PrimePlan { p, factors, roots }));
        }
    }
    if let Some((_, plan)) = best {
        return Ok(plan);
    }
    Err(Error::Unsupported(
        "no small prime gives a tractable root search for this minimal polynomial".into(),
    ))
}

/// Newton power sums `s_0 .. s_{count-1}` of the roots of the monic integer polynomial `q`.
fn power_sums(q: &[BigInt], count: usize) -> Vec<BigInt> {
    let n = q.len() - 1;
    let coeff = |i: usize| q[i].clone(); // coefficient of t^i
    let mut s = vec![BigInt::from(n)];
    for k in 1..count {
        let mut acc = BigInt::zero();
        if k <= n {
            acc -= BigInt::from(k) * coeff(n - k);
            for i in 1..k {
                acc -= coeff(n - i) * &s[k - i];
            }
        } else {
            for i in 1..=n {
                acc -= coeff(n - i) * &s[k - i];
            }
        }
        s.push(acc);
    }
    s
}

fn reduce_mod(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// Lifts a root of `qbar` in `F_p[t]/(qbar)` to precision `> needed` and
/// returns its rational coordinates if they fit the height bound.
fn lift_and_reconstruct(
    qt: &[BigInt],
    qbar: &[u64],
    beta0: &[u64],
    p: u64,
    needed: &BigInt,
    delta: &BigInt,
    height: &BigInt,
) -> Option<Vec<Rational>> {
    let d = qt.len() - 1;
    let deriv_bar = fp::eval_in_quotient(&fp::derivative(qbar, p), beta0, qbar, p);
    let (g, inv0, _) = fp::xgcd(&deriv_bar, qbar, p);
    if g != [1] {
        return None;
    }
    let deriv: Vec<BigInt> = qt
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let to_big = |v: &[u64]| -> Vec<BigInt> {
        let mut out: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        out.resize(d, BigInt::zero());
        out
    };
    let mut modulus = BigInt::from(p);
    let mut beta = to_big(beta0);
    let mut inv = to_big(&inv0);
    while &modulus <= needed {
        modulus = &modulus * &modulus;
        let ring = ZpRing { q: qt, modulus: &modulus };
        let value = ring.eval(qt, &beta);
        beta = ring.sub(&beta, &ring.mul(&value, &inv));
        let slope = ring.eval(&deriv, &beta);
        let mut two = vec![BigInt::zero(); d];
        two[0] = BigInt::from(2);
        inv = ring.mul(&inv, &ring.sub(&two, &ring.mul(&slope, &inv)));
    }
    let half = &modulus / 2;
    let mut coords = Vec::with_capacity(d);
    for b in &beta {
        let mut m = (b * delta).mod_floor(&modulus);
        if m > half {
            m -= &modulus;
        }
        if m.abs() > *height {
            return None;
        }
        coords.push(Rational::new(m, delta.clone()));
    }
    Some(coords)
}

/// `(Z/M)[t]/(q)` for a monic integer `q`.
struct ZpRing<'a> {
    q: &'a [BigInt],
    modulus: &'a BigInt,
}

impl ZpRing<'_> {
    fn d(&self) -> usize {
        self.q.len() - 1
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).mod_floor(self.modulus))
            .collect()
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.d();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                prod[k - d + i] -= &c * &self.q[i];
            }
        }
        prod.truncate(d);
        prod.into_iter().map(|x| x.mod_floor(self.modulus)).collect()
    }

    /// Evaluates the integer polynomial `f` at `x`.
    fn eval(&self, f: &[BigInt], x: &[BigInt]) -> Vec<BigInt> {
        let d = self.d();
        let mut acc = vec![BigInt::zero(); d];
        for c in f.iter().rev() {
            acc = self.mul(&acc, x);
            acc[0] = (&acc[0] + c).mod_floor(self.modulus);
        }
        acc
    }
}

fn small_primes(limit: u64) -> impl Iterator<Item = u64> {
    let mut sieve = vec![true; limit as usize + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= limit as usize {
        if sieve[i] {
            let mut j = i * i;
            while j <= limit as usize {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .into_iter()
        .enumerate()
        .filter(|&(_, is_prime)| is_prime)
        .map(|(n, _)| n as u64)
}

/// Dense polynomials over `F_p` (ascending, trimmed), `p < 2^31`.
mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        acc
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        let mut rem = trim(a.to_vec());
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let mut quot = vec![0u64; rem.len() - db];
        while rem.len() > db {
            let top = rem.len() - 1;
            let c = rem[top] * lead_inv % p;
            let shift = top - db;
            for (j, &bj) in b.iter().enumerate() {
                rem[shift + j] = (rem[shift + j] + p - c * bj % p) % p;
            }
            quot[shift] = c;
            rem = trim(rem);
        }
        (trim(quot), rem)
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        divrem(a, b, p).1
    }

    fn monic(a: &[u64], p: u64) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => {
                let li = inv(lead, p);
                a.iter().map(|&c| c * li % p).collect()
            }
        }
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    /// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s2 = sub(&s0, &mul(&q, &s1, p), p);
            let t2 = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.last() {
            None => (r0, s0, t0),
            Some(&lead) => {
                let li = inv(lead, p);
                let sc = |v: Vec<u64>| trim(v.into_iter().map(|c| c * li % p).collect());
                (sc(r0), sc(s0), sc(t0))
            }
        }
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % p) * c % p)
                .collect(),
        )
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), m, p)
    }

    /// `f(x) mod m`.
    pub fn eval_in_quotient(f: &[u64], x: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut acc: Vec<u64> = Vec::new();
        for &c in f.iter().rev() {
            acc = mulmod(&acc, x, m, p);
            acc = add(&acc, &[c], p);
        }
        acc
    }

    fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        acc
    }

    /// Degrees of the irreducible factors of a monic squarefree `f`
    /// (distinct-degree factorisation).
    pub fn factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
        let mut degrees = Vec::new();
        let mut rest = f.to_vec();
        let mut frob = vec![0u64, 1];
        let mut k = 0;
        while rest.len() > 1 {
            k += 1;
            if 2 * k > rest.len() - 1 {
                degrees.push(rest.len() - 1);
                break;
            }
            frob = powmod(&frob, p, &rest, p);
            let g = gcd(&rest, &sub(&frob, &[0, 1], p), p);
            if g.len() > 1 {
                degrees.extend(std::iter::repeat(k).take((g.len() - 1) / k));
                rest = divrem(&rest, &g, p).0;
                frob = rem(&frob, &rest, p);
            }
        }
        degrees
    }

    /// Basis of the kernel of a `rows x cols` matrix over `F_p`.
    fn kernel(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let li = inv(m[r][c], p);
            for x in m[r].iter_mut() {
                *x = *x * li % p;
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][free]) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// Monic irreducible factors of a monic squarefree `f` (Berlekamp).
    pub fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        let xp = powmod(&[0, 1], p, f, p);
        let mut q_rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            q_rows.push(row);
            cur = mulmod(&cur, &xp, f, p);
        }
        // v is fixed by Frobenius: sum_i v_i Q[i][j] = v_j
        let system: Vec<Vec<u64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let delta = u64::from(i == j);
                        (q_rows[i][j] + p - delta) % p
                    })
                    .collect()
            })
            .collect();
        let fixed = kernel(system, n, p);
        let count = fixed.len();
        let mut factors = vec![f.to_vec()];
        for v in fixed.iter().map(|v| trim(v.clone())) {
            if factors.len() == count {
                break;
            }
            if v.len() <= 1 {
                continue;
            }
            let mut next = Vec::new();
            for g in factors {
                if g.len() <= 2 {
                    next.push(g);
                    continue;
                }
                let mut pending = vec![g];
                for s in 0..p {
                    let mut split = Vec::new();
                    for h in pending {
                        let shifted = sub(&v, &[s], p);
                        let c = gcd(&h, &shifted, p);
                        if c.len() > 1 && c.len() < h.len() {
                            let other = monic(&divrem(&h, &c, p).0, p);
                            split.push(c);
                            split.push(other);
                        } else {
                            split.push(h);
                        }
                    }
                    pending = split;
                }
                next.extend(pending);
            }
            factors = next;
        }
        factors.sort();
        factors
    }

    /// Roots of `q` in `F_p[t]/(f)` for irreducible `f`, by enumeration.
    pub fn roots_in_residue_field(q: &[u64], f: &[u64], p: u64) -> Vec<Vec<u64>> {
        let k = f.len() - 1;
        let mut roots = Vec::new();
        let mut x = vec![0u64; k];
        loop {
            let xt = trim(x.clone());
            if eval_in_quotient(q, &xt, f, p).is_empty() {
                roots.push(xt);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return roots;
                }
                x[i] += 1;
                if x[i] < p {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};

    fn field(cs: &[i64]) -> Arc<NumberField> {
        NumberField::new(cs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn rationals_have_only_identity() {
        let q = NumberField::rationals();
        let auts = field_automorphisms(&q).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn sqrt2_has_conjugation() {
        let f = field(&[-2, 0, 1]);
        let auts = field_automorphisms(&f).unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts[0].is_identity());
        assert_eq!(
            auts[1].image_of_generator(),
            &f.element(vec![rat(0), rat(-1)]).unwrap()
        );
    }

    #[test]
    fn cube_root_of_two_is_rigid() {
        let f = field(&[-2, 0, 0, 1]);
        let auts = field_automorphisms(&f).unwrap();
        assert_eq!(auts.len(), 1);
    }

    #[test]
    fn conjugation_values() {
        let f = field(&[-2, 0, 1]);
        let conj = &field_automorphisms(&f).unwrap()[1];
        let a = f.element(vec![rat(1), rat(1)]).unwrap();
        assert_eq!(apply_automorphism(conj, &a).unwrap(), f.element(vec![rat(1), rat(-1)]).unwrap());
        let id = FieldAutomorphism::identity(&f);
        assert_eq!(apply_automorphism(&id, &a).unwrap(), a);
        let b = f.element(vec![rat(3), rat(1)]).unwrap();
        let prod = &a * &b;
        assert_eq!(prod, f.element(vec![rat(5), rat(4)]).unwrap());
        assert_eq!(
            conj.apply(&prod).unwrap(),
            &conj.apply(&a).unwrap() * &conj.apply(&b).unwrap()
        );
    }

    #[test]
    fn cyclotomic_fields_are_galois() {
        // Q(zeta_5): t^4 + t^3 + t^2 + t + 1
        assert_eq!(field_automorphisms(&field(&[1, 1, 1, 1, 1])).unwrap().len(), 4);
        // Q(zeta_8): t^4 + 1
        assert_eq!(field_automorphisms(&field(&[1, 0, 0, 0, 1])).unwrap().len(), 4);
        // Q(zeta_7): degree 6, cyclic
        assert_eq!(
            field_automorphisms(&field(&[1, 1, 1, 1, 1, 1, 1])).unwrap().len(),
            6
        );
    }

    #[test]
    fn biquadratic_and_rational_coefficients() {
        // Q(sqrt2 + sqrt3)
        assert_eq!(field_automorphisms(&field(&[1, 0, -10, 0, 1])).unwrap().len(), 4);
        // t^2 - 1/2 has roots +-t
        let f = NumberField::new(vec![frac(-1, 2), rat(0), rat(1)]).unwrap();
        assert_eq!(field_automorphisms(&f).unwrap().len(), 2);
        // t^2 + t/3 + 1/5: the other root is -1/3 - t
        let g = NumberField::new(vec![frac(1, 5), frac(1, 3), rat(1)]).unwrap();
        let auts = field_automorphisms(&g).unwrap();
        assert_eq!(auts.len(), 2);
        assert_eq!(
            auts[1].image_of_generator(),
            &g.element(vec![frac(-1, 3), rat(-1)]).unwrap()
        );
    }

    #[test]
    fn factorisations_mod_p_agree() {
        // t^8 + 1 and t^6 + t^5 + ... + 1 modulo a range of primes
        let polys: [&[u64]; 2] = [&[1, 0, 0, 0, 0, 0, 0, 0, 1], &[1, 1, 1, 1, 1, 1, 1]];
        for f in polys {
            for p in [3u64, 5, 11, 13, 17, 29, 43, 97] {
                let f: Vec<u64> = f.iter().map(|c| c % p).collect();
                let factors = fp::berlekamp(&f, p);
                let mut from_berlekamp: Vec<usize> = factors.iter().map(|g| g.len() - 1).collect();
                from_berlekamp.sort();
                let mut distinct = fp::factor_degrees(&f, p);
                distinct.sort();
                assert_eq!(from_berlekamp, distinct, "p = {p}");
                let product = factors.iter().fold(vec![1u64], |acc, g| fp::mul(&acc, g, p));
                assert_eq!(product, f);
            }
        }
    }

    #[test]
    fn invalid_images_are_rejected() {
        let f = field(&[-2, 0, 1]);
        assert!(FieldAutomorphism::new(&f, f.element(vec![rat(1), rat(1)]).unwrap()).is_err());
        let g = field(&[-2, 0, 0, 1]);
        assert!(FieldAutomorphism::new(&f, g.generator()).is_err());
    }

    #[test]
    fn degree_eight_fields() {
        // t^8 - 2: only t -> +-t are real roots in the field
        let mut cs = vec![-2];
        cs.extend([0; 7]);
        cs.push(1);
        assert_eq!(field_automorphisms(&field(&cs)).unwrap().len(), 2);
        // Q(zeta_16): t^8 + 1, abelian of order 8
        let mut cs = vec![1];
        cs.extend([0; 7]);
        cs.push(1);
        assert_eq!(field_automorphisms(&field(&cs)).unwrap().len(), 8);
    }
}
