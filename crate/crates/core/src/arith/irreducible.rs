//! Irreducibility over Q by bounded search for integer factors.
//!
//! A monic rational polynomial is rescaled to a monic integer polynomial
//! (substituting `t = s/D` for the common denominator `D`). By Gauss's lemma
//! any factorisation can then be taken monic with integer coefficients, and
//! every coefficient of a degree-`k` factor is bounded by
//! `binom(k, j) * ||p||_2` (Mignotte). All candidate factors of degree up to
//! `n/2` inside that box are tried by exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::poly;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Upper limit on candidate factors examined before giving up.
const SEARCH_LIMIT: u128 = 200_000_000;

/// Returns `true` iff the monic polynomial `p` (ascending coefficients) has no
/// factorisation over Q into factors of degree at least one.
pub fn check_irreducible(p: &[Rational], max_degree: usize) -> Result<bool> {
    let p = poly::trimmed(p.to_vec());
    let n = poly::degree(&p).ok_or(Error::ConstantPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p[n].is_one() {
        return Err(Error::NotMonic);
    }
    if n > max_degree {
        return Err(Error::DegreeTooLarge {
            degree: n,
            max: max_degree,
        });
    }
    if n == 1 {
        return Ok(true);
    }
    let ints = monic_integer_form(&p);
    let small: Vec<i128> = ints
        .iter()
        .map(|c| {
            c.to_i128().ok_or_else(|| {
                Error::Unsupported("coefficients too large for bounded factor search".into())
            })
        })
        .collect::<Result<_>>()?;
    if small[0] == 0 {
        return Ok(false);
    }
    for k in 1..=n / 2 {
        if find_factor(&small, k)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D^n p(s/D)` for the least common denominator `D`: a monic integer polynomial.
pub fn monic_integer_form(p: &[Rational]) -> Vec<BigInt> {
    let n = p.len() - 1;
    let den = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out = Vec::with_capacity(n + 1);
    for (i, c) in p.iter().enumerate() {
        let scaled = c * Rational::from_integer(num_traits::pow(den.clone(), n - i));
        debug_assert!(scaled.is_integer());
        out.push(scaled.to_integer());
    }
    out
}

/// Searches for a monic integer factor of degree `k` of the monic integer
/// polynomial `p`; returns its coefficients (ascending, including the leading 1).
pub fn find_factor(p: &[i128], k: usize) -> Result<Option<Vec<i128>>> {
    let n = p.len() - 1;
    assert!(k >= 1 && k < n);
    let norm_sq: u128 = p
        .iter()
        .try_fold(0u128, |acc, &c| {
            c.unsigned_abs()
                .checked_mul(c.unsigned_abs())
                .and_then(|sq| acc.checked_add(sq))
        })
        .ok_or_else(|| Error::Unsupported("coefficient norm overflows".into()))?;
    let norm = ceil_sqrt(norm_sq);
    let bounds: Vec<u128> = (0..k)
        .map(|j| binomial(k, j).saturating_mul(norm))
        .collect();

    let a0 = p[0].unsigned_abs();
    let max_const = bounds[0].min(a0);
    if max_const > 10_000_000 {
        return Err(Error::Unsupported(
            "constant term too large for bounded factor search".into(),
        ));
    }
    let mut constants: Vec<i128> = Vec::new();
    for d in 1..=max_const {
        if a0 % d == 0 {
            constants.push(d as i128);
            constants.push(-(d as i128));
        }
    }
    let mut count: u128 = constants.len() as u128;
    for b in &bounds[1..] {
        count = count.saturating_mul(2 * b + 1);
    }
    if count > SEARCH_LIMIT {
        return Err(Error::Unsupported(format!(
            "bounded factor search for degree-{k} factors needs {count} candidates"
        )));
    }

    // Values of p at a few small points; any factor's value must divide them.
    let probes: Vec<(i128, i128)> = [1i128, -1, 2, -2]
        .iter()
        .map(|&x| (x, eval_i128(p, x)))
        .collect();
    for &(x, v) in &probes {
        if v == 0 && k == 1 {
            return Ok(Some(vec![-x, 1]));
        }
    }

    let mut g = vec![0i128; k + 1];
    g[k] = 1;
    let mut found = None;
    search(p, &bounds, &constants, &probes, &mut g, k, &mut found);
    Ok(found)
}

fn search(
    p: &[i128],
    bounds: &[u128],
    constants: &[i128],
    probes: &[(i128, i128)],
    g: &mut Vec<i128>,
    j: usize,
    found: &mut Option<Vec<i128>>,
) {
    if found.is_some() {
        return;
    }
    if j == 1 {
        for &c in constants {
            g[0] = c;
            if probes
                .iter()
                .all(|&(x, v)| v == 0 || divides(eval_i128(g, x), v))
                && exact_divides(g, p)
            {
                *found = Some(g.clone());
                return;
            }
        }
        return;
    }
    let idx = j - 1;
    let b = bounds[idx] as i128;
    for c in -b..=b {
        g[idx] = c;
        search(p, bounds, constants, probes, g, j - 1, found);
        if found.is_some() {
            return;
        }
    }
}

fn divides(d: i128, v: i128) -> bool {
    d != 0 && v % d == 0
}

fn eval_i128(p: &[i128], x: i128) -> i128 {
    p.iter().rev().fold(0i128, |acc, &c| acc * x + c)
}

/// Whether the monic `g` divides `p` over Z; overflow means it cannot.
fn exact_divides(g: &[i128], p: &[i128]) -> bool {
    let k = g.len() - 1;
    let mut rem = p.to_vec();
    let n = rem.len() - 1;
    for top in (k..=n).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for (j, &gj) in g.iter().enumerate() {
            let Some(prod) = c.checked_mul(gj) else {
                return false;
            };
            let Some(v) = rem[top - k + j].checked_sub(prod) else {
                return false;
            };
            rem[top - k + j] = v;
        }
    }
    rem[..k].iter().all(|&c| c == 0)
}

fn ceil_sqrt(x: u128) -> u128 {
    if x == 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while r * r < x {
        r += 1;
    }
    r
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};

    fn p(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn spec_examples() {
        assert!(check_irreducible(&p(&[-2, 0, 1]), 8).unwrap());
        assert!(!check_irreducible(&p(&[-1, 0, 1]), 8).unwrap());
        assert!(check_irreducible(&p(&[-1, -1, 0, 1]), 8).unwrap());
    }

    #[test]
    fn degree_cap() {
        let mut q = vec![rat(-2)];
        q.extend(std::iter::repeat(rat(0)).take(8));
        q.push(rat(1));
        assert_eq!(
            check_irreducible(&q, 8),
            Err(Error::DegreeTooLarge { degree: 9, max: 8 })
        );
    }

    #[test]
    fn quartic_without_roots_can_still_split() {
        // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
        assert!(!check_irreducible(&p(&[4, 0, 0, 0, 1]), 8).unwrap());
        // t^4 - 10t^2 + 1 is the minimal polynomial of sqrt2 + sqrt3
        assert!(check_irreducible(&p(&[1, 0, -10, 0, 1]), 8).unwrap());
    }

    #[test]
    fn rational_coefficients() {
        // t^2 - 1/4 = (t - 1/2)(t + 1/2)
        assert!(!check_irreducible(&[frac(-1, 4), rat(0), rat(1)], 8).unwrap());
        // t^2 - 1/2 is irreducible
        assert!(check_irreducible(&[frac(-1, 2), rat(0), rat(1)], 8).unwrap());
    }

    #[test]
    fn eisenstein_family_up_to_eight() {
        for n in 1..=8 {
            let mut q = vec![rat(-2)];
            q.extend(std::iter::repeat(rat(0)).take(n - 1));
            q.push(rat(1));
            assert!(check_irreducible(&q, 8).unwrap(), "t^{n} - 2");
        }
    }

    #[test]
    fn zero_constant_term_is_reducible() {
        assert!(!check_irreducible(&p(&[0, 1, 1]), 8).unwrap());
    }
}
