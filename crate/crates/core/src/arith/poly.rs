//! Dense univariate polynomials over Q, coefficients in ascending degree.
//!
//! A polynomial is a plain `Vec<Rational>` kept trimmed (no trailing zeros);
//! the zero polynomial is the empty vector.

use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

pub type QPoly = Vec<Rational>;

pub fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn trimmed(mut p: QPoly) -> QPoly {
    trim(&mut p);
    p
}

/// Degree of a trimmed polynomial; `None` for zero.
pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(x + y);
    }
    trimmed(out)
}

pub fn neg(a: &[Rational]) -> QPoly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    add(a, &neg(b))
}

pub fn scale(a: &[Rational], s: &Rational) -> QPoly {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * s).collect()
}

pub fn mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`. Panics if `b` is zero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = b[db].recip();
    let mut rem: QPoly = trimmed(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    (trimmed(quot), rem)
}

pub fn rem(a: &[Rational], b: &[Rational]) -> QPoly {
    divrem(a, b).1
}

pub fn make_monic(p: &[Rational]) -> QPoly {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let inv = p[d].recip();
            p[..=d].iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic gcd.
pub fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut x = trimmed(a.to_vec());
    let mut y = trimmed(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn xgcd(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (trimmed(a.to_vec()), trimmed(b.to_vec()));
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = r0[d].recip();
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Rational]) -> QPoly {
    trimmed(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
            .collect(),
    )
}

/// Renders a polynomial in ascending degree in the variable `var`, e.g. `-2 + t^2`.
pub fn render(p: &[Rational], var: &str) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let body = if i == 0 {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        terms.push((negative, body));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (negative, body)) in terms.into_iter().enumerate() {
        match (k, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}
