//! Seeded linear congruential generator used for every sampled check.
//!
//! `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`
//! (Knuth's MMIX constants); outputs are the high 32 bits of the new state.
//! The initial state is `seed ^ 0x5DEECE66D`. Changing any of this changes
//! every sampled report, so the parameters are part of the output contract.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::arith::NumberField;
use crate::scalar::{Rational, Scalar};

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;
const SEED_MASK: u64 = 0x5DEECE66D;

/// Coefficients of sampled elements are drawn from `-COEFF_RANGE..=COEFF_RANGE`.
pub const COEFF_RANGE: i64 = 5;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg {
            state: seed ^ SEED_MASK,
        }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish value in `0..n` (`n > 0`).
    pub fn below(&mut self, n: u32) -> u32 {
        self.next_u32() % n
    }

    /// Integer in `-range..=range`.
    pub fn small_int(&mut self, range: i64) -> i64 {
        self.below((2 * range + 1) as u32) as i64 - range
    }

    pub fn rational(&mut self) -> Rational {
        Rational::from_integer(BigInt::from(self.small_int(COEFF_RANGE)))
    }

    /// Element of `field` with small integer coordinates.
    pub fn scalar<T: Scalar>(&mut self, field: &Arc<NumberField>) -> T {
        let coords: Vec<Rational> = (0..field.degree()).map(|_| self.rational()).collect();
        T::from_coords(field, &coords)
    }

    pub fn vector<T: Scalar>(&mut self, field: &Arc<NumberField>, n: usize) -> Vec<T> {
        (0..n).map(|_| self.scalar(field)).collect()
    }

    /// Like [`Lcg::vector`] but never zero (for `n > 0`).
    pub fn nonzero_vector<T: Scalar>(&mut self, field: &Arc<NumberField>, n: usize) -> Vec<T> {
        loop {
            let v: Vec<T> = self.vector(field, n);
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    pub fn nonzero_scalar<T: Scalar>(&mut self, field: &Arc<NumberField>) -> T {
        loop {
            let x: T = self.scalar(field);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Lcg::new(0);
        let mut b = Lcg::new(0);
        let xs: Vec<u32> = (0..8).map(|_| a.next_u32()).collect();
        let ys: Vec<u32> = (0..8).map(|_| b.next_u32()).collect();
        assert_eq!(xs, ys);
        let mut c = Lcg::new(1);
        assert_ne!(xs[0], c.next_u32());
    }

    #[test]
    fn small_ints_stay_in_range() {
        let mut r = Lcg::new(7);
        for _ in 0..1000 {
            let x = r.small_int(3);
            assert!((-3..=3).contains(&x));
        }
    }

    #[test]
    fn first_outputs_are_pinned() {
        // any change here silently changes every sampled report
        let mut r = Lcg::new(0);
        let state = SEED_MASK.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        assert_eq!(r.next_u32(), (state >> 32) as u32);
    }
}
