//! The scalar abstraction shared by the linear-algebra and Lie-algebra layers.
//!
//! Every algorithm above this module is written once against [`Scalar`] and
//! instantiated for [`Rational`] (the field Q) and for [`FieldElement`]
//! (elements of a number field). Only exact fields implement the trait: all
//! pivoting decisions are exact zero tests.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{FieldElement, NumberField};

pub type Rational = num_rational::BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Embeds a rational number.
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// The element with power-basis coordinates `coords` in `field`.
    /// Rationals read only the first coordinate.
    fn from_coords(field: &Arc<NumberField>, coords: &[Rational]) -> Self;

    /// Power-basis coordinates, padded to `degree`.
    fn to_coords(&self, degree: usize) -> Vec<Rational>;
}

impl Scalar for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn from_coords(_field: &Arc<NumberField>, coords: &[Rational]) -> Self {
        coords.first().cloned().unwrap_or_else(Rational::zero)
    }

    fn to_coords(&self, degree: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); degree.max(1)];
        out[0] = self.clone();
        out
    }
}

impl Scalar for FieldElement {
    fn inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }

    fn from_rational(q: &Rational) -> Self {
        FieldElement::constant(q.clone())
    }

    fn from_coords(field: &Arc<NumberField>, coords: &[Rational]) -> Self {
        FieldElement::from_poly(field, coords.to_vec())
    }

    fn to_coords(&self, degree: usize) -> Vec<Rational> {
        self.coords(degree)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
