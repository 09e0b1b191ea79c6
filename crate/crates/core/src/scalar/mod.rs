//! Scalar fields the linear algebra and Lie algebra code is generic over.
//!
//! Everything in this crate is exact. [`Rational`] is the working field for
//! all reported results; [`Fp`] is a prime field used for cheap rank
//! certificates (a full rank modulo `p` implies full rank over `Q` for an
//! integer matrix). [`BigRational`](num_rational::BigRational) is supported
//! as a reference implementation.

mod fp;
mod rational;

pub use fp::Fp;
pub use rational::Rational;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// `self -= a * b`, the inner step of every elimination loop.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.clone() * b.clone();
        *self = self.clone() - t;
    }

    /// Ordering used by the largest-magnitude pivot heuristic.
    fn magnitude_cmp(&self, other: &Self) -> Ordering;

    /// True when the value is an integer (always true in a prime field).
    fn is_integral(&self) -> bool;
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Self {
        self.recip()
    }

    fn magnitude_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Dot product of two equal-length slices.
pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}
