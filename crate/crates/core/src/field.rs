//! The coefficient-field abstraction shared by every exact algorithm in the crate.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field.
///
/// Everything in the linear-algebra kernel, the Lie algebra layer and the
/// cochain machinery is written against this trait. Two instances ship with
/// the crate: [`Rational`](crate::Rational) and [`Scalar`](crate::Scalar)
/// (rational functions in one formal transcendental).
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Sign relative to zero, when the element carries a canonical order.
    ///
    /// Returns `None` for elements that depend on a formal transcendental.
    fn sign(&self) -> Option<Ordering>;

    fn from_integer(n: i64) -> Self;

    fn from_rational(q: &BigRational) -> Self;

    /// The plain rational value, if the element has one.
    fn to_rational(&self) -> Option<BigRational>;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn sign(&self) -> Option<Ordering> {
        Some(if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        })
    }

    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}
