//! Coefficient fields.
//!
//! Every numeric routine in the crate is generic over [`Coeff`], an exact
//! ordered field. Both `Ratio<BigInt>` (the crate's [`Rational`](crate::Rational))
//! and `Ratio<i64>` implement it; the latter is convenient for small tests
//! but can overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact, totally ordered field of coefficients.
pub trait Coeff:
    Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    /// The exact square root, if it lies in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    /// The value as a natural number, if it is a non-negative integer that fits in `u64`.
    fn to_natural(&self) -> Option<u64>;

    fn from_int(n: i64) -> Self;

    fn from_natural(n: usize) -> Self {
        Self::from_int(i64::try_from(n).expect("natural fits in i64"))
    }

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    /// `1/n` for a positive integer `n`.
    fn recip_int(n: usize) -> Self {
        Self::one() / Self::from_natural(n)
    }
}

impl<T> Coeff for Ratio<T>
where
    T: Clone
        + Integer
        + Roots
        + Signed
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let root = |v: &T| {
            let r = v.sqrt();
            (r.clone() * r.clone() == *v).then_some(r)
        };
        Some(Ratio::new(root(self.numer())?, root(self.denom())?))
    }

    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer type holds every i64"))
    }

    fn to_natural(&self) -> Option<u64> {
        if self.is_integer() && !self.is_negative() {
            self.numer().to_u64()
        } else {
            None
        }
    }
}

/// The value of a string of ASCII decimal digits.
pub fn from_decimal<C: Coeff>(digits: &str) -> Option<C> {
    let ten = C::from_int(10);
    digits.chars().try_fold(C::zero(), |acc, ch| {
        let d = ch.to_digit(10)?;
        Some(acc * ten.clone() + C::from_int(i64::from(d)))
    })
}

/// Exact rational square root.
///
/// Returns `Ok(None)` when the input is a non-negative non-square and an
/// error for negative input.
pub fn rat_sqrt_exact<C: Coeff>(a: &C) -> Result<Option<C>> {
    if a.is_negative() {
        return Err(Error::NegativeInput(a.to_string()));
    }
    Ok(a.sqrt_exact())
}
