//! Algebraic traits shared by every scalar type in the crate.
//!
//! `Ring` is the minimum needed for fraction-free elimination and polynomial
//! arithmetic; `Field` adds division. Exact types (`ExactRational`,
//! `GaussianRational`, `QSqrt3`) and the high-precision `Real` all implement
//! `Field`; polynomial rings implement `Ring` with exact division.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactRational;

pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Sized
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide
    /// `self` (or is zero).
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// The value as a machine integer when it is one exactly.
    fn as_integer(&self) -> Option<i64> {
        None
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    fn from_rational(q: &ExactRational) -> Self;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Ring for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(n: i64) -> Self {
        ExactRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

impl Field for ExactRational {
    fn from_rational(q: &ExactRational) -> Self {
        q.clone()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }

    fn as_integer(&self) -> Option<i64> {
        self.to_i64()
    }
}

/// Parse `"p/q"`, `"p"` or a negative variant into an exact rational.
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if Zero::is_zero(&d) {
                None
            } else {
                Some(ExactRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(ExactRational::from_integer),
    }
}

/// `"p/q"` with the denominator omitted for integers.
pub fn format_rational(q: &ExactRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Convenience constructor used throughout tests and closed forms.
pub fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_nonnegative(q: &ExactRational) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/7"), Some(rat(2, 7)));
        assert_eq!(parse_rational(" -4/6 "), Some(rat(-2, 3)));
        assert_eq!(parse_rational("5"), Some(rat(5, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-3, 9)), "-1/3");
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(2, 3).pow(5), rat(32, 243));
        assert_eq!(rat(7, 1).pow(0), rat(1, 1));
    }

    #[test]
    fn integer_exact_division() {
        let a = BigInt::from(84);
        assert_eq!(a.div_exact(&BigInt::from(12)), Some(BigInt::from(7)));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(a.div_exact(&BigInt::from(0)), None);
    }
}
