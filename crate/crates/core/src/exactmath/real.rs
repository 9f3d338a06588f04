//! Arbitrary-precision reals over MPFR.
//!
//! Arithmetic results carry the larger precision of their operands. Constants
//! built without an operand (`zero`, `one`, `from_i64`, `from_rational`) take
//! the thread's working precision, set with [`with_precision`].

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use super::field::{Field, Ring};
use super::ops_macros::{forward_div_op, forward_ring_ops};
use super::ExactRational;

pub const DEFAULT_DIGITS: u32 = 50;
const GUARD_BITS: u32 = 32;

thread_local! {
    static WORKING_BITS: Cell<u32> = const { Cell::new(digits_to_bits(DEFAULT_DIGITS)) };
}

/// Bits needed to carry `digits` significant decimal digits plus guard bits.
pub const fn digits_to_bits(digits: u32) -> u32 {
    // log2(10) ≈ 3.3219
    (digits * 33219).div_ceil(10000) + GUARD_BITS
}

pub fn working_bits() -> u32 {
    WORKING_BITS.with(Cell::get)
}

/// Runs `f` with the thread's working precision set to `bits`, restoring the
/// previous value afterwards (also on unwind).
pub fn with_precision<T>(bits: u32, f: impl FnOnce() -> T) -> T {
    struct Restore(u32);
    impl Drop for Restore {
        fn drop(&mut self) {
            WORKING_BITS.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(WORKING_BITS.with(|c| c.replace(bits.max(16))));
    f()
}

#[derive(Clone, Debug)]
pub struct Real(pub Float);

fn bigint_to_integer(n: &BigInt) -> Integer {
    let (sign, digits) = n.to_u32_digits();
    let mut z = Integer::from_digits(&digits, rug::integer::Order::Lsf);
    if sign == Sign::Minus {
        z = -z;
    }
    z
}

impl Real {
    pub fn with_bits(bits: u32, v: f64) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_f64(v: f64) -> Self {
        Real(Float::with_val(working_bits(), v))
    }

    /// Parses a decimal string at the working precision.
    pub fn parse(s: &str) -> Option<Self> {
        let parsed = Float::parse(s.trim()).ok()?;
        Some(Real(Float::with_val(working_bits(), parsed)))
    }

    pub fn pi() -> Self {
        Real(Float::with_val(working_bits(), Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    fn bits_with(&self, o: &Self) -> u32 {
        self.0.prec().max(o.0.prec())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn sin(&self) -> Self {
        Real(self.0.clone().sin())
    }

    pub fn cos(&self) -> Self {
        Real(self.0.clone().cos())
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.prec()));
        (Real(s), Real(c))
    }

    pub fn exp(&self) -> Self {
        Real(self.0.clone().exp())
    }

    pub fn ln(&self) -> Self {
        Real(self.0.clone().ln())
    }

    pub fn sinh(&self) -> Self {
        Real(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Self {
        Real(self.0.clone().cosh())
    }

    pub fn tanh(&self) -> Self {
        Real(self.0.clone().tanh())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn powi(&self, n: i32) -> Self {
        Real(Float::with_val(self.prec(), (&self.0).pow(n)))
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn max(self, o: Self) -> Self {
        if self.0 >= o.0 {
            self
        } else {
            o
        }
    }

    /// Relative deviation |self − other| / max(|other|, tiny).
    pub fn rel_err(&self, other: &Self) -> Self {
        let diff = (self - other).abs();
        if other.0.is_zero() {
            diff
        } else {
            diff / other.abs()
        }
    }

    /// Ten to the power `-digits`, at the working precision.
    pub fn tolerance(digits: i32) -> Self {
        let ten = Float::with_val(working_bits(), 10);
        Real(Float::with_val(working_bits(), ten.pow(-digits)))
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_string_digits(&self, digits: usize) -> String {
        self.0.to_string_radix(10, Some(digits))
    }

    fn add_ref(&self, o: &Self) -> Self {
        Real(Float::with_val(self.bits_with(o), &self.0 + &o.0))
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Real(Float::with_val(self.bits_with(o), &self.0 - &o.0))
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Real(Float::with_val(self.bits_with(o), &self.0 * &o.0))
    }

    fn neg_ref(&self) -> Self {
        Real(Float::with_val(self.prec(), -&self.0))
    }

    fn div_ref(&self, o: &Self) -> Self {
        Real(Float::with_val(self.bits_with(o), &self.0 / &o.0))
    }
}

forward_ring_ops!(Real);
forward_div_op!(Real);

impl PartialEq for Real {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&o.0)
    }
}

impl Ring for Real {
    fn zero() -> Self {
        Real(Float::with_val(working_bits(), 0))
    }

    fn one() -> Self {
        Real(Float::with_val(working_bits(), 1))
    }

    fn from_i64(n: i64) -> Self {
        Real(Float::with_val(working_bits(), n))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.0.is_zero()).then(|| self.div_ref(rhs))
    }
}

impl Field for Real {
    fn from_rational(q: &ExactRational) -> Self {
        let r = rug::Rational::from((bigint_to_integer(q.numer()), bigint_to_integer(q.denom())));
        Real(Float::with_val(working_bits(), r))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (f64::from(self.prec()) * std::f64::consts::LOG10_2).floor() as usize;
        write!(f, "{}", self.to_string_digits(f.precision().unwrap_or(digits.max(1))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn precision_scope_restores() {
        let before = working_bits();
        with_precision(400, || {
            assert_eq!(Real::one().prec(), 400);
            with_precision(100, || assert_eq!(Real::zero().prec(), 100));
            assert_eq!(working_bits(), 400);
        });
        assert_eq!(working_bits(), before);
    }

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        with_precision(digits_to_bits(60), || {
            let third = Real::from_rational(&rat(-1, 3));
            let back = third.clone() * Real::from_i64(-3);
            assert!(back.rel_err(&Real::one()) < Real::tolerance(55));
        });
    }

    #[test]
    fn results_take_larger_precision() {
        let a = Real::with_bits(64, 1.0);
        let b = Real::with_bits(300, 3.0);
        assert_eq!((&a / &b).prec(), 300);
    }

    #[test]
    fn pi_digits() {
        with_precision(digits_to_bits(40), || {
            let s = Real::pi().to_string_digits(30);
            assert!(s.starts_with("3.1415926535897932384626433832"), "{s}");
        });
    }
}
