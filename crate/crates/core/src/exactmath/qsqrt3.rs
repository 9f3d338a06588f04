//! The quadratic field Q(√3).
//!
//! Ice-point quantities (sin π/3 = √3/2, the moments of the ice-point weight,
//! the Taylor coefficients of the ω/ρ functions) all live here, which keeps the
//! ice-point pipeline exact.

use std::fmt;

use super::field::{format_rational, Field, Ring};
use super::ops_macros::{forward_div_op, forward_ring_ops};
use super::ExactRational;

/// `a + b·√3`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt3 {
    pub a: ExactRational,
    pub b: ExactRational,
}

impl QSqrt3 {
    pub fn new(a: ExactRational, b: ExactRational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: ExactRational) -> Self {
        Self { a, b: ExactRational::zero() }
    }

    pub fn sqrt3() -> Self {
        Self { a: ExactRational::zero(), b: ExactRational::one() }
    }

    /// Rational value when the √3 part vanishes.
    pub fn as_rational(&self) -> Option<&ExactRational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b }
    }

    /// a² − 3b², the field norm.
    pub fn norm(&self) -> ExactRational {
        &self.a * &self.a - ExactRational::from_i64(3) * &self.b * &self.b
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    fn add_ref(&self, o: &Self) -> Self {
        Self { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Self { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let three = ExactRational::from_i64(3);
        Self {
            a: &self.a * &o.a + three * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn neg_ref(&self) -> Self {
        Self { a: -&self.a, b: -&self.b }
    }

    fn div_ref(&self, o: &Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt 3)");
        let num = self.mul_ref(&o.conj());
        Self { a: num.a / &n, b: num.b / &n }
    }
}

forward_ring_ops!(QSqrt3);
forward_div_op!(QSqrt3);

impl Ring for QSqrt3 {
    fn zero() -> Self {
        Self::rational(ExactRational::zero())
    }

    fn one() -> Self {
        Self::rational(ExactRational::one())
    }

    fn from_i64(n: i64) -> Self {
        Self::rational(ExactRational::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.div_ref(rhs))
    }

    fn as_integer(&self) -> Option<i64> {
        self.as_rational().and_then(Ring::as_integer)
    }
}

impl Field for QSqrt3 {
    fn from_rational(q: &ExactRational) -> Self {
        Self::rational(q.clone())
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.a)),
            (true, false) => write!(f, "{}·√3", format_rational(&self.b)),
            (false, false) => {
                write!(f, "{} + {}·√3", format_rational(&self.a), format_rational(&self.b))
            }
        }
    }
}

/// `rational · (√3)^power`, the form in which ice-point norms and partition
/// functions come out of the closed-form products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sqrt3Scaled {
    pub rational: ExactRational,
    pub sqrt3_power: i64,
}

impl Sqrt3Scaled {
    pub fn new(rational: ExactRational, sqrt3_power: i64) -> Self {
        Self { rational, sqrt3_power }.normalized()
    }

    /// Folds even powers of √3 into the rational part, leaving power 0 or 1.
    pub fn normalized(self) -> Self {
        let shift = self.sqrt3_power.div_euclid(2);
        let rest = self.sqrt3_power.rem_euclid(2);
        let three = ExactRational::from_i64(3);
        let factor = if shift >= 0 {
            Ring::pow(&three, shift as u32)
        } else {
            ExactRational::one() / Ring::pow(&three, (-shift) as u32)
        };
        Self { rational: self.rational * factor, sqrt3_power: rest }
    }

    pub fn to_qsqrt3(&self) -> QSqrt3 {
        let n = self.clone().normalized();
        if n.sqrt3_power == 0 {
            QSqrt3::rational(n.rational)
        } else {
            QSqrt3::new(ExactRational::zero(), n.rational)
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.rational * &o.rational, self.sqrt3_power + o.sqrt3_power)
    }
}

impl fmt::Display for Sqrt3Scaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrt3_power {
            0 => write!(f, "{}", format_rational(&self.rational)),
            1 => write!(f, "{}·√3", format_rational(&self.rational)),
            p => write!(f, "{}·√3^{}", format_rational(&self.rational), p),
        }
    }
}
