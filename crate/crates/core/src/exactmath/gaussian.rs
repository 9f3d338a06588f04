use std::fmt;

use super::field::{format_rational, Field, Ring};
use super::ops_macros::{forward_div_op, forward_ring_ops};
use super::ExactRational;

/// `re + i·im` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: ExactRational,
    pub im: ExactRational,
}

impl GaussianRational {
    pub fn new(re: ExactRational, im: ExactRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactRational) -> Self {
        Self { re, im: ExactRational::zero() }
    }

    pub fn i() -> Self {
        Self { re: ExactRational::zero(), im: ExactRational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> ExactRational {
        &self.re * &self.re + &self.im * &self.im
    }

    fn add_ref(&self, o: &Self) -> Self {
        Self { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn neg_ref(&self) -> Self {
        Self { re: -&self.re, im: -&self.im }
    }

    fn div_ref(&self, o: &Self) -> Self {
        let n = o.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let num = self.mul_ref(&o.conj());
        Self { re: num.re / &n, im: num.im / &n }
    }
}

forward_ring_ops!(GaussianRational);
forward_div_op!(GaussianRational);

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self::real(ExactRational::zero())
    }

    fn one() -> Self {
        Self::real(ExactRational::one())
    }

    fn from_i64(n: i64) -> Self {
        Self::real(ExactRational::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.div_ref(rhs))
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_real() {
            self.re.as_integer()
        } else {
            None
        }
    }
}

impl Field for GaussianRational {
    fn from_rational(q: &ExactRational) -> Self {
        Self::real(q.clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}i", format_rational(&self.im)),
            (false, false) => {
                write!(f, "({} + {}i)", format_rational(&self.re), format_rational(&self.im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn field_arithmetic() {
        let a = g(1, 3, 1, 6);
        let b = g(2, 3, -1, 6);
        // (1/3 + i/6)(2/3 - i/6) = 2/9 + 1/36 + i(2/18 - 1/18)
        assert_eq!(&a * &b, g(1, 4, 1, 18));
        let q = &a / &b;
        assert_eq!(&q * &b, a);
        assert_eq!(GaussianRational::i() * GaussianRational::i(), GaussianRational::from_i64(-1));
    }

    #[test]
    fn conjugation_is_involutive() {
        let a = g(-5, 7, 3, 11);
        assert_eq!(a.conj().conj(), a);
        assert!((&a * &a.conj()).is_real());
    }
}
