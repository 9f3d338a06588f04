use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{format_rational, Field, Ring};
use super::ExactRational;

/// Dense univariate polynomial, coefficient `i` multiplies `x^i`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient vector and `degree() == None`.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `c0 + c1·x`.
    pub fn linear(c0: R, c1: R) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `p(x + shift)` by Horner's scheme over polynomials.
    pub fn shift(&self, shift: &R) -> Self {
        let xs = Poly::linear(shift.clone(), R::one());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &xs) + &Poly::constant(c.clone()))
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Poly<R>) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &R::from_i64(i as i64))
                .collect(),
        )
    }

    fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(out)
    }

    fn neg_ref(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dlead = divisor.leading()?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / &dlead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - &(c.clone() * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }
}

impl<F: Field> Ring for Poly<F> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::constant(F::one())
    }

    fn from_i64(n: i64) -> Self {
        Poly::constant(F::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }

    fn as_integer(&self) -> Option<i64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => self.coeffs[0].as_integer(),
            _ => None,
        }
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                self.$imp(&rhs)
            }
        }
        impl<'a, R: Ring> $tr<&'a Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &'a Poly<R>) -> Poly<R> {
                self.$imp(rhs)
            }
        }
        impl<'a, 'b, R: Ring> $tr<&'b Poly<R>> for &'a Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &'b Poly<R>) -> Poly<R> {
                self.$imp(rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_ref);
poly_binop!(Sub, sub, sub_ref);
poly_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.neg_ref()
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.neg_ref()
    }
}

impl Poly<ExactRational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactRational::from_i64(c)).collect())
    }

    /// Renders with the given variable name, e.g. `2/7 + 3/7*u + 2/7*u^2`.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = format_rational(c);
            terms.push(match i {
                0 => c,
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly<ExactRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    type P = Poly<ExactRational>;

    #[test]
    fn trims_trailing_zeros() {
        let p = P::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(P::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        // (x^3 - 1) = (x - 1)(x^2 + x + 1)
        let num = P::from_ints(&[-1, 0, 0, 1]);
        let den = P::from_ints(&[-1, 1]);
        let (q, r) = num.div_rem(&den).unwrap();
        assert_eq!(q, P::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(P::from_ints(&[1, 0, 1]).div_exact(&den), None);
    }

    #[test]
    fn shift_and_eval_agree() {
        let p = P::new(vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(2, 7)]);
        let s = p.shift(&rat(5, 3));
        for x in [rat(0, 1), rat(1, 1), rat(-7, 4)] {
            assert_eq!(s.eval(&x), p.eval(&(x.clone() + rat(5, 3))));
        }
    }

    #[test]
    fn display() {
        let p = P::new(vec![rat(2, 7), rat(3, 7), rat(2, 7)]);
        assert_eq!(p.to_string_var("u"), "2/7 + 3/7*u + 2/7*u^2");
    }
}
