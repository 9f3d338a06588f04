//! Truncated Taylor series in one variable at the expansion point 0.

use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::poly::Poly;
use super::series::factorial;
use super::ExactRational;
use crate::error::{Error, Result};

/// Taylor coefficients `c_0..c_K` of a function at 0; everything above
/// order `K` is discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<F> {
    coeffs: Vec<F>,
}

pub(crate) fn factorial_in<F: Field>(k: usize) -> F {
    F::from_rational(&ExactRational::from_integer(factorial(k as u64)))
}

impl<F: Field> Jet<F> {
    /// Builds a jet of order `coeffs.len() − 1`.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least a constant term");
        Self { coeffs }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The expansion variable `ε` itself.
    pub fn variable(order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        if order > 0 {
            coeffs[1] = F::one();
        }
        Self { coeffs }
    }

    /// `sin(ε + θ)` from `sin θ` and `cos θ`.
    pub fn sin_shift(sin_theta: &F, cos_theta: &F, order: usize) -> Self {
        let cycle = [sin_theta.clone(), cos_theta.clone(), -sin_theta.clone(), -cos_theta.clone()];
        Self::from_cycle(&cycle, order)
    }

    /// `cos(ε + θ)` from `sin θ` and `cos θ`.
    pub fn cos_shift(sin_theta: &F, cos_theta: &F, order: usize) -> Self {
        let cycle = [cos_theta.clone(), -sin_theta.clone(), -cos_theta.clone(), sin_theta.clone()];
        Self::from_cycle(&cycle, order)
    }

    fn from_cycle(cycle: &[F; 4], order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut fact = F::one();
        for k in 0..=order {
            if k > 0 {
                fact = fact * F::from_i64(k as i64);
            }
            coeffs.push(cycle[k % 4].clone() / &fact);
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// The `k`-th derivative at 0.
    pub fn derivative_at_zero(&self, k: usize) -> Result<F> {
        if k > self.order() {
            return Err(Error::InsufficientOrder { have: self.order(), need: k });
        }
        Ok(self.coeffs[k].clone() * factorial_in::<F>(k))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, F::zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect() }
    }

    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::DivisionByZero("jet with zero constant term".into()));
        }
        let inv0 = F::one() / a0.clone();
        let k = self.order();
        let mut out: Vec<F> = Vec::with_capacity(k + 1);
        out.push(inv0.clone());
        for n in 1..=k {
            let mut s = F::zero();
            for i in 1..=n {
                s = s + self.coeffs[i].clone() * &out[n - i];
            }
            out.push(-(s * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::constant(F::one(), self.order());
        let mut b = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// `sin(g)` for this jet `g`, given `sin g(0)` and `cos g(0)`.
    pub fn sin_of(&self, sin0: &F, cos0: &F) -> Self {
        let (c, s) = self.trig_parts();
        &c.scale(sin0) + &s.scale(cos0)
    }

    /// `cos(g)` for this jet `g`, given `sin g(0)` and `cos g(0)`.
    pub fn cos_of(&self, sin0: &F, cos0: &F) -> Self {
        let (c, s) = self.trig_parts();
        &c.scale(cos0) - &s.scale(sin0)
    }

    /// `(cos h, sin h)` for the nilpotent part `h = g − g(0)`.
    fn trig_parts(&self) -> (Self, Self) {
        let k = self.order();
        let mut h = self.clone();
        h.coeffs[0] = F::zero();
        let mut cos = Self::constant(F::one(), k);
        let mut sin = Self::constant(F::zero(), k);
        let mut power = Self::constant(F::one(), k);
        let mut fact = F::one();
        for m in 1..=k {
            power = &power * &h;
            fact = fact * F::from_i64(m as i64);
            let term = power.scale(&(F::one() / fact.clone()));
            match m % 4 {
                0 => cos = &cos + &term,
                1 => sin = &sin + &term,
                2 => cos = &cos - &term,
                _ => sin = &sin - &term,
            }
        }
        (cos, sin)
    }

    /// `p(∂_ε) f |_{ε=0} = Σ_j p_j · j! · f_j`.
    pub fn apply_diffop(&self, p: &Poly<F>) -> Result<F> {
        if let Some(d) = p.degree() {
            if d > self.order() {
                return Err(Error::InsufficientOrder { have: self.order(), need: d });
            }
        }
        let mut acc = F::zero();
        let mut fact = F::one();
        for (j, pj) in p.coeffs().iter().enumerate() {
            if j > 0 {
                fact = fact * F::from_i64(j as i64);
            }
            acc = acc + pj.clone() * &fact * &self.coeffs[j];
        }
        Ok(acc)
    }

    fn binop(&self, o: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        let k = self.order().min(o.order());
        Self { coeffs: (0..=k).map(|i| f(&self.coeffs[i], &o.coeffs[i])).collect() }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        let mut out = vec![F::zero(); k + 1];
        for (i, a) in self.coeffs.iter().take(k + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..=k - i {
                out[i + j] = out[i + j].clone() + a.clone() * &o.coeffs[j];
            }
        }
        Self { coeffs: out }
    }
}

impl<'b, F: Field> Add<&'b Jet<F>> for &Jet<F> {
    type Output = Jet<F>;
    fn add(self, o: &'b Jet<F>) -> Jet<F> {
        self.binop(o, |a, b| a.clone() + b)
    }
}

impl<'b, F: Field> Sub<&'b Jet<F>> for &Jet<F> {
    type Output = Jet<F>;
    fn sub(self, o: &'b Jet<F>) -> Jet<F> {
        self.binop(o, |a, b| a.clone() - b)
    }
}

impl<'b, F: Field> Mul<&'b Jet<F>> for &Jet<F> {
    type Output = Jet<F>;
    fn mul(self, o: &'b Jet<F>) -> Jet<F> {
        self.mul_ref(o)
    }
}

impl<F: Field> Neg for &Jet<F> {
    type Output = Jet<F>;
    fn neg(self) -> Jet<F> {
        Jet { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}
