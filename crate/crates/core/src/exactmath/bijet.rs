//! Truncated Taylor series in two variables, kept up to total order `K`.

use std::ops::{Add, Mul, Sub};

use super::field::Field;
use super::jet::{factorial_in, Jet};
use crate::error::{Error, Result};

/// Coefficients `c[i][j]` of `ε1^i ε2^j` for `i + j ≤ K`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiJet<F> {
    order: usize,
    rows: Vec<Vec<F>>,
}

impl<F: Field> BiJet<F> {
    pub fn zero(order: usize) -> Self {
        Self { order, rows: (0..=order).map(|i| vec![F::zero(); order - i + 1]).collect() }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut out = Self::zero(order);
        out.rows[0][0] = c;
        out
    }

    /// Lifts a univariate jet into variable 0 (`ε1`) or 1 (`ε2`).
    pub fn lift(jet: &Jet<F>, var: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        for k in 0..=order.min(jet.order()) {
            let c = jet.coeff(k);
            if var == 0 {
                out.rows[k][0] = c;
            } else {
                out.rows[0][k] = c;
            }
        }
        out
    }

    /// `α·ε1 + β·ε2`.
    pub fn linear(alpha: F, beta: F, order: usize) -> Self {
        let mut out = Self::zero(order);
        if order > 0 {
            out.rows[1][0] = alpha;
            out.rows[0][1] = beta;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        if i + j > self.order {
            F::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    /// `∂_{ε1}^i ∂_{ε2}^j` at the origin.
    pub fn derivative_at_zero(&self, i: usize, j: usize) -> Result<F> {
        if i + j > self.order {
            return Err(Error::InsufficientOrder { have: self.order, need: i + j });
        }
        Ok(self.rows[i][j].clone() * factorial_in::<F>(i) * factorial_in::<F>(j))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            order: self.order,
            rows: self.rows.iter().map(|r| r.iter().map(|a| a.clone() * c).collect()).collect(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        let a00 = &self.rows[0][0];
        if a00.is_zero() {
            return Err(Error::DivisionByZero("bivariate jet with zero constant term".into()));
        }
        let inv0 = F::one() / a00.clone();
        let k = self.order;
        let mut out = Self::zero(k);
        for total in 0..=k {
            for i in 0..=total {
                let j = total - i;
                if total == 0 {
                    out.rows[0][0] = inv0.clone();
                    continue;
                }
                let mut s = F::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if p == i && q == j {
                            continue;
                        }
                        s = s + self.rows[i - p][j - q].clone() * &out.rows[p][q];
                    }
                }
                out.rows[i][j] = -(s * &inv0);
            }
        }
        Ok(out)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        let mut b = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::constant(F::one(), self.order);
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
        let k = self.order;
        let mut h = self.clone();
        h.rows[0][0] = F::zero();
        let mut cos = Self::constant(F::one(), k);
        let mut sin = Self::zero(k);
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
        &cos.scale(sin0) + &sin.scale(cos0)
    }

    fn zip(&self, o: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        let k = self.order.min(o.order);
        Self {
            order: k,
            rows: (0..=k).map(|i| (0..=k - i).map(|j| f(&self.rows[i][j], &o.rows[i][j])).collect()).collect(),
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let k = self.order.min(o.order);
        let mut out = Self::zero(k);
        for i1 in 0..=k {
            for j1 in 0..=k - i1 {
                let a = &self.rows[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=k - i1 - j1 {
                    for j2 in 0..=k - i1 - j1 - i2 {
                        let slot = &mut out.rows[i1 + i2][j1 + j2];
                        *slot = slot.clone() + a.clone() * &o.rows[i2][j2];
                    }
                }
            }
        }
        out
    }
}

impl<'b, F: Field> Add<&'b BiJet<F>> for &BiJet<F> {
    type Output = BiJet<F>;
    fn add(self, o: &'b BiJet<F>) -> BiJet<F> {
        self.zip(o, |a, b| a.clone() + b)
    }
}

impl<'b, F: Field> Sub<&'b BiJet<F>> for &BiJet<F> {
    type Output = BiJet<F>;
    fn sub(self, o: &'b BiJet<F>) -> BiJet<F> {
        self.zip(o, |a, b| a.clone() - b)
    }
}

impl<'b, F: Field> Mul<&'b BiJet<F>> for &BiJet<F> {
    type Output = BiJet<F>;
    fn mul(self, o: &'b BiJet<F>) -> BiJet<F> {
        self.mul_ref(o)
    }
}
