//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are exponent vectors with trailing zeros trimmed; under that
//! normalization the `BTreeMap` key order coincides with lexicographic
//! monomial order, so the last entry is always the leading term.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{format_rational, Ring};
use super::poly::Poly;
use super::ExactRational;

type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, ExactRational>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect())
}

/// `a / b` when `b` divides `a`.
fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.to_vec();
    for (i, &e) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(e)?;
    }
    Some(trim(out))
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::term(c, Vec::new())
    }

    /// The variable with index `var`.
    pub fn var(var: usize) -> Self {
        let mut m = vec![0; var + 1];
        m[var] = 1;
        Self::term(ExactRational::one(), m)
    }

    pub fn term(c: ExactRational, monomial: Vec<u32>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(monomial), c);
        }
        Self { terms }
    }

    /// Lifts a univariate polynomial into variable `var`.
    pub fn from_univariate(p: &Poly<ExactRational>, var: usize) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut m = vec![0; var + 1];
            m[var] = i as u32;
            out.add_term(trim(m), c.clone());
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &ExactRational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn coeff(&self, monomial: &[u32]) -> ExactRational {
        self.terms.get(&trim(monomial.to_vec())).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.get(var).copied().unwrap_or(0)).max()
    }

    pub fn eval(&self, point: &[ExactRational]) -> ExactRational {
        let mut acc = ExactRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t *= Ring::pow(&point[i], e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a rational value for one variable.
    pub fn substitute(&self, var: usize, value: &ExactRational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if var < m2.len() {
                m2[var] = 0;
            }
            out.add_term(trim(m2), c.clone() * Ring::pow(value, e));
        }
        out
    }

    /// Renames variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let width = perm.iter().copied().max().map_or(0, |x| x + 1).max(m.len());
            let mut m2 = vec![0; width];
            for (i, &e) in m.iter().enumerate() {
                m2[perm[i]] += e;
            }
            out.add_term(trim(m2), c.clone());
        }
        out
    }

    /// Dense coefficient table `t[i][j]` of a bivariate polynomial, sized
    /// `rows × cols`. Terms outside the table or in further variables panic.
    pub fn to_dense2(&self, rows: usize, cols: usize) -> Vec<Vec<ExactRational>> {
        let mut t = vec![vec![ExactRational::zero(); cols]; rows];
        for (m, c) in &self.terms {
            assert!(m.len() <= 2, "not a bivariate polynomial");
            let i = m.first().copied().unwrap_or(0) as usize;
            let j = m.get(1).copied().unwrap_or(0) as usize;
            t[i][j] = c.clone();
        }
        t
    }

    pub fn from_dense2(table: &[Vec<ExactRational>]) -> Self {
        let mut out = Self::zero();
        for (i, row) in table.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.add_term(trim(vec![i as u32, j as u32]), c.clone());
            }
        }
        out
    }

    fn leading(&self) -> Option<(&Monomial, &ExactRational)> {
        self.terms.iter().next_back()
    }

    /// Multivariate division in lex order; returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let (dm, dc) = divisor.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut p = self.clone();
        let mut q = Self::zero();
        let mut r = Self::zero();
        while let Some((pm, pc)) = p.leading() {
            let (pm, pc) = (pm.clone(), pc.clone());
            match mono_div(&pm, &dm) {
                Some(m) => {
                    let c = pc / &dc;
                    for (dm2, dc2) in &divisor.terms {
                        p.add_term(mono_mul(&m, dm2), -(c.clone() * dc2));
                    }
                    q.add_term(m, c);
                }
                None => {
                    p.terms.remove(&pm);
                    r.add_term(pm, pc);
                }
            }
        }
        Some((q, r))
    }

    fn add_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<Monomial, ExactRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = mono_mul(ma, mb);
                let e = acc.entry(m).or_insert_with(ExactRational::zero);
                *e = e.clone() + ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    fn neg_ref(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    /// Renders with the given variable names.
    pub fn to_string_vars(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut s = format_rational(c);
            for (i, &e) in m.iter().enumerate() {
                let name = names.get(i).map_or_else(|| format!("x{i}"), |n| n.to_string());
                match e {
                    0 => {}
                    1 => s.push_str(&format!("*{name}")),
                    _ => s.push_str(&format!("*{name}^{e}")),
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }

    fn one() -> Self {
        MPoly::constant(ExactRational::one())
    }

    fn from_i64(n: i64) -> Self {
        MPoly::constant(ExactRational::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }

    fn as_integer(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                if m.is_empty() {
                    c.as_integer()
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

macro_rules! mpoly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'a MPoly) -> MPoly {
                self.$imp(rhs)
            }
        }
        impl<'a, 'b> $tr<&'b MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'b MPoly) -> MPoly {
                self.$imp(rhs)
            }
        }
    };
}

mpoly_binop!(Add, add, add_ref);
mpoly_binop!(Sub, sub, sub_ref);
mpoly_binop!(Mul, mul, mul_ref);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_vars(&[]))
    }
}
