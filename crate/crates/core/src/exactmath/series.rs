use num_bigint::BigInt;

use super::field::Ring;
use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// C(n, k), zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeArgument(format!("binomial upper index {n}")));
    }
    if k < 0 || k > n {
        return Ok(BigInt::from(0));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}

/// Rising factorial `a (a+1) ⋯ (a+m−1)`.
pub fn pochhammer<R: Ring>(a: &R, m: u32) -> R {
    (0..m).fold(R::one(), |acc, i| acc * &(a.clone() + R::from_i64(i64::from(i))))
}

/// Terminating generalized hypergeometric sum at unit argument,
/// `Σ_k Π(a_i)_k / (Π(b_j)_k k!)`, where `upper[terminating] = −n` stops the
/// sum after `k = n`.
///
/// The upper parameters may be polynomials; each step divides exactly by
/// `Π(b_j + k)·(k+1)`, so the lower parameters must be constants of the ring.
pub fn hypergeometric_terminating<R: Ring>(upper: &[R], lower: &[R], terminating: usize) -> Result<R> {
    hypergeometric_terminating_at(upper, lower, terminating, &R::one())
}

/// The same sum with argument `z`, i.e. each term carries `z^k`.
pub fn hypergeometric_terminating_at<R: Ring>(
    upper: &[R],
    lower: &[R],
    terminating: usize,
    z: &R,
) -> Result<R> {
    let top = upper
        .get(terminating)
        .ok_or_else(|| Error::InvalidParameter(format!("no upper parameter {terminating}")))?;
    let n = match top.as_integer() {
        Some(v) if v <= 0 => (-v) as u64,
        _ => {
            return Err(Error::InvalidParameter(
                "terminating parameter must be a nonpositive integer".into(),
            ))
        }
    };
    let mut term = R::one();
    let mut sum = R::one();
    for k in 0..n {
        let kr = R::from_i64(k as i64);
        let num = upper.iter().fold(R::one(), |acc, a| acc * &(a.clone() + &kr));
        let den = lower
            .iter()
            .fold(R::from_i64(k as i64 + 1), |acc, b| acc * &(b.clone() + &kr));
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("lower Pochhammer vanishes at k = {k}")));
        }
        term = (term * &num * z)
            .div_exact(&den)
            .ok_or_else(|| Error::Inconsistent(format!("term {} not divisible", k + 1)))?;
        sum = sum + &term;
    }
    Ok(sum)
}

/// `3F2(a1, a2, a3; b1, b2; 1)` with `a[terminating] = −n`.
pub fn hyp3f2_terminating<R: Ring>(a: [R; 3], b: [R; 2], terminating: usize) -> Result<R> {
    hypergeometric_terminating(&a, &b, terminating)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ExactRational, GaussianRational, Poly};

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 2).unwrap(), BigInt::from(21));
        assert_eq!(binomial(6, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(6, 1).unwrap(), BigInt::from(6));
        assert_eq!(binomial(4, 5).unwrap(), BigInt::from(0));
        assert_eq!(binomial(4, -1).unwrap(), BigInt::from(0));
        assert!(binomial(-1, 0).is_err());
        assert_eq!(factorial(10), BigInt::from(3628800));
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(pochhammer(&rat(2, 1), 2), rat(6, 1));
        assert_eq!(pochhammer(&rat(2, 3), 1), rat(2, 3));
        assert_eq!(pochhammer(&rat(-5, 7), 0), rat(1, 1));
    }

    #[test]
    fn hypergeometric_sums() {
        let one = rat(1, 1);
        let zero = rat(0, 1);
        assert_eq!(
            hyp3f2_terminating([zero, rat(3, 2), rat(1, 5)], [rat(2, 3), one.clone()], 0).unwrap(),
            one
        );
        // 2F1(-2, 1; 3; 1) = (3-1)_2/(3)_2 = 1/2, with the third slot cancelled.
        let v = hyp3f2_terminating([rat(-2, 1), rat(1, 1), one.clone()], [rat(3, 1), one.clone()], 0)
            .unwrap();
        assert_eq!(v, rat(1, 2));
        assert!(hyp3f2_terminating([rat(-2, 1), one.clone(), one.clone()], [rat(-1, 1), one], 0).is_err());
    }

    #[test]
    fn polynomial_argument() {
        // 2F1(-2, 3; 1; z) = 1 - 6z + 6z^2
        let c = |v: i64| Poly::constant(rat(v, 1));
        let p = hypergeometric_terminating_at(&[c(-2), c(3)], &[c(1)], 0, &Poly::x()).unwrap();
        assert_eq!(p, Poly::from_ints(&[1, -6, 6]));
    }

    #[test]
    fn polynomial_parameter() {
        // 3F2(-1, 2, 1/3 + i x/6; 2/3, 1; 1) = -i x / 2
        type G = GaussianRational;
        let c = |re: ExactRational, im: ExactRational| Poly::constant(G::new(re, im));
        let a3 = Poly::linear(G::real(rat(1, 3)), G::new(rat(0, 1), rat(1, 6)));
        let v = hyp3f2_terminating(
            [c(rat(-1, 1), rat(0, 1)), c(rat(2, 1), rat(0, 1)), a3],
            [c(rat(2, 3), rat(0, 1)), c(rat(1, 1), rat(0, 1))],
            0,
        )
        .unwrap();
        assert_eq!(v, Poly::new(vec![G::real(rat(0, 1)), G::new(rat(0, 1), rat(-1, 2))]));
    }
}
