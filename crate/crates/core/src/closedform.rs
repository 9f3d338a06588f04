//! Closed-form enumerations: the total count, refined 1- and 3-enumerations,
//! their generating function and recurrence, and the boundary two-point
//! function assembled from one-point functions.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, factorial, hypergeometric_terminating, hypergeometric_terminating_at, pochhammer, ExactRational, MPoly,
    Poly, Ring,
};

/// `H_N^{(1)}, …, H_N^{(N)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedVector {
    pub n: usize,
    pub values: Vec<ExactRational>,
}

impl RefinedVector {
    pub fn new(values: Vec<ExactRational>) -> Self {
        Self { n: values.len(), values }
    }

    /// `H^{(r)}` with 1-based `r`; zero outside `1..=N`.
    pub fn get(&self, r: i64) -> ExactRational {
        if r >= 1 && (r as usize) <= self.n {
            self.values[r as usize - 1].clone()
        } else {
            ExactRational::zero()
        }
    }

    pub fn sum(&self) -> ExactRational {
        self.values.iter().fold(ExactRational::zero(), |a, b| a + b)
    }

    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    /// Coefficients read as `H_N(z) = Σ_r H^{(r)} z^{r−1}`.
    pub fn to_poly(&self) -> Poly<ExactRational> {
        Poly::new(self.values.clone())
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("N = {n}, need N ≥ {min}")));
    }
    Ok(())
}

fn fact(n: usize) -> BigInt {
    factorial(n as u64)
}

fn ratio(num: BigInt, den: BigInt) -> ExactRational {
    ExactRational::new(num, den)
}

fn binom(n: i64, k: i64) -> BigInt {
    binomial(n, k).unwrap_or_else(|_| BigInt::from(0))
}

/// Both product forms of the total count, `Π (3k−2)!(k−1)!/((2k−1)!(2k−2)!)`
/// and `Π (3k−2)!/(2N−k)!`.
pub fn a_total_forms(n: usize) -> (BigInt, BigInt) {
    let mut first = ExactRational::one();
    let mut second = ExactRational::one();
    for k in 1..=n {
        first *= ratio(fact(3 * k - 2) * fact(k - 1), fact(2 * k - 1) * fact(2 * k - 2));
        second *= ratio(fact(3 * k - 2), fact(2 * n - k));
    }
    debug_assert!(first.is_integer() && second.is_integer());
    (first.to_integer(), second.to_integer())
}

/// Number of `N×N` alternating sign matrices.
pub fn a_total(n: usize) -> BigInt {
    let (a, b) = a_total_forms(n);
    assert_eq!(a, b, "product forms disagree at N = {n}");
    a
}

/// Refined 1-enumeration `H_N^{(r)} = C(N+r−2,N−1) C(2N−1−r,N−1) / C(3N−2,N−1)`.
pub fn h_refined_1(n: usize) -> Result<RefinedVector> {
    check_n(n, 1)?;
    let n_ = n as i64;
    let den = binom(3 * n_ - 2, n_ - 1);
    let values =
        (1..=n_).map(|r| ratio(binom(n_ + r - 2, n_ - 1) * binom(2 * n_ - 1 - r, n_ - 1), den.clone())).collect();
    Ok(RefinedVector::new(values))
}

/// `H_N(z)` at `x = 1` as a normalized terminating `2F1(1−N, N; 2−2N; z)`.
pub fn gen_1(n: usize) -> Result<Poly<ExactRational>> {
    check_n(n, 1)?;
    let c = |v: i64| Poly::constant(ExactRational::from_i64(v));
    let n_ = n as i64;
    let series = hypergeometric_terminating_at(&[c(1 - n_), c(n_)], &[c(2 - 2 * n_)], 0, &Poly::x())?;
    let norm = gen_1_normalization(n);
    Ok(series.scale(&norm))
}

/// `(2N−1)!(2N−2)! / ((N−1)!(3N−2)!)`.
pub fn gen_1_normalization(n: usize) -> ExactRational {
    ratio(fact(2 * n - 1) * fact(2 * n - 2), fact(n - 1) * fact(3 * n - 2))
}

/// `2F1(1−N, N; 2−2N; 1)` two ways: summed term by term and by the
/// Chu–Vandermonde product `(c−b)_m/(c)_m`.
pub fn gen_1_unit_value(n: usize) -> Result<(ExactRational, ExactRational)> {
    check_n(n, 1)?;
    let n_ = n as i64;
    let r = ExactRational::from_i64;
    let summed = hypergeometric_terminating(&[r(1 - n_), r(n_)], &[r(2 - 2 * n_)], 0)?;
    let m = (n - 1) as u32;
    let c = r(2 - 2 * n_);
    let den = pochhammer(&c, m);
    if den.is_zero() {
        return Err(Error::DivisionByZero("(c)_m vanishes".into()));
    }
    let product = pochhammer(&(c - r(n_)), m) / den;
    Ok((summed, product))
}

/// Runs `r(r−2N+1) H^{(r+1)} = (r−N)(N+r−1) H^{(r)}` upward from `H^{(1)} = 1`
/// and normalizes the result to unit sum.
pub fn recurrence_solve_1(n: usize) -> Result<RefinedVector> {
    check_n(n, 2)?;
    let n_ = n as i64;
    let mut values = vec![ExactRational::one()];
    for r in 1..n_ {
        let prev = values.last().expect("nonempty").clone();
        let lhs = r * (r - 2 * n_ + 1);
        let rhs = (r - n_) * (n_ + r - 1);
        values.push(prev * ExactRational::new(rhs.into(), lhs.into()));
    }
    let total = values.iter().fold(ExactRational::zero(), |a, b| a + b);
    Ok(RefinedVector::new(values.into_iter().map(|v| v / &total).collect()))
}

/// The coefficients `B(m, n)` entering the refined 3-enumeration; zero
/// outside `0..=2m`.
pub fn b_coeff(m: usize, n: i64) -> ExactRational {
    let m_ = m as i64;
    if n < 0 || n > 2 * m_ {
        return ExactRational::zero();
    }
    let pre = ratio(fact(2 * m + 1) * fact(m), BigInt::from(3).pow(m as u32) * fact(3 * m + 2));
    let mut sum = BigInt::from(0);
    for l in (n - m_).max(0)..=n / 2 {
        let k = n - 2 * l;
        sum += BigInt::from(2 * m_ + 2 - n + 2 * l)
            * binom(3 * m_ + 3, k)
            * binom(2 * m_ + l - n + 1, m_ + 1)
            * binom(m_ + l + 1, m_ + 1)
            * (BigInt::from(1) << k as usize);
    }
    pre * ExactRational::from_integer(sum)
}

/// Refined 3-enumeration for `N ≥ 2`.
pub fn h_refined_3(n: usize) -> Result<RefinedVector> {
    check_n(n, 2)?;
    let r = |v: i64| ExactRational::from_i64(v);
    let values = if n.is_multiple_of(2) {
        let m = (n - 2) / 2;
        (1..=n as i64).map(|k| (b_coeff(m, k - 1) + b_coeff(m, k - 2)) / r(2)).collect()
    } else {
        let m = (n - 3) / 2;
        (1..=n as i64)
            .map(|k| (r(2) * b_coeff(m, k - 1) + r(5) * b_coeff(m, k - 2) + r(2) * b_coeff(m, k - 3)) / r(9))
            .collect()
    };
    Ok(RefinedVector::new(values))
}

/// Boundary two-point function `H_N^{(r1,r2)}` (top and bottom row, both
/// counted from the right) from the one-point functions of sizes `N` and
/// `N−1`. Entry `[r1−1][r2−1]`.
pub fn two_point_from_one(hn: &RefinedVector, hnm1: &RefinedVector) -> Result<Vec<Vec<ExactRational>>> {
    let n = hn.n;
    if n < 2 || hnm1.n + 1 != n {
        return Err(Error::InvalidParameter(format!("sizes {} and {} are not N and N−1", hn.n, hnm1.n)));
    }
    let n_ = n as i64;
    let mut out = vec![vec![ExactRational::zero(); n]; n];
    for (r1, row) in (1..=n_).zip(out.iter_mut()) {
        for (r2, slot) in (1..=n_).zip(row.iter_mut()) {
            let mut s = ExactRational::zero();
            for j in 1..=n_ {
                let b = n_ - r2 + j;
                s = s + hn.get(r1 - j + 1) * hnm1.get(b) - hn.get(r1 - j) * hnm1.get(b) - hnm1.get(r1 - j) * hn.get(b + 1)
                    + hnm1.get(r1 - j) * hn.get(b);
            }
            *slot = s;
        }
    }
    Ok(out)
}

/// `H_N(u,v) = [u H_{N−1}(u)(v−1) H_N(v) − v H_{N−1}(v)(u−1) H_N(u)] / (v−u)`,
/// with `u` as variable 0 and `v` as variable 1. The division is exact.
pub fn gen_two_from_gen(hn: &Poly<ExactRational>, hnm1: &Poly<ExactRational>) -> Result<MPoly> {
    let u = MPoly::var(0);
    let v = MPoly::var(1);
    let one = MPoly::constant(ExactRational::one());
    let hn_u = MPoly::from_univariate(hn, 0);
    let hn_v = MPoly::from_univariate(hn, 1);
    let hm_u = MPoly::from_univariate(hnm1, 0);
    let hm_v = MPoly::from_univariate(hnm1, 1);
    let num = &(&(&u * &hm_u) * &(&(&v - &one) * &hn_v)) - &(&(&v * &hm_v) * &(&(&u - &one) * &hn_u));
    let den = &v - &u;
    let (q, r) = num.div_rem(&den).expect("nonzero divisor");
    if !r.is_zero() {
        return Err(Error::Inconsistent("numerator is not divisible by v − u".into()));
    }
    Ok(q)
}

/// `G^{(r)} = Σ_{j ≤ r} H^{(j)}`.
pub fn g_from_h(h: &RefinedVector) -> Vec<ExactRational> {
    let mut acc = ExactRational::zero();
    h.values
        .iter()
        .map(|v| {
            acc = acc.clone() + v;
            acc.clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::oracle::{self, XPoint};

    fn rats(v: &[(i64, i64)]) -> Vec<ExactRational> {
        v.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn totals() {
        let expected = [1u64, 2, 7, 42, 429, 7436, 218348, 10850216];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(a_total(i + 1), BigInt::from(e));
        }
        for n in 1..=7 {
            assert_eq!(a_total(n), BigInt::from(crate::asm::count(n)));
        }
    }

    #[test]
    fn refined_one_enumeration() {
        assert_eq!(h_refined_1(3).unwrap().values, rats(&[(2, 7), (3, 7), (2, 7)]));
        assert_eq!(h_refined_1(1).unwrap().values, rats(&[(1, 1)]));
        assert_eq!(h_refined_1(4).unwrap().values[0], rat(1, 6));
        for n in 2..=12 {
            let h = h_refined_1(n).unwrap();
            assert_eq!(recurrence_solve_1(n).unwrap(), h);
            assert_eq!(gen_1(n).unwrap(), h.to_poly());
            assert_eq!(h.sum(), rat(1, 1));
            let a = ExactRational::from_integer(a_total(n));
            assert!(h.values.iter().all(|v| (v.clone() * &a).is_integer()));
        }
        assert_eq!(gen_1(2).unwrap(), Poly::new(rats(&[(1, 2), (1, 2)])));
    }

    #[test]
    fn unit_value_by_chu_vandermonde() {
        for n in 1..=12 {
            let (s, p) = gen_1_unit_value(n).unwrap();
            assert_eq!(s, p);
            assert_eq!(s * gen_1_normalization(n), rat(1, 1));
        }
    }

    #[test]
    fn recurrence_ratio() {
        let h = recurrence_solve_1(3).unwrap();
        assert_eq!(h.values[1].clone() / &h.values[0], rat(3, 2));
        assert_eq!(recurrence_solve_1(2).unwrap().values, rats(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn three_enumeration() {
        assert_eq!(b_coeff(1, 0), rat(1, 5));
        assert_eq!(b_coeff(1, 1), rat(3, 5));
        assert_eq!(b_coeff(1, -1), rat(0, 1));
        for m in 0..=6 {
            let total = (0..=2 * m as i64).fold(ExactRational::zero(), |a, n| a + b_coeff(m, n));
            assert_eq!(total, rat(1, 1), "m = {m}");
            for n in 0..=2 * m as i64 {
                assert_eq!(b_coeff(m, n), b_coeff(m, 2 * m as i64 - n));
            }
        }
        assert_eq!(h_refined_3(4).unwrap().values, rats(&[(1, 10), (2, 5), (2, 5), (1, 10)]));
        assert_eq!(h_refined_3(5).unwrap().values[0], rat(2, 45));
        assert!(h_refined_3(1).is_err());
        let x3 = XPoint::from_int(3);
        for n in 2..=7 {
            let h = h_refined_3(n).unwrap();
            assert!(h.is_palindromic());
            assert_eq!(h.sum(), rat(1, 1));
            assert_eq!(h.values, oracle::correlators(n, &x3).unwrap().one_point, "N = {n}");
        }
    }

    #[test]
    fn two_point_small() {
        let h2 = RefinedVector::new(rats(&[(1, 2), (1, 2)]));
        let h1 = RefinedVector::new(rats(&[(1, 1)]));
        let t = two_point_from_one(&h2, &h1).unwrap();
        assert_eq!(t, vec![rats(&[(0, 1), (1, 2)]), rats(&[(1, 2), (0, 1)])]);
        assert!(two_point_from_one(&h2, &h2).is_err());
    }

    #[test]
    fn two_point_matches_enumeration() {
        for xv in 1..=3 {
            let x = XPoint::from_int(xv);
            for n in 2..=5 {
                let hn = RefinedVector::new(oracle::correlators(n, &x).unwrap().one_point);
                let hm = RefinedVector::new(oracle::correlators(n - 1, &x).unwrap().one_point);
                let t = two_point_from_one(&hn, &hm).unwrap();
                assert_eq!(t, oracle::correlators(n, &x).unwrap().two_point, "N = {n}, x = {xv}");
                for (r1, row) in t.iter().enumerate() {
                    let marginal = row.iter().fold(ExactRational::zero(), |a, b| a + b);
                    assert_eq!(marginal, hn.values[r1]);
                }
            }
        }
    }

    #[test]
    fn generating_two_point() {
        let g = gen_two_from_gen(&Poly::new(rats(&[(1, 2), (1, 2)])), &Poly::from_ints(&[1])).unwrap();
        assert_eq!(g.to_string_vars(&["u", "v"]), "1/2 + 1/2*u*v");
        for xv in 1..=3 {
            let x = XPoint::from_int(xv);
            for n in 2..=5 {
                let g = gen_two_from_gen(&oracle::gen_one(n, &x).unwrap(), &oracle::gen_one(n - 1, &x).unwrap()).unwrap();
                assert_eq!(g, oracle::gen_two(n, &x).unwrap(), "N = {n}, x = {xv}");
                let one = rat(1, 1);
                assert_eq!(g.eval(&[one.clone(), one.clone()]), one);
                let at_u1 = g.substitute(0, &one);
                assert_eq!(at_u1, MPoly::from_univariate(&oracle::gen_one(n, &x).unwrap(), 1));
            }
        }
    }

    #[test]
    fn partial_sums() {
        let g = g_from_h(&h_refined_1(3).unwrap());
        assert_eq!(g, rats(&[(2, 7), (5, 7), (1, 1)]));
        for n in 1..=8 {
            let g = g_from_h(&h_refined_1(n).unwrap());
            assert_eq!(g.last().unwrap(), &rat(1, 1));
            assert!(g.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
