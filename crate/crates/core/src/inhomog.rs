//! Partition function with `k` free row spectral variables, the rest set to
//! the homogeneous value, as a `k×k` determinant of one-point generating
//! polynomials:
//!
//! `Ž_N(u_1,…,u_k,1,…,1) = det[u_j^{k−1−i} (u_j−1)^i H_{N−k+1+i}(u_j)] / Δ(u)`
//!
//! with `Δ(u) = Π_{i<j} (u_j − u_i)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{determinant, determinant_cofactor, rat, ExactRational, MPoly, Poly, Ring};
use crate::oracle::{self, QPoint, XPoint};

/// Sizes, variables and the one-point generating polynomials `H_1..H_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct InhomSpec {
    pub n: usize,
    pub u_points: Vec<ExactRational>,
    /// `h_polys[m−1] = H_m(u)`.
    pub h_polys: Vec<Poly<ExactRational>>,
}

impl InhomSpec {
    pub fn new(n: usize, u_points: Vec<ExactRational>, h_polys: Vec<Poly<ExactRational>>) -> Result<Self> {
        let k = u_points.len();
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!("k = {k} outside 1..={n}")));
        }
        if h_polys.len() < n {
            return Err(Error::InvalidParameter(format!("need H_1..H_{n}, got {}", h_polys.len())));
        }
        for (i, p) in h_polys.iter().take(n).enumerate() {
            if p.degree().is_none_or(|d| d > i) || p.eval(&ExactRational::one()) != ExactRational::one() {
                return Err(Error::InvalidParameter(format!("H_{} is not a normalized generating polynomial", i + 1)));
            }
        }
        check_distinct(&u_points)?;
        Ok(Self { n, u_points, h_polys })
    }

    /// Generating polynomials taken from exhaustive enumeration at `x`.
    pub fn from_oracle(n: usize, u_points: Vec<ExactRational>, x: &XPoint) -> Result<Self> {
        let h = (1..=n).map(|m| oracle::gen_one(m, x)).collect::<Result<Vec<_>>>()?;
        Self::new(n, u_points, h)
    }

    pub fn k(&self) -> usize {
        self.u_points.len()
    }

    fn with_points(&self, n: usize, u_points: Vec<ExactRational>) -> Result<Self> {
        Self::new(n, u_points, self.h_polys.clone())
    }
}

fn check_distinct(u: &[ExactRational]) -> Result<()> {
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if u[i] == u[j] {
                return Err(Error::InvalidParameter(format!("u_{} = u_{} = {}", i + 1, j + 1, u[i])));
            }
        }
    }
    Ok(())
}

fn entry<R: Ring>(u: &R, one: &R, h: &Poly<ExactRational>, lift: impl Fn(&ExactRational) -> R, k: usize, i: usize) -> R {
    let hv = h.coeffs().iter().rev().fold(R::zero(), |acc, c| acc * u + lift(c));
    Ring::pow(u, (k - 1 - i) as u32) * Ring::pow(&(u.clone() - one), i as u32) * hv
}

/// `Ž_N` at the given points, as a rational determinant divided by the
/// Vandermonde value.
pub fn zhat_det(spec: &InhomSpec) -> Result<ExactRational> {
    let (n, k) = (spec.n, spec.k());
    let one = ExactRational::one();
    let m: Vec<Vec<ExactRational>> = (0..k)
        .map(|i| spec.u_points.iter().map(|u| entry(u, &one, &spec.h_polys[n - k + i], Clone::clone, k, i)).collect())
        .collect();
    let det = determinant(&m)?;
    let mut vdm = ExactRational::one();
    for i in 0..k {
        for j in i + 1..k {
            vdm *= spec.u_points[j].clone() - &spec.u_points[i];
        }
    }
    if vdm.is_zero() {
        return Err(Error::DivisionByZero("coincident spectral variables".into()));
    }
    Ok(det / vdm)
}

/// `Ž_N(u_1,…,u_k)` as a polynomial in `k` variables, by exact division of
/// the determinant by the Vandermonde polynomial.
pub fn zhat_poly(n: usize, k: usize, h_polys: &[Poly<ExactRational>]) -> Result<MPoly> {
    if k == 0 || k > n || h_polys.len() < n {
        return Err(Error::InvalidParameter(format!("k = {k}, N = {n}, {} polynomials", h_polys.len())));
    }
    let one = MPoly::constant(ExactRational::one());
    let vars: Vec<MPoly> = (0..k).map(MPoly::var).collect();
    let m: Vec<Vec<MPoly>> = (0..k)
        .map(|i| vars.iter().map(|u| entry(u, &one, &h_polys[n - k + i], |c| MPoly::constant(c.clone()), k, i)).collect())
        .collect();
    let mut acc = determinant_cofactor(&m)?;
    for i in 0..k {
        for j in i + 1..k {
            let d = &vars[j] - &vars[i];
            let (q, r) = acc.div_rem(&d).expect("nonzero divisor");
            if !r.is_zero() {
                return Err(Error::Inconsistent(format!("determinant not divisible by u_{} − u_{}", j + 1, i + 1)));
            }
            acc = q;
        }
    }
    Ok(acc)
}

/// Setting the last variable to 1 in the exact polynomial reproduces the
/// `(k−1)`-variable function, as polynomials and at the given points.
pub fn check_u_to_1(spec: &InhomSpec) -> Result<bool> {
    let (n, k) = (spec.n, spec.k());
    if k < 2 {
        return Ok(true);
    }
    let full = zhat_poly(n, k, &spec.h_polys)?;
    let limit = full.substitute(k - 1, &ExactRational::one());
    let reduced = zhat_poly(n, k - 1, &spec.h_polys)?;
    if limit != reduced {
        return Ok(false);
    }
    let pts = &spec.u_points[..k - 1];
    Ok(limit.eval(pts) == zhat_det(&spec.with_points(n, pts.to_vec())?)?)
}

/// `Ž_N(u_1,…,u_{k−1},0) = H_N(0) · Ž_{N−1}(u_1,…,u_{k−1})`.
pub fn check_korepin(spec: &InhomSpec) -> Result<bool> {
    let (n, k) = (spec.n, spec.k());
    if n < 2 {
        return Err(Error::InvalidParameter("needs N ≥ 2".into()));
    }
    let mut pts = spec.u_points[..k - 1].to_vec();
    if pts.iter().any(Ring::is_zero) {
        return Err(Error::InvalidParameter("spectral variables must differ from 0".into()));
    }
    let smaller = if k == 1 { ExactRational::one() } else { zhat_det(&spec.with_points(n - 1, pts.clone())?)? };
    pts.push(ExactRational::zero());
    let lhs = zhat_det(&spec.with_points(n, pts)?)?;
    Ok(lhs == spec.h_polys[n - 1].coeff(0) * smaller)
}

/// Distinct random rationals `p/q`, `|p| ≤ 12`, `1 ≤ q ≤ 6`, avoiding 0 and 1.
pub fn random_points(rng: &mut impl Rng, k: usize) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = Vec::with_capacity(k);
    while out.len() < k {
        let v = rat(rng.gen_range(-12..=12), rng.gen_range(1..=6));
        if v.is_zero() || v == ExactRational::one() || out.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub u_points: Vec<ExactRational>,
    pub determinant: ExactRational,
    pub enumeration: ExactRational,
}

/// Compares the determinant against direct summation over configurations
/// (remaining `N−k` variables at 1) on `trials` seeded random tuples.
/// Returns the first mismatch, if any.
pub fn verify_against_oracle(n: usize, q: &QPoint, k: usize, trials: usize, seed: u64) -> Result<Option<Mismatch>> {
    let x = q.x();
    let h = (1..=n).map(|m| oracle::gen_one(m, &x)).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let u = random_points(&mut rng, k);
        let spec = InhomSpec::new(n, u.clone(), h.clone())?;
        let det = zhat_det(&spec)?;
        let mut full = u.clone();
        full.resize(n, ExactRational::one());
        let direct = oracle::inhom_eval(n, q, &full)?;
        if det != direct {
            return Ok(Some(Mismatch { u_points: u, determinant: det, enumeration: direct }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{gen_1, gen_two_from_gen};

    fn ice_polys(n: usize) -> Vec<Poly<ExactRational>> {
        (1..=n).map(|m| gen_1(m).unwrap()).collect()
    }

    #[test]
    fn small_closed_forms() {
        let h = ice_polys(3);
        let one = InhomSpec::new(3, vec![rat(5, 2)], h.clone()).unwrap();
        assert_eq!(zhat_det(&one).unwrap(), h[2].eval(&rat(5, 2)));
        let two = InhomSpec::new(2, vec![rat(3, 1), rat(-2, 1)], h.clone()).unwrap();
        assert_eq!(zhat_det(&two).unwrap(), (rat(1, 1) + rat(3, 1) * rat(-2, 1)) / rat(2, 1));
        let p = zhat_poly(2, 2, &h).unwrap();
        assert_eq!(p.to_string_vars(&["u", "v"]), "1/2 + 1/2*u*v");
        assert_eq!(zhat_poly(3, 2, &h).unwrap(), gen_two_from_gen(&h[2], &h[1]).unwrap());
        assert!(InhomSpec::new(3, vec![rat(2, 1), rat(2, 1)], h).is_err());
    }

    #[test]
    fn symmetric_and_normalized() {
        let h = ice_polys(5);
        for k in 1..=5 {
            let p = zhat_poly(5, k, &h).unwrap();
            assert_eq!(p.eval(&vec![rat(1, 1); k]), rat(1, 1), "k = {k}");
            for v in 0..k {
                assert!(p.degree_in(v).unwrap_or(0) <= 4);
            }
            if k >= 2 {
                let mut perm: Vec<usize> = (0..k).collect();
                perm.swap(0, k - 1);
                assert_eq!(p.permute_vars(&perm), p);
                perm = (0..k).map(|i| (i + 1) % k).collect();
                assert_eq!(p.permute_vars(&perm), p);
            }
        }
    }

    #[test]
    fn homogeneous_limit_and_korepin() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for xv in 1..=3 {
            let x = XPoint::from_int(xv);
            for n in 2..=5 {
                for k in 1..=n {
                    let spec = InhomSpec::from_oracle(n, random_points(&mut rng, k), &x).unwrap();
                    assert!(check_u_to_1(&spec).unwrap(), "N = {n}, k = {k}, x = {xv}");
                    assert!(check_korepin(&spec).unwrap(), "N = {n}, k = {k}, x = {xv}");
                }
            }
        }
        let spec = InhomSpec::new(2, vec![rat(4, 1), rat(3, 1)], ice_polys(2)).unwrap();
        assert!(check_korepin(&spec).unwrap());
    }

    #[test]
    fn determinant_matches_enumeration() {
        for qv in [rat(2, 1), rat(3, 1), rat(-2, 1), rat(1, 2)] {
            let q = QPoint::new(qv.clone()).unwrap();
            for n in 1..=5 {
                for k in 1..=n {
                    let m = verify_against_oracle(n, &q, k, 3, 11 * n as u64 + k as u64).unwrap();
                    assert!(m.is_none(), "N = {n}, k = {k}, q = {qv}: {m:?}");
                }
            }
        }
    }
}
