//! Orthogonal polynomials for the weight `μ(x) = e^{x(λ−π/2)} sinh(ηx)/sinh(πx/2)`.
//!
//! The moments of `μ` are the derivatives `∂_λ^n φ` of
//! `φ = sin 2η / (sin(λ−η) sin(λ+η))`, so the Hankel matrix of the partition
//! function is the moment matrix of `μ`. At the ice point (`λ = π/2`,
//! `η = π/6`) the polynomials are Continuous Hahn polynomials and everything
//! is exact over `Q(√3)`.

use num_bigint::BigInt;

use crate::closedform::RefinedVector;
use crate::error::{Error, Result};
use crate::exactmath::{
    determinant, factorial, hyp3f2_terminating, pochhammer, rat, with_precision, ExactRational, Field,
    GaussianRational, Jet, Poly, QSqrt3, Real, Ring, Sqrt3Scaled,
};

/// Which weight a moment sequence or polynomial system belongs to.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight {
    /// `λ = π/2`, `η = π/6`: Continuous Hahn with parameters `(1/3, 2/3, 1/3, 2/3)`.
    IceContinuousHahn,
    Generic { lambda: Real, eta: Real },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MomentSeq<F> {
    /// `c_0, …, c_{2M}`.
    pub values: Vec<F>,
    pub weight: Weight,
}

/// `P_0, …, P_M` with leading coefficients `κ_n` and norms `h_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoSystem<F> {
    pub polys: Vec<Poly<F>>,
    pub kappa: Vec<F>,
    pub h: Vec<F>,
    pub weight: Weight,
}

impl<F: Field> OrthoSystem<F> {
    pub fn degree_bound(&self) -> usize {
        self.polys.len() - 1
    }

    /// Same system with `P_n` rescaled to leading coefficient `kappa[n]`.
    pub fn rescaled(&self, kappa: &[F]) -> Result<Self> {
        if kappa.len() < self.polys.len() {
            return Err(Error::InvalidParameter("too few leading coefficients".into()));
        }
        let mut out = self.clone();
        for n in 0..self.polys.len() {
            let s = kappa[n].clone() / &self.kappa[n];
            out.polys[n] = self.polys[n].scale(&s);
            out.h[n] = self.h[n].clone() * &s * &s;
            out.kappa[n] = kappa[n].clone();
        }
        Ok(out)
    }
}

/// `D_n = Π_{k≤n} h_k/κ_k²`.
pub fn hankel_from_norms<F: Field>(system: &OrthoSystem<F>, n: usize) -> Result<F> {
    if n > system.degree_bound() {
        return Err(Error::InsufficientOrder { have: system.degree_bound(), need: n });
    }
    Ok((0..=n).fold(F::one(), |acc, k| acc * &system.h[k] / (system.kappa[k].clone() * &system.kappa[k])))
}

/// `(c_{j+k})_{0≤j,k≤n}`.
pub fn hankel_matrix<F: Clone>(moments: &[F], n: usize) -> Result<Vec<Vec<F>>> {
    if moments.len() < 2 * n + 1 {
        return Err(Error::InsufficientOrder { have: moments.len().saturating_sub(1), need: 2 * n });
    }
    Ok((0..=n).map(|j| moments[j..=j + n].to_vec()).collect())
}

/// `Σ p_i q_j c_{i+j}`.
pub fn inner_product<F: Field>(p: &Poly<F>, q: &Poly<F>, moments: &[F]) -> Result<F> {
    let mut acc = F::zero();
    for (i, a) in p.coeffs().iter().enumerate() {
        for (j, b) in q.coeffs().iter().enumerate() {
            let c = moments
                .get(i + j)
                .ok_or(Error::InsufficientOrder { have: moments.len().saturating_sub(1), need: i + j })?;
            acc = acc + a.clone() * b * c;
        }
    }
    Ok(acc)
}

/// Monic orthogonal polynomials up to degree `max_degree` by the three-term
/// recursion `π_{n+1} = (x − α_n) π_n − β_n π_{n−1}` driven by the moments.
pub fn gram_from_moments<F: Field>(moments: &MomentSeq<F>, max_degree: usize) -> Result<OrthoSystem<F>> {
    let c = &moments.values;
    if c.len() < 2 * max_degree + 1 {
        return Err(Error::InsufficientOrder { have: c.len().saturating_sub(1), need: 2 * max_degree });
    }
    let x = Poly::<F>::x();
    let mut polys: Vec<Poly<F>> = vec![Poly::constant(F::one())];
    let mut h = vec![c[0].clone()];
    if h[0].is_zero() {
        return Err(Error::Singular("zeroth moment vanishes".into()));
    }
    for n in 0..max_degree {
        let pn = &polys[n];
        let xpn = &x * pn;
        let alpha = inner_product(&xpn, pn, c)? / &h[n];
        let mut next = &xpn - &pn.scale(&alpha);
        if n > 0 {
            let beta = h[n].clone() / &h[n - 1];
            next = &next - &polys[n - 1].scale(&beta);
        }
        let hn = inner_product(&next, &next, c)?;
        if hn.is_zero() {
            return Err(Error::Singular(format!("Hankel minor of order {} vanishes", n + 1)));
        }
        polys.push(next);
        h.push(hn);
    }
    let kappa = vec![F::one(); max_degree + 1];
    Ok(OrthoSystem { polys, kappa, h, weight: moments.weight.clone() })
}

/// `⟨P_n, P_m⟩` for all pairs.
pub fn gram_matrix<F: Field>(system: &OrthoSystem<F>, moments: &[F]) -> Result<Vec<Vec<F>>> {
    system.polys.iter().map(|p| system.polys.iter().map(|q| inner_product(p, q, moments)).collect()).collect()
}

/// Largest `|⟨P_n,P_m⟩ − δ_{nm} h_n| / √(h_n h_m)`.
pub fn gram_residual(system: &OrthoSystem<Real>, moments: &[Real]) -> Result<Real> {
    let g = gram_matrix(system, moments)?;
    let mut worst = Real::zero();
    for (n, row) in g.iter().enumerate() {
        for (m, v) in row.iter().enumerate() {
            let target = if n == m { system.h[n].clone() } else { Real::zero() };
            let scale = (system.h[n].clone() * &system.h[m]).abs().sqrt();
            worst = worst.max((v.clone() - &target).abs() / scale);
        }
    }
    Ok(worst)
}

/// Monic `P_n` from the determinant `D_n^{(1)}(x) / D_{n−1}`, expanded along
/// the column of powers of `x`.
pub fn px_determinant<F: Field>(moments: &[F], n: usize) -> Result<Poly<F>> {
    if n == 0 {
        return Ok(Poly::constant(F::one()));
    }
    let prev = determinant(&hankel_matrix(moments, n - 1)?)?;
    if prev.is_zero() {
        return Err(Error::Singular(format!("D_{} vanishes", n - 1)));
    }
    if moments.len() < 2 * n {
        return Err(Error::InsufficientOrder { have: moments.len().saturating_sub(1), need: 2 * n - 1 });
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // minor without row i and without the last column
        let minor: Vec<Vec<F>> =
            (0..=n).filter(|&r| r != i).map(|r| (0..n).map(|k| moments[r + k].clone()).collect()).collect();
        let sign = if (i + n).is_multiple_of(2) { F::one() } else { -F::one() };
        coeffs.push(sign * determinant(&minor)? / &prev);
    }
    Ok(Poly::new(coeffs))
}

/// `c_n = ∂_λ^n φ` for `n < count`, from the sines and cosines of `λ∓η`
/// and `sin 2η`.
pub fn phi_moments<F: Field>(
    minus: (&F, &F),
    plus: (&F, &F),
    sin_2eta: &F,
    count: usize,
) -> Result<Vec<F>> {
    let order = count.saturating_sub(1);
    let a = Jet::sin_shift(minus.0, minus.1, order);
    let b = Jet::sin_shift(plus.0, plus.1, order);
    let phi = (&a * &b).recip()?.scale(sin_2eta);
    (0..count).map(|n| phi.derivative_at_zero(n)).collect()
}

/// Exact moments of the ice-point weight; odd ones vanish.
pub fn ice_moments(count: usize) -> Result<MomentSeq<QSqrt3>> {
    let half = QSqrt3::rational(rat(1, 2));
    let s3h = QSqrt3::new(ExactRational::zero(), rat(1, 2));
    let values = phi_moments((&s3h, &half), (&s3h, &-half.clone()), &s3h, count)?;
    Ok(MomentSeq { values, weight: Weight::IceContinuousHahn })
}

/// Moments at a generic point, by differentiating `φ` in high precision.
pub fn generic_moments(lambda: &Real, eta: &Real, count: usize) -> Result<MomentSeq<Real>> {
    let (sm, cm) = (lambda.clone() - eta).sin_cos();
    let (sp, cp) = (lambda.clone() + eta).sin_cos();
    let s2 = (eta.clone() * Real::from_i64(2)).sin();
    let values = phi_moments((&sm, &cm), (&sp, &cp), &s2, count)?;
    Ok(MomentSeq { values, weight: Weight::Generic { lambda: lambda.clone(), eta: eta.clone() } })
}

/// Continuous Hahn `P_n(x) = iⁿ (2/3)_n ₃F₂(−n, n+1, 1/3 + ix/6; 2/3, 1; 1)`,
/// expanded over the Gaussian rationals.
pub fn chahn_ice(n: usize) -> Result<Poly<ExactRational>> {
    let g = |v: ExactRational| Poly::constant(GaussianRational::real(v));
    let n_ = n as i64;
    let third = Poly::linear(
        GaussianRational::real(rat(1, 3)),
        GaussianRational::new(ExactRational::zero(), rat(1, 6)),
    );
    let series =
        hyp3f2_terminating([g(rat(-n_, 1)), g(rat(n_ + 1, 1)), third], [g(rat(2, 3)), g(rat(1, 1))], 0)?;
    let mut front = pochhammer(&GaussianRational::real(rat(2, 3)), n as u32);
    for _ in 0..n {
        front = front * GaussianRational::i();
    }
    let p = series.scale(&front);
    if let Some((k, c)) = p.coeffs().iter().enumerate().find(|(_, c)| !c.is_real()) {
        return Err(Error::Inconsistent(format!("P_{n} has imaginary coefficient {c} at x^{k}")));
    }
    Ok(p.map(|c| c.re.clone()))
}

/// `h_n = 2(3n+1)!/((2n+1) 3^{3n+1/2} n!)` and `κ_n = (2n)!/(6ⁿ (n!)²)`.
pub fn ice_norms(n: usize) -> (Sqrt3Scaled, ExactRational) {
    let f = |k: usize| factorial(k as u64);
    let h = ExactRational::new(
        BigInt::from(2) * f(3 * n + 1),
        BigInt::from(2 * n + 1) * BigInt::from(27).pow(n as u32) * f(n),
    );
    let kappa = ExactRational::new(f(2 * n), BigInt::from(6).pow(n as u32) * f(n) * f(n));
    (Sqrt3Scaled::new(h, -1), kappa)
}

/// The ice-point system with `P_n = chahn_ice(n)` and the closed-form norms.
pub fn ice_system(max_degree: usize) -> Result<OrthoSystem<QSqrt3>> {
    let mut polys = Vec::new();
    let mut kappa = Vec::new();
    let mut h = Vec::new();
    for n in 0..=max_degree {
        polys.push(chahn_ice(n)?.map(|c| QSqrt3::rational(c.clone())));
        let (hn, kn) = ice_norms(n);
        h.push(hn.to_qsqrt3());
        kappa.push(QSqrt3::rational(kn));
    }
    Ok(OrthoSystem { polys, kappa, h, weight: Weight::IceContinuousHahn })
}

/// `Z_N` at the ice point, written as `rational_factor · (√3/2)^{N²}`.
#[derive(Clone, Debug, PartialEq)]
pub struct IcePartition {
    pub n: usize,
    pub rational_factor: ExactRational,
    pub value: Sqrt3Scaled,
}

/// `Z_N = (sin 2η/φ)^{N²} Π_{n<N} h_n/((n!)² κ_n²)` with the ice-point norms.
pub fn z_ice(n: usize) -> Result<IcePartition> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let system = ice_system(n - 1)?;
    let d = hankel_from_norms(&system, n - 1)?;
    let facts = (0..n).fold(ExactRational::one(), |acc, k| {
        let f = ExactRational::from_integer(factorial(k as u64));
        acc * &f * f
    });
    let nn = (n * n) as u32;
    // sin 2η / φ = sin(λ−η) sin(λ+η) = 3/4 at the ice point
    let z = QSqrt3::rational(Ring::pow(&rat(3, 4), nn) / facts) * d;
    let unit = Sqrt3Scaled::new(ExactRational::one() / Ring::pow(&rat(2, 1), nn), nn as i64).to_qsqrt3();
    let ratio = z / unit;
    let rational_factor = ratio
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::Inconsistent(format!("Z_{n}/(√3/2)^(N²) = {ratio} is not rational")))?;
    let value = Sqrt3Scaled::new(rational_factor.clone() / Ring::pow(&rat(2, 1), nn), nn as i64);
    Ok(IcePartition { n, rational_factor, value })
}

/// Left-hand side of the difference equation satisfied by `P_{N−1}`; zero
/// when the equation holds.
pub fn difference_eq_residual(n: usize) -> Result<Poly<GaussianRational>> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let gr = |v: ExactRational| GaussianRational::real(v);
    let gi = |v: ExactRational| GaussianRational::new(ExactRational::zero(), v);
    let p = chahn_ice(n - 1)?.map(|c| gr(c.clone()));
    let six_i = gi(rat(6, 1));
    let up = p.shift(&six_i);
    let down = p.shift(&-six_i);
    let lin = |c: ExactRational, s: i64| Poly::linear(gr(c), gi(rat(s, 6)));
    let left = &lin(rat(1, 3), -1) * &lin(rat(2, 3), -1);
    let right = &lin(rat(1, 3), 1) * &lin(rat(2, 3), 1);
    let nn = (n * (n - 1)) as i64;
    let mid = Poly::new(vec![gr(rat(-4, 9) - rat(nn, 1)), gr(rat(0, 1)), gr(rat(1, 18))]);
    Ok(&(&(&left * &up) + &(&mid * &p)) + &(&right * &down))
}

pub fn check_difference_eq(n: usize) -> Result<bool> {
    Ok(difference_eq_residual(n)?.is_zero())
}

/// Ice-point `H_N^{(r)}` for all `r` from `P_{N−1}(∂_ε) [ω(ε)]^{N−r} [ρ(ε)]^{N−1}`
/// at `ε = 0`, with `ω = sin ε/sin(ε−π/3)` and `ρ = sin(ε−π/3)/sin(ε+π/3)`,
/// normalized to unit sum. Exact over `Q(√3)`.
pub fn operator_correlator_ice(n: usize) -> Result<RefinedVector> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let order = n + 4;
    let half = QSqrt3::rational(rat(1, 2));
    let s3h = QSqrt3::new(ExactRational::zero(), rat(1, 2));
    let sin_e = Jet::sin_shift(&QSqrt3::zero(), &QSqrt3::one(), order);
    let sin_minus = Jet::sin_shift(&-s3h.clone(), &half, order);
    let sin_plus = Jet::sin_shift(&s3h, &half, order);
    let omega = sin_e.div(&sin_minus)?;
    let rho = sin_minus.div(&sin_plus)?;
    let p = chahn_ice(n - 1)?.map(|c| QSqrt3::rational(c.clone()));
    let rho_pow = rho.powi(n as i32 - 1)?;
    let raw: Vec<QSqrt3> = (1..=n)
        .map(|r| (&omega.powi((n - r) as i32)? * &rho_pow).apply_diffop(&p))
        .collect::<Result<_>>()?;
    let total = raw.iter().fold(QSqrt3::zero(), |a, b| a + b);
    if total.is_zero() {
        return Err(Error::Singular("operator values sum to zero".into()));
    }
    let values = raw
        .into_iter()
        .map(|v| {
            let q = v / &total;
            q.as_rational().cloned().ok_or_else(|| Error::Inconsistent(format!("H = {q} is not rational")))
        })
        .collect::<Result<_>>()?;
    Ok(RefinedVector::new(values))
}

/// `H_N^{(r)}(λ, η)` from the full operator representation
/// `(N−1)! sin 2η /(a^r b^{N−r+1}) · κ_{N−1}/h_{N−1} · P_{N−1}(∂_ε) f(ε)|₀`,
/// `f = sinᴺ⁻ʳε sinʳ⁻¹(ε−2η) / sinᴺ⁻¹(ε+λ−η)`. No normalization is imposed.
pub fn operator_correlator_numeric(
    system: &OrthoSystem<Real>,
    lambda: &Real,
    eta: &Real,
    n: usize,
    r: usize,
) -> Result<Real> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::InvalidParameter(format!("r = {r} outside 1..={n}")));
    }
    if system.degree_bound() + 1 < n {
        return Err(Error::InsufficientOrder { have: system.degree_bound(), need: n - 1 });
    }
    let order = n + 4;
    let two_eta = eta.clone() * Real::from_i64(2);
    let (s2, c2) = two_eta.sin_cos();
    let a = (lambda.clone() + eta).sin();
    let b = (lambda.clone() - eta).sin();
    let (slm, clm) = (lambda.clone() - eta).sin_cos();
    let sin_e = Jet::sin_shift(&Real::zero(), &Real::one(), order);
    let sin_shifted = Jet::sin_shift(&-s2.clone(), &c2, order);
    let denom = Jet::sin_shift(&slm, &clm, order);
    let f = (&sin_e.powi((n - r) as i32)? * &sin_shifted.powi(r as i32 - 1)?).div(&denom.powi(n as i32 - 1)?)?;
    let k = n - 1;
    let applied = f.apply_diffop(&system.polys[k])?;
    let fact = Real::from_rational(&ExactRational::from_integer(factorial(k as u64)));
    let front = fact * &s2 / (a.powi(r as i32) * b.powi((n - r + 1) as i32));
    Ok(front * &system.kappa[k] / &system.h[k] * applied)
}

/// Deviations under `λ → π−λ`: coefficients of `P_n(x;λ)` against
/// `(−1)ⁿ P_n(−x;π−λ)` and `h_n(λ)` against `h_n(π−λ)`, both relative.
#[derive(Clone, Debug)]
pub struct CrossingReport {
    pub max_degree: usize,
    pub poly_deviation: Real,
    pub norm_deviation: Real,
}

impl CrossingReport {
    pub fn holds(&self, tol: &Real) -> bool {
        self.poly_deviation <= *tol && self.norm_deviation <= *tol
    }
}

pub fn crossing_check(max_degree: usize, lambda: &Real, eta: &Real) -> Result<CrossingReport> {
    let count = 2 * max_degree + 1;
    let a = gram_from_moments(&generic_moments(lambda, eta, count)?, max_degree)?;
    let mirrored = Real::pi() - lambda;
    let b = gram_from_moments(&generic_moments(&mirrored, eta, count)?, max_degree)?;
    crossing_compare(&a, &b)
}

/// The comparison behind [`crossing_check`], for systems built elsewhere.
/// Both systems must share a normalization convention (e.g. monic).
pub fn crossing_compare(a: &OrthoSystem<Real>, b: &OrthoSystem<Real>) -> Result<CrossingReport> {
    let m = a.degree_bound().min(b.degree_bound());
    let mut poly_dev = Real::zero();
    let mut norm_dev = Real::zero();
    for n in 0..=m {
        let scale = a.polys[n].coeffs().iter().fold(Real::zero(), |s, c| s.max(c.abs()));
        for k in 0..=n {
            let sign = if (n + k) % 2 == 0 { Real::one() } else { -Real::one() };
            let d = (a.polys[n].coeff(k) - sign * b.polys[n].coeff(k)).abs() / &scale;
            poly_dev = poly_dev.max(d);
        }
        norm_dev = norm_dev.max(a.h[n].rel_err(&b.h[n]));
        norm_dev = norm_dev.max(a.kappa[n].rel_err(&b.kappa[n]));
    }
    Ok(CrossingReport { max_degree: m, poly_deviation: poly_dev, norm_deviation: norm_dev })
}

/// Runs `f` at the working precision for `digits` decimal digits.
pub fn at_digits<T>(digits: u32, f: impl FnOnce() -> T) -> T {
    with_precision(crate::exactmath::digits_to_bits(digits), f)
}
