//! High-precision evaluation at generic `(λ, η)` in the disordered regime:
//! moments of the weight by quadrature, the Hankel partition function and
//! the one- and two-point boundary correlators from their determinant forms.
//!
//! All routines run at an internal precision of `digits + 3N + 10` decimal
//! digits, to absorb the cancellation in Hankel determinants.

use crate::error::{Error, Result};
use crate::exactmath::{digits_to_bits, factorial, lu_determinant, with_precision, BiJet, ExactRational, Field, Jet, Real, Ring};

/// Spectral and crossing parameters together with the requested accuracy.
#[derive(Clone, Debug)]
pub struct WeightParams {
    pub lambda: Real,
    pub eta: Real,
    pub digits: u32,
}

/// Largest size accepted by the numeric determinant routines.
pub const MAX_NUMERIC_N: usize = 10;

fn internal_digits(digits: u32, n: usize) -> u32 {
    digits + 3 * n as u32 + 10
}

fn scoped<T>(digits: u32, n: usize, f: impl FnOnce() -> T) -> T {
    with_precision(digits_to_bits(internal_digits(digits, n)), f)
}

impl WeightParams {
    /// Checks `0 < η < π/2` and `η < λ < π − η`.
    pub fn new(lambda: Real, eta: Real, digits: u32) -> Result<Self> {
        let pi = with_precision(lambda.prec().max(eta.prec()), Real::pi);
        let half_pi = pi.clone() / Real::from_i64(2);
        if !(eta > Real::zero() && eta < half_pi) {
            return Err(Error::InvalidParameter(format!("η = {} outside (0, π/2)", eta.to_f64())));
        }
        if !(lambda > eta && lambda < pi - &eta) {
            return Err(Error::InvalidParameter(format!("λ = {} outside (η, π−η)", lambda.to_f64())));
        }
        Ok(Self { lambda, eta, digits })
    }

    /// Parses angles written as decimals or as `pi`, `pi/6`, `2pi/3`, `2*pi/3`.
    pub fn parse(lambda: &str, eta: &str, digits: u32) -> Result<Self> {
        let bits = digits_to_bits(internal_digits(digits, MAX_NUMERIC_N));
        let (l, e) = with_precision(bits, || (parse_angle(lambda), parse_angle(eta)));
        Self::new(l?, e?, digits)
    }

    /// `λ = π/2`, `η = π/6`, where `a = b = c`.
    pub fn ice(digits: u32) -> Self {
        Self::parse("pi/2", "pi/6", digits).expect("ice point lies in the disordered regime")
    }

    /// `λ → π − λ`.
    pub fn crossed(&self) -> Self {
        let pi = with_precision(self.lambda.prec(), Real::pi);
        Self { lambda: pi - &self.lambda, eta: self.eta.clone(), digits: self.digits }
    }

    /// `(a, b, c) = (sin(λ+η), sin(λ−η), sin 2η)`.
    pub fn weights(&self) -> (Real, Real, Real) {
        let a = (self.lambda.clone() + &self.eta).sin();
        let b = (self.lambda.clone() - &self.eta).sin();
        let c = (self.eta.clone() * Real::from_i64(2)).sin();
        (a, b, c)
    }

    /// `Δ = cos 2η`.
    pub fn delta(&self) -> Real {
        (self.eta.clone() * Real::from_i64(2)).cos()
    }

    /// Tolerance `10^{−(digits − slack)}`.
    pub fn tolerance(&self, slack: u32) -> Real {
        Real::tolerance(self.digits as i32 - slack as i32)
    }
}

/// Decimal number or rational multiple of π (`pi`, `pi/6`, `2pi/3`, `-pi/4`).
pub fn parse_angle(s: &str) -> Result<Real> {
    let t = s.trim().to_ascii_lowercase().replace(' ', "");
    let bad = || Error::InvalidParameter(format!("cannot parse angle {s:?}"));
    if let Some(pos) = t.find("pi") {
        let head = t[..pos].trim_end_matches('*');
        let tail = &t[pos + 2..];
        let num = match head {
            "" | "+" => 1.0,
            "-" => -1.0,
            h => h.parse::<f64>().map_err(|_| bad())?,
        };
        let den = if tail.is_empty() {
            1
        } else {
            tail.strip_prefix('/').and_then(|d| d.parse::<i64>().ok()).filter(|&d| d != 0).ok_or_else(bad)?
        };
        if num.fract() != 0.0 {
            return Err(bad());
        }
        Ok(Real::pi() * Real::from_i64(num as i64) / Real::from_i64(den))
    } else {
        Real::parse(&t).ok_or_else(bad)
    }
}

/// `Δ = (a² + b² − c²)/(2ab)`.
pub fn delta_of(a: &Real, b: &Real, c: &Real) -> Result<Real> {
    if !(*a > Real::zero() && *b > Real::zero()) {
        return Err(Error::InvalidParameter("a and b must be positive".into()));
    }
    Ok((a.clone() * a + b.clone() * b - c.clone() * c) / (Real::from_i64(2) * a * b))
}

/// Tanh-sinh abscissas and weights on `[−1, 1]` for one refinement level.
struct TanhSinhLevel {
    nodes: Vec<(Real, Real)>,
}

/// Levels `0..=max_level` with step `2^{−level}`; level 0 holds every
/// integer `t`, later levels only the new odd multiples.
fn tanh_sinh_levels(max_level: u32, digits: u32) -> Vec<TanhSinhLevel> {
    // weights fall below 10^{−digits−10} beyond t_max
    let target = -((digits + 10) as f64) * std::f64::consts::LN_10;
    let mut t_max = 1.0f64;
    while {
        let s = std::f64::consts::FRAC_PI_2 * t_max.sinh();
        (std::f64::consts::FRAC_PI_2 * t_max.cosh()).ln() - 2.0 * (s.cosh().ln()) > target
    } {
        t_max += 0.05;
    }
    let half_pi = Real::pi() / Real::from_i64(2);
    let node = |t: &Real| {
        let s = half_pi.clone() * t.sinh();
        let ch = s.cosh();
        let x = s.tanh();
        let w = half_pi.clone() * t.cosh() / (ch.clone() * &ch);
        (x, w)
    };
    let mut levels = Vec::new();
    for level in 0..=max_level {
        let h = Real::one() / Real::from_i64(1 << level);
        let kmax = (t_max * f64::from(1u32 << level)).ceil() as i64;
        let mut nodes = Vec::new();
        for k in -kmax..=kmax {
            if level > 0 && k % 2 == 0 {
                continue;
            }
            nodes.push(node(&(h.clone() * Real::from_i64(k))));
        }
        levels.push(TanhSinhLevel { nodes });
    }
    levels
}

/// `μ(x) = e^{x(λ−π/2)} sinh(ηx)/sinh(πx/2)`, continuous at 0.
fn weight_at(x: &Real, shift: &Real, eta: &Real, half_pi: &Real) -> Real {
    if x.is_zero() {
        return eta.clone() / half_pi;
    }
    (x.clone() * shift).exp() * (x.clone() * eta).sinh() / (x.clone() * half_pi).sinh()
}

/// Cut-off `T` such that `∫_T^∞ x^n e^{−γx} dx` is below `10^{−(digits+5)}`.
fn cutoff(n: usize, gamma: f64, digits: u32) -> f64 {
    let target = -((digits + 5) as f64) * std::f64::consts::LN_10;
    let nf = n as f64;
    let mut t = (2.0 * nf / gamma).max(4.0);
    loop {
        let rate = gamma - nf / t;
        if rate > 0.0 {
            let bound = std::f64::consts::LN_2 + nf * t.ln() - gamma * t - rate.ln();
            if bound < target {
                return t;
            }
        }
        t *= 1.25;
    }
}

/// Panel end points `0, 1, 2, 4, …, T` on one half-line.
fn panels(t: f64) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, 1.0)];
    let mut a = 1.0;
    while a < t {
        let b = (2.0 * a).min(t);
        out.push((a, b));
        a = b;
    }
    out
}

/// Moments `c_0..c_{count−1}` of the weight, by tanh-sinh quadrature on
/// geometric panels over `[−T₋, T₊]`. The tails beyond the cut-offs are
/// bounded analytically by `2 x^n e^{−γ±|x|}`, `γ₊ = π−η−λ`, `γ₋ = λ−η`.
pub fn moments_quadrature(count: usize, params: &WeightParams) -> Result<Vec<Real>> {
    let n_size = count.div_ceil(2);
    scoped(params.digits, n_size, || {
        let digits = internal_digits(params.digits, n_size);
        let lambda = params.lambda.clone() * Real::one();
        let eta = params.eta.clone() * Real::one();
        let half_pi = Real::pi() / Real::from_i64(2);
        let shift = lambda.clone() - &half_pi;
        let gp = (Real::pi() - &eta - &lambda).to_f64();
        let gm = (lambda.clone() - &eta).to_f64();
        if !(gp > 0.0 && gm > 0.0) {
            return Err(Error::InvalidParameter("parameters outside the convergence strip".into()));
        }
        let top = count.saturating_sub(1);
        let mut pieces: Vec<(f64, f64)> = panels(cutoff(top, gp, digits)).into_iter().collect();
        pieces.extend(panels(cutoff(top, gm, digits)).into_iter().map(|(a, b)| (-b, -a)));
        let max_level = 10;
        let levels = tanh_sinh_levels(max_level, digits);
        let tol = Real::tolerance(digits as i32 - 2);
        // running sums over all nodes seen so far, without the step factor
        let mut sums = vec![Real::zero(); count];
        let mut abs_sums = vec![Real::zero(); count];
        let mut prev: Option<Vec<Real>> = None;
        for (level, lv) in levels.iter().enumerate() {
            for &(a, b) in &pieces {
                let c = Real::from_f64((a + b) / 2.0);
                let d = Real::from_f64((b - a) / 2.0);
                for (u, w) in &lv.nodes {
                    let x = c.clone() + d.clone() * u;
                    let base = weight_at(&x, &shift, &eta, &half_pi) * w * &d;
                    let mut p = base;
                    for n in 0..count {
                        sums[n] = sums[n].clone() + &p;
                        abs_sums[n] = abs_sums[n].clone() + p.abs();
                        p = p * &x;
                    }
                }
            }
            let h = Real::one() / Real::from_i64(1 << level);
            let current: Vec<Real> = sums.iter().map(|s| s.clone() * &h).collect();
            if let Some(p) = &prev {
                let converged = (0..count).all(|n| {
                    let scale = abs_sums[n].clone() * &h;
                    (current[n].clone() - &p[n]).abs() <= tol.clone() * scale
                });
                if converged && level >= 3 {
                    return Ok(current);
                }
            }
            prev = Some(current);
        }
        Err(Error::Inconsistent(format!("moment quadrature not converged at level {max_level}")))
    })
}

/// A single moment `c_n`.
pub fn moment(n: usize, params: &WeightParams) -> Result<Real> {
    Ok(moments_quadrature(n + 1, params)?.pop().expect("nonempty"))
}

/// Hankel determinant value and the pivot ratio of its LU factorization.
#[derive(Clone, Debug)]
pub struct HankelResult {
    pub n: usize,
    pub value: Real,
    pub pivot_ratio: Real,
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_NUMERIC_N {
        return Err(Error::InvalidParameter(format!("N = {n} outside 1..={MAX_NUMERIC_N}")));
    }
    Ok(())
}

fn fact_real(n: usize) -> Real {
    Real::from_rational(&ExactRational::from_integer(factorial(n as u64)))
}

fn hankel(moments: &[Real], n: usize) -> Vec<Vec<Real>> {
    (0..n).map(|j| moments[j..j + n].to_vec()).collect()
}

/// `Z_N = [sin(λ−η) sin(λ+η)]^{N²} / Π(n!)² · det[c_{j+k}]`.
pub fn z_hankel(n: usize, params: &WeightParams) -> Result<HankelResult> {
    check_size(n)?;
    let moments = moments_quadrature(2 * n - 1, params)?;
    scoped(params.digits, n, || {
        let det = lu_determinant(&hankel(&moments, n))?;
        let (a, b, _) = params.weights();
        let facts = (1..n).fold(Real::one(), |acc, k| {
            let f = fact_real(k);
            acc * &f * &f
        });
        let value = (a * &b).powi((n * n) as i32) / facts * &det.value;
        Ok(HankelResult { n, value, pivot_ratio: det.pivot_ratio })
    })
}

/// `f_r(ε) = sin^{N−r}ε · sin^{r−1}(ε−2η) / sin^{N−1}(ε+λ−η)` as a jet.
fn psi_jet(n: usize, r: usize, params: &WeightParams, order: usize) -> Result<Jet<Real>> {
    let (s2, c2) = (params.eta.clone() * Real::from_i64(2)).sin_cos();
    let (slm, clm) = (params.lambda.clone() - &params.eta).sin_cos();
    let sin_e = Jet::sin_shift(&Real::zero(), &Real::one(), order);
    let shifted = Jet::sin_shift(&-s2, &c2, order);
    let denom = Jet::sin_shift(&slm, &clm, order);
    (&sin_e.powi((n - r) as i32)? * &shifted.powi(r as i32 - 1)?).div(&denom.powi(n as i32 - 1)?)
}

/// `H_N^{(r)}` for `r = 1..N` from `(N−1)! sin 2η /(a^r b^{N−r+1}) · det Ψ / det Φ`,
/// `Ψ` being `Φ` with its last column replaced by `∂_ε^j f_r(ε)|₀`.
pub fn h_hankel_all(n: usize, params: &WeightParams) -> Result<Vec<Real>> {
    check_size(n)?;
    let moments = moments_quadrature(2 * n - 1, params)?;
    scoped(params.digits, n, || {
        let phi = hankel(&moments, n);
        let det_phi = lu_determinant(&phi)?;
        if det_phi.value.is_zero() {
            return Err(Error::Singular("det Φ vanishes".into()));
        }
        let (a, b, c) = params.weights();
        let mut out = Vec::with_capacity(n);
        for r in 1..=n {
            let f = psi_jet(n, r, params, n + 4)?;
            let mut psi = phi.clone();
            for (j, row) in psi.iter_mut().enumerate() {
                row[n - 1] = f.derivative_at_zero(j)?;
            }
            let det_psi = lu_determinant(&psi)?;
            let front = fact_real(n - 1) * &c / (a.powi(r as i32) * b.powi((n - r + 1) as i32));
            out.push(front * &det_psi.value / &det_phi.value);
        }
        Ok(out)
    })
}

pub fn h_hankel(n: usize, r: usize, params: &WeightParams) -> Result<Real> {
    if r == 0 || r > n {
        return Err(Error::InvalidParameter(format!("r = {r} outside 1..={n}")));
    }
    Ok(h_hankel_all(n, params)?.swap_remove(r - 1))
}

/// The two-variable function entering the two-point determinant.
fn h2_bijet(n: usize, r1: usize, r2: usize, params: &WeightParams, order: usize) -> Result<BiJet<Real>> {
    let (s2, c2) = (params.eta.clone() * Real::from_i64(2)).sin_cos();
    let (slm, clm) = (params.lambda.clone() - &params.eta).sin_cos();
    let (slp, clp) = (params.lambda.clone() + &params.eta).sin_cos();
    let zero = Real::zero();
    let one = Real::one();
    let sin_e = Jet::sin_shift(&zero, &one, order);
    let eps1 = (&sin_e.powi((n - r1) as i32)? * &Jet::sin_shift(&-s2.clone(), &c2, order).powi(r1 as i32 - 1)?)
        .div(&Jet::sin_shift(&slm, &clm, order).powi(n as i32 - 2)?)?;
    let eps2 = (&sin_e.powi((n - r2) as i32)? * &Jet::sin_shift(&s2, &c2, order).powi(r2 as i32 - 1)?)
        .div(&Jet::sin_shift(&slp, &clp, order).powi(n as i32 - 2)?)?;
    let cross = BiJet::linear(-one.clone(), one, order).sin_of(&s2, &c2);
    let num = &BiJet::lift(&eps1, 0, order) * &BiJet::lift(&eps2, 1, order);
    num.div(&cross)
}

/// `H_N^{(r1,r2)}` from the bordered determinant: columns `c_{j+k}` for
/// `k ≤ N−3`, then `∂_{ε2}^j` and `∂_{ε1}^j` acting on the two-variable
/// function, expanded along the last two columns.
pub fn h2_hankel_all(n: usize, params: &WeightParams) -> Result<Vec<Vec<Real>>> {
    check_size(n)?;
    if n < 2 {
        return Err(Error::InvalidParameter("two-point function needs N ≥ 2".into()));
    }
    let moments = moments_quadrature(2 * n - 1, params)?;
    scoped(params.digits, n, || {
        let det_phi = lu_determinant(&hankel(&moments, n))?;
        if det_phi.value.is_zero() {
            return Err(Error::Singular("det Φ vanishes".into()));
        }
        // signed complementary minors for row pairs p < q in the last two columns
        let mut minors = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                let m: Vec<Vec<Real>> = (0..n)
                    .filter(|&i| i != p && i != q)
                    .map(|i| (0..n - 2).map(|k| moments[i + k].clone()).collect())
                    .collect();
                let d = if m.is_empty() { Real::one() } else { lu_determinant(&m)?.value };
                let sign = if (p + q + 2 * n - 3).is_multiple_of(2) { Real::one() } else { -Real::one() };
                minors.push((p, q, sign * d));
            }
        }
        let (a, b, c) = params.weights();
        let pre = fact_real(n - 1) * fact_real(n - 2) * &c * &c / &det_phi.value;
        let mut out = vec![vec![Real::zero(); n]; n];
        for r1 in 1..=n {
            for r2 in 1..=n {
                let g = h2_bijet(n, r1, r2, params, 2 * n)?;
                let mut acc = Real::zero();
                for (p, q, m) in &minors {
                    // column N−2 carries ∂_{ε2}, column N−1 carries ∂_{ε1}
                    let two = g.derivative_at_zero(*q, *p)? - g.derivative_at_zero(*p, *q)?;
                    acc = acc + m.clone() * two;
                }
                let ea = (n + r1 + 1) as i32 - r2 as i32;
                let eb = (n + r2 + 1) as i32 - r1 as i32;
                out[r1 - 1][r2 - 1] = pre.clone() * acc / (a.powi(ea) * b.powi(eb));
            }
        }
        Ok(out)
    })
}

pub fn h2_hankel(n: usize, r1: usize, r2: usize, params: &WeightParams) -> Result<Real> {
    if r1 == 0 || r2 == 0 || r1 > n || r2 > n {
        return Err(Error::InvalidParameter(format!("(r1, r2) = ({r1}, {r2}) outside 1..={n}")));
    }
    Ok(h2_hankel_all(n, params)?[r1 - 1][r2 - 1].clone())
}

/// Boundary polarization `G^{(r)} = Σ_{j ≤ r} H^{(j)}`.
pub fn polarization(h: &[Real]) -> Vec<Real> {
    let mut acc = Real::zero();
    h.iter()
        .map(|v| {
            acc = acc.clone() + v;
            acc.clone()
        })
        .collect()
}

/// Largest relative deviation of `z_hankel` from the exact ice-point value
/// for sizes `1..=max_n`.
pub fn ice_calibration(max_n: usize, digits: u32) -> Result<Real> {
    let p = WeightParams::ice(digits);
    let mut worst = Real::zero();
    for n in 1..=max_n {
        let z = z_hankel(n, &p)?;
        let exact = crate::orthopoly::z_ice(n)?.value.to_qsqrt3();
        let dev = scoped(digits, n, || {
            let want = Real::from_rational(&exact.a) + Real::from_rational(&exact.b) * Real::from_i64(3).sqrt();
            z.value.rel_err(&want)
        });
        worst = worst.max(dev);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::h_refined_1;
    use crate::oracle::{self, XPoint};
    use crate::orthopoly::{generic_moments, z_ice};

    fn close(a: &Real, b: &Real, tol: &Real) -> bool {
        (a.clone() - b).abs() <= tol.clone() * b.abs().max(Real::one())
    }

    #[test]
    fn delta_values() {
        with_precision(200, || {
            let one = Real::one();
            assert!(close(&delta_of(&one, &one, &one).unwrap(), &Real::from_f64(0.5), &Real::tolerance(50)));
            let r2 = Real::from_i64(2).sqrt();
            assert!(delta_of(&one, &one, &r2).unwrap().abs() < Real::tolerance(50));
            let r3 = Real::from_i64(3).sqrt();
            assert!(close(&delta_of(&one, &one, &r3).unwrap(), &Real::from_f64(-0.5), &Real::tolerance(50)));
            assert!(delta_of(&-one.clone(), &one, &one).is_err());
        });
        assert!(close(&WeightParams::ice(30).delta(), &Real::from_f64(0.5), &Real::tolerance(30)));
    }

    #[test]
    fn parameter_parsing() {
        assert!(WeightParams::parse("pi/2", "pi/6", 30).is_ok());
        assert!(WeightParams::parse("1.2", "0.5", 30).is_ok());
        assert!(WeightParams::parse("0.1", "0.5", 30).is_err());
        assert!(WeightParams::parse("pi/2", "pi/2", 30).is_err());
        assert!(WeightParams::parse("2*pi/3", "pi/8", 30).is_ok());
        assert!(parse_angle("pi/x").is_err());
    }

    #[test]
    fn quadrature_moments() {
        let p = WeightParams::ice(30);
        let c = moments_quadrature(9, &p).unwrap();
        with_precision(digits_to_bits(40), || {
            let tol = Real::tolerance(30);
            let two_over_sqrt3 = Real::from_i64(2) / Real::from_i64(3).sqrt();
            assert!(close(&c[0], &two_over_sqrt3, &tol));
            assert!(c[1].abs() < tol);
            let q = WeightParams::parse("pi/2", "pi/4", 30).unwrap();
            assert!(close(&moment(0, &q).unwrap(), &Real::from_i64(2), &tol));
        });
        // against derivatives of φ
        for (l, e) in [("1.2", "0.5"), ("1.9", "0.3")] {
            let p = WeightParams::parse(l, e, 30).unwrap();
            let quad = moments_quadrature(9, &p).unwrap();
            let deriv = with_precision(digits_to_bits(60), || generic_moments(&p.lambda, &p.eta, 9).unwrap().values);
            let mirrored = moments_quadrature(9, &p.crossed()).unwrap();
            with_precision(digits_to_bits(40), || {
                for n in 0..9 {
                    assert!(close(&quad[n], &deriv[n], &Real::tolerance(30)), "n = {n}");
                    let sign = if n % 2 == 0 { Real::one() } else { -Real::one() };
                    assert!(close(&quad[n], &(sign * &mirrored[n]), &Real::tolerance(30)));
                }
            });
        }
    }

    #[test]
    fn partition_function_at_the_ice_point() {
        let p = WeightParams::ice(30);
        for n in 1..=6 {
            let z = z_hankel(n, &p).unwrap();
            let exact = z_ice(n).unwrap().value.to_qsqrt3();
            with_precision(digits_to_bits(60), || {
                let want = Real::from_rational(&exact.a) + Real::from_rational(&exact.b) * Real::from_i64(3).sqrt();
                assert!(close(&z.value, &want, &Real::tolerance(20)), "N = {n}");
            });
        }
    }

    #[test]
    fn one_point_function() {
        let p = WeightParams::ice(30);
        for n in 2..=5 {
            let h = h_hankel_all(n, &p).unwrap();
            let exact = h_refined_1(n).unwrap();
            for (got, want) in h.iter().zip(&exact.values) {
                assert!(close(got, &Real::from_rational(want), &Real::tolerance(20)), "N = {n}");
            }
        }
        let q = WeightParams::parse("1.9", "pi/6", 30).unwrap();
        let a = h_hankel_all(3, &q).unwrap();
        let b = h_hankel_all(3, &q.crossed()).unwrap();
        let total = a.iter().fold(Real::zero(), |s, v| s + v);
        assert!(close(&total, &Real::one(), &Real::tolerance(20)));
        for r in 0..3 {
            assert!(close(&a[r], &b[2 - r], &Real::tolerance(20)));
        }
    }

    #[test]
    fn two_point_function() {
        let p = WeightParams::ice(30);
        for n in 2..=4 {
            let h2 = h2_hankel_all(n, &p).unwrap();
            let exact = oracle::correlators(n, &XPoint::from_int(1)).unwrap().two_point;
            for r1 in 0..n {
                for r2 in 0..n {
                    let want = Real::from_rational(&exact[r1][r2]);
                    assert!(
                        (h2[r1][r2].clone() - &want).abs() < Real::tolerance(20),
                        "N = {n} ({}, {}): {} vs {}",
                        r1 + 1,
                        r2 + 1,
                        h2[r1][r2],
                        want
                    );
                }
            }
        }
    }

    #[test]
    fn marginals_and_crossing() {
        let p = WeightParams::parse("1.9", "0.5236", 30).unwrap();
        let h = h_hankel_all(4, &p).unwrap();
        let h2 = h2_hankel_all(4, &p).unwrap();
        let tol = Real::tolerance(20);
        for r in 0..4 {
            let row = h2[r].iter().fold(Real::zero(), |s, v| s + v);
            assert!(close(&row, &h[r], &tol), "row {r}: {row} vs {}", h[r]);
        }
        let g = polarization(&h);
        assert!(close(&g[3], &Real::one(), &tol));
        let z = z_hankel(4, &p).unwrap();
        let zc = z_hankel(4, &p.crossed()).unwrap();
        assert!(close(&z.value, &zc.value, &tol));
    }

    #[test]
    fn doubling_precision_converges() {
        let coarse = ice_calibration(4, 20).unwrap();
        let fine = ice_calibration(4, 40).unwrap();
        assert!(coarse < Real::tolerance(15), "{coarse}");
        assert!(fine < Real::tolerance(35), "{fine}");
        assert!(fine.clone() * Real::from_f64(1e15) < coarse.max(Real::tolerance(60)) || fine < Real::tolerance(45));
    }
}
