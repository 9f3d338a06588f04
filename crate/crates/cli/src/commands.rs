//! The three subcommands. Each returns the list of checked cells; report
//! assembly and exit codes live in `main`.

use dwbc_core::closedform::{
    a_total, gen_1, gen_two_from_gen, h_refined_1, h_refined_3, recurrence_solve_1, two_point_from_one, RefinedVector,
};
use dwbc_core::exactmath::{digits_to_bits, format_rational, parse_rational, with_precision};
use dwbc_core::inhomog::{check_korepin, check_u_to_1, random_points, verify_against_oracle, InhomSpec};
use dwbc_core::numerics::{h2_hankel_all, h_hankel_all, z_hankel, WeightParams, MAX_NUMERIC_N};
use dwbc_core::oracle::{self, QPoint, XPoint, MAX_N};
use dwbc_core::orthopoly::{check_difference_eq, z_ice};
use dwbc_core::{asm, Error, ExactRational, Field, Real, Ring};

use crate::report::{Entry, Verdict};

/// Failure modes that end a command before a report is produced.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or out-of-range parameters; exit code 2.
    Usage(String),
    /// A computation could not be completed; exit code 1.
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::NegativeArgument(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

pub type Outcome = Result<Vec<Entry>, Failure>;

pub fn parse_q(s: &str, flag: &str) -> Result<ExactRational, Failure> {
    parse_rational(s).ok_or_else(|| Failure::Usage(format!("--{flag} expects an integer or p/q, got {s:?}")))
}

fn limit(n: usize, max: usize, what: &str) -> Result<(), Failure> {
    if n == 0 || n > max {
        return Err(Failure::Usage(format!("{what} = {n} outside 1..={max}")));
    }
    Ok(())
}

fn fmt_vec(v: &[ExactRational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn sci(x: &Real) -> String {
    format!("{:.2e}", x.to_f64())
}

/// `H_N` from a closed form where one exists (`x = 1`, `x = 3`), else from
/// the top-row census.
fn one_point(n: usize, x: &ExactRational) -> Result<RefinedVector, Failure> {
    if *x == ExactRational::one() {
        return Ok(h_refined_1(n)?);
    }
    if *x == ExactRational::from_i64(3) && n >= 2 {
        return Ok(h_refined_3(n)?);
    }
    Ok(RefinedVector::new(oracle::correlators(n, &XPoint::new(x.clone()))?.one_point))
}

/// Totals, refined and doubly refined tables by enumeration, each cell
/// compared with the closed form or the composed one-point functions.
pub fn count(n: usize, x: &ExactRational) -> Outcome {
    limit(n, MAX_N, "N")?;
    let xp = XPoint::new(x.clone());
    let mut out = Vec::new();
    let total = oracle::count_x(n, &xp)?;
    if *x == ExactRational::one() {
        let (p1, p2) = dwbc_core::closedform::a_total_forms(n);
        out.push(Entry::compare(format!("A({n}) product forms"), p1.to_string(), p2.to_string()));
        out.push(Entry::compare(format!("A({n})"), a_total(n).to_string(), asm::count(n).to_string()));
    }
    let expected_total = if *x == ExactRational::one() {
        Some(ExactRational::from_integer(a_total(n)))
    } else if *x == ExactRational::from_i64(2) {
        Some(Ring::pow(&ExactRational::from_i64(2), (n * (n - 1) / 2) as u32))
    } else {
        None
    };
    let name = format!("A({n};{})", format_rational(x));
    out.push(match expected_total {
        Some(e) => Entry::compare(name, format_rational(&e), format_rational(&total)),
        None => Entry::value(name, format_rational(&total)),
    });

    // the 1 of the last column in row r from the top, against the top-row
    // position N+1−r counted from the right
    let h = one_point(n, x)?;
    let refined = oracle::refined_x(n, &xp)?;
    for r in 1..=n {
        let want = h.get((n + 1 - r) as i64) * &total;
        out.push(Entry::compare(format!("A({n},{r};x)"), format_rational(&want), format_rational(&refined[r - 1])));
    }
    if n >= 2 {
        let composed = two_point_from_one(&h, &one_point(n - 1, x)?)?;
        let doubly = oracle::doubly_refined_x(n, &xp)?;
        for r in 1..=n {
            for s in 1..=n {
                let want = composed[n - r][n - s].clone() * &total;
                out.push(Entry::compare(
                    format!("A({n},{r},{s};x)"),
                    format_rational(&want),
                    format_rational(&doubly[r - 1][s - 1]),
                ));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Totals,
    Refined,
    Routes,
    Three,
    TwoPoint,
    Inhom,
    Ice,
    Diffeq,
    Numeric,
    Crossing,
    All,
}

/// Flags shared by the verification suites; `None` picks the suite default.
#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub n: Option<usize>,
    pub max_n: Option<usize>,
    pub x: Option<ExactRational>,
    pub q: Option<ExactRational>,
    pub lambda: Option<String>,
    pub eta: Option<String>,
    pub digits: u32,
    pub trials: usize,
    pub seed: u64,
}

impl VerifyConfig {
    /// Sizes `1..=max`, or just `--n` when given.
    fn sizes(&self, min: usize, default_max: usize, cap: usize) -> Result<Vec<usize>, Failure> {
        if let Some(n) = self.n {
            limit(n, cap, "N")?;
            return Ok(if n >= min { vec![n] } else { vec![] });
        }
        let max = self.max_n.unwrap_or(default_max);
        limit(max, cap, "max N")?;
        Ok((min..=max).collect())
    }
}

pub fn verify(suite: Suite, cfg: &VerifyConfig) -> Outcome {
    match suite {
        Suite::Totals => totals(cfg),
        Suite::Refined => refined(cfg),
        Suite::Routes => routes(cfg),
        Suite::Three => three(cfg),
        Suite::TwoPoint => two_point(cfg),
        Suite::Inhom => inhom(cfg),
        Suite::Ice => ice(cfg),
        Suite::Diffeq => diffeq(cfg),
        Suite::Numeric => numeric(cfg),
        Suite::Crossing => crossing(cfg),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Totals,
                Suite::Refined,
                Suite::Routes,
                Suite::Three,
                Suite::TwoPoint,
                Suite::Inhom,
                Suite::Ice,
                Suite::Diffeq,
                Suite::Numeric,
                Suite::Crossing,
            ] {
                out.extend(verify(s, cfg)?);
            }
            Ok(out)
        }
    }
}

fn totals(cfg: &VerifyConfig) -> Outcome {
    let mut out = Vec::new();
    for n in cfg.sizes(1, 6, MAX_N)? {
        out.push(Entry::compare(format!("totals N={n}"), a_total(n).to_string(), asm::count(n).to_string()));
    }
    Ok(out)
}

fn refined(cfg: &VerifyConfig) -> Outcome {
    let mut out = Vec::new();
    for n in cfg.sizes(1, 6, MAX_N)? {
        let total = ExactRational::from_integer(a_total(n));
        let want: Vec<ExactRational> = h_refined_1(n)?.values.iter().map(|v| v.clone() * &total).collect();
        let got = oracle::refined_x(n, &XPoint::from_int(1))?;
        out.push(Entry::compare(format!("refined N={n}"), fmt_vec(&want), fmt_vec(&got)));
    }
    Ok(out)
}

fn routes(cfg: &VerifyConfig) -> Outcome {
    let mut out = Vec::new();
    for n in cfg.sizes(2, 12, 40)? {
        let closed = h_refined_1(n)?;
        let g = gen_1(n)?;
        let series: Vec<ExactRational> = (0..n).map(|i| g.coeff(i)).collect();
        let rec = recurrence_solve_1(n)?;
        out.push(Entry::compare(format!("routes N={n} series"), fmt_vec(&closed.values), fmt_vec(&series)));
        out.push(Entry::compare(format!("routes N={n} recurrence"), fmt_vec(&closed.values), fmt_vec(&rec.values)));
    }
    Ok(out)
}

fn three(cfg: &VerifyConfig) -> Outcome {
    let mut out = Vec::new();
    for n in cfg.sizes(2, 6, MAX_N)? {
        let want = h_refined_3(n)?;
        let got = oracle::correlators(n, &XPoint::from_int(3))?.one_point;
        out.push(Entry::compare(format!("x=3 refined N={n}"), fmt_vec(&want.values), fmt_vec(&got)));
    }
    Ok(out)
}

fn two_point(cfg: &VerifyConfig) -> Outcome {
    let xs = match &cfg.x {
        Some(x) => vec![x.clone()],
        None => vec![ExactRational::from_i64(1), ExactRational::from_i64(2), ExactRational::from_i64(3), ExactRational::new(5.into(), 7.into())],
    };
    let mut out = Vec::new();
    for x in &xs {
        let xp = XPoint::new(x.clone());
        let xs = format_rational(x);
        for n in cfg.sizes(2, 5, MAX_N)? {
            let hn = oracle::correlators(n, &xp)?;
            let hm = oracle::correlators(n - 1, &xp)?;
            let composed = two_point_from_one(&RefinedVector::new(hn.one_point), &RefinedVector::new(hm.one_point))?;
            let flat = |t: &[Vec<ExactRational>]| t.iter().map(|r| fmt_vec(r)).collect::<Vec<_>>().join(" ");
            out.push(Entry::compare(format!("two-point N={n} x={xs}"), flat(&hn.two_point), flat(&composed)));
            let gn = oracle::gen_one(n, &xp)?;
            let two = gen_two_from_gen(&gn, &oracle::gen_one(n - 1, &xp)?)?;
            let want = oracle::gen_two(n, &xp)?;
            out.push(Entry::compare(format!("H(u,v) N={n} x={xs}"), want.to_string_vars(&["u", "v"]), two.to_string_vars(&["u", "v"])));
            let at_one = two.substitute(0, &ExactRational::one());
            let reduced = (0..n).map(|i| at_one.coeff(&[0, i as u32])).collect::<Vec<_>>();
            let direct = (0..n).map(|i| gn.coeff(i)).collect::<Vec<_>>();
            out.push(Entry::compare(format!("H(1,v) N={n} x={xs}"), fmt_vec(&direct), fmt_vec(&reduced)));
        }
    }
    Ok(out)
}

fn inhom(cfg: &VerifyConfig) -> Outcome {
    let qs = match &cfg.q {
        Some(q) => vec![q.clone()],
        None => vec![ExactRational::from_i64(2), ExactRational::from_i64(3), ExactRational::from_i64(-2), ExactRational::new(1.into(), 2.into())],
    };
    let mut out = Vec::new();
    for qv in &qs {
        let q = QPoint::new(qv.clone())?;
        let qs = format_rational(qv);
        for n in cfg.sizes(1, 5, MAX_N)? {
            for k in 1..=n {
                let seed = cfg.seed.wrapping_mul(1_000_003).wrapping_add((n * 100 + k) as u64);
                let name = format!("inhom N={n} k={k} q={qs}");
                out.push(match verify_against_oracle(n, &q, k, cfg.trials, seed)? {
                    None => Entry { name, expected: None, got: format!("{} tuples agree", cfg.trials), verdict: Verdict::Pass },
                    Some(m) => Entry {
                        name: format!("{name} u={}", fmt_vec(&m.u_points)),
                        expected: Some(format_rational(&m.enumeration)),
                        got: format_rational(&m.determinant),
                        verdict: Verdict::Fail,
                    },
                });
                if n >= 2 {
                    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed ^ 0x5eed);
                    let spec = InhomSpec::from_oracle(n, random_points(&mut rng, k), &q.x())?;
                    out.push(Entry { name: format!("u→1 N={n} k={k} q={qs}"), expected: None, got: String::new(), verdict: Verdict::check(check_u_to_1(&spec)?) });
                    out.push(Entry { name: format!("u→0 N={n} k={k} q={qs}"), expected: None, got: String::new(), verdict: Verdict::check(check_korepin(&spec)?) });
                }
            }
        }
    }
    Ok(out)
}

fn ice(cfg: &VerifyConfig) -> Outcome {
    let mut out = Vec::new();
    for n in cfg.sizes(1, 8, 30)? {
        let z = z_ice(n)?;
        out.push(Entry::compare(format!("Z_{n}/(√3/2)^(N²)"), a_total(n).to_string(), format_rational(&z.rational_factor)));
    }
    Ok(out)
}

fn diffeq(cfg: &VerifyConfig) -> Outcome {
    let mut out = Vec::new();
    for n in cfg.sizes(1, 12, 40)? {
        out.push(Entry { name: format!("difference equation N={n}"), expected: None, got: String::new(), verdict: Verdict::check(check_difference_eq(n)?) });
    }
    Ok(out)
}

fn max_dev(pairs: impl IntoIterator<Item = (Real, Real)>, relative: bool) -> Real {
    with_precision(digits_to_bits(1000), || {
        pairs.into_iter().fold(Real::zero(), |m, (a, b)| m.max(if relative { a.rel_err(&b) } else { (a - &b).abs() }))
    })
}

fn tolerance_entry(name: String, dev: Real, exp: i32) -> Entry {
    let ok = with_precision(digits_to_bits(1000), || dev <= Real::tolerance(exp));
    Entry { name, expected: Some(format!("≤ 1e-{exp}")), got: sci(&dev), verdict: Verdict::check(ok) }
}

fn ice_exact(n: usize) -> Result<Real, Failure> {
    let q = z_ice(n)?.value.to_qsqrt3();
    Ok(with_precision(digits_to_bits(1000), || Real::from_rational(&q.a) + Real::from_rational(&q.b) * Real::from_i64(3).sqrt()))
}

fn numeric(cfg: &VerifyConfig) -> Outcome {
    let digits = cfg.digits;
    let p = WeightParams::ice(digits);
    let sizes = cfg.sizes(1, 6, MAX_NUMERIC_N)?;
    let top = *sizes.last().unwrap_or(&1);
    let mut z = Vec::new();
    for n in 1..=top {
        z.push((z_hankel(n, &p)?.value, ice_exact(n)?));
    }
    let mut h = Vec::new();
    for n in 1..=top.min(MAX_N) {
        for (a, b) in h_hankel_all(n, &p)?.into_iter().zip(h_refined_1(n)?.values) {
            h.push((a, Real::from_rational(&b)));
        }
    }
    let mut h2 = Vec::new();
    for n in 2..=top.min(5) {
        let exact = oracle::correlators(n, &XPoint::from_int(1))?.two_point;
        for (row, erow) in h2_hankel_all(n, &p)?.into_iter().zip(exact) {
            for (a, b) in row.into_iter().zip(erow) {
                h2.push((a, Real::from_rational(&b)));
            }
        }
    }
    let d = digits as i32;
    let mut out = vec![tolerance_entry(format!("Z_N relative, N ≤ {top}"), max_dev(z, true), d - 20)];
    out.push(tolerance_entry(format!("H_N^(r), N ≤ {}", top.min(MAX_N)), max_dev(h, false), d - 25));
    if top >= 2 {
        out.push(tolerance_entry(format!("H_N^(r1,r2), N ≤ {}", top.min(5)), max_dev(h2, false), d - 30));
    }
    Ok(out)
}

fn crossing(cfg: &VerifyConfig) -> Outcome {
    let p = WeightParams::parse(cfg.lambda.as_deref().unwrap_or("1.9"), cfg.eta.as_deref().unwrap_or("0.5236"), cfg.digits)?;
    let c = p.crossed();
    let mut pairs = Vec::new();
    let mut zs = Vec::new();
    for n in cfg.sizes(1, 5, MAX_NUMERIC_N)? {
        let a = h_hankel_all(n, &p)?;
        let b = h_hankel_all(n, &c)?;
        pairs.extend(a.into_iter().zip(b.into_iter().rev()));
        zs.push((z_hankel(n, &p)?.value, z_hankel(n, &c)?.value));
    }
    let d = cfg.digits as i32;
    Ok(vec![
        tolerance_entry("H^(r)(λ) vs H^(N−r+1)(π−λ)".into(), max_dev(pairs, false), d - 25),
        tolerance_entry("Z_N(λ) vs Z_N(π−λ) relative".into(), max_dev(zs, true), d - 20),
    ])
}

/// Where to evaluate `Z_N`.
#[derive(Clone, Debug)]
pub enum Point {
    Ice,
    Angles { lambda: String, eta: String },
}

/// `Z_N` and `Δ`; exact at the ice point together with the numeric value
/// checked against it, numeric elsewhere.
pub fn partition(n: usize, point: &Point, digits: u32) -> Outcome {
    limit(n, MAX_NUMERIC_N, "N")?;
    let mut out = Vec::new();
    let params = match point {
        Point::Ice => {
            let z = z_ice(n)?;
            out.push(Entry::value(format!("Z_{n}"), z.value.to_string()));
            out.push(Entry::value("exact form", format!("(√3/2)^{} · {}", n * n, format_rational(&z.rational_factor))));
            out.push(Entry::value("Δ", "1/2"));
            WeightParams::ice(digits)
        }
        Point::Angles { lambda, eta } => WeightParams::parse(lambda, eta, digits)?,
    };
    let numeric = z_hankel(n, &params)?;
    let shown = digits as usize;
    out.push(Entry::value(format!("Z_{n} numeric"), numeric.value.to_string_digits(shown)));
    if let Point::Ice = point {
        let exact = ice_exact(n)?;
        out.push(tolerance_entry(format!("Z_{n} numeric vs exact, relative"), max_dev([(numeric.value.clone(), exact)], true), digits as i32 - 20));
    } else {
        out.push(Entry::value("Δ", with_precision(digits_to_bits(digits), || params.delta().to_string_digits(shown))));
    }
    out.push(Entry::value("pivot ratio", sci(&numeric.pivot_ratio)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn got(entries: &[Entry], name: &str) -> String {
        entries.iter().find(|e| e.name == name).unwrap_or_else(|| panic!("no entry {name}")).got.clone()
    }

    #[test]
    fn count_four_at_one() {
        let e = count(4, &ExactRational::one()).unwrap();
        assert!(e.iter().all(|x| x.verdict.ok()));
        assert_eq!(got(&e, "A(4)"), "42");
        let refined: Vec<String> = (1..=4).map(|r| got(&e, &format!("A(4,{r};x)"))).collect();
        assert_eq!(refined, ["7", "14", "14", "7"]);
    }

    #[test]
    fn count_small_cases() {
        let e = count(3, &ExactRational::from_i64(3)).unwrap();
        assert_eq!(got(&e, "A(3;3)"), "9");
        assert!(e.iter().all(|x| x.verdict.ok()));
        let e = count(1, &ExactRational::one()).unwrap();
        assert_eq!(got(&e, "A(1)"), "1");
        for x in [ExactRational::from_i64(2), ExactRational::new((-1).into(), 3.into())] {
            assert!(count(5, &x).unwrap().iter().all(|e| e.verdict.ok()));
        }
        assert!(matches!(count(9, &ExactRational::one()), Err(Failure::Usage(_))));
    }

    #[test]
    fn exact_suites_pass() {
        let cfg = VerifyConfig { digits: 50, trials: 2, seed: 3, max_n: Some(4), ..Default::default() };
        for s in [Suite::Totals, Suite::Refined, Suite::Routes, Suite::Three, Suite::TwoPoint, Suite::Inhom, Suite::Ice, Suite::Diffeq] {
            let e = verify(s, &cfg).unwrap();
            assert!(!e.is_empty());
            assert!(e.iter().all(|x| x.verdict.ok()), "{s:?}: {e:?}");
        }
    }

    #[test]
    fn partition_at_the_ice_point() {
        let e = partition(2, &Point::Ice, 30).unwrap();
        assert_eq!(got(&e, "Z_2"), "9/8");
        assert_eq!(got(&e, "exact form"), "(√3/2)^4 · 2");
        assert!(e.iter().all(|x| x.verdict.ok()));
        assert_eq!(got(&partition(1, &Point::Ice, 30).unwrap(), "Z_1"), "1/2·√3");
    }

    #[test]
    fn partition_out_of_regime() {
        let p = Point::Angles { lambda: "0.2".into(), eta: "0.5".into() };
        assert!(matches!(partition(2, &p, 30), Err(Failure::Usage(_))));
    }
}
