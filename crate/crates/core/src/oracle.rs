//! Ground truth by exhaustive summation over alternating sign matrices.
//!
//! At `λ = π/2` every configuration carries the weight `a^{N²}(c/a)^N x^k`,
//! `k` being the number of `−1` entries and `x = (c/a)² = 4 sin²η`. All
//! homogeneous quantities below are ratios in which the common factor drops
//! out, so they are exact rationals in `x`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::asm::{enumerate, AsmStats, VertexGrid};
use crate::error::{Error, Result};
use crate::exactmath::{ExactRational, MPoly, Poly, Ring};

/// Largest size accepted by the exhaustive routines.
pub const MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoint(pub ExactRational);

impl XPoint {
    pub fn new(x: ExactRational) -> Self {
        Self(x)
    }

    pub fn from_int(x: i64) -> Self {
        Self(ExactRational::from_i64(x))
    }

    pub fn value(&self) -> &ExactRational {
        &self.0
    }
}

/// A rational value of `q = e^{2iη}` continued off the unit circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoint {
    q: ExactRational,
}

impl QPoint {
    pub fn new(q: ExactRational) -> Result<Self> {
        let one = ExactRational::one();
        if q.is_zero() || q == one || q == -one {
            return Err(Error::InvalidParameter(format!("q = {q} is excluded")));
        }
        Ok(Self { q })
    }

    pub fn value(&self) -> &ExactRational {
        &self.q
    }

    /// `x = −(1−q)²/q`.
    pub fn x(&self) -> XPoint {
        let one_minus = ExactRational::one() - &self.q;
        XPoint(-(one_minus.clone() * one_minus) / &self.q)
    }

    /// `(u−q)(1−uq)/(1−q)²`.
    fn c_factor(&self, u: &ExactRational) -> ExactRational {
        let one = ExactRational::one();
        let d = one.clone() - &self.q;
        (u.clone() - &self.q) * (one - u.clone() * &self.q) / (d.clone() * d)
    }
}

/// Per-size multiset of `(k, top, bottom, first column, last column)` keys.
struct Census {
    n: usize,
    counts: BTreeMap<(usize, usize, usize, usize, usize), u64>,
}

fn census(n: usize) -> Arc<Census> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Census>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("census cache").get(&n) {
        return c.clone();
    }
    let mut counts = BTreeMap::new();
    for a in enumerate(n) {
        let AsmStats { k, top_row_col_from_right, bottom_row_col_from_right, first_col_row, last_col_row } =
            a.stats();
        *counts
            .entry((k, top_row_col_from_right, bottom_row_col_from_right, first_col_row, last_col_row))
            .or_insert(0) += 1;
    }
    let c = Arc::new(Census { n, counts });
    cache.lock().expect("census cache").insert(n, c.clone());
    c
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidParameter(format!("N = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

impl Census {
    fn weighted<K: Ord>(&self, x: &XPoint, key: impl Fn(&(usize, usize, usize, usize, usize)) -> K) -> BTreeMap<K, ExactRational> {
        let mut powers: Vec<ExactRational> = vec![ExactRational::one()];
        let mut out = BTreeMap::new();
        for (kk, &c) in &self.counts {
            while powers.len() <= kk.0 {
                let next = powers.last().expect("nonempty").clone() * &x.0;
                powers.push(next);
            }
            let w = powers[kk.0].clone() * ExactRational::from_i64(c as i64);
            let slot = out.entry(key(kk)).or_insert_with(ExactRational::zero);
            *slot = slot.clone() + w;
        }
        out
    }

    fn vector(&self, x: &XPoint, key: impl Fn(&(usize, usize, usize, usize, usize)) -> usize) -> Vec<ExactRational> {
        let m = self.weighted(x, key);
        (1..=self.n).map(|r| m.get(&r).cloned().unwrap_or_else(ExactRational::zero)).collect()
    }

    fn matrix(&self, x: &XPoint, key: impl Fn(&(usize, usize, usize, usize, usize)) -> (usize, usize)) -> Vec<Vec<ExactRational>> {
        let m = self.weighted(x, key);
        (1..=self.n)
            .map(|r| (1..=self.n).map(|s| m.get(&(r, s)).cloned().unwrap_or_else(ExactRational::zero)).collect())
            .collect()
    }
}

/// Number of ASMs with `k` entries equal to `−1`, indexed by `k`.
pub fn minus_one_histogram(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    let c = census(n);
    let mut out = Vec::new();
    for (kk, &v) in &c.counts {
        if out.len() <= kk.0 {
            out.resize(kk.0 + 1, 0);
        }
        out[kk.0] += v;
    }
    Ok(out)
}

/// `A(N;x) = Σ x^k`.
pub fn count_x(n: usize, x: &XPoint) -> Result<ExactRational> {
    check_n(n)?;
    Ok(census(n).weighted(x, |_| ()).remove(&()).unwrap_or_else(ExactRational::zero))
}

/// `A(N,r;x)`, `r` being the row of the 1 in the last column.
pub fn refined_x(n: usize, x: &XPoint) -> Result<Vec<ExactRational>> {
    check_n(n)?;
    Ok(census(n).vector(x, |k| k.4))
}

/// `A(N,r,s;x)` at `[r−1][s−1]`: the 1 of the first column in row `r` and the
/// 1 of the last column in row `s`, both rows counted from the top.
pub fn doubly_refined_x(n: usize, x: &XPoint) -> Result<Vec<Vec<ExactRational>>> {
    check_n(n)?;
    Ok(census(n).matrix(x, |k| (k.3, k.4)))
}

/// One- and two-point boundary correlators at `λ = π/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelatorTable {
    pub n: usize,
    /// `H_N^{(r)}` at index `r−1`: the 1 of the top row in column `r`
    /// counted from the right.
    pub one_point: Vec<ExactRational>,
    /// `H_N^{(r1,r2)}` at `[r1−1][r2−1]`: top-row and bottom-row positions,
    /// both counted from the right.
    pub two_point: Vec<Vec<ExactRational>>,
    /// `G_N^{(r)} = Σ_{j≤r} H_N^{(j)}`.
    pub g_one_point: Vec<ExactRational>,
}

pub fn correlators(n: usize, x: &XPoint) -> Result<CorrelatorTable> {
    check_n(n)?;
    let c = census(n);
    let total = count_x(n, x)?;
    if total.is_zero() {
        return Err(Error::DivisionByZero(format!("A({n};{}) vanishes", x.0)));
    }
    let one_point: Vec<ExactRational> = c.vector(x, |k| k.1).into_iter().map(|v| v / &total).collect();
    let two_point = c
        .matrix(x, |k| (k.1, k.2))
        .into_iter()
        .map(|row| row.into_iter().map(|v| v / &total).collect())
        .collect();
    let mut acc = ExactRational::zero();
    let g_one_point = one_point
        .iter()
        .map(|h| {
            acc = acc.clone() + h;
            acc.clone()
        })
        .collect();
    Ok(CorrelatorTable { n, one_point, two_point, g_one_point })
}

/// `H_N(u) = Σ_r H_N^{(N−r+1)} u^{r−1}`.
pub fn gen_one(n: usize, x: &XPoint) -> Result<Poly<ExactRational>> {
    let t = correlators(n, x)?;
    Ok(Poly::new(t.one_point.iter().rev().cloned().collect()))
}

/// `H_N(u,v) = Σ_{r,s} H_N^{(N−r+1,s)} u^{r−1} v^{s−1}`, with `u` as
/// variable 0 and `v` as variable 1.
pub fn gen_two(n: usize, x: &XPoint) -> Result<MPoly> {
    let t = correlators(n, x)?;
    let table: Vec<Vec<ExactRational>> = (1..=n).map(|r| t.two_point[n - r].clone()).collect();
    Ok(MPoly::from_dense2(&table))
}

/// Per-row `(n_b, n_c)` of every configuration together with its `k`.
fn row_profiles(n: usize) -> Arc<Vec<(usize, Vec<(usize, usize)>)>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<(usize, Vec<(usize, usize)>)>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("profile cache").get(&n) {
        return p.clone();
    }
    let profiles: Vec<_> = enumerate(n)
        .map(|a| {
            let g = VertexGrid::from_asm(&a);
            let rows = (0..n)
                .map(|i| {
                    let (_, nb, nc) = g.row_weights(i);
                    (nb, nc)
                })
                .collect();
            (a.minus_ones(), rows)
        })
        .collect();
    let p = Arc::new(profiles);
    cache.lock().expect("profile cache").insert(n, p.clone());
    p
}

/// Normalized partition function with one spectral variable per row,
/// `Ž_N(u_1,…,u_N)`, by direct summation. Row `α` of a configuration
/// contributes `u_α^{n_b} [(u_α−q)(1−u_α q)/(1−q)²]^{(n_c−1)/2}`, and the
/// configuration carries the homogeneous weight `x(q)^k`.
pub fn inhom_eval(n: usize, q: &QPoint, u: &[ExactRational]) -> Result<ExactRational> {
    check_n(n)?;
    if u.len() != n {
        return Err(Error::InvalidParameter(format!("expected {n} spectral values, got {}", u.len())));
    }
    let x = q.x();
    let factors: Vec<ExactRational> = u.iter().map(|ui| q.c_factor(ui)).collect();
    let mut total = ExactRational::zero();
    for (k, rows) in row_profiles(n).iter() {
        let mut w = Ring::pow(&x.0, *k as u32);
        for (alpha, &(nb, nc)) in rows.iter().enumerate() {
            w = w * Ring::pow(&u[alpha], nb as u32) * Ring::pow(&factors[alpha], ((nc - 1) / 2) as u32);
        }
        total += w;
    }
    let norm = count_x(n, &x)?;
    if norm.is_zero() {
        return Err(Error::DivisionByZero(format!("A(N; x) vanishes at q = {}", q.q)));
    }
    Ok(total / norm)
}
