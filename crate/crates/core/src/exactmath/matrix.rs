use super::field::Ring;
use super::real::Real;
use crate::error::{Error, Result};

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { rows: n, row, cols: r.len() });
        }
    }
    Ok(n)
}

/// Fraction-free (Bareiss) determinant over any ring with exact division.
///
/// Pivots are taken as the first nonzero entry at or below the diagonal, so
/// the sequence of operations depends only on the input.
pub fn determinant<R: Ring>(matrix: &[Vec<R>]) -> Result<R> {
    let n = check_square(matrix)?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut m: Vec<Vec<R>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * &m[k][k] - m[i][k].clone() * &m[k][j];
                m[i][j] = num.div_exact(&prev).ok_or_else(|| {
                    Error::Inconsistent("Bareiss step is not exactly divisible".into())
                })?;
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Laplace expansion along the first row. Exponential cost; intended as an
/// independent check on small matrices.
pub fn determinant_cofactor<R: Ring>(matrix: &[Vec<R>]) -> Result<R> {
    let n = check_square(matrix)?;
    fn rec<R: Ring>(m: &[Vec<R>], cols: &[usize], row: usize) -> R {
        if cols.is_empty() {
            return R::one();
        }
        let mut acc = R::zero();
        for (idx, &c) in cols.iter().enumerate() {
            if m[row][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = m[row][c].clone() * rec(m, &rest, row + 1);
            acc = if idx % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(rec(matrix, &cols, 0))
}

#[derive(Clone, Debug)]
pub struct LuDeterminant {
    pub value: Real,
    /// Smallest over largest pivot magnitude; zero for a singular matrix.
    pub pivot_ratio: Real,
}

/// Determinant by LU factorization with partial pivoting.
pub fn lu_determinant(matrix: &[Vec<Real>]) -> Result<LuDeterminant> {
    let n = check_square(matrix)?;
    let mut m: Vec<Vec<Real>> = matrix.to_vec();
    let mut value = Real::one();
    let mut min_piv: Option<Real> = None;
    let mut max_piv: Option<Real> = None;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| m[a][k].abs().partial_cmp(&m[b][k].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(k);
        if m[p][k].is_zero() {
            return Ok(LuDeterminant { value: Real::zero(), pivot_ratio: Real::zero() });
        }
        if p != k {
            m.swap(p, k);
            value = -value;
        }
        let piv = m[k][k].clone();
        let a = piv.abs();
        min_piv = Some(match min_piv {
            Some(v) if v < a => v,
            _ => a.clone(),
        });
        max_piv = Some(match max_piv {
            Some(v) if v > a => v,
            _ => a,
        });
        value = value * &piv;
        for i in k + 1..n {
            let f = m[i][k].clone() / &piv;
            for j in k + 1..n {
                let t = f.clone() * &m[k][j];
                m[i][j] = m[i][j].clone() - t;
            }
        }
    }
    let pivot_ratio = match (min_piv, max_piv) {
        (Some(lo), Some(hi)) => lo / hi,
        _ => Real::one(),
    };
    Ok(LuDeterminant { value, pivot_ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ExactRational, MPoly};

    fn q(rows: &[&[i64]]) -> Vec<Vec<ExactRational>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(determinant(&q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap(), rat(1, 1));
        assert_eq!(determinant(&q(&[&[1, 1, 1], &[1, 2, 3], &[1, 4, 9]])).unwrap(), rat(2, 1));
        assert_eq!(determinant(&q(&[&[0, 1], &[1, 0]])).unwrap(), rat(-1, 1));
        assert_eq!(determinant(&q(&[&[1, 2], &[2, 4]])).unwrap(), rat(0, 1));
        assert!(matches!(
            determinant(&[vec![rat(1, 1), rat(2, 1)]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn polynomial_entries() {
        let u1 = MPoly::var(0);
        let u2 = MPoly::var(1);
        let one = MPoly::constant(rat(1, 1));
        let half = MPoly::constant(rat(1, 2));
        let h = |u: &MPoly| &(&(u - &one) * &(u + &one)) * &half;
        let m = vec![vec![u1.clone(), u2.clone()], vec![h(&u1), h(&u2)]];
        let expected = &(&(&one + &(&u1 * &u2)) * &(&u2 - &u1)) * &half;
        assert_eq!(determinant(&m).unwrap(), expected);
        assert_eq!(determinant_cofactor(&m).unwrap(), expected);
    }

    #[test]
    fn lu_matches_exact() {
        let m = q(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let r: Vec<Vec<Real>> =
            m.iter().map(|row| row.iter().map(crate::exactmath::Field::from_rational).collect()).collect();
        let lu = lu_determinant(&r).unwrap();
        assert!(lu.value.rel_err(&Real::from_i64(4)) < Real::tolerance(40));
        assert!(lu.pivot_ratio > Real::zero());
    }
}
