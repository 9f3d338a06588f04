//! Alternating sign matrices and their six-vertex configurations.

mod enumerate;
mod vertex;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use enumerate::{count, enumerate, AsmIter};
pub use vertex::{VertexGrid, VertexType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("illegal entry {value} at row {row}, column {col}")]
    IllegalEntry { row: usize, col: usize, value: i64 },
    #[error("column {col}: partial sum {sum} at row {row}")]
    ColumnPartialSum { col: usize, row: usize, sum: i64 },
    #[error("row {row}: partial sum {sum} at column {col}")]
    RowPartialSum { row: usize, col: usize, sum: i64 },
    #[error("row {row} sums to {sum}")]
    RowSum { row: usize, sum: i64 },
    #[error("column {col} sums to {sum}")]
    ColumnSum { col: usize, sum: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

/// An `N×N` alternating sign matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

/// Boundary positions and the number of `−1` entries. Row and column numbers
/// are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AsmStats {
    pub k: usize,
    /// Column of the 1 in the top row, counted from the right.
    pub top_row_col_from_right: usize,
    /// Column of the 1 in the bottom row, counted from the right.
    pub bottom_row_col_from_right: usize,
    /// Row of the 1 in the last column, counted from the top.
    pub last_col_row: usize,
    /// Row of the 1 in the first column, counted from the top.
    pub first_col_row: usize,
}

/// Checks the alternating sign conditions. Entries are scanned row by row and
/// the first violated partial sum (column before row at each entry) is
/// reported, with 1-based indices.
pub fn validate(rows: &[Vec<i64>]) -> Result<Asm, ValidationError> {
    let n = rows.len();
    if n == 0 {
        return Err(ValidationError::Empty);
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(ValidationError::NotSquare { rows: n, row: i + 1, cols: r.len() });
        }
        for (j, &v) in r.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(ValidationError::IllegalEntry { row: i + 1, col: j + 1, value: v });
            }
        }
    }
    let mut col_sums = vec![0i64; n];
    for (i, r) in rows.iter().enumerate() {
        let mut row_sum = 0i64;
        for (j, &v) in r.iter().enumerate() {
            col_sums[j] += v;
            row_sum += v;
            if !(0..=1).contains(&col_sums[j]) {
                return Err(ValidationError::ColumnPartialSum { col: j + 1, row: i + 1, sum: col_sums[j] });
            }
            if !(0..=1).contains(&row_sum) {
                return Err(ValidationError::RowPartialSum { row: i + 1, col: j + 1, sum: row_sum });
            }
        }
        if row_sum != 1 {
            return Err(ValidationError::RowSum { row: i + 1, sum: row_sum });
        }
    }
    if let Some(j) = col_sums.iter().position(|&s| s != 1) {
        return Err(ValidationError::ColumnSum { col: j + 1, sum: col_sums[j] });
    }
    let entries = rows.iter().flatten().map(|&v| v as i8).collect();
    Ok(Asm { n, entries })
}

impl Asm {
    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).iter().map(|&v| i64::from(v)).collect()).collect()
    }

    fn remap(&self, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = f(i, j);
                entries[a * n + b] = self.get(i, j);
            }
        }
        Self { n, entries }
    }

    pub fn transpose(&self) -> Self {
        self.remap(|i, j| (j, i))
    }

    /// Mirror image left to right.
    pub fn reflect_columns(&self) -> Self {
        let n = self.n;
        self.remap(|i, j| (i, n - 1 - j))
    }

    /// Mirror image top to bottom.
    pub fn reflect_rows(&self) -> Self {
        let n = self.n;
        self.remap(|i, j| (n - 1 - i, j))
    }

    pub fn rotate180(&self) -> Self {
        let n = self.n;
        self.remap(|i, j| (n - 1 - i, n - 1 - j))
    }

    /// Number of `−1` entries.
    pub fn minus_ones(&self) -> usize {
        self.entries.iter().filter(|&&v| v == -1).count()
    }

    /// Column (0-based) of the unique 1 in a boundary row.
    fn one_in_row(&self, row: usize) -> usize {
        self.row(row).iter().position(|&v| v == 1).expect("boundary row holds a single 1")
    }

    fn one_in_col(&self, col: usize) -> usize {
        (0..self.n).find(|&i| self.get(i, col) == 1).expect("boundary column holds a single 1")
    }

    pub fn stats(&self) -> AsmStats {
        let n = self.n;
        AsmStats {
            k: self.minus_ones(),
            top_row_col_from_right: n - self.one_in_row(0),
            bottom_row_col_from_right: n - self.one_in_row(n - 1),
            last_col_row: self.one_in_col(n - 1) + 1,
            first_col_row: self.one_in_col(0) + 1,
        }
    }

    /// Column partial sum through 0-based `row` inclusive.
    pub fn column_partial_sum(&self, row: usize, col: usize) -> i64 {
        (0..=row).map(|i| i64::from(self.get(i, col))).sum()
    }

    /// Row sum from 0-based `col` to the right edge.
    pub fn row_suffix_sum(&self, row: usize, col: usize) -> i64 {
        self.row(row)[col..].iter().map(|&v| i64::from(v)).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_rows()).expect("integer matrix serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ValidationError> {
        let rows: Vec<Vec<i64>> =
            serde_json::from_str(s).map_err(|e| ValidationError::Parse(e.to_string()))?;
        validate(&rows)
    }
}

pub fn stats(asm: &Asm) -> AsmStats {
    asm.stats()
}

pub fn to_vertex_grid(asm: &Asm) -> VertexGrid {
    VertexGrid::from_asm(asm)
}

/// Text form: one line per row, entries separated by spaces.
impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let line: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Asm {
    type Err = ValidationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|e| ValidationError::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        validate(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sample_asm() -> Asm {
        validate(&[
            vec![0, 1, 0, 0, 0],
            vec![1, -1, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn accepts_permutations_and_example() {
        assert!(validate(&Asm::identity(3).to_rows()).is_ok());
        let a = sample_asm();
        assert_eq!(a.stats().k, 1);
    }

    #[test]
    fn rejects_with_diagnostic() {
        let err = validate(&[vec![1, 0], vec![1, -1]]).unwrap_err();
        assert_eq!(err, ValidationError::ColumnPartialSum { col: 1, row: 2, sum: 2 });
        assert!(matches!(validate(&[vec![1, 0]]), Err(ValidationError::NotSquare { .. })));
        assert!(matches!(
            validate(&[vec![2, 0], vec![0, 1]]),
            Err(ValidationError::IllegalEntry { value: 2, .. })
        ));
        assert!(matches!(
            validate(&[vec![0, 0, 1], vec![1, 1, -1], vec![0, 0, 1]]),
            Err(ValidationError::RowPartialSum { row: 2, col: 2, sum: 2 })
        ));
        assert!(matches!(validate(&[vec![0, 0], vec![1, 0]]), Err(ValidationError::RowSum { row: 1, .. })));
    }

    #[test]
    fn stats_conventions() {
        let s = Asm::identity(3).stats();
        assert_eq!(s.k, 0);
        assert_eq!(s.top_row_col_from_right, 3);
        assert_eq!(s.bottom_row_col_from_right, 1);
        assert_eq!(s.last_col_row, 3);
        assert_eq!(s.first_col_row, 1);
        let middle: Asm = "0 1 0\n1 -1 1\n0 1 0\n".parse().unwrap();
        assert_eq!(middle.stats().top_row_col_from_right, 2);
        assert_eq!(middle.stats().k, 1);
    }

    #[test]
    fn text_and_json_round_trip() {
        let a = sample_asm();
        assert_eq!(a.to_string().parse::<Asm>().unwrap(), a);
        assert_eq!(Asm::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(a.to_json(), "[[0,1,0,0,0],[1,-1,1,0,0],[0,0,0,1,0],[0,1,0,0,0],[0,0,0,0,1]]");
    }

    #[test]
    fn symmetries_preserve_validity() {
        let a = sample_asm();
        for b in [a.transpose(), a.rotate180(), a.reflect_columns(), a.reflect_rows()] {
            assert!(validate(&b.to_rows()).is_ok());
        }
        assert_eq!(a.transpose().transpose(), a);
    }
}
