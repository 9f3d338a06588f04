//! ASM ↔ six-vertex configuration with domain wall boundary conditions.
//!
//! Edges are described in the line picture: a thick edge carries one of the
//! `N` lines running from the top boundary to the left boundary. The vertical
//! edge below `(i, j)` is thick iff the column partial sum through row `i` is
//! 0; the horizontal edge left of `(i, j)` is thick iff the row sum from
//! column `j` rightwards is 1.

use super::Asm;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VertexType {
    /// All four edges thick.
    A1 = 1,
    /// All four edges thin.
    A2 = 2,
    /// Vertical edges thick, horizontal thin.
    B3 = 3,
    /// Horizontal edges thick, vertical thin.
    B4 = 4,
    /// Entry 1: line turns from top to left.
    C5 = 5,
    /// Entry −1: line turns from right to bottom.
    C6 = 6,
}

impl VertexType {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_a(self) -> bool {
        matches!(self, Self::A1 | Self::A2)
    }

    pub fn is_b(self) -> bool {
        matches!(self, Self::B3 | Self::B4)
    }

    pub fn is_c(self) -> bool {
        matches!(self, Self::C5 | Self::C6)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexGrid {
    n: usize,
    types: Vec<VertexType>,
    counts: [usize; 6],
}

impl VertexGrid {
    pub fn from_asm(asm: &Asm) -> Self {
        let n = asm.size();
        let mut types = Vec::with_capacity(n * n);
        let mut counts = [0usize; 6];
        for i in 0..n {
            for j in 0..n {
                let t = match asm.get(i, j) {
                    1 => VertexType::C5,
                    -1 => VertexType::C6,
                    _ => {
                        let vertical = asm.column_partial_sum(i, j) == 0;
                        let horizontal = asm.row_suffix_sum(i, j) == 1;
                        match (vertical, horizontal) {
                            (true, true) => VertexType::A1,
                            (false, false) => VertexType::A2,
                            (true, false) => VertexType::B3,
                            (false, true) => VertexType::B4,
                        }
                    }
                };
                counts[t.index() - 1] += 1;
                types.push(t);
            }
        }
        Self { n, types, counts }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> VertexType {
        self.types[row * self.n + col]
    }

    /// `n_1..n_6`.
    pub fn counts(&self) -> [usize; 6] {
        self.counts
    }

    /// `(n_a, n_b, n_c)` in a given row.
    pub fn row_weights(&self, row: usize) -> (usize, usize, usize) {
        let r = &self.types[row * self.n..(row + 1) * self.n];
        (
            r.iter().filter(|t| t.is_a()).count(),
            r.iter().filter(|t| t.is_b()).count(),
            r.iter().filter(|t| t.is_c()).count(),
        )
    }

    /// `(n_a, n_b, n_c)` over the whole lattice.
    pub fn weights(&self) -> (usize, usize, usize) {
        let c = self.counts;
        (c[0] + c[1], c[2] + c[3], c[4] + c[5])
    }

    /// Whether the vertical edge below `(row, col)` is thick; `row = None`
    /// addresses the top boundary edge above row 0.
    pub fn vertical_edge_thick(asm: &Asm, row: Option<usize>, col: usize) -> bool {
        match row {
            None => true,
            Some(i) => asm.column_partial_sum(i, col) == 0,
        }
    }

    /// Whether horizontal edge `m` of row `row` is thick, `m = 0` being the
    /// left boundary edge and `m = N` the right one.
    pub fn horizontal_edge_thick(asm: &Asm, row: usize, m: usize) -> bool {
        m < asm.size() && asm.row_suffix_sum(row, m) == 1
    }

    /// Checks the ice rule at every vertex and the domain wall boundary.
    pub fn is_consistent_with(&self, asm: &Asm) -> bool {
        let n = self.n;
        for j in 0..n {
            if !Self::vertical_edge_thick(asm, None, j) || Self::vertical_edge_thick(asm, Some(n - 1), j) {
                return false;
            }
        }
        for i in 0..n {
            if !Self::horizontal_edge_thick(asm, i, 0) || Self::horizontal_edge_thick(asm, i, n) {
                return false;
            }
            for j in 0..n {
                let up = Self::vertical_edge_thick(asm, i.checked_sub(1), j);
                let down = Self::vertical_edge_thick(asm, Some(i), j);
                let left = Self::horizontal_edge_thick(asm, i, j);
                let right = Self::horizontal_edge_thick(asm, i, j + 1);
                // lines enter from above or the right and leave below or to the left
                if u8::from(up) + u8::from(right) != u8::from(down) + u8::from(left) {
                    return false;
                }
                let expected = match (up, down, left, right) {
                    (true, true, true, true) => VertexType::A1,
                    (false, false, false, false) => VertexType::A2,
                    (true, true, false, false) => VertexType::B3,
                    (false, false, true, true) => VertexType::B4,
                    (true, false, true, false) => VertexType::C5,
                    (false, true, false, true) => VertexType::C6,
                    _ => return false,
                };
                if self.get(i, j) != expected {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::{enumerate, validate};

    #[test]
    fn identity_counts() {
        let g = VertexGrid::from_asm(&Asm::identity(2));
        let c = g.counts();
        assert_eq!(c[4], 2);
        assert_eq!(c[5], 0);
        assert_eq!(g.weights(), (0, 2, 2));
    }

    #[test]
    fn figure_configuration() {
        let a = validate(&[
            vec![0, 1, 0, 0, 0],
            vec![1, -1, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1],
        ])
        .unwrap();
        // Horizontal arrows of the three upper rows: thick edges point left.
        let expected = [
            [true, true, false, false, false, false],
            [true, false, true, false, false, false],
            [true, true, true, true, false, false],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (m, &thick) in row.iter().enumerate() {
                assert_eq!(VertexGrid::horizontal_edge_thick(&a, i, m), thick, "row {i} edge {m}");
            }
        }
        let g = VertexGrid::from_asm(&a);
        assert!(g.is_consistent_with(&a));
        assert_eq!(g.get(1, 1), VertexType::C6);
    }

    #[test]
    fn all_small_configurations_obey_the_rules() {
        for n in 1..=5 {
            for a in enumerate(n) {
                let g = VertexGrid::from_asm(&a);
                let c = g.counts();
                assert_eq!(c.iter().sum::<usize>(), n * n);
                assert_eq!(c[4] - c[5], n);
                assert_eq!(c[5], a.minus_ones());
                assert!(g.is_consistent_with(&a));
                for i in 0..n {
                    assert_eq!(g.row_weights(i).2 % 2, 1);
                }
            }
        }
        for a in enumerate(3).filter(|a| a.minus_ones() == 1) {
            let c = VertexGrid::from_asm(&a).counts();
            assert_eq!((c[4], c[5]), (4, 1));
        }
    }
}
