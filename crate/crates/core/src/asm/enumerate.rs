//! Exhaustive enumeration by row-wise backtracking over column partial sums.
//!
//! The state after a row is the set of columns whose partial sum is 1, held
//! as a bit mask. The rows allowed from a state depend on the mask only, so
//! they are computed once per mask.

use std::collections::HashMap;
use std::rc::Rc;

use super::Asm;

type Transition = (Vec<i8>, u32);

fn transitions_from(n: usize, state: u32) -> Vec<Transition> {
    fn rec(n: usize, state: u32, col: usize, open: bool, row: &mut Vec<i8>, out: &mut Vec<Transition>) {
        if col == n {
            if open {
                let next = row.iter().enumerate().fold(state, |s, (j, &v)| match v {
                    1 => s | (1 << j),
                    -1 => s & !(1 << j),
                    _ => s,
                });
                out.push((row.clone(), next));
            }
            return;
        }
        let filled = state & (1 << col) != 0;
        row.push(0);
        rec(n, state, col + 1, open, row, out);
        row.pop();
        if !open && !filled {
            row.push(1);
            rec(n, state, col + 1, true, row, out);
            row.pop();
        }
        if open && filled {
            row.push(-1);
            rec(n, state, col + 1, false, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, state, 0, false, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Streams every `N×N` alternating sign matrix exactly once, in a fixed
/// order.
pub struct AsmIter {
    n: usize,
    cache: HashMap<u32, Rc<Vec<Transition>>>,
    /// One frame per filled row: transitions out of the previous state and
    /// the index of the one currently in use.
    stack: Vec<(Rc<Vec<Transition>>, usize)>,
    started: bool,
}

impl AsmIter {
    fn transitions(&mut self, state: u32) -> Rc<Vec<Transition>> {
        let n = self.n;
        self.cache.entry(state).or_insert_with(|| Rc::new(transitions_from(n, state))).clone()
    }

    fn current_state(&self) -> u32 {
        self.stack.last().map_or(0, |(t, i)| t[*i].1)
    }

    /// Descends from the current frame to a full matrix, choosing the first
    /// transition at each level. Returns false on a dead end.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.n {
            let t = self.transitions(self.current_state());
            if t.is_empty() {
                return false;
            }
            self.stack.push((t, 0));
        }
        true
    }

    /// Moves to the next sibling at the deepest level that has one.
    fn advance(&mut self) -> bool {
        while let Some((t, i)) = self.stack.last_mut() {
            if *i + 1 < t.len() {
                *i += 1;
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn emit(&self) -> Asm {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (t, i) in &self.stack {
            entries.extend_from_slice(&t[*i].0);
        }
        Asm::from_entries_unchecked(self.n, entries)
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.n == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            return None;
        }
        loop {
            if self.descend() {
                return Some(self.emit());
            }
            if !self.advance() {
                return None;
            }
        }
    }
}

pub fn enumerate(n: usize) -> AsmIter {
    assert!(n <= 32, "state masks hold at most 32 columns");
    AsmIter { n, cache: HashMap::new(), stack: Vec::new(), started: false }
}

/// Number of `N×N` ASMs, by dynamic programming over the same states.
pub fn count(n: usize) -> u128 {
    let mut layer: HashMap<u32, u128> = HashMap::from([(0, 1)]);
    for _ in 0..n {
        let mut next: HashMap<u32, u128> = HashMap::new();
        for (&s, &c) in &layer {
            for (_, t) in transitions_from(n, s) {
                *next.entry(t).or_insert(0) += c;
            }
        }
        layer = next;
    }
    layer.values().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::validate;
    use std::collections::{BTreeMap, HashSet};

    #[test]
    fn counts_match_known_sequence() {
        let expected = [1usize, 2, 7, 42, 429, 7436];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate(i + 1).count(), e, "N = {}", i + 1);
            assert_eq!(count(i + 1), e as u128);
        }
        assert_eq!(count(7), 218348);
    }

    #[test]
    fn every_matrix_is_valid_and_distinct() {
        let all: Vec<Asm> = enumerate(5).collect();
        let set: HashSet<&Asm> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        for a in &all {
            assert!(validate(&a.to_rows()).is_ok());
            assert!(set.contains(&a.transpose()));
            assert!(set.contains(&a.rotate180()));
        }
    }

    #[test]
    fn permutation_count_and_top_row_multiset() {
        for n in 1..=5usize {
            let perms = enumerate(n).filter(|a| a.minus_ones() == 0).count();
            assert_eq!(perms, (1..=n).product::<usize>());
        }
        let mut hist = BTreeMap::new();
        for a in enumerate(3) {
            *hist.entry(a.stats().top_row_col_from_right).or_insert(0) += 1;
        }
        assert_eq!(hist, BTreeMap::from([(1, 2), (2, 3), (3, 2)]));
        assert_eq!(enumerate(1).collect::<Vec<_>>(), vec![Asm::identity(1)]);
    }

    #[test]
    fn order_is_deterministic() {
        let a: Vec<Asm> = enumerate(4).collect();
        let b: Vec<Asm> = enumerate(4).collect();
        assert_eq!(a, b);
    }
}
