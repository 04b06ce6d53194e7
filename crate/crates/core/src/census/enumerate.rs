//! Orderly generation of connected bipartite graphs with labelled parts.
//!
//! A scaffold is stored as the sorted multiset of its columns, each column a
//! bitmask over the rows (the smaller part). Column permutations are absorbed
//! by sorting; a multiset is canonical when no row permutation produces a
//! lexicographically smaller sorted multiset. Removing the largest column of
//! a canonical multiset leaves a canonical multiset, so canonical multisets
//! of size `k + 1` are exactly the canonical extensions of those of size `k`
//! by a column no smaller than the last.

use super::CensusError;
use crate::graph::Biadjacency;

/// Largest `t·s` enumerated without the long-run flag.
pub const EXHAUSTIVE_LIMIT: usize = 40;
/// Largest smaller part supported (row permutations are tried exhaustively).
pub const MAX_ROWS: usize = 8;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Enumeration of connected bipartite graphs with parts of sizes `t` (rows of
/// K) and `s` (columns of K), one per isomorphism class fixing each part.
#[derive(Debug, Clone)]
pub struct EnumerationState {
    t: usize,
    s: usize,
    /// Rows of the internal representation: `min(t, s)`.
    rows: usize,
    /// Whether the internal columns are the S-vertices.
    columns_are_s: bool,
    /// Also identify a scaffold with its transpose (only meaningful for `s = t`).
    swap_parts: bool,
    /// `perm_mask[p][m]`: mask `m` with rows relabelled by permutation `p`.
    perm_mask: Vec<Vec<u64>>,
    emitted: usize,
}

impl EnumerationState {
    pub fn new(t: usize, s: usize, allow_long: bool) -> Result<Self, CensusError> {
        if t == 0 || s == 0 {
            return Err(CensusError::EmptyPart);
        }
        if t * s > EXHAUSTIVE_LIMIT && !allow_long {
            return Err(CensusError::TooLarge { t, s, limit: EXHAUSTIVE_LIMIT });
        }
        let rows = t.min(s);
        if rows > MAX_ROWS {
            return Err(CensusError::TooManyRows { rows, max: MAX_ROWS });
        }
        let perm_mask = permutations(rows)
            .iter()
            .map(|p| {
                (0..1u64 << rows)
                    .map(|m| (0..rows).filter(|&i| m >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << p[i]))
                    .collect()
            })
            .collect();
        Ok(EnumerationState { t, s, rows, columns_are_s: rows == t, swap_parts: false, perm_mask, emitted: 0 })
    }

    /// Quotients additionally by exchanging the two parts when `s = t`.
    pub fn with_part_swap(mut self, swap: bool) -> Self {
        self.swap_parts = swap && self.s == self.t;
        self
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn is_canonical(&self, cols: &[u64]) -> bool {
        let mut buf = vec![0u64; cols.len()];
        for pm in &self.perm_mask[1..] {
            for (b, &c) in buf.iter_mut().zip(cols) {
                *b = pm[c as usize];
            }
            buf.sort_unstable();
            if buf.as_slice() < cols {
                return false;
            }
        }
        true
    }

    fn canonical(&self, cols: &[u64]) -> Vec<u64> {
        let mut best: Option<Vec<u64>> = None;
        for pm in &self.perm_mask {
            let mut buf: Vec<u64> = cols.iter().map(|&c| pm[c as usize]).collect();
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf);
            }
        }
        best.unwrap_or_default()
    }

    fn transpose_cols(&self, cols: &[u64]) -> Vec<u64> {
        (0..self.rows).map(|i| cols.iter().enumerate().fold(0u64, |m, (k, &c)| m | (c >> i & 1) << k)).collect()
    }

    fn is_connected(&self, cols: &[u64]) -> bool {
        let full = (1u64 << self.rows) - 1;
        if cols.iter().fold(0, |m, &c| m | c) != full {
            return false;
        }
        // grow the reached row set through columns touching it
        let mut reached = cols[0];
        let mut used = vec![false; cols.len()];
        loop {
            let mut grew = false;
            for (k, &c) in cols.iter().enumerate() {
                if !used[k] && c & reached != 0 {
                    used[k] = true;
                    if c & !reached != 0 {
                        reached |= c;
                    }
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        used.iter().all(|&u| u)
    }

    fn to_biadjacency(&self, cols: &[u64]) -> Biadjacency {
        let b = Biadjacency::from_column_masks(self.rows, cols);
        if self.columns_are_s {
            b
        } else {
            b.transpose()
        }
    }

    /// Calls `emit` on every scaffold in lexicographic order of the column
    /// multisets.
    pub fn for_each(&mut self, mut emit: impl FnMut(Biadjacency)) {
        let width = self.t.max(self.s);
        let mut cols: Vec<u64> = Vec::with_capacity(width);
        let top = 1u64 << self.rows;
        // explicit stack of next candidate per depth
        let mut next: Vec<u64> = vec![1];
        while let Some(cand) = next.pop() {
            if cand >= top {
                cols.pop();
                continue;
            }
            next.push(cand + 1);
            cols.push(cand);
            if !self.is_canonical(&cols) {
                cols.pop();
                continue;
            }
            if cols.len() == width {
                let keep = self.is_connected(&cols)
                    && (!self.swap_parts || cols.as_slice() <= self.canonical(&self.transpose_cols(&cols)).as_slice());
                if keep {
                    self.emitted += 1;
                    emit(self.to_biadjacency(&cols));
                }
                cols.pop();
            } else {
                next.push(cand);
            }
        }
    }

    pub fn collect(mut self) -> Vec<Biadjacency> {
        let mut out = Vec::new();
        self.for_each(|b| out.push(b));
        out
    }
}

/// All connected bipartite scaffolds with `t` rows and `s` columns up to
/// isomorphism fixing each part.
pub fn enumerate_connected_bipartite(t: usize, s: usize, allow_long: bool) -> Result<Vec<Biadjacency>, CensusError> {
    Ok(EnumerationState::new(t, s, allow_long)?.collect())
}
