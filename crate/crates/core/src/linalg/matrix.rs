//! Sparse integer matrices in triplet form.

use crate::error::{Error, Result};

/// Sparse matrix with `i64` entries, stored as `(row, col, value)` triplets
/// sorted by `(row, col)`. Invariants: indices in range, no duplicate
/// positions, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseIntMatrix {
    /// Builds from triplets in any order; sorts, and rejects duplicates,
    /// out-of-range indices and explicit zeros.
    pub fn new(nrows: usize, ncols: usize, mut entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        for &(r, c, v) in &entries {
            if r >= nrows || c >= ncols {
                return Err(Error::InvalidArgument(format!(
                    "entry ({r}, {c}) outside {nrows}x{ncols}"
                )));
            }
            if v == 0 {
                return Err(Error::InvalidArgument(format!("explicit zero at ({r}, {c})")));
            }
        }
        if let Some(w) = entries.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidArgument(format!(
                "duplicate entry at ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self { nrows, ncols, entries })
    }

    /// Builds from dense rows, dropping zeros.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch(1, bad.len(), 1, ncols));
        }
        let mut entries = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((r, c, v));
                }
            }
        }
        Self::new(nrows, ncols, entries)
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, entries: Vec::new() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Triplets sorted by `(row, col)`.
    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0i64; self.ncols]; self.nrows];
        for &(r, c, v) in &self.entries {
            dense[r][c] = v;
        }
        dense
    }

    /// Per-row lists of `(col, value)`, ascending by column.
    pub fn row_lists(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.nrows];
        for &(r, c, v) in &self.entries {
            rows[r].push((c, v));
        }
        rows
    }
}
