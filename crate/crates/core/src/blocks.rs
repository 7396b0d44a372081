//! Block structure of the relation matrix.
//!
//! The bipartite graph on rows and columns with an edge at every nonzero
//! splits the relation matrix into connected components. [`decompose`]
//! finds them, [`blockwise_rank`] sums per-component ranks, and
//! [`match_template`] decides permutation equivalence against the
//! reference blocks in [`templates`]. The decomposition is discovered
//! from the sparsity pattern alone, so agreement with the combinatorial
//! prediction (one component per free part) is a checkable fact rather
//! than an assumption.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{rank, Characteristic, SparseIntMatrix};

/// One connected component, carrying its original row and column indices
/// and the extracted submatrix on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    rows: Vec<usize>,
    cols: Vec<usize>,
    matrix: SparseIntMatrix,
}

impl Block {
    /// Original row indices, ascending.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Original column indices, ascending.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Submatrix reindexed to `rows() x cols()` positions.
    pub fn matrix(&self) -> &SparseIntMatrix {
        &self.matrix
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }
}

/// Connected components of the row-column bipartite graph, plus the
/// columns with no nonzero entry. Rows with no nonzero entry belong to no
/// component (the relation matrix has none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    components: Vec<Block>,
    isolated_columns: Vec<usize>,
}

impl BlockDecomposition {
    /// Components ordered by their smallest row index.
    pub fn components(&self) -> &[Block] {
        &self.components
    }

    pub fn isolated_columns(&self) -> &[usize] {
        &self.isolated_columns
    }

    /// Multiset of component shapes as shape -> count.
    pub fn shape_census(&self) -> BTreeMap<(usize, usize), usize> {
        let mut census = BTreeMap::new();
        for block in &self.components {
            *census.entry(block.shape()).or_insert(0) += 1;
        }
        census
    }

    /// Per-component ranks over one characteristic; see [`blockwise_rank`].
    pub fn ranks(&self, characteristic: &Characteristic) -> BlockwiseRank {
        let component_ranks: Vec<usize> =
            self.components.iter().map(|block| rank(block.matrix(), characteristic)).collect();
        let mut by_shape: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (block, &r) in self.components.iter().zip(&component_ranks) {
            by_shape.entry(block.shape()).or_default().push(r);
        }
        BlockwiseRank { total: component_ranks.iter().sum(), component_ranks, by_shape }
    }
}

/// Union-find with path halving.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self { parent: (0..size).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Splits `matrix` into the connected components of its bipartite nonzero
/// graph. Deterministic: components are ordered by smallest row index,
/// and rows/columns within each component stay in ascending order.
pub fn decompose(matrix: &SparseIntMatrix) -> BlockDecomposition {
    let (nrows, ncols) = (matrix.nrows(), matrix.ncols());
    let mut uf = UnionFind::new(nrows + ncols);
    let mut col_used = vec![false; ncols];
    for &(r, c, _) in matrix.entries() {
        uf.union(r, nrows + c);
        col_used[c] = true;
    }
    // group rows and cols by component root; nonzero rows only
    let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    let mut row_used = vec![false; nrows];
    for &(r, _, _) in matrix.entries() {
        row_used[r] = true;
    }
    for (r, _) in row_used.iter().enumerate().filter(|(_, &used)| used) {
        groups.entry(uf.find(r)).or_default().0.push(r);
    }
    for (c, _) in col_used.iter().enumerate().filter(|(_, &used)| used) {
        groups.entry(uf.find(nrows + c)).or_default().1.push(c);
    }
    // roots are always row nodes here (every used column is united with a
    // row, and union prefers the smaller id), so BTreeMap order over
    // roots = order by smallest row index
    let mut components = Vec::with_capacity(groups.len());
    for (_, (rows, cols)) in groups {
        let row_pos: BTreeMap<usize, usize> =
            rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let col_pos: BTreeMap<usize, usize> =
            cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let entries: Vec<(usize, usize, i64)> = matrix
            .entries()
            .iter()
            .filter(|(r, _, _)| row_pos.contains_key(r))
            .map(|&(r, c, v)| (row_pos[&r], col_pos[&c], v))
            .collect();
        let local = SparseIntMatrix::new(rows.len(), cols.len(), entries)
            .expect("component entries are in range and duplicate-free");
        components.push(Block { rows, cols, matrix: local });
    }
    let isolated_columns = (0..ncols).filter(|&c| !col_used[c]).collect();
    BlockDecomposition { components, isolated_columns }
}

/// Total and per-component ranks of `matrix` over one characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockwiseRank {
    total: usize,
    component_ranks: Vec<usize>,
    by_shape: BTreeMap<(usize, usize), Vec<usize>>,
}

impl BlockwiseRank {
    /// Sum of the component ranks; equals the rank of the whole matrix.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Ranks in component order.
    pub fn component_ranks(&self) -> &[usize] {
        &self.component_ranks
    }

    /// Ranks grouped by component shape, preserving component order.
    pub fn by_shape(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.by_shape
    }
}

/// Decomposes and ranks in one call.
pub fn blockwise_rank(matrix: &SparseIntMatrix, characteristic: &Characteristic) -> BlockwiseRank {
    decompose(matrix).ranks(characteristic)
}

/// True iff some row permutation and column permutation map `a` onto `b`.
/// Errors if the shapes differ. Backtracking over row images with the
/// column mapping grown incrementally; intended for blocks up to 15 x 20.
pub fn match_template(a: &SparseIntMatrix, b: &SparseIntMatrix) -> Result<bool> {
    if (a.nrows(), a.ncols()) != (b.nrows(), b.ncols()) {
        return Err(Error::ShapeMismatch(a.nrows(), a.ncols(), b.nrows(), b.ncols()));
    }
    if a.nnz() != b.nnz() {
        return Ok(false);
    }
    let rows_a = a.row_lists();
    let rows_b = b.row_lists();
    // quick screens: per-row and per-column value multisets must agree
    let row_profile = |rows: &[Vec<(usize, i64)>]| -> Vec<Vec<i64>> {
        let mut profiles: Vec<Vec<i64>> = rows
            .iter()
            .map(|row| {
                let mut values: Vec<i64> = row.iter().map(|&(_, v)| v).collect();
                values.sort_unstable();
                values
            })
            .collect();
        profiles.sort();
        profiles
    };
    if row_profile(&rows_a) != row_profile(&rows_b) {
        return Ok(false);
    }
    let col_profile = |m: &SparseIntMatrix| -> Vec<Vec<i64>> {
        let mut cols: Vec<Vec<i64>> = vec![Vec::new(); m.ncols()];
        for &(_, c, v) in m.entries() {
            cols[c].push(v);
        }
        let mut profiles: Vec<Vec<i64>> = cols
            .into_iter()
            .map(|mut values| {
                values.sort_unstable();
                values
            })
            .collect();
        profiles.sort();
        profiles
    };
    if col_profile(a) != col_profile(b) {
        return Ok(false);
    }

    // search rows of `a` densest-first; the column map constrains later rows
    let mut order: Vec<usize> = (0..a.nrows()).collect();
    order.sort_by_key(|&r| std::cmp::Reverse(rows_a[r].len()));
    let mut search = MatchSearch {
        order,
        rows_a: &rows_a,
        rows_b: &rows_b,
        row_taken: vec![false; b.nrows()],
        col_image: vec![None; a.ncols()],
        col_taken: vec![false; b.ncols()],
    };
    Ok(search.assign_row(0))
}

/// Backtracking state: a partial injection of source rows and columns
/// into target rows and columns. Every binding made on a failed branch is
/// undone before the next candidate is tried.
struct MatchSearch<'a> {
    order: Vec<usize>,
    rows_a: &'a [Vec<(usize, i64)>],
    rows_b: &'a [Vec<(usize, i64)>],
    row_taken: Vec<bool>,
    col_image: Vec<Option<usize>>,
    col_taken: Vec<bool>,
}

impl MatchSearch<'_> {
    fn assign_row(&mut self, depth: usize) -> bool {
        let Some(&ra) = self.order.get(depth) else {
            return true;
        };
        for rb in 0..self.rows_b.len() {
            if self.row_taken[rb] || self.rows_b[rb].len() != self.rows_a[ra].len() {
                continue;
            }
            // already-mapped source columns must land in the target row
            // with equal values; the rest must pair off, value for value,
            // with the target row's free columns
            let target: BTreeMap<usize, i64> = self.rows_b[rb].iter().copied().collect();
            let mut unmapped_a: Vec<(usize, i64)> = Vec::new();
            let mut consistent = true;
            for &(c, v) in &self.rows_a[ra] {
                match self.col_image[c] {
                    Some(img) => {
                        if target.get(&img) != Some(&v) {
                            consistent = false;
                            break;
                        }
                    }
                    None => unmapped_a.push((c, v)),
                }
            }
            if !consistent {
                continue;
            }
            let free_b: Vec<(usize, i64)> =
                self.rows_b[rb].iter().copied().filter(|&(c, _)| !self.col_taken[c]).collect();
            // a taken target column not hit by a mapped source column
            // would make the counts disagree
            if free_b.len() != unmapped_a.len() {
                continue;
            }
            self.row_taken[rb] = true;
            if self.bind_columns(0, &unmapped_a, &free_b, depth) {
                return true;
            }
            self.row_taken[rb] = false;
        }
        false
    }

    /// Tries every value-preserving bijection between the current row's
    /// unmapped source columns and free target columns, descending into
    /// the next row once all are bound.
    fn bind_columns(
        &mut self,
        k: usize,
        unmapped_a: &[(usize, i64)],
        free_b: &[(usize, i64)],
        depth: usize,
    ) -> bool {
        let Some(&(ca, va)) = unmapped_a.get(k) else {
            return self.assign_row(depth + 1);
        };
        for &(cb, vb) in free_b {
            if vb != va || self.col_taken[cb] {
                continue;
            }
            self.col_image[ca] = Some(cb);
            self.col_taken[cb] = true;
            if self.bind_columns(k + 1, unmapped_a, free_b, depth) {
                return true;
            }
            self.col_image[ca] = None;
            self.col_taken[cb] = false;
        }
        false
    }
}

/// Reference blocks, transcribed as displayed: incidence patterns of the
/// three relation shapes at `n = 6`.
pub mod templates {
    use crate::linalg::SparseIntMatrix;

    /// 15 x 20 block of the four-term relations (rows: the 15 pivots
    /// made of two dual pairs). Equals the inclusion matrix of 2-subsets
    /// into 3-subsets of a 6-element set.
    pub fn quad_block() -> SparseIntMatrix {
        const ROWS: [[usize; 4]; 15] = [
            [1, 2, 3, 4],
            [1, 5, 6, 7],
            [2, 5, 8, 9],
            [3, 6, 8, 10],
            [4, 7, 9, 10],
            [1, 11, 12, 13],
            [2, 11, 14, 15],
            [3, 12, 14, 16],
            [4, 13, 15, 16],
            [5, 11, 17, 18],
            [6, 12, 17, 19],
            [7, 13, 18, 19],
            [8, 14, 17, 20],
            [9, 15, 18, 20],
            [10, 16, 19, 20],
        ];
        let entries = ROWS
            .iter()
            .enumerate()
            .flat_map(|(r, cols)| cols.iter().map(move |&c| (r, c - 1, 1)))
            .collect();
        SparseIntMatrix::new(15, 20, entries).expect("valid template")
    }

    /// 4 x 6 block of the three-term relations.
    pub fn triple_block() -> SparseIntMatrix {
        SparseIntMatrix::from_rows(&[
            vec![1, 1, 1, 0, 0, 0],
            vec![1, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1],
        ])
        .expect("valid template")
    }

    /// 1 x 2 block of the two-term relations.
    pub fn pair_block() -> SparseIntMatrix {
        SparseIntMatrix::from_rows(&[vec![1, 1]]).expect("valid template")
    }
}
