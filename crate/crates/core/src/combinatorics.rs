//! Index combinatorics over the symplectic index set `{1, .., 2n}`.
//!
//! An [`Index`] is a strictly increasing tuple of integers drawn from
//! `{1, .., m}`. This module enumerates, ranks and unranks such tuples in
//! lexicographic order, and classifies the tuples of length `n - 2` by the
//! dual pairs `{i, 2n+1-i}` they contain. The dual-pair classification
//! partitions the length-`(n-2)` tuples into one class per (pair count,
//! free part) key; that partition is what makes the relation matrix block
//! diagonal.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Strictly increasing tuple of integers, each in `1..=m`.
///
/// Equality and ordering are element-wise; the universe bound `m` is a
/// validation parameter, not part of the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    elems: Vec<u32>,
}

impl Index {
    /// Validates that `elems` is strictly increasing with all elements in
    /// `1..=m`.
    pub fn new(elems: Vec<u32>, m: u32) -> Result<Self> {
        if let Some(&first) = elems.first() {
            if first == 0 {
                return Err(Error::InvalidIndex("elements must be >= 1".into()));
            }
        }
        if let Some(w) = elems.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "elements not strictly increasing at {}, {}",
                w[0], w[1]
            )));
        }
        if let Some(&last) = elems.last() {
            if last > m {
                return Err(Error::InvalidIndex(format!(
                    "element {last} exceeds universe bound {m}"
                )));
            }
        }
        Ok(Self { elems })
    }

    /// The empty tuple, the single element of `I(0, m)`.
    pub fn empty() -> Self {
        Self { elems: Vec::new() }
    }

    /// Tuple length (the `ell` of `I(ell, m)`).
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    /// Membership test on the support.
    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Compact label with `A = 10`, `B = 11`, `C = 12`, ... for elements
    /// above 9, e.g. `(1,2,11,12)` prints as `12BC`. Display formatting
    /// only; indices are stored 1-based as plain integers.
    pub fn compact_label(&self) -> String {
        self.elems
            .iter()
            .map(|&e| {
                if e < 10 {
                    char::from(b'0' + e as u8)
                } else {
                    char::from(b'A' + (e - 10) as u8)
                }
            })
            .collect()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Binomial coefficient `C(m, k)` as an exact `u128`.
pub fn binomial(m: u64, k: u64) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (m - k + i) as u128 / i as u128;
    }
    acc
}

/// All `C(m, ell)` strictly increasing tuples from `{1..m}`, in
/// lexicographic order. `ell = 0` yields the single empty tuple.
pub fn enumerate_indices(ell: u32, m: u32) -> Result<Vec<Index>> {
    if ell > m {
        return Err(Error::InvalidArgument(format!("cannot choose {ell} elements from {m}")));
    }
    let ell = ell as usize;
    let mut out = Vec::with_capacity(binomial(m as u64, ell as u64) as usize);
    let mut cur: Vec<u32> = (1..=ell as u32).collect();
    loop {
        out.push(Index { elems: cur.clone() });
        // advance to the lexicographic successor
        let mut i = ell;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < m - (ell - 1 - i) as u32 {
                cur[i] += 1;
                for j in i + 1..ell {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic rank of `index` within `I(index.len(), m)`.
///
/// Inverse of [`unrank_index`]; ranks run over `0..C(m, ell)`.
pub fn rank_index(index: &Index, m: u32) -> Result<usize> {
    if let Some(&last) = index.elements().last() {
        if last > m {
            return Err(Error::InvalidIndex(format!("element {last} exceeds universe bound {m}")));
        }
    }
    let ell = index.len() as u64;
    let mut rank: u128 = 0;
    let mut prev = 0u32;
    for (i, &e) in index.elements().iter().enumerate() {
        for skipped in prev + 1..e {
            rank += binomial((m - skipped) as u64, ell - 1 - i as u64);
        }
        prev = e;
    }
    Ok(rank as usize)
}

/// Tuple at lexicographic rank `r` within `I(ell, m)`.
pub fn unrank_index(r: usize, ell: u32, m: u32) -> Result<Index> {
    if ell > m {
        return Err(Error::InvalidArgument(format!("cannot choose {ell} elements from {m}")));
    }
    let total = binomial(m as u64, ell as u64);
    if r as u128 >= total {
        return Err(Error::InvalidArgument(format!(
            "rank {r} out of range for C({m}, {ell}) = {total}"
        )));
    }
    let mut r = r as u128;
    let mut elems = Vec::with_capacity(ell as usize);
    let mut next = 1u32;
    for i in 0..ell as u64 {
        loop {
            let block = binomial((m - next) as u64, ell as u64 - 1 - i);
            if r < block {
                elems.push(next);
                next += 1;
                break;
            }
            r -= block;
            next += 1;
        }
    }
    Ok(Index { elems })
}

/// Which dual pairs `{i, 2n+1-i}` an index fully contains, and which of
/// its elements belong to no contained pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPairProfile {
    n: u32,
    pairs: Vec<(u32, u32)>,
    free: Vec<u32>,
}

impl DualPairProfile {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Contained dual pairs `(a, b)` with `a < b` and `a + b = 2n+1`,
    /// sorted by the smaller element.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Elements of the index in no contained pair, ascending.
    pub fn free(&self) -> &[u32] {
        &self.free
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// Splits the support of `index` into dual pairs (both of `{a, 2n+1-a}`
/// present) and free elements.
pub fn dual_pair_profile(index: &Index, n: u32) -> Result<DualPairProfile> {
    let bound = 2 * n;
    if let Some(&bad) = index.elements().iter().find(|&&e| e > bound) {
        return Err(Error::InvalidArgument(format!("element {bad} exceeds 2n = {bound}")));
    }
    let mut pairs = Vec::new();
    let mut free = Vec::new();
    for &e in index.elements() {
        let dual = 2 * n + 1 - e;
        if index.contains(dual) {
            if e < dual {
                pairs.push((e, dual));
            }
        } else {
            free.push(e);
        }
    }
    Ok(DualPairProfile { n, pairs, free })
}

/// Partition-class key of an index: how many dual pairs it contains, plus
/// its free part. Two indices are in the same class iff their keys agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionClass {
    pub pair_count: usize,
    pub free: Vec<u32>,
}

/// Classifies `index` (which must have length `n - 2`) by its dual-pair
/// profile.
pub fn partition_class(index: &Index, n: u32) -> Result<PartitionClass> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be >= 2")));
    }
    if index.len() != (n - 2) as usize {
        return Err(Error::InvalidIndex(format!(
            "expected length {} for the pivot set, got {}",
            n - 2,
            index.len()
        )));
    }
    let profile = dual_pair_profile(index, n)?;
    Ok(PartitionClass { pair_count: profile.pair_count(), free: profile.free().to_vec() })
}

/// Per-pair-count totals of the partition of `I(n-2, 2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    /// Number of distinct classes (distinct `(pair count, free part)` keys).
    pub classes: usize,
    /// Total number of indices across those classes.
    pub indices: usize,
}

/// Counts, for each pair count `k`, the classes and indices of the
/// partition of `I(n-2, 2n)`. Totals over all `k` sum to `C(2n, n-2)`.
pub fn partition_census(n: u32) -> Result<BTreeMap<usize, CensusEntry>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be >= 2")));
    }
    let mut class_sizes: BTreeMap<PartitionClass, usize> = BTreeMap::new();
    for index in enumerate_indices(n - 2, 2 * n)? {
        let class = partition_class(&index, n)?;
        *class_sizes.entry(class).or_insert(0) += 1;
    }
    let mut census: BTreeMap<usize, CensusEntry> = BTreeMap::new();
    for (class, size) in class_sizes {
        let entry =
            census.entry(class.pair_count).or_insert(CensusEntry { classes: 0, indices: 0 });
        entry.classes += 1;
        entry.indices += size;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(elems: &[u32], m: u32) -> Index {
        Index::new(elems.to_vec(), m).unwrap()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(12, 4), 495);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(14, 5), 2002);
        assert_eq!(binomial(14, 7), 3432);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 6), 0);
    }

    #[test]
    fn index_validation() {
        assert!(Index::new(vec![1, 2, 2], 4).is_err());
        assert!(Index::new(vec![2, 1], 4).is_err());
        assert!(Index::new(vec![0, 1], 4).is_err());
        assert!(Index::new(vec![1, 5], 4).is_err());
        assert!(Index::new(vec![], 4).is_ok());
    }

    #[test]
    fn compact_labels() {
        assert_eq!(idx(&[1, 2, 11, 12], 12).compact_label(), "12BC");
        assert_eq!(idx(&[3, 10], 12).compact_label(), "3A");
    }

    #[test]
    fn enumerate_counts_and_order() {
        let i412 = enumerate_indices(4, 12).unwrap();
        assert_eq!(i412.len(), 495);
        let i612 = enumerate_indices(6, 12).unwrap();
        assert_eq!(i612.len(), 924);
        assert_eq!(i612[0], idx(&[1, 2, 3, 4, 5, 6], 12));
        assert_eq!(i612[923], idx(&[7, 8, 9, 10, 11, 12], 12));
        assert!(i612.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_indices(0, 4).unwrap(), vec![Index::empty()]);
        assert!(enumerate_indices(5, 4).is_err());
    }

    #[test]
    fn rank_endpoints() {
        assert_eq!(rank_index(&idx(&[1, 2, 3, 4, 5, 6], 12), 12).unwrap(), 0);
        assert_eq!(rank_index(&idx(&[7, 8, 9, 10, 11, 12], 12), 12).unwrap(), 923);
    }

    #[test]
    fn rank_unrank_roundtrip_exhaustive() {
        // enumeration is the independent oracle for both directions
        for (ell, m) in [(4u32, 12u32), (6, 12)] {
            let all = enumerate_indices(ell, m).unwrap();
            for (r, index) in all.iter().enumerate() {
                assert_eq!(rank_index(index, m).unwrap(), r);
                assert_eq!(&unrank_index(r, ell, m).unwrap(), index);
            }
        }
        assert!(unrank_index(495, 4, 12).is_err());
    }

    #[test]
    fn dual_pair_profiles() {
        let p = dual_pair_profile(&idx(&[1, 2, 3, 4], 12), 6).unwrap();
        assert!(p.pairs().is_empty());
        assert_eq!(p.free(), &[1, 2, 3, 4]);

        let p = dual_pair_profile(&idx(&[1, 2, 11, 12], 12), 6).unwrap();
        assert_eq!(p.pairs(), &[(1, 12), (2, 11)]);
        assert!(p.free().is_empty());

        let p = dual_pair_profile(&idx(&[1, 2, 6, 7], 12), 6).unwrap();
        assert_eq!(p.pairs(), &[(6, 7)]);
        assert_eq!(p.free(), &[1, 2]);

        assert!(dual_pair_profile(&idx(&[1, 13], 13), 6).is_err());
    }

    #[test]
    fn partition_class_examples() {
        let c = partition_class(&idx(&[1, 2, 6, 7], 12), 6).unwrap();
        assert_eq!(c.pair_count, 1);
        assert_eq!(c.free, vec![1, 2]);

        let c = partition_class(&idx(&[3, 4, 9, 10], 12), 6).unwrap();
        assert_eq!(c.pair_count, 2);
        assert!(c.free.is_empty());

        // no two of {1,2,3,5} sum to 13
        let c = partition_class(&idx(&[1, 2, 3, 5], 12), 6).unwrap();
        assert_eq!(c.pair_count, 0);
        assert_eq!(c.free, vec![1, 2, 3, 5]);

        assert!(partition_class(&idx(&[1, 2, 3], 12), 6).is_err());
    }

    #[test]
    fn census_n6_matches_known_counts() {
        let census = partition_census(6).unwrap();
        assert_eq!(census[&2], CensusEntry { classes: 1, indices: 15 });
        assert_eq!(census[&1], CensusEntry { classes: 60, indices: 240 });
        assert_eq!(census[&0], CensusEntry { classes: 240, indices: 240 });
        let total: usize = census.values().map(|e| e.indices).sum();
        assert_eq!(total, 495);
    }

    #[test]
    fn census_n2_is_single_empty_class() {
        let census = partition_census(2).unwrap();
        assert_eq!(census.len(), 1);
        assert_eq!(census[&0], CensusEntry { classes: 1, indices: 1 });
        assert!(partition_census(1).is_err());
    }

    #[test]
    fn partition_covers_every_index_once() {
        // each index gets exactly one class key, and grouping by key
        // recovers the full enumeration
        for n in 2..=7u32 {
            let all = enumerate_indices(n - 2, 2 * n).unwrap();
            let mut grouped: BTreeMap<PartitionClass, Vec<Index>> = BTreeMap::new();
            for index in &all {
                let class = partition_class(index, n).unwrap();
                let profile = dual_pair_profile(index, n).unwrap();
                assert_eq!(2 * profile.pair_count() + profile.free().len(), (n - 2) as usize);
                // no two free elements may form a dual pair
                for (i, &a) in profile.free().iter().enumerate() {
                    for &b in &profile.free()[i + 1..] {
                        assert_ne!(a + b, 2 * n + 1);
                    }
                }
                grouped.entry(class).or_default().push(index.clone());
            }
            let mut regrouped: Vec<Index> = grouped.into_values().flatten().collect();
            regrouped.sort();
            assert_eq!(regrouped, all);
        }
    }

    #[test]
    fn census_totals_sum_to_binomial() {
        for n in 2..=7u32 {
            let census = partition_census(n).unwrap();
            let total: usize = census.values().map(|e| e.indices).sum();
            assert_eq!(total as u128, binomial(2 * n as u64, n as u64 - 2));
        }
    }
}
