//! Exact rank computation by sparse elimination.
//!
//! Two engines share the same pivot strategy (sparsest column first, ties
//! to the smallest column index, then the earliest active row):
//!
//! * [`field_rank`]: ordinary Gaussian elimination over any [`Field`]
//!   context, used for `GF(p)` and, as a cross-check, the rationals.
//! * [`fraction_free_rank`]: single-step Bareiss elimination over an
//!   integral domain. Every active row is updated at every step, which
//!   keeps each division exact under the sparsity-driven pivot order
//!   (every entry remains a minor of the original matrix bordered by the
//!   pivots chosen so far).
//!
//! [`rank`] dispatches on a [`Characteristic`].

use std::ops::{Div, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg::characteristic::Characteristic;
use crate::linalg::field::{Field, PrimeField};
use crate::linalg::matrix::SparseIntMatrix;

/// Sparse row as `(column, value)` pairs, ascending by column, no zeros.
type Row<E> = Vec<(usize, E)>;

/// Pivot position `(row, col)` under the shared strategy, or `None` if no
/// nonzero entry remains in an active row.
fn choose_pivot<E>(rows: &[Row<E>], active: &[bool], ncols: usize) -> Option<(usize, usize)> {
    let mut col_count = vec![0usize; ncols];
    for (r, row) in rows.iter().enumerate() {
        if active[r] {
            for &(c, _) in row {
                col_count[c] += 1;
            }
        }
    }
    let pivot_col = (0..ncols).filter(|&c| col_count[c] > 0).min_by_key(|&c| col_count[c])?;
    let pivot_row = (0..rows.len())
        .find(|&r| active[r] && rows[r].binary_search_by_key(&pivot_col, |&(c, _)| c).is_ok())?;
    Some((pivot_row, pivot_col))
}

/// Rank of `matrix` over the field described by `field`.
pub fn field_rank<F: Field>(matrix: &SparseIntMatrix, field: &F) -> usize {
    let mut rows: Vec<Row<F::Elem>> = matrix
        .row_lists()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|(c, v)| (c, field.embed(v)))
                .filter(|(_, v)| !field.is_zero(v))
                .collect()
        })
        .collect();
    let mut active = vec![true; rows.len()];
    let mut rank = 0;
    while let Some((pr, pc)) = choose_pivot(&rows, &active, matrix.ncols()) {
        let pivot_row = std::mem::take(&mut rows[pr]);
        active[pr] = false;
        rank += 1;
        let pos = pivot_row.binary_search_by_key(&pc, |&(c, _)| c).unwrap();
        let pivot_inv = field.inv(&pivot_row[pos].1);
        for r in 0..rows.len() {
            if !active[r] {
                continue;
            }
            let Ok(pos_r) = rows[r].binary_search_by_key(&pc, |&(c, _)| c) else {
                continue;
            };
            let factor = field.mul(&rows[r][pos_r].1, &pivot_inv);
            rows[r] = row_sub_scaled(field, &rows[r], &pivot_row, &factor);
        }
    }
    rank
}

/// `target - factor * source`, both rows sorted by column; zeros dropped.
fn row_sub_scaled<F: Field>(
    field: &F,
    target: &Row<F::Elem>,
    source: &Row<F::Elem>,
    factor: &F::Elem,
) -> Row<F::Elem> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    loop {
        match (target.get(i), source.get(j)) {
            (Some((ct, vt)), Some((cs, _))) if ct < cs => {
                out.push((*ct, vt.clone()));
                i += 1;
            }
            (Some((ct, vt)), Some((cs, vs))) if ct == cs => {
                let v = field.sub(vt, &field.mul(factor, vs));
                if !field.is_zero(&v) {
                    out.push((*ct, v));
                }
                i += 1;
                j += 1;
            }
            (_, Some((cs, vs))) => {
                let v = field.neg(&field.mul(factor, vs));
                if !field.is_zero(&v) {
                    out.push((*cs, v));
                }
                j += 1;
            }
            (Some((ct, vt)), None) => {
                out.push((*ct, vt.clone()));
                i += 1;
            }
            (None, None) => return out,
        }
    }
}

/// Rank of `matrix` over the fraction field of the domain `T`, computed
/// without fractions. Instantiate with [`BigInt`] for guaranteed exactness
/// or a fixed-width integer when the entries are known to stay small.
pub fn fraction_free_rank<T>(matrix: &SparseIntMatrix) -> usize
where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + From<i64>,
{
    let mut rows: Vec<Row<T>> = matrix
        .row_lists()
        .into_iter()
        .map(|row| row.into_iter().map(|(c, v)| (c, T::from(v))).collect())
        .collect();
    let mut active = vec![true; rows.len()];
    let mut rank = 0;
    let mut prev = T::one();
    while let Some((pr, pc)) = choose_pivot(&rows, &active, matrix.ncols()) {
        let pivot_row = std::mem::take(&mut rows[pr]);
        active[pr] = false;
        rank += 1;
        let pos = pivot_row.binary_search_by_key(&pc, |&(c, _)| c).unwrap();
        let pivot = pivot_row[pos].1.clone();
        for r in 0..rows.len() {
            if !active[r] {
                continue;
            }
            let coeff = match rows[r].binary_search_by_key(&pc, |&(c, _)| c) {
                Ok(pos_r) => rows[r][pos_r].1.clone(),
                Err(_) => T::zero(),
            };
            rows[r] = bareiss_row(&rows[r], &pivot_row, &pivot, &coeff, &prev);
        }
        prev = pivot;
    }
    rank
}

fn exact_div<T>(num: T, den: &T) -> T
where
    T: Clone + PartialEq + Zero + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let q = num.clone() / den.clone();
    debug_assert!(q.clone() * den.clone() == num, "inexact division in elimination");
    q
}

/// `(pivot * target - coeff * source) / prev`, element-wise on sorted rows.
/// Each division is exact; zeros (including the pivot column) are dropped.
fn bareiss_row<T>(target: &Row<T>, source: &Row<T>, pivot: &T, coeff: &T, prev: &T) -> Row<T>
where
    T: Clone + PartialEq + Zero + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    loop {
        let v = match (target.get(i), source.get(j)) {
            (Some((ct, vt)), Some((cs, _))) if ct < cs => {
                let v = (*ct, pivot.clone() * vt.clone());
                i += 1;
                v
            }
            (Some((ct, vt)), Some((cs, vs))) if ct == cs => {
                let v = (*ct, pivot.clone() * vt.clone() - coeff.clone() * vs.clone());
                i += 1;
                j += 1;
                v
            }
            (_, Some((cs, vs))) => {
                let v = (*cs, T::zero() - coeff.clone() * vs.clone());
                j += 1;
                v
            }
            (Some((ct, vt)), None) => {
                let v = (*ct, pivot.clone() * vt.clone());
                i += 1;
                v
            }
            (None, None) => return out,
        };
        let q = exact_div(v.1, prev);
        if !q.is_zero() {
            out.push((v.0, q));
        }
    }
}

/// Rank over `GF(p)`; errors if `p` is not prime.
pub fn rank_mod_p(matrix: &SparseIntMatrix, p: u64) -> Result<usize> {
    let field = PrimeField::new(p)?;
    Ok(field_rank(matrix, &field))
}

/// Rank over the rationals, via fraction-free elimination on [`BigInt`].
pub fn rank_char0(matrix: &SparseIntMatrix) -> usize {
    fraction_free_rank::<BigInt>(matrix)
}

/// Rank over a field of the given characteristic.
///
/// Panics if handed a `Characteristic::Prime` holding a composite;
/// [`Characteristic::new`] prevents that.
pub fn rank(matrix: &SparseIntMatrix, characteristic: &Characteristic) -> usize {
    match characteristic {
        Characteristic::Zero => rank_char0(matrix),
        Characteristic::Prime(p) => {
            rank_mod_p(matrix, *p).expect("Characteristic::Prime must hold a prime")
        }
    }
}
