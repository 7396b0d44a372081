//! The elimination engines against an independent oracle: dense
//! column-major Gaussian elimination over arbitrary-precision rationals,
//! written here from scratch with its own pivot order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use lagrass::linalg::{rank_char0, rank_mod_p, SparseIntMatrix};

/// Textbook rank: leftmost pivot column, topmost pivot row, eliminate
/// below. No sparsity, no pivot heuristics, exact rational arithmetic.
// kept deliberately naive, indexed loops included, so it shares no
// structure with the code under test
#[allow(clippy::needless_range_loop)]
fn naive_rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for c in col..ncols {
                    let sub = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn transpose(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols).map(|c| rows.iter().map(|row| row[c]).collect()).collect()
}

/// Dense rows with small entries. Entries stay in -4..=4 so that any
/// nonzero minor of an 8 x 8 matrix (at most 4^8 * 8^4 < 2.7e8 by
/// Hadamard) cannot be divisible by 1009 * 2003 * 30011 ~ 6.1e10 at
/// once: the best of those three residue ranks must hit the rational
/// rank exactly.
fn rows_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(nrows, ncols)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, ncols), nrows)
    })
}

const RECOVERY_PRIMES: [u64; 3] = [1009, 2003, 30011];

proptest! {
    #[test]
    fn bareiss_agrees_with_naive_oracle(rows in rows_strategy()) {
        let matrix = SparseIntMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(rank_char0(&matrix), naive_rational_rank(&rows));
    }

    #[test]
    fn residue_rank_never_exceeds_rational_rank(rows in rows_strategy(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
        let matrix = SparseIntMatrix::from_rows(&rows).unwrap();
        prop_assert!(rank_mod_p(&matrix, p).unwrap() <= naive_rational_rank(&rows));
    }

    #[test]
    fn multimodular_recovery_of_rational_rank(rows in rows_strategy()) {
        let matrix = SparseIntMatrix::from_rows(&rows).unwrap();
        let best = RECOVERY_PRIMES
            .iter()
            .map(|&p| rank_mod_p(&matrix, p).unwrap())
            .max()
            .unwrap();
        prop_assert_eq!(best, naive_rational_rank(&rows));
    }

    #[test]
    fn rank_is_permutation_invariant(rows in rows_strategy(), seed in any::<u64>()) {
        let matrix = SparseIntMatrix::from_rows(&rows).unwrap();
        // deterministic shuffle of rows and columns from the seed
        let mut shuffled = rows.clone();
        let nrows = shuffled.len();
        let ncols = shuffled[0].len();
        let mut state = seed | 1;
        let mut next = |m: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % m
        };
        for i in (1..nrows).rev() {
            shuffled.swap(i, next(i + 1));
        }
        for i in (1..ncols).rev() {
            let j = next(i + 1);
            for row in &mut shuffled {
                row.swap(i, j);
            }
        }
        let permuted = SparseIntMatrix::from_rows(&shuffled).unwrap();
        prop_assert_eq!(rank_char0(&permuted), rank_char0(&matrix));
        prop_assert_eq!(
            rank_mod_p(&permuted, 1009).unwrap(),
            rank_mod_p(&matrix, 1009).unwrap()
        );
    }

    #[test]
    fn rank_is_transpose_invariant(rows in rows_strategy()) {
        let matrix = SparseIntMatrix::from_rows(&rows).unwrap();
        let flipped = SparseIntMatrix::from_rows(&transpose(&rows)).unwrap();
        prop_assert_eq!(rank_char0(&matrix), rank_char0(&flipped));
        prop_assert_eq!(
            rank_mod_p(&matrix, 7).unwrap(),
            rank_mod_p(&flipped, 7).unwrap()
        );
    }
}

/// Fixed anchors with hand-checked values, kept outside proptest so a
/// regression names the exact case.
#[test]
fn fixed_rank_anchors() {
    let cases: [(&[&[i64]], usize); 4] = [
        (&[&[0, 0], &[0, 0]], 0),
        (&[&[1, 2], &[2, 4]], 1),
        (&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]], 2),
        (&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]], 3),
    ];
    for (rows, want) in cases {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        let matrix = SparseIntMatrix::from_rows(&rows).unwrap();
        assert_eq!(rank_char0(&matrix), want);
        assert_eq!(naive_rational_rank(&rows), want);
    }
}
