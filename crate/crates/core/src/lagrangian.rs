//! Lagrangian subspaces over finite fields: sampling, Pluecker
//! coordinates, and the kernel membership check.
//!
//! The geometric content of the relation matrix is that the Pluecker
//! vector of every Lagrangian `n`-plane lies in its kernel. This module
//! samples random Lagrangians by symplectic transvections, computes
//! their Pluecker coordinates as `n x n` minors over `GF(p)`, and checks
//! membership by contracting the coordinate tensor.
//!
//! Sampling is restricted to finite fields: transvection products over
//! the rationals grow without bound and add nothing to the check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::combinatorics::enumerate_indices;
use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::linalg::{Characteristic, PrimeField};
use crate::plucker::{contract_tensor, FormConvention, Tensor};

/// Largest allowed modulus: coordinates are carried as `i64` residues.
const MAX_MODULUS: u64 = 1 << 62;

/// Basis of an `n`-dimensional subspace of `GF(p)^(2n)`, stored as `n`
/// row vectors with entries in `0..p`. Construction verifies full rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    n: u32,
    field: PrimeField,
    rows: Vec<Vec<u64>>,
}

impl SubspaceBasis {
    /// Validates the modulus (prime, below `2^62`), the shape (`n` rows
    /// of length `2n`, `n >= 1`), and linear independence; entries are
    /// reduced mod `p`.
    pub fn new(n: u32, p: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be >= 1".into()));
        }
        if p >= MAX_MODULUS {
            return Err(Error::InvalidArgument(format!("modulus {p} exceeds 2^62")));
        }
        let field = PrimeField::new(p)?;
        if rows.len() != n as usize {
            return Err(Error::InvalidArgument(format!("expected {n} rows, got {}", rows.len())));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != 2 * n as usize) {
            return Err(Error::InvalidArgument(format!(
                "expected row length {}, got {}",
                2 * n,
                bad.len()
            )));
        }
        let rows: Vec<Vec<u64>> =
            rows.into_iter().map(|row| row.into_iter().map(|x| x % p).collect()).collect();
        if row_rank(&rows, &field) != n as usize {
            return Err(Error::InvalidArgument("rows are linearly dependent".into()));
        }
        Ok(Self { n, field, rows })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Row rank by in-place elimination over `GF(p)`.
fn row_rank(rows: &[Vec<u64>], field: &PrimeField) -> usize {
    let mut mat: Vec<Vec<u64>> = rows.to_vec();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = field.inv(&mat[rank][col].clone());
        let (upper, lower) = mat.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        for row in lower.iter_mut() {
            if row[col] != 0 {
                let factor = field.mul(&row[col], &inv);
                for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let sub = field.mul(&factor, src);
                    *dst = field.sub(dst, &sub);
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// The antisymmetric form on `GF(p)^(2n)`:
/// `omega(x, y) = sum_i (x_i y_(2n+1-i) - x_(2n+1-i) y_i)`, `i = 1..n`.
fn omega(x: &[u64], y: &[u64], n: u32, field: &PrimeField) -> u64 {
    let mut acc = field.zero();
    for i in 0..n as usize {
        let j = 2 * n as usize - 1 - i;
        let plus = field.mul(&x[i], &y[j]);
        let minus = field.mul(&x[j], &y[i]);
        acc = field.add(&acc, &field.sub(&plus, &minus));
    }
    acc
}

/// The span of `e_1, .., e_n`: Lagrangian because no two indices in
/// `1..=n` sum to `2n+1`.
pub fn standard_lagrangian(n: u32, p: u64) -> Result<SubspaceBasis> {
    let rows = (0..n as usize)
        .map(|i| {
            let mut row = vec![0u64; 2 * n as usize];
            row[i] = 1;
            row
        })
        .collect();
    SubspaceBasis::new(n, p, rows)
}

/// True iff the form vanishes on every pair of basis rows. The condition
/// is "= 0", so it does not depend on the coefficient convention.
pub fn is_isotropic(w: &SubspaceBasis) -> bool {
    let rows = w.rows();
    for s in 0..rows.len() {
        for t in s + 1..rows.len() {
            if omega(&rows[s], &rows[t], w.n(), &w.field) != 0 {
                return false;
            }
        }
    }
    true
}

/// Applies `steps` random symplectic transvections
/// `x -> x + lambda * omega(x, v) * v` to the standard Lagrangian.
/// Each transvection preserves the form, so the result is always
/// isotropic; the outcome is a deterministic function of `seed`
/// (a ChaCha12 stream expands it).
pub fn random_lagrangian(n: u32, p: u64, seed: u64, steps: u32) -> Result<SubspaceBasis> {
    let basis = standard_lagrangian(n, p)?;
    let field = basis.field;
    let mut rows = basis.rows;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let dim = 2 * n as usize;
    for _ in 0..steps {
        let v: Vec<u64> = loop {
            let candidate: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..p)).collect();
            if candidate.iter().any(|&x| x != 0) {
                break candidate;
            }
        };
        let lambda = rng.gen_range(1..p.max(2));
        for row in &mut rows {
            let scale = field.mul(&lambda, &omega(row, &v, n, &field));
            if scale != 0 {
                for (entry, &vc) in row.iter_mut().zip(&v) {
                    *entry = field.add(entry, &field.mul(&scale, &vc));
                }
            }
        }
    }
    SubspaceBasis::new(n, p, rows)
}

/// Determinant over `GF(p)` by elimination; consumes the buffer.
fn det_mod_p(mat: &mut [Vec<u64>], field: &PrimeField) -> u64 {
    let size = mat.len();
    let mut det = field.one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| mat[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            mat.swap(col, pivot);
            det = field.neg(&det);
        }
        let value = mat[col][col];
        det = field.mul(&det, &value);
        let inv = field.inv(&value);
        let (upper, lower) = mat.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            if row[col] != 0 {
                let factor = field.mul(&row[col], &inv);
                for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let sub = field.mul(&factor, src);
                    *dst = field.sub(dst, &sub);
                }
            }
        }
    }
    det
}

/// Pluecker coordinates of the row span: the coordinate at index
/// `alpha` is the determinant of the `n x n` submatrix on columns
/// `alpha`, reduced into `0..p`. Defined up to one common scalar under
/// change of basis.
pub fn plucker_coordinates(w: &SubspaceBasis) -> Result<Tensor> {
    let n = w.n();
    let field = w.field;
    let mut coords = Vec::new();
    let mut buffer = vec![vec![0u64; n as usize]; n as usize];
    for alpha in enumerate_indices(n, 2 * n)? {
        for (i, row) in w.rows().iter().enumerate() {
            for (j, &col) in alpha.elements().iter().enumerate() {
                buffer[i][j] = row[col as usize - 1];
            }
        }
        let det = det_mod_p(&mut buffer, &field);
        if det != 0 {
            coords.push((alpha, det as i64));
        }
    }
    if coords.is_empty() {
        return Err(Error::InvalidArgument(
            "all coordinates vanish; rows are linearly dependent".into(),
        ));
    }
    Tensor::new(n, n, coords)
}

/// True iff the Pluecker tensor of `w` contracts to zero over `GF(p)`
/// under the given convention, i.e. the subspace satisfies every linear
/// relation of the matrix for that convention.
pub fn verify_kernel_membership(w: &SubspaceBasis, convention: FormConvention) -> Result<bool> {
    let tensor = plucker_coordinates(w)?;
    let characteristic = Characteristic::Prime(w.modulus());
    Ok(contract_tensor(&tensor, convention, &characteristic)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Index;

    fn span_of(indices: &[u32], n: u32, p: u64) -> SubspaceBasis {
        let rows = indices
            .iter()
            .map(|&i| {
                let mut row = vec![0u64; 2 * n as usize];
                row[i as usize - 1] = 1;
                row
            })
            .collect();
        SubspaceBasis::new(n, p, rows).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(SubspaceBasis::new(2, 4, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).is_err());
        assert!(SubspaceBasis::new(2, 5, vec![vec![1, 0, 0, 0]]).is_err());
        assert!(SubspaceBasis::new(2, 5, vec![vec![1, 0, 0], vec![0, 1, 0]]).is_err());
        assert!(SubspaceBasis::new(2, 5, vec![vec![1, 2, 0, 0], vec![2, 4, 0, 0]]).is_err());
        assert!(SubspaceBasis::new(1, 1 << 62, vec![vec![1, 0]]).is_err());
        // entries reduce mod p
        let w = SubspaceBasis::new(1, 5, vec![vec![7, 11]]).unwrap();
        assert_eq!(w.rows(), &[vec![2, 1]]);
    }

    #[test]
    fn standard_basis_properties() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..=7u32 {
                let w = standard_lagrangian(n, p).unwrap();
                assert!(is_isotropic(&w));
                let tensor = plucker_coordinates(&w).unwrap();
                assert_eq!(tensor.support_size(), 1);
                let first = Index::new((1..=n).collect(), 2 * n).unwrap();
                assert_eq!(tensor.coefficient(&first), 1);
                assert!(verify_kernel_membership(&w, FormConvention::Plain).unwrap());
                assert!(verify_kernel_membership(&w, FormConvention::Signed).unwrap());
            }
        }
    }

    #[test]
    fn non_isotropic_span_fails_membership() {
        // 5 + 8 = 13 makes {e1..e5, e8} non-isotropic at n = 6
        let w = span_of(&[1, 2, 3, 4, 5, 8], 6, 3);
        assert!(!is_isotropic(&w));
        let tensor = plucker_coordinates(&w).unwrap();
        let support = Index::new(vec![1, 2, 3, 4, 5, 8], 12).unwrap();
        assert_eq!(tensor.coefficient(&support), 1);
        assert_eq!(tensor.support_size(), 1);
        assert!(!verify_kernel_membership(&w, FormConvention::Plain).unwrap());
        assert!(!verify_kernel_membership(&w, FormConvention::Signed).unwrap());
    }

    #[test]
    fn pair_free_coordinate_span_passes() {
        // no two of {1,2,3,4,5,7} sum to 13
        let w = span_of(&[1, 2, 3, 4, 5, 7], 6, 5);
        assert!(is_isotropic(&w));
        assert!(verify_kernel_membership(&w, FormConvention::Plain).unwrap());
        assert!(verify_kernel_membership(&w, FormConvention::Signed).unwrap());
    }

    #[test]
    fn transvections_preserve_isotropy() {
        for p in [2u64, 3, 5, 7] {
            for seed in 0..5u64 {
                let w = random_lagrangian(6, p, seed, 40).unwrap();
                assert!(is_isotropic(&w));
                assert!(verify_kernel_membership(&w, FormConvention::Signed).unwrap());
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = random_lagrangian(6, 7, 42, 40).unwrap();
        let b = random_lagrangian(6, 7, 42, 40).unwrap();
        assert_eq!(a, b);
        let zero_steps = random_lagrangian(6, 7, 42, 0).unwrap();
        assert_eq!(zero_steps, standard_lagrangian(6, 7).unwrap());
    }

    #[test]
    fn different_seeds_give_different_spans() {
        // stack the two bases: distinct spans make the rank exceed n
        let mut distinct = 0;
        for seed in 0..8u64 {
            let a = random_lagrangian(4, 5, seed, 40).unwrap();
            let b = random_lagrangian(4, 5, seed + 1000, 40).unwrap();
            let field = PrimeField::new(5).unwrap();
            let mut stacked = a.rows().to_vec();
            stacked.extend(b.rows().iter().cloned());
            if row_rank(&stacked, &field) > 4 {
                distinct += 1;
            }
        }
        assert!(distinct >= 7, "only {distinct}/8 pairs were distinct");
    }

    #[test]
    fn membership_is_projective() {
        let w = random_lagrangian(6, 7, 9, 40).unwrap();
        let verdict = verify_kernel_membership(&w, FormConvention::Signed).unwrap();

        // scale one row
        let mut scaled = w.rows().to_vec();
        for entry in &mut scaled[0] {
            *entry = (*entry * 3) % 7;
        }
        let scaled = SubspaceBasis::new(6, 7, scaled).unwrap();
        assert_eq!(verify_kernel_membership(&scaled, FormConvention::Signed).unwrap(), verdict);

        // add one row to another
        let mut sheared = w.rows().to_vec();
        let donor = sheared[1].clone();
        for (entry, d) in sheared[2].iter_mut().zip(&donor) {
            *entry = (*entry + d) % 7;
        }
        let sheared = SubspaceBasis::new(6, 7, sheared).unwrap();
        assert_eq!(verify_kernel_membership(&sheared, FormConvention::Signed).unwrap(), verdict);

        // the scaled Pluecker tensor is the original times the scalar
        let base = plucker_coordinates(&w).unwrap();
        let scaled_coords = plucker_coordinates(
            &SubspaceBasis::new(
                6,
                7,
                w.rows()
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        if i == 0 {
                            row.iter().map(|&x| (x * 3) % 7).collect()
                        } else {
                            row.clone()
                        }
                    })
                    .collect(),
            )
            .unwrap(),
        )
        .unwrap();
        for (alpha, value) in base.coords() {
            assert_eq!(scaled_coords.coefficient(alpha), (value * 3) % 7);
        }
    }
}
