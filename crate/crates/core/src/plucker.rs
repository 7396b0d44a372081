//! The contraction operator and the linear relations it induces on
//! Pluecker coordinates.
//!
//! Fix the symplectic space `E = k^(2n)` with dual pairs `{i, 2n+1-i}`.
//! Contraction against the symplectic form maps the `n`-th exterior power
//! of `E` to the `(n-2)`-nd: a basis vector `e_B` (for an `n`-element
//! index `B`) is sent to a signed sum of `e_(B \ {a, b})` over the dual
//! pairs `{a, b}` contained in `B`. A Lagrangian `n`-plane has all its
//! Pluecker coordinates in the kernel of this map, so each `(n-2)`-element
//! pivot index yields one linear relation among Pluecker coordinates; the
//! relations assemble into the sparse matrix built by [`build_matrix`].
//!
//! Two coefficient conventions are supported. `Plain` takes every
//! coefficient to be `+1`, which reproduces the rank tables this crate
//! verifies. `Signed` attaches the Koszul sign `(-1)^(s+t-1)` (positions
//! `s < t` of the pair inside the sorted index), which is the convention
//! under which Pluecker vectors of Lagrangian planes actually vanish in
//! every characteristic; the two agree mod 2.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{dual_pair_profile, enumerate_indices, rank_index, Index};
use crate::error::{Error, Result};
use crate::linalg::{Characteristic, SparseIntMatrix};

/// Cap for [`build_matrix`]; raise it explicitly via
/// [`build_matrix_capped`]. At `n = 8` the matrix is 8008 x 12870.
pub const DEFAULT_MAX_N: u32 = 8;

/// Coefficient convention for the contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormConvention {
    /// Every surviving coefficient is `+1`.
    Plain,
    /// Koszul signs `(-1)^(s+t-1)`; antisymmetric in the two arguments.
    Signed,
}

impl fmt::Display for FormConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Plain => write!(f, "plain"),
            Self::Signed => write!(f, "signed"),
        }
    }
}

impl FromStr for FormConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Self::Plain),
            "signed" => Ok(Self::Signed),
            other => Err(Error::InvalidArgument(format!(
                "unknown convention {other:?}, expected \"plain\" or \"signed\""
            ))),
        }
    }
}

/// Value of the bilinear form on basis vectors `(e_i, e_j)`, `1`-based,
/// both in `1..=2n`. Nonzero exactly when `i + j = 2n + 1`.
pub fn form_eval(i: u32, j: u32, n: u32, convention: FormConvention) -> Result<i64> {
    if i == 0 || j == 0 || i > 2 * n || j > 2 * n {
        return Err(Error::InvalidArgument(format!(
            "basis indices ({i}, {j}) must lie in 1..={}",
            2 * n
        )));
    }
    if i + j != 2 * n + 1 {
        return Ok(0);
    }
    Ok(match convention {
        FormConvention::Plain => 1,
        FormConvention::Signed => {
            if i < j {
                1
            } else {
                -1
            }
        }
    })
}

/// Koszul sign for removing the dual pair at `0`-based positions
/// `(s, t)` of a sorted index: `(-1)^((s+1) + (t+1) - 1)`.
fn koszul_sign(s: usize, t: usize) -> i64 {
    if (s + t + 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Image of the basis vector `e_alpha` under contraction, as
/// `(index, coefficient)` terms sorted by index. `alpha` must have
/// length `n` with elements in `1..=2n`.
pub fn contract_basis(
    alpha: &Index,
    n: u32,
    convention: FormConvention,
) -> Result<Vec<(Index, i64)>> {
    if alpha.len() != n as usize {
        return Err(Error::InvalidIndex(format!(
            "contraction expects length {n}, got {}",
            alpha.len()
        )));
    }
    let profile = dual_pair_profile(alpha, n)?;
    let elems = alpha.elements();
    let mut terms = Vec::with_capacity(profile.pair_count());
    for &(a, b) in profile.pairs() {
        let s = elems.binary_search(&a).unwrap();
        let t = elems.binary_search(&b).unwrap();
        let coeff = match convention {
            FormConvention::Plain => 1,
            FormConvention::Signed => koszul_sign(s, t),
        };
        let remainder: Vec<u32> = elems.iter().copied().filter(|&e| e != a && e != b).collect();
        terms.push((Index::new(remainder, 2 * n)?, coeff));
    }
    terms.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(terms)
}

/// One row of the relation matrix: the coefficients, indexed by
/// `n`-element column indices, of the linear form whose value on a
/// Pluecker vector is the `pivot` coordinate of its contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerRelation {
    pivot: Index,
    terms: Vec<(Index, i64)>,
}

impl PluckerRelation {
    pub fn pivot(&self) -> &Index {
        &self.pivot
    }

    /// `(column index, coefficient)` terms, sorted by index; every
    /// coefficient is `+-1`.
    pub fn terms(&self) -> &[(Index, i64)] {
        &self.terms
    }
}

/// Builds the relation for a `pivot` of length `n - 2`: one term per dual
/// pair `{i, 2n+1-i}` disjoint from the pivot's support. A pivot
/// containing `k` dual pairs blocks `n - 2 - 2k` further pairs, so the
/// relation has exactly `k + 2` terms.
pub fn build_relation(
    pivot: &Index,
    n: u32,
    convention: FormConvention,
) -> Result<PluckerRelation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be >= 2")));
    }
    if pivot.len() != (n - 2) as usize {
        return Err(Error::InvalidIndex(format!(
            "relation pivot must have length {}, got {}",
            n - 2,
            pivot.len()
        )));
    }
    dual_pair_profile(pivot, n)?; // validates elements <= 2n
    let mut terms = Vec::new();
    for i in 1..=n {
        let (a, b) = (i, 2 * n + 1 - i);
        if pivot.contains(a) || pivot.contains(b) {
            continue;
        }
        let mut merged: Vec<u32> = pivot.elements().to_vec();
        merged.extend([a, b]);
        merged.sort_unstable();
        let s = merged.binary_search(&a).unwrap();
        let t = merged.binary_search(&b).unwrap();
        let coeff = match convention {
            FormConvention::Plain => 1,
            FormConvention::Signed => koszul_sign(s, t),
        };
        terms.push((Index::new(merged, 2 * n)?, coeff));
    }
    terms.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(PluckerRelation { pivot: pivot.clone(), terms })
}

/// Assembles every relation into one sparse matrix. Rows are the
/// `(n-2)`-element indices and columns the `n`-element indices, both in
/// lexicographic order, so the shape is `C(2n, n-2) x C(2n, n)`.
///
/// Refuses `n > DEFAULT_MAX_N`; use [`build_matrix_capped`] to go higher.
pub fn build_matrix(n: u32, convention: FormConvention) -> Result<SparseIntMatrix> {
    build_matrix_capped(n, convention, DEFAULT_MAX_N)
}

/// [`build_matrix`] with an explicit size cap.
pub fn build_matrix_capped(
    n: u32,
    convention: FormConvention,
    max_n: u32,
) -> Result<SparseIntMatrix> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be >= 2")));
    }
    if n > max_n {
        return Err(Error::LimitExceeded { requested: n, max: max_n });
    }
    let pivots = enumerate_indices(n - 2, 2 * n)?;
    let ncols = enumerate_indices(n, 2 * n)?.len();
    let mut entries = Vec::new();
    for (row, pivot) in pivots.iter().enumerate() {
        let relation = build_relation(pivot, n, convention)?;
        for (index, coeff) in relation.terms() {
            entries.push((row, rank_index(index, 2 * n)?, *coeff));
        }
    }
    SparseIntMatrix::new(pivots.len(), ncols, entries)
}

/// Integer vector in the `degree`-th exterior power of `k^(2n)`, stored
/// as coordinates on the index basis with zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    n: u32,
    degree: u32,
    coords: BTreeMap<Index, i64>,
}

impl Tensor {
    /// Builds from `(index, coefficient)` pairs; duplicates accumulate
    /// and zero results are dropped.
    pub fn new(n: u32, degree: u32, coords: Vec<(Index, i64)>) -> Result<Self> {
        if degree > 2 * n {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} exceeds dimension {}",
                2 * n
            )));
        }
        let mut map: BTreeMap<Index, i128> = BTreeMap::new();
        for (index, value) in coords {
            if index.len() != degree as usize {
                return Err(Error::InvalidIndex(format!(
                    "coordinate index {index} has length {}, expected {degree}",
                    index.len()
                )));
            }
            if let Some(&bad) = index.elements().iter().find(|&&e| e > 2 * n) {
                return Err(Error::InvalidIndex(format!("element {bad} exceeds 2n = {}", 2 * n)));
            }
            *map.entry(index).or_insert(0) += value as i128;
        }
        let mut out = BTreeMap::new();
        for (index, value) in map {
            if value != 0 {
                let v = i64::try_from(value).map_err(|_| {
                    Error::InvalidArgument(format!("coefficient overflow at {index}"))
                })?;
                out.insert(index, v);
            }
        }
        Ok(Self { n, degree, coords: out })
    }

    pub fn zero(n: u32, degree: u32) -> Self {
        Self { n, degree, coords: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn support_size(&self) -> usize {
        self.coords.len()
    }

    pub fn coefficient(&self, index: &Index) -> i64 {
        self.coords.get(index).copied().unwrap_or(0)
    }

    /// Nonzero coordinates in index order.
    pub fn coords(&self) -> impl Iterator<Item = (&Index, i64)> {
        self.coords.iter().map(|(i, &v)| (i, v))
    }
}

/// Applies the contraction to a degree-`n` tensor, reducing coefficients
/// into the given characteristic (`0..p` residues for `Prime(p)`).
pub fn contract_tensor(
    w: &Tensor,
    convention: FormConvention,
    characteristic: &Characteristic,
) -> Result<Tensor> {
    let n = w.n();
    if w.degree() != n {
        return Err(Error::InvalidArgument(format!(
            "contraction expects degree {n}, got {}",
            w.degree()
        )));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be >= 2")));
    }
    let mut acc: BTreeMap<Index, i128> = BTreeMap::new();
    for (beta, value) in w.coords() {
        for (gamma, coeff) in contract_basis(beta, n, convention)? {
            *acc.entry(gamma).or_insert(0) += value as i128 * coeff as i128;
        }
    }
    let mut coords = Vec::with_capacity(acc.len());
    for (index, value) in acc {
        let reduced = match characteristic {
            Characteristic::Zero => value,
            Characteristic::Prime(p) => value.rem_euclid(*p as i128),
        };
        if reduced != 0 {
            let v = i64::try_from(reduced)
                .map_err(|_| Error::InvalidArgument(format!("coefficient overflow at {index}")))?;
            coords.push((index, v));
        }
    }
    Tensor::new(n, n - 2, coords)
}
