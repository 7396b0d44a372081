//! Exact linear algebra for the linear section that cuts the Lagrangian
//! Grassmannian `L(n, 2n)` out of the Grassmannian in its Pluecker
//! embedding.
//!
//! Fix a symplectic space of dimension `2n` whose form pairs the basis
//! vectors `e_i` and `e_(2n+1-i)`. Contraction with the form maps the
//! `n`-th exterior power to the `(n-2)`-nd, and the Pluecker vector of
//! every Lagrangian `n`-plane lies in its kernel. Expressed in index
//! bases, the kernel condition is one sparse linear system; this crate
//! builds that system exactly, discovers its block-diagonal structure,
//! computes its rank over any characteristic, and checks random
//! Lagrangians against it.
//!
//! Modules:
//!
//! * [`combinatorics`]: index tuples, enumeration/ranking, and the
//!   partition by contained dual pairs.
//! * [`linalg`]: sparse integer matrices with exact rank over `GF(p)`
//!   (Gaussian elimination) and characteristic zero (fraction-free
//!   elimination on [`BigInt`]).
//! * [`plucker`]: the contraction operator, its relation rows, and the
//!   assembled matrix in both coefficient conventions.
//! * [`blocks`]: connected-component decomposition, blockwise ranks, and
//!   permutation-equivalence against the reference blocks.
//! * [`lagrangian`]: transvection sampling of Lagrangian subspaces and
//!   the kernel membership check.
//!
//! ```
//! use lagrass::{blocks, plucker, Characteristic};
//!
//! let b = plucker::build_matrix(6, plucker::FormConvention::Plain)?;
//! assert_eq!((b.nrows(), b.ncols()), (495, 924));
//! assert_eq!(blocks::blockwise_rank(&b, &Characteristic::Prime(3)).total(), 494);
//! # Ok::<(), lagrass::Error>(())
//! ```

pub mod blocks;
pub mod combinatorics;
pub mod error;
pub mod lagrangian;
pub mod linalg;
pub mod plucker;

pub use error::{Error, Result};
pub use linalg::{Characteristic, SparseIntMatrix};

/// Arbitrary-precision integer scalar used for characteristic-zero ranks.
pub use num_bigint::BigInt;

/// Exact rational scalar; the element type of [`linalg::Rationals`].
pub type Rational = num_rational::BigRational;
