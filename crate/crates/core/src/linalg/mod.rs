//! Exact linear algebra: sparse integer matrices and their ranks over
//! prime fields and the rationals.

pub mod characteristic;
pub mod elim;
pub mod field;
pub mod matrix;

pub use characteristic::{is_prime, Characteristic};
pub use elim::{field_rank, fraction_free_rank, rank, rank_char0, rank_mod_p};
pub use field::{Field, PrimeField, Rationals};
pub use matrix::SparseIntMatrix;
