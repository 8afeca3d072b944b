//! Exact linear algebra over prime fields and the rationals.

mod exact;
mod field;
mod matrix;

pub use exact::{ExactMatrix, ExactScalar, FieldDescriptor};
pub use field::{Field, PrimeField, RationalField};
pub use matrix::{mat_inv, mat_mul, mat_pow, mat_sub_identity, nullspace, Matrix};
