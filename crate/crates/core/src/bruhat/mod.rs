//! Bruhat cells `G_w = B w B` of `GL_n` and `Sp_2n` with `B` the invertible
//! upper triangular matrices (intersected with `Sp_2n` in the symplectic
//! case).

mod cells;
mod decompose;
mod flags;
mod symplectic;

pub use cells::{enumerate_cell, CellKind, CellParametrization, DEFAULT_CELL_BUDGET};
pub use decompose::{
    bruhat_cell_rank_profile, bruhat_decompose, decompose_exact, permutation_matrix,
    BruhatFactorization, ExactFactorization,
};
pub use flags::{relative_position, relative_position_exact, Flag};
pub use symplectic::{
    is_symplectic, sp_bruhat_decompose, sp_elementary, sp_positive_positions, sp_weyl_rep,
    symplectic_form, symplectic_membership_exact, sp_bruhat_decompose_exact,
};
