//! `Sp_2n` inside `GL_2n`, preserving `<x, y> = x^T J y` where
//! `J[i][2n+1-i] = 1` for `i <= n` and `-1` for `i > n` (1-based). With this
//! form the upper triangular matrices in `Sp_2n` form a Borel subgroup, and
//! `W(C_n)` sits in `S_2n` via `i -> i`, `-i -> 2n+1-i`.

use super::decompose::{bruhat_decompose, BruhatFactorization};
use crate::error::{Error, Result};
use crate::linalg::{mat_mul, ExactMatrix, Field, Matrix, PrimeField, RationalField};
use crate::weyl::{Family, WeylElement};

fn half_dim<E>(m: &Matrix<E>) -> Result<usize> {
    if !m.is_square() || m.rows() % 2 == 1 || m.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not an even square size",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.rows() / 2)
}

pub fn symplectic_form<F: Field>(field: &F, dim: usize) -> Matrix<F::Elem> {
    let mut j = Matrix::zeros(field, dim, dim);
    for i in 0..dim {
        let v = if i < dim / 2 { field.one() } else { field.neg(&field.one()) };
        j.set(i, dim - 1 - i, v);
    }
    j
}

/// `g^T J g == J`.
pub fn is_symplectic<F: Field>(field: &F, g: &Matrix<F::Elem>) -> bool {
    let Ok(n) = half_dim(g) else { return false };
    let j = symplectic_form(field, 2 * n);
    let jg = mat_mul(field, &j, g).expect("square");
    mat_mul(field, &g.transpose(), &jg).expect("square") == j
}

/// Signed permutation matrix representing a `W(C_n)` element inside `Sp_2n`.
/// Column `j <= n` is `e_sigma(j)`; column `2n+1-j` is `+-e_sigma(2n+1-j)`
/// with the sign fixed so that the form is preserved.
pub fn sp_weyl_rep<F: Field>(field: &F, w: &WeylElement) -> Result<Matrix<F::Elem>> {
    let sigma = w.symmetric_embedding()?;
    let n = w.spec().rank();
    let dim = 2 * n;
    let mut m = Matrix::zeros(field, dim, dim);
    for j in 0..n {
        let a = sigma[j] - 1;
        m.set(a, j, field.one());
        let mirror_col = dim - 1 - j;
        let sign = if a < n { field.one() } else { field.neg(&field.one()) };
        m.set(sigma[mirror_col] - 1, mirror_col, sign);
    }
    Ok(m)
}

/// Bruhat cell of a symplectic matrix as an element of `W(C_n)`: the
/// `GL_2n` cell, pulled back through the embedding `W(C_n) -> S_2n`.
pub fn sp_bruhat_decompose<F: Field>(
    field: &F,
    g: &Matrix<F::Elem>,
) -> Result<(WeylElement, BruhatFactorization<F::Elem>)> {
    let n = half_dim(g)?;
    if !is_symplectic(field, g) {
        return Err(Error::NotSymplectic);
    }
    let fac = bruhat_decompose(field, g)?;
    let perm: Vec<usize> = fac.w.window().iter().map(|&x| x as usize).collect();
    let w = WeylElement::from_symmetric_embedding(n, &perm)?;
    Ok((w, fac))
}

pub fn symplectic_membership_exact(g: &ExactMatrix) -> bool {
    match g {
        ExactMatrix::Rational(m) => is_symplectic(&RationalField, m),
        ExactMatrix::Prime(f, m) => is_symplectic(f, m),
    }
}

pub fn sp_bruhat_decompose_exact(g: &ExactMatrix) -> Result<WeylElement> {
    match g {
        ExactMatrix::Rational(m) => Ok(sp_bruhat_decompose(&RationalField, m)?.0),
        ExactMatrix::Prime(f, m) => Ok(sp_bruhat_decompose::<PrimeField>(f, m)?.0),
    }
}

/// Nilpotent `X = E_ij + c E_{j'i'}` (`k' = 2n+1-k`) in the symplectic Lie
/// algebra, or `E_{i i'}` when `j = i'`. Indices are 0-based, `i != j`.
pub fn sp_elementary<F: Field>(field: &F, dim: usize, i: usize, j: usize) -> Matrix<F::Elem> {
    assert!(i != j && i < dim && j < dim && dim.is_multiple_of(2));
    let mirror = |k: usize| dim - 1 - k;
    let jform = symplectic_form(field, dim);
    let in_lie_algebra = |x: &Matrix<F::Elem>| {
        let a = mat_mul(field, &x.transpose(), &jform).expect("square");
        let b = mat_mul(field, &jform, x).expect("square");
        a.data().iter().zip(b.data()).all(|(u, v)| field.is_zero(&field.add(u, v)))
    };
    let mut x = Matrix::zeros(field, dim, dim);
    x.set(i, j, field.one());
    if j == mirror(i) {
        debug_assert!(in_lie_algebra(&x));
        return x;
    }
    for c in [field.one(), field.neg(&field.one())] {
        let mut y = x.clone();
        y.set(mirror(j), mirror(i), c);
        if in_lie_algebra(&y) {
            return y;
        }
    }
    unreachable!("one sign always works")
}

/// 0-based positions `(i, j)`, `i < j`, one per positive root of `C_n`:
/// the upper triangle modulo `(i, j) ~ (j', i')`.
pub fn sp_positive_positions(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            if j <= dim - 1 - i {
                out.push((i, j));
            }
        }
    }
    out
}

pub(crate) fn check_bc(w: &WeylElement) -> Result<()> {
    if w.spec().family() != Family::BC {
        return Err(Error::Unsupported(format!("expected a W(C_n) element, got {}", w.spec())));
    }
    Ok(())
}
