use super::decompose::bruhat_decompose;
use crate::error::{Error, Result};
use crate::linalg::{mat_inv, mat_mul, ExactMatrix, Field, Matrix, PrimeField, RationalField};
use crate::weyl::WeylElement;

/// A complete flag: the `i`-th subspace is spanned by the first `i` columns
/// of an invertible basis matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag<E> {
    basis: Matrix<E>,
}

impl<E: Clone> Flag<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, basis: Matrix<E>) -> Result<Self> {
        if !basis.is_square() {
            return Err(Error::DimensionMismatch("flag basis must be square".into()));
        }
        if field.rank(&basis) < basis.rows() {
            return Err(Error::Singular { column: 0 });
        }
        Ok(Flag { basis })
    }

    /// The flag of coordinate subspaces.
    pub fn standard<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        Flag { basis: Matrix::identity(field, n) }
    }

    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    /// `g F`.
    pub fn translate<F: Field<Elem = E>>(&self, field: &F, g: &Matrix<E>) -> Result<Self> {
        Ok(Flag { basis: mat_mul(field, g, &self.basis)? })
    }
}

/// The permutation indexing the `GL_n`-orbit of the pair `(f1, f2)`: the
/// Bruhat cell of `basis(f1)^-1 * basis(f2)`.
pub fn relative_position<F: Field>(field: &F, f1: &Flag<F::Elem>, f2: &Flag<F::Elem>) -> Result<WeylElement> {
    if f1.basis.rows() != f2.basis.rows() {
        return Err(Error::DimensionMismatch(format!(
            "flags in dimensions {} and {}",
            f1.basis.rows(),
            f2.basis.rows()
        )));
    }
    let g = mat_mul(field, &mat_inv(field, &f1.basis)?, &f2.basis)?;
    Ok(bruhat_decompose(field, &g)?.w)
}

pub fn relative_position_exact(b1: &ExactMatrix, b2: &ExactMatrix) -> Result<WeylElement> {
    match (b1, b2) {
        (ExactMatrix::Rational(a), ExactMatrix::Rational(b)) => {
            let f = RationalField;
            relative_position(&f, &Flag::new(&f, a.clone())?, &Flag::new(&f, b.clone())?)
        }
        (ExactMatrix::Prime(f, a), ExactMatrix::Prime(g, b)) if f == g => {
            relative_position::<PrimeField>(f, &Flag::new(f, a.clone())?, &Flag::new(f, b.clone())?)
        }
        _ => Err(Error::FieldMismatch),
    }
}
