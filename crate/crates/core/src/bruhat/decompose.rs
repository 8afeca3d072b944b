use crate::error::{Error, Result};
use crate::linalg::{mat_mul, ExactMatrix, Field, Matrix, PrimeField, RationalField};
use crate::weyl::{GroupSpec, WeylElement};

/// `g = b1 * w_rep * b2` with `b1`, `b2` invertible upper triangular and
/// `w_rep` the 0/1 permutation matrix of `w`, which has its 1 in column `j`
/// at row `w(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatFactorization<E> {
    pub w: WeylElement,
    pub w_rep: Matrix<E>,
    pub b1: Matrix<E>,
    pub b2: Matrix<E>,
}

impl<E: Clone> BruhatFactorization<E> {
    /// Recomputes `b1 * w_rep * b2`.
    pub fn reconstruct<F: Field<Elem = E>>(&self, field: &F) -> Matrix<E> {
        let left = mat_mul(field, &self.b1, &self.w_rep).expect("square factors");
        mat_mul(field, &left, &self.b2).expect("square factors")
    }
}

/// Permutation matrix of a type A element: column `j` has its 1 in row `w(j)`.
pub fn permutation_matrix<F: Field>(field: &F, w: &WeylElement) -> Matrix<F::Elem> {
    let n = w.window().len();
    let mut m = Matrix::zeros(field, n, n);
    for (j, &r) in w.window().iter().enumerate() {
        m.set(r.unsigned_abs() as usize - 1, j, field.one());
    }
    m
}

fn check_square<E>(g: &Matrix<E>) -> Result<usize> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", g.rows(), g.cols())));
    }
    if g.rows() < 2 {
        return Err(Error::DimensionMismatch("Bruhat cells need n >= 2".into()));
    }
    Ok(g.rows())
}

/// Two-sided elimination. Column by column, the pivot is the lowest non-zero
/// entry; entries above it are cleared by adding multiples of the pivot row
/// to higher rows (left multiplication by `B`), entries to its right by
/// adding multiples of the pivot column to later columns (right
/// multiplication by `B`), and the pivot is scaled to 1. The accumulated
/// inverse operations give `b1` and `b2`.
pub fn bruhat_decompose<F: Field>(field: &F, g: &Matrix<F::Elem>) -> Result<BruhatFactorization<F::Elem>> {
    let n = check_square(g)?;
    let mut m = g.clone();
    let mut b1 = Matrix::identity(field, n);
    let mut b2 = Matrix::identity(field, n);
    let mut window = vec![0i32; n];

    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        let r = (0..n)
            .rev()
            .find(|&i| !field.is_zero(m.get(i, j)))
            .ok_or(Error::Singular { column: j })?;
        window[j] = r as i32 + 1;
        let piv = m.get(r, j).clone();
        let pinv = field.inv(&piv).expect("pivot is non-zero");

        for i in 0..r {
            if field.is_zero(m.get(i, j)) {
                continue;
            }
            // row_i -= c * row_r; compensate with col_r(b1) += c * col_i(b1)
            let c = field.mul(m.get(i, j), &pinv);
            for k in j..n {
                let v = field.sub(m.get(i, k), &field.mul(&c, m.get(r, k)));
                m.set(i, k, v);
            }
            for row in 0..=i {
                let v = field.add(b1.get(row, r), &field.mul(&c, b1.get(row, i)));
                b1.set(row, r, v);
            }
        }
        for k in j + 1..n {
            if field.is_zero(m.get(r, k)) {
                continue;
            }
            // col_k -= c * col_j; compensate with row_j(b2) += c * row_k(b2)
            let c = field.mul(m.get(r, k), &pinv);
            m.set(r, k, field.zero());
            for col in k..n {
                let v = field.add(b2.get(j, col), &field.mul(&c, b2.get(k, col)));
                b2.set(j, col, v);
            }
        }
        // col_j *= pinv; compensate with row_j(b2) *= piv
        m.set(r, j, field.one());
        for col in j..n {
            let v = field.mul(b2.get(j, col), &piv);
            b2.set(j, col, v);
        }
    }

    let spec = GroupSpec::a(n - 1)?;
    let w = WeylElement::new(spec, window).map_err(|e| Error::Integrity(e.to_string()))?;
    Ok(BruhatFactorization { w_rep: permutation_matrix(field, &w), w, b1, b2 })
}

/// Cell of `g` read off from ranks of its lower-left corners. The rank of
/// rows `i..n` by columns `1..j` is unchanged by `B` acting on either side and
/// equals the number of `k <= j` with `w(k) >= i`.
pub fn bruhat_cell_rank_profile<F: Field>(field: &F, g: &Matrix<F::Elem>) -> Result<WeylElement> {
    let n = check_square(g)?;
    // ranks[i][j]: rank of rows i.. (0-based) and the first j columns
    let mut ranks = vec![vec![0usize; n + 1]; n + 1];
    for (i, row) in ranks.iter_mut().enumerate().take(n) {
        for (j, slot) in row.iter_mut().enumerate().skip(1) {
            *slot = field.rank(&g.submatrix(i..n, 0..j));
        }
    }
    if ranks[0][n] < n {
        let column = (1..=n).find(|&j| ranks[0][j] < j).unwrap_or(n) - 1;
        return Err(Error::Singular { column });
    }
    let mut window = vec![0i32; n];
    for k in 0..n {
        for i in 0..n {
            let hit = ranks[i][k + 1] + ranks[i + 1][k] - ranks[i][k] - ranks[i + 1][k + 1];
            if hit == 1 {
                window[k] = i as i32 + 1;
            }
        }
    }
    WeylElement::new(GroupSpec::a(n - 1)?, window).map_err(|e| Error::Integrity(e.to_string()))
}

/// A factorization over a field chosen at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFactorization {
    pub w: WeylElement,
    pub w_rep: ExactMatrix,
    pub b1: ExactMatrix,
    pub b2: ExactMatrix,
}

impl ExactFactorization {
    pub fn reconstruct(&self) -> Result<ExactMatrix> {
        self.b1.mul(&self.w_rep)?.mul(&self.b2)
    }
}

pub fn decompose_exact(g: &ExactMatrix) -> Result<ExactFactorization> {
    match g {
        ExactMatrix::Rational(m) => {
            let f = bruhat_decompose(&RationalField, m)?;
            Ok(ExactFactorization {
                w: f.w,
                w_rep: ExactMatrix::Rational(f.w_rep),
                b1: ExactMatrix::Rational(f.b1),
                b2: ExactMatrix::Rational(f.b2),
            })
        }
        ExactMatrix::Prime(field, m) => {
            let f = bruhat_decompose::<PrimeField>(field, m)?;
            Ok(ExactFactorization {
                w: f.w,
                w_rep: ExactMatrix::Prime(*field, f.w_rep),
                b1: ExactMatrix::Prime(*field, f.b1),
                b2: ExactMatrix::Prime(*field, f.b2),
            })
        }
    }
}
