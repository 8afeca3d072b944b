use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix. Arithmetic needs a [`Field`] to interpret the
/// entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

}

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Sub-matrix on the given row and column index ranges.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r, c) = (rows.len(), cols.len());
        let mut data = Vec::with_capacity(r * c);
        for i in rows {
            for j in cols.clone() {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn zeros<F: Field<Elem = T>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = T>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn is_upper_triangular<F: Field<Elem = T>>(&self, field: &F) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| field.is_zero(self.get(i, j))))
    }

    /// Upper triangular with no zero on the diagonal.
    pub fn is_invertible_upper<F: Field<Elem = T>>(&self, field: &F) -> bool {
        self.is_square()
            && self.is_upper_triangular(field)
            && (0..self.rows).all(|i| !field.is_zero(self.get(i, i)))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = field.zero();
            for k in 0..a.cols {
                let t = field.mul(a.get(i, k), b.get(k, j));
                acc = field.add(&acc, &t);
            }
            data.push(acc);
        }
    }
    Ok(Matrix { rows: a.rows, cols: b.cols, data })
}

/// `m - I`.
pub fn mat_sub_identity<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let mut out = m.clone();
    for i in 0..m.rows.min(m.cols) {
        let v = field.sub(m.get(i, i), &field.one());
        out.set(i, i, v);
    }
    out
}

pub fn mat_pow<F: Field>(field: &F, m: &Matrix<F::Elem>, exp: u32) -> Result<Matrix<F::Elem>> {
    let mut acc = Matrix::identity(field, m.rows);
    for _ in 0..exp {
        acc = mat_mul(field, &acc, m)?;
    }
    Ok(acc)
}

/// Gauss-Jordan inverse.
pub fn mat_inv<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("inverse of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = Matrix::identity(field, n);
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !field.is_zero(a.get(r, col)))
            .ok_or(Error::Singular { column: col })?;
        if piv != col {
            swap_rows(&mut a, piv, col);
            swap_rows(&mut inv, piv, col);
        }
        let pinv = field.inv(a.get(col, col)).expect("pivot is non-zero");
        scale_row(field, &mut a, col, &pinv);
        scale_row(field, &mut inv, col, &pinv);
        for r in 0..n {
            if r != col && !field.is_zero(a.get(r, col)) {
                let factor = a.get(r, col).clone();
                add_row_multiple(field, &mut a, r, col, &factor);
                add_row_multiple(field, &mut inv, r, col, &factor);
            }
        }
    }
    Ok(inv)
}

fn swap_rows<T>(m: &mut Matrix<T>, a: usize, b: usize) {
    for j in 0..m.cols {
        m.data.swap(a * m.cols + j, b * m.cols + j);
    }
}

fn scale_row<F: Field>(field: &F, m: &mut Matrix<F::Elem>, r: usize, c: &F::Elem) {
    for j in 0..m.cols {
        let v = field.mul(m.get(r, j), c);
        m.set(r, j, v);
    }
}

/// row `target` -= factor * row `source`
fn add_row_multiple<F: Field>(field: &F, m: &mut Matrix<F::Elem>, target: usize, source: usize, factor: &F::Elem) {
    for j in 0..m.cols {
        let t = field.mul(factor, m.get(source, j));
        let v = field.sub(m.get(target, j), &t);
        m.set(target, j, v);
    }
}

/// Reduced row echelon form and pivot columns.
fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(piv) = (row..a.rows).find(|&r| !field.is_zero(a.get(r, col))) else {
            continue;
        };
        swap_rows(&mut a, piv, row);
        let pinv = field.inv(a.get(row, col)).expect("pivot is non-zero");
        scale_row(field, &mut a, row, &pinv);
        for r in 0..a.rows {
            if r != row && !field.is_zero(a.get(r, col)) {
                let factor = a.get(r, col).clone();
                add_row_multiple(field, &mut a, r, row, &factor);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub(crate) fn gauss_rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).1.len()
}

pub(crate) fn gauss_det<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<F::Elem> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !field.is_zero(a.get(r, col))) else {
            return Ok(field.zero());
        };
        if piv != col {
            swap_rows(&mut a, piv, col);
            det = field.neg(&det);
        }
        let p = a.get(col, col).clone();
        det = field.mul(&det, &p);
        let pinv = field.inv(&p).expect("pivot is non-zero");
        for r in col + 1..n {
            if !field.is_zero(a.get(r, col)) {
                let factor = field.mul(a.get(r, col), &pinv);
                add_row_multiple(field, &mut a, r, col, &factor);
            }
        }
    }
    Ok(det)
}

/// Basis of the right null space `{x : m x = 0}`, one column vector per entry.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols];
            v[f] = field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(r.get(i, f));
            }
            v
        })
        .collect()
}
