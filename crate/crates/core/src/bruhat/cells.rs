//! Explicit parametrization of a Bruhat cell over `F_q`:
//! every `g` in `B w B` factors uniquely as `u * w_rep * t * v` with
//! `v` upper unitriangular, `t` diagonal and `u` in `U_w`, the upper
//! unitriangular matrices supported on the positions `(i, j)` with
//! `w^-1(i) > w^-1(j)`. `U_w` has `q^l(w)` elements.

use super::decompose::permutation_matrix;
use super::symplectic::{check_bc, is_symplectic, sp_weyl_rep};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, PrimeField};
use crate::weyl::{Family, WeylElement};

pub const DEFAULT_CELL_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    GeneralLinear,
    SpecialLinear,
    Symplectic,
}

/// Indexable enumeration of one Bruhat cell `G_w(F_q)`. Element `idx`
/// decomposes as `(a, b, c)` in mixed radix `(|U_w|, |T|, |U|)`.
#[derive(Clone, Debug)]
pub struct CellParametrization {
    field: PrimeField,
    dim: usize,
    w: WeylElement,
    w_rep: Matrix<u32>,
    cell_unipotents: Vec<Vec<u32>>,
    torus: Vec<Vec<u32>>,
    unipotents: Vec<Vec<u32>>,
}

fn pow_u128(q: u128, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(q))
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// All upper unitriangular matrices supported on `positions`.
fn unitriangular_family(field: &PrimeField, dim: usize, positions: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let q = field.modulus() as usize;
    let count = q.pow(positions.len() as u32);
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut m = vec![0u32; dim * dim];
        for i in 0..dim {
            m[i * dim + i] = 1;
        }
        let mut c = code;
        for &(i, j) in positions {
            m[i * dim + j] = (c % q) as u32;
            c /= q;
        }
        out.push(m);
    }
    out
}

/// Diagonals `(t_1, .., t_dim)` with all entries non-zero.
fn full_torus(field: &PrimeField, dim: usize) -> Vec<Vec<u32>> {
    let units = field.modulus() as usize - 1;
    (0..units.pow(dim as u32))
        .map(|code| {
            let mut c = code;
            (0..dim)
                .map(|_| {
                    let t = (c % units) as u32 + 1;
                    c /= units;
                    t
                })
                .collect()
        })
        .collect()
}

fn inversion_positions(w: &WeylElement) -> Vec<(usize, usize)> {
    let inv = w.inverse();
    let n = inv.window().len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if inv.window()[i] > inv.window()[j] {
                out.push((i, j));
            }
        }
    }
    out
}

fn strict_upper(dim: usize) -> Vec<(usize, usize)> {
    (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect()
}

impl CellParametrization {
    /// Cell of a permutation `w` in `GL_n(F_q)` (kind `GeneralLinear`) or in
    /// `SL_n(F_q)` (`SpecialLinear`, torus restricted so the determinant is 1),
    /// or cell of `w` in `W(C_n)` inside `Sp_2n(F_q)` (`Symplectic`).
    pub fn new(kind: CellKind, field: PrimeField, w: &WeylElement, budget: u128) -> Result<Self> {
        match kind {
            CellKind::GeneralLinear | CellKind::SpecialLinear => {
                if w.spec().family() != Family::A {
                    return Err(Error::Unsupported(format!("linear cells are indexed by S_n, got {}", w.spec())));
                }
                Self::linear(kind, field, w, budget)
            }
            CellKind::Symplectic => Self::symplectic(field, w, budget),
        }
    }

    fn linear(kind: CellKind, field: PrimeField, w: &WeylElement, budget: u128) -> Result<Self> {
        let n = w.window().len();
        let q = field.modulus() as u128;
        let torus_size = match kind {
            CellKind::SpecialLinear => pow_u128(q - 1, n - 1),
            _ => pow_u128(q - 1, n),
        };
        let required = pow_u128(q, w.length())
            .saturating_mul(torus_size)
            .saturating_mul(pow_u128(q, n * (n - 1) / 2));
        check_budget(required, budget)?;

        let w_rep = permutation_matrix(&field, w);
        let mut torus = full_torus(&field, n);
        if kind == CellKind::SpecialLinear {
            // det(w_rep) * det(t) = 1
            let sign = field.det(&w_rep)?;
            let target = field.inv(&sign).expect("permutation matrices are invertible");
            torus.retain(|t| t.iter().fold(1u32, |acc, x| field.mul(&acc, x)) == target);
        }
        Ok(CellParametrization {
            field,
            dim: n,
            w: w.clone(),
            w_rep,
            cell_unipotents: unitriangular_family(&field, n, &inversion_positions(w)),
            torus,
            unipotents: unitriangular_family(&field, n, &strict_upper(n)),
        })
    }

    /// Symplectic pieces are the `GL_2n` pieces intersected with `Sp_2n`.
    fn symplectic(field: PrimeField, w: &WeylElement, budget: u128) -> Result<Self> {
        check_bc(w)?;
        let n = w.spec().rank();
        let dim = 2 * n;
        let q = field.modulus() as u128;
        let sigma = WeylElement::new(
            crate::weyl::GroupSpec::a(dim - 1)?,
            w.symmetric_embedding()?.into_iter().map(|x| x as i32).collect(),
        )?;
        let required = pow_u128(q, w.length())
            .saturating_mul(pow_u128(q - 1, n))
            .saturating_mul(pow_u128(q, n * n));
        let scan = pow_u128(q, dim * (dim - 1) / 2);
        check_budget(required.max(scan), budget)?;

        let keep_symplectic = |family: Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            family
                .into_iter()
                .filter(|m| is_symplectic(&field, &Matrix::from_vec(dim, dim, m.clone()).expect("square")))
                .collect()
        };
        let cell_unipotents = keep_symplectic(unitriangular_family(&field, dim, &inversion_positions(&sigma)));
        let unipotents = keep_symplectic(unitriangular_family(&field, dim, &strict_upper(dim)));
        if cell_unipotents.len() as u128 != pow_u128(q, w.length()) || unipotents.len() as u128 != pow_u128(q, n * n) {
            return Err(Error::Integrity(format!(
                "symplectic unipotent pieces have sizes {} and {}, expected q^{} and q^{}",
                cell_unipotents.len(),
                unipotents.len(),
                w.length(),
                n * n
            )));
        }
        let torus = full_torus(&field, n)
            .into_iter()
            .map(|t| {
                let mut d = t.clone();
                d.extend(t.iter().rev().map(|x| field.inv(x).expect("unit")));
                d
            })
            .collect();
        Ok(CellParametrization {
            field,
            dim,
            w: w.clone(),
            w_rep: sp_weyl_rep(&field, w)?,
            cell_unipotents,
            torus,
            unipotents,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weyl_element(&self) -> &WeylElement {
        &self.w
    }

    pub fn w_rep(&self) -> &Matrix<u32> {
        &self.w_rep
    }

    /// Number of elements of the cell.
    pub fn len(&self) -> usize {
        self.cell_unipotents.len() * self.torus.len() * self.unipotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `|B(F_q)|` for the ambient group.
    pub fn borel_order(&self) -> usize {
        self.torus.len() * self.unipotents.len()
    }

    fn left_factor(&self, a: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.dim * self.dim];
        self.field.mul_square(&self.cell_unipotents[a], self.w_rep.data(), self.dim, &mut out);
        out
    }

    fn scale_columns(&self, m: &mut [u32], diag: &[u32]) {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = self.field.mul(&m[i * n + j], &diag[j]);
            }
        }
    }

    /// Element number `idx`.
    pub fn element(&self, idx: usize) -> Matrix<u32> {
        let (nt, nu) = (self.torus.len(), self.unipotents.len());
        let (a, b, c) = (idx / (nt * nu), (idx / nu) % nt, idx % nu);
        let mut left = self.left_factor(a);
        self.scale_columns(&mut left, &self.torus[b]);
        let mut out = vec![0u32; self.dim * self.dim];
        self.field.mul_square(&left, &self.unipotents[c], self.dim, &mut out);
        Matrix::from_vec(self.dim, self.dim, out).expect("square")
    }

    /// Calls `f(idx, entries)` for every element with index in `range`, in
    /// order. Entries are row-major.
    pub fn for_each_in(&self, range: std::ops::Range<usize>, mut f: impl FnMut(usize, &[u32])) {
        let (nt, nu) = (self.torus.len(), self.unipotents.len());
        let n = self.dim;
        let mut out = vec![0u32; n * n];
        let mut cached: Option<(usize, usize, Vec<u32>)> = None;
        for idx in range {
            let (a, b, c) = (idx / (nt * nu), (idx / nu) % nt, idx % nu);
            let stale = !matches!(&cached, Some((ca, cb, _)) if *ca == a && *cb == b);
            if stale {
                let mut left = self.left_factor(a);
                self.scale_columns(&mut left, &self.torus[b]);
                cached = Some((a, b, left));
            }
            let left = &cached.as_ref().expect("filled above").2;
            self.field.mul_square(left, &self.unipotents[c], n, &mut out);
            f(idx, &out);
        }
    }

    pub fn for_each(&self, f: impl FnMut(usize, &[u32])) {
        self.for_each_in(0..self.len(), f)
    }

    pub fn iter(&self) -> impl Iterator<Item = Matrix<u32>> + '_ {
        (0..self.len()).map(move |i| self.element(i))
    }
}

/// Every element of the `GL_n(F_q)` cell of the permutation `w`.
pub fn enumerate_cell(w: &WeylElement, q: u64, budget: u128) -> Result<CellParametrization> {
    CellParametrization::new(CellKind::GeneralLinear, PrimeField::new(q)?, w, budget)
}
