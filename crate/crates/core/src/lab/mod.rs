//! Finite-field experiments: enumeration of small groups `G(F_q)`, Jordan
//! types of unipotent elements, and brute-force checks of how unipotent
//! classes meet Bruhat cells.

mod group;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat::{
    bruhat_decompose, is_symplectic, sp_bruhat_decompose, sp_elementary, sp_positive_positions, CellKind,
    CellParametrization,
};
use crate::error::{Error, Result};
use crate::linalg::{mat_sub_identity, nullspace, Field, Matrix, PrimeField};
use crate::partition::Partition;
use crate::weyl::{chevalley_order, gl_order, GroupSpec, WeylElement};

pub use group::{enumerate_group, FiniteGroupTable};
pub use verify::{
    randomized_checks, verify, verify_property_d, verify_theorem_a, CellMeeting, Integrity, OrbitData, OrderCheck, PropertyDRecord,
    PropertyDSample, RandomizedChecks, TheoremARecord, EXPONENT_TOLERANCE, TypeCount, UnipotentCountCheck, VerificationReport,
};

pub const DEFAULT_ENUMERATION_BUDGET: u128 = 100_000_000;
/// Groups up to this order are also enumerated as a whole by BFS.
pub const DEFAULT_SCAN_LIMIT: u128 = 1_000_000;

/// The matrix groups the lab works with. `Sp` carries the matrix size `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupKind {
    GL(usize),
    SL(usize),
    Sp(usize),
}

impl GroupKind {
    pub fn new(name: &str, dim: usize) -> Result<Self> {
        let kind = match name.to_ascii_lowercase().as_str() {
            "gl" => GroupKind::GL(dim),
            "sl" => GroupKind::SL(dim),
            "sp" => GroupKind::Sp(dim),
            other => return Err(Error::InvalidSpec(format!("unknown group '{other}', expected gl, sl or sp"))),
        };
        kind.validate()?;
        Ok(kind)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GroupKind::GL(n) | GroupKind::SL(n) if n < 2 => {
                Err(Error::InvalidSpec(format!("{self} needs matrix size at least 2")))
            }
            GroupKind::Sp(d) if d < 2 || d % 2 == 1 => {
                Err(Error::InvalidSpec(format!("Sp needs an even matrix size, got {d}")))
            }
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            GroupKind::GL(n) | GroupKind::SL(n) | GroupKind::Sp(n) => n,
        }
    }

    pub fn weyl_spec(&self) -> GroupSpec {
        match *self {
            GroupKind::GL(n) | GroupKind::SL(n) => GroupSpec::a(n - 1).expect("validated"),
            GroupKind::Sp(d) => GroupSpec::bc(d / 2).expect("validated"),
        }
    }

    pub fn cell_kind(&self) -> CellKind {
        match self {
            GroupKind::GL(_) => CellKind::GeneralLinear,
            GroupKind::SL(_) => CellKind::SpecialLinear,
            GroupKind::Sp(_) => CellKind::Symplectic,
        }
    }

    pub fn order(&self, q: u64) -> Result<BigUint> {
        match *self {
            GroupKind::GL(n) => gl_order(n, q),
            _ => chevalley_order(self.weyl_spec(), q),
        }
    }

    /// `|B(F_q)|`.
    pub fn borel_order(&self, q: u64) -> u128 {
        let q = q as u128;
        let n = self.dim();
        let (torus_rank, roots) = match self {
            GroupKind::GL(_) => (n, n * (n - 1) / 2),
            GroupKind::SL(_) => (n - 1, n * (n - 1) / 2),
            GroupKind::Sp(_) => (n / 2, n * n / 4),
        };
        (q - 1).pow(torus_rank as u32) * q.pow(roots as u32)
    }

    /// Number of unipotent elements, `q^{2N}` with `N` the number of positive roots.
    pub fn unipotent_count(&self, q: u64) -> u128 {
        (q as u128).pow(2 * self.weyl_spec().num_positive_roots() as u32)
    }

    /// `|Z(G)(F_q)|`: scalars `c` with `c^n = 1` in `SL_n`, `+-1` in `Sp`.
    pub fn center_order(&self, q: u64) -> u64 {
        match *self {
            GroupKind::GL(_) => q - 1,
            GroupKind::SL(n) => num_integer::gcd(n as u64, q - 1),
            GroupKind::Sp(_) => num_integer::gcd(2, q - 1),
        }
    }

    /// `F_q`-points of the component group of the center: rational B-orbits
    /// split into this many pieces on top of the geometric ones.
    pub fn center_components(&self, q: u64) -> u64 {
        match self {
            GroupKind::GL(_) => 1,
            _ => self.center_order(q),
        }
    }

    /// Characteristic 2 is bad for the symplectic groups.
    pub fn is_bad_prime(&self, q: u64) -> bool {
        matches!(self, GroupKind::Sp(_)) && q == 2
    }

    pub fn contains(&self, field: &PrimeField, g: &Matrix<u32>) -> bool {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return false;
        }
        match self {
            GroupKind::GL(_) => field.det(g).map(|d| d != 0).unwrap_or(false),
            GroupKind::SL(_) => field.det(g).map(|d| d == 1).unwrap_or(false),
            GroupKind::Sp(_) => is_symplectic(field, g),
        }
    }

    /// Bruhat cell of a group element, as an element of [`Self::weyl_spec`].
    pub fn cell_of(&self, field: &PrimeField, g: &Matrix<u32>) -> Result<WeylElement> {
        match self {
            GroupKind::Sp(_) => Ok(sp_bruhat_decompose(field, g)?.0),
            _ => Ok(bruhat_decompose(field, g)?.w),
        }
    }

    /// Generators of `G(F_p)`: root elements for the simple roots and their
    /// negatives, plus a torus element for `GL`.
    pub fn generators(&self, field: &PrimeField) -> Vec<Matrix<u32>> {
        let n = self.dim();
        let mut out = Vec::new();
        match self {
            GroupKind::GL(_) | GroupKind::SL(_) => {
                for i in 0..n - 1 {
                    for (r, c) in [(i, i + 1), (i + 1, i)] {
                        let mut m = Matrix::identity(field, n);
                        m.set(r, c, 1);
                        out.push(m);
                    }
                }
                if let GroupKind::GL(_) = self {
                    let mut m = Matrix::identity(field, n);
                    m.set(0, 0, field.primitive_root());
                    out.push(m);
                }
            }
            GroupKind::Sp(_) => {
                for i in 0..n / 2 {
                    for (r, c) in [(i, i + 1), (i + 1, i)] {
                        out.push(add_identity(field, sp_elementary(field, n, r, c)));
                    }
                }
            }
        }
        out
    }

    /// Generators of `B(F_p)`: torus generators and all positive root elements.
    pub fn borel_generators(&self, field: &PrimeField) -> Vec<Matrix<u32>> {
        let n = self.dim();
        let z = field.primitive_root();
        let zi = field.inv(&z).expect("unit");
        let mut out = Vec::new();
        let diag = |pairs: &[(usize, u32)]| {
            let mut m = Matrix::identity(field, n);
            for &(i, v) in pairs {
                m.set(i, i, v);
            }
            m
        };
        match self {
            GroupKind::GL(_) => out.extend((0..n).map(|i| diag(&[(i, z)]))),
            GroupKind::SL(_) => out.extend((0..n - 1).map(|i| diag(&[(i, z), (i + 1, zi)]))),
            GroupKind::Sp(_) => out.extend((0..n / 2).map(|i| diag(&[(i, z), (n - 1 - i, zi)]))),
        }
        match self {
            GroupKind::Sp(_) => {
                for (i, j) in sp_positive_positions(n) {
                    out.push(add_identity(field, sp_elementary(field, n, i, j)));
                }
            }
            _ => {
                for i in 0..n {
                    for j in i + 1..n {
                        let mut m = Matrix::identity(field, n);
                        m.set(i, j, 1);
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    pub(crate) fn cell(&self, field: PrimeField, w: &WeylElement, budget: u128) -> Result<CellParametrization> {
        CellParametrization::new(self.cell_kind(), field, w, budget)
    }
}

fn add_identity(field: &PrimeField, mut x: Matrix<u32>) -> Matrix<u32> {
    for i in 0..x.rows() {
        let v = field.add(x.get(i, i), &1);
        x.set(i, i, v);
    }
    x
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::GL(n) => write!(f, "GL{n}"),
            GroupKind::SL(n) => write!(f, "SL{n}"),
            GroupKind::Sp(n) => write!(f, "Sp{n}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    /// `GL3`, `sl2`, `Sp4`.
    fn from_str(s: &str) -> Result<Self> {
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("no size in '{s}'")))?;
        let dim = s[split..].parse().map_err(|_| Error::Parse(format!("bad size in '{s}'")))?;
        GroupKind::new(&s[..split], dim)
    }
}

/// Budgets and switches shared by the lab entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabConfig {
    /// Largest number of group elements any single run may visit.
    pub budget: u128,
    /// Largest single cell (or centralizer search space) that may be enumerated.
    pub cell_budget: u128,
    /// Groups up to this order are additionally enumerated by BFS.
    pub scan_limit: u128,
    /// Run symplectic groups in characteristic 2; results are reported but not asserted.
    pub allow_bad_prime: bool,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            budget: DEFAULT_ENUMERATION_BUDGET,
            cell_budget: crate::bruhat::DEFAULT_CELL_BUDGET,
            scan_limit: DEFAULT_SCAN_LIMIT,
            allow_bad_prime: false,
        }
    }
}

pub(crate) fn check_prime(kind: GroupKind, q: u64, config: &LabConfig) -> Result<PrimeField> {
    let field = PrimeField::new(q)?;
    if kind.is_bad_prime(q) && !config.allow_bad_prime {
        return Err(Error::BadPrime(q as u32));
    }
    Ok(field)
}

pub(crate) fn order_u128(kind: GroupKind, q: u64) -> Result<u128> {
    let order = kind.order(q)?;
    u128::try_from(order).map_err(|_| Error::BudgetExceeded { required: u128::MAX, budget: 0 })
}

/// Rank of a row-major `n x n` matrix over `F_p`; destroys `m`.
pub(crate) fn rank_flat(field: &PrimeField, m: &mut [u32], n: usize) -> usize {
    let p = field.modulus() as u64;
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| m[r * n + col] != 0) else { continue };
        if piv != rank {
            for c in 0..n {
                m.swap(piv * n + c, rank * n + c);
            }
        }
        let inv = field.inv(&m[rank * n + col]).expect("nonzero pivot") as u64;
        for r in rank + 1..n {
            let f = m[r * n + col] as u64 * inv % p;
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = f * m[rank * n + c] as u64 % p;
                m[r * n + c] = ((m[r * n + c] as u64 + p - sub) % p) as u32;
            }
        }
        rank += 1;
    }
    rank
}

/// Jordan type of a unipotent element given as a row-major slice, or `None`
/// when `g` is not unipotent.
pub(crate) fn jordan_type_flat(field: &PrimeField, g: &[u32], n: usize) -> Option<Partition> {
    let p = field.modulus() as u64;
    let trace = (0..n).map(|i| g[i * n + i] as u64).sum::<u64>() % p;
    if trace != n as u64 % p {
        return None;
    }
    let mut nil = g.to_vec();
    for i in 0..n {
        nil[i * n + i] = field.sub(&nil[i * n + i], &1);
    }
    let mut ranks = vec![n];
    let mut power = nil.clone();
    let mut scratch = vec![0u32; n * n];
    loop {
        let mut tmp = power.clone();
        let r = rank_flat(field, &mut tmp, n);
        if r == 0 {
            break;
        }
        if r == *ranks.last().expect("non-empty") {
            return None;
        }
        ranks.push(r);
        field.mul_square(&power, &nil, n, &mut scratch);
        std::mem::swap(&mut power, &mut scratch);
    }
    ranks.push(0);
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Some(Partition::new(at_least).conjugate())
}

/// Jordan type of a unipotent matrix over any field: the number of blocks of
/// size at least `k` is `rank((g-1)^{k-1}) - rank((g-1)^k)`.
pub fn jordan_type<F: Field>(field: &F, g: &Matrix<F::Elem>) -> Result<Partition> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", g.rows(), g.cols())));
    }
    let n = g.rows();
    let nil = mat_sub_identity(field, g);
    let mut ranks = vec![n];
    let mut power = nil.clone();
    for _ in 0..n {
        let r = field.rank(&power);
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = crate::linalg::mat_mul(field, &power, &nil)?;
    }
    if *ranks.last().expect("non-empty") != 0 {
        return Err(Error::NotUnipotent);
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::new(at_least).conjugate())
}

/// Jordan-type census of the unipotent elements of every cell `G_w(F_q)`.
pub fn cell_census(
    kind: GroupKind,
    q: u64,
    cells: &[WeylElement],
    config: &LabConfig,
) -> Result<BTreeMap<WeylElement, BTreeMap<Partition, u64>>> {
    let field = check_prime(kind, q, config)?;
    cells
        .iter()
        .map(|w| Ok((w.clone(), cell_unipotent_types(kind, &field, w, config)?)))
        .collect()
}

const CHUNK: usize = 1 << 14;

fn cell_unipotent_types(
    kind: GroupKind,
    field: &PrimeField,
    w: &WeylElement,
    config: &LabConfig,
) -> Result<BTreeMap<Partition, u64>> {
    let cell = kind.cell(*field, w, config.cell_budget)?;
    let n = cell.dim();
    let chunks: Vec<_> = (0..cell.len()).step_by(CHUNK).collect();
    let partial: Vec<BTreeMap<Partition, u64>> = chunks
        .into_par_iter()
        .map(|start| {
            let mut counts = BTreeMap::new();
            cell.for_each_in(start..(start + CHUNK).min(cell.len()), |_, g| {
                if let Some(t) = jordan_type_flat(field, g, n) {
                    *counts.entry(t).or_insert(0) += 1;
                }
            });
            counts
        })
        .collect();
    let mut total = BTreeMap::new();
    for part in partial {
        for (t, c) in part {
            *total.entry(t).or_insert(0) += c;
        }
    }
    Ok(total)
}

/// Every unipotent element of `G_w(F_q)` with its Jordan type, in
/// parametrization order.
pub fn cell_unipotents(kind: GroupKind, w: &WeylElement, q: u64, config: &LabConfig) -> Result<Vec<(Matrix<u32>, Partition)>> {
    let field = check_prime(kind, q, config)?;
    let cell = kind.cell(field, w, config.cell_budget)?;
    let n = cell.dim();
    let chunks: Vec<_> = (0..cell.len()).step_by(CHUNK).collect();
    let parts: Vec<Vec<(Matrix<u32>, Partition)>> = chunks
        .into_par_iter()
        .map(|start| {
            let mut out = Vec::new();
            cell.for_each_in(start..(start + CHUNK).min(cell.len()), |_, g| {
                if let Some(t) = jordan_type_flat(&field, g, n) {
                    out.push((Matrix::from_vec(n, n, g.to_vec()).expect("square"), t));
                }
            });
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Basis of the commutant `{X : X g = g X}` as flat row-major matrices.
pub(crate) fn commutant_basis(field: &PrimeField, g: &Matrix<u32>) -> Vec<Vec<u32>> {
    let n = g.rows();
    // unknown X[a][b] sits at column a * n + b; equation (i, j) reads
    // sum_k X[i][k] g[k][j] - g[i][k] X[k][j] = 0
    let mut eqs = Matrix::zeros(field, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                let a = field.add(eqs.get(row, i * n + k), g.get(k, j));
                eqs.set(row, i * n + k, a);
                let b = field.sub(eqs.get(row, k * n + j), g.get(i, k));
                eqs.set(row, k * n + j, b);
            }
        }
    }
    nullspace(field, &eqs)
}

/// `|Z_G(g)|` and `|Z_B(g)|` by enumerating the commutant of `g` and keeping
/// the elements of `G` (resp. upper triangular elements of `G`).
pub(crate) fn centralizer_orders(
    kind: GroupKind,
    field: &PrimeField,
    g: &Matrix<u32>,
    budget: u128,
) -> Result<(u64, u64)> {
    let basis = commutant_basis(field, g);
    let q = field.modulus() as u128;
    let required = q.checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let n = g.rows();
    let total = required as u64;
    let counts = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut x = vec![0u32; n * n];
            let mut c = code;
            for v in &basis {
                let coef = (c % q as u64) as u32;
                c /= q as u64;
                if coef != 0 {
                    for (xe, ve) in x.iter_mut().zip(v) {
                        *xe = field.add(xe, &field.mul(&coef, ve));
                    }
                }
            }
            let m = Matrix::from_vec(n, n, x).expect("square");
            if kind.contains(field, &m) {
                (1u64, m.is_upper_triangular(field) as u64)
            } else {
                (0, 0)
            }
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(counts)
}
