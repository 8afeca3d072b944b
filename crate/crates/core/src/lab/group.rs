use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{check_prime, jordan_type_flat, order_u128, GroupKind, LabConfig};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::partition::Partition;
use crate::weyl::{all_elements, WeylElement};

/// Every element of a small group `G(F_q)` with its Bruhat cell and, for
/// unipotent elements, its Jordan type.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    kind: GroupKind,
    field: PrimeField,
    /// Entries in base `q`, row-major, most significant first; sorted.
    codes: Vec<u128>,
    cells: Vec<WeylElement>,
    cell_of: Vec<u16>,
    unipotent_type: Vec<Option<Partition>>,
}

fn encode(g: &[u32], q: u32) -> u128 {
    g.iter().fold(0u128, |acc, &x| acc * q as u128 + x as u128)
}

fn decode(mut code: u128, q: u32, n: usize) -> Vec<u32> {
    let mut out = vec![0u32; n * n];
    for slot in out.iter_mut().rev() {
        *slot = (code % q as u128) as u32;
        code /= q as u128;
    }
    out
}

/// BFS closure of the generators of `G(F_q)`, cross-checked against the order
/// formula.
pub fn enumerate_group(kind: GroupKind, q: u64, config: &LabConfig) -> Result<FiniteGroupTable> {
    let field = check_prime(kind, q, config)?;
    let expected = order_u128(kind, q)?;
    if expected > config.budget {
        return Err(Error::BudgetExceeded { required: expected, budget: config.budget });
    }
    let n = kind.dim();
    if (q as f64).powi((n * n) as i32) >= 2f64.powi(127) {
        return Err(Error::Unsupported(format!("{kind} over F_{q} is too large to encode")));
    }
    let qq = field.modulus();
    let gens: Vec<Vec<u32>> = kind.generators(&field).into_iter().map(Matrix::into_data).collect();
    let id = Matrix::identity(&field, n).into_data();
    let mut seen: HashSet<u128> = HashSet::with_capacity(expected as usize);
    seen.insert(encode(&id, qq));
    let mut frontier = vec![id];
    let mut scratch = vec![0u32; n * n];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &gens {
                field.mul_square(g, s, n, &mut scratch);
                if seen.insert(encode(&scratch, qq)) {
                    if seen.len() as u128 > expected {
                        return Err(Error::Integrity(format!(
                            "{kind} over F_{q} has more than the expected {expected} elements"
                        )));
                    }
                    next.push(scratch.clone());
                }
            }
        }
        frontier = next;
    }
    if seen.len() as u128 != expected {
        return Err(Error::Integrity(format!(
            "{kind} over F_{q}: enumerated {} elements, order formula gives {expected}",
            seen.len()
        )));
    }
    let mut codes: Vec<u128> = seen.into_iter().collect();
    codes.sort_unstable();

    let cells = all_elements(kind.weyl_spec());
    let index: HashMap<&WeylElement, u16> = cells.iter().enumerate().map(|(i, w)| (w, i as u16)).collect();
    let classified: Vec<(u16, Option<Partition>)> = codes
        .par_iter()
        .map(|&code| {
            let data = decode(code, qq, n);
            let t = jordan_type_flat(&field, &data, n);
            let m = Matrix::from_vec(n, n, data).expect("square");
            let w = kind.cell_of(&field, &m).map(|w| index[&w]);
            w.map(|w| (w, t))
        })
        .collect::<Result<_>>()?;
    let (cell_of, unipotent_type) = classified.into_iter().unzip();
    Ok(FiniteGroupTable { kind, field, codes, cells, cell_of, unipotent_type })
}

impl FiniteGroupTable {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn q(&self) -> u64 {
        self.field.modulus() as u64
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn element(&self, idx: usize) -> Matrix<u32> {
        let n = self.kind.dim();
        Matrix::from_vec(n, n, decode(self.codes[idx], self.field.modulus(), n)).expect("square")
    }

    pub fn index_of(&self, g: &Matrix<u32>) -> Option<usize> {
        self.codes.binary_search(&encode(g.data(), self.field.modulus())).ok()
    }

    pub fn cell_of(&self, idx: usize) -> &WeylElement {
        &self.cells[self.cell_of[idx] as usize]
    }

    pub fn unipotent_type(&self, idx: usize) -> Option<&Partition> {
        self.unipotent_type[idx].as_ref()
    }

    pub fn unipotent_count(&self) -> usize {
        self.unipotent_type.iter().filter(|t| t.is_some()).count()
    }

    /// Number of elements in each cell, in the order of `all_elements`.
    pub fn cell_sizes(&self) -> Vec<(WeylElement, usize)> {
        let mut counts = vec![0usize; self.cells.len()];
        for &c in &self.cell_of {
            counts[c as usize] += 1;
        }
        self.cells.iter().cloned().zip(counts).collect()
    }

    /// `(Jordan type, count)` for the unipotent elements of the cell of `w`.
    pub fn cell_unipotent_types(&self, w: &WeylElement) -> Vec<(Partition, usize)> {
        let mut counts: std::collections::BTreeMap<Partition, usize> = Default::default();
        for i in 0..self.len() {
            if self.cell_of(i) == w {
                if let Some(t) = self.unipotent_type(i) {
                    *counts.entry(t.clone()).or_insert(0) += 1;
                }
            }
        }
        counts.into_iter().collect()
    }
}
