//! Weyl groups of classical type realized as (signed) permutation groups.
//!
//! Elements are stored in window notation: `window[i - 1] = w(i)` for
//! `i = 1..=m`, extended to negative arguments by `w(-i) = -w(i)`.
//! Composition is functional: `(a * b)(i) = a(b(i))`, so `b` acts first.
//!
//! Simple reflections, indexed from 1:
//! * `A_n` (acting on `1..=n+1`): `s_i = (i, i+1)`.
//! * `BC_n`: `s_i = (i, i+1)` for `i < n`, and `s_n` negates the last
//!   coordinate. Types B and C share this Weyl group.
//! * `D_n`: `s_i = (i, i+1)` for `i < n`, and `s_n` sends `n-1 -> -n`,
//!   `n -> -(n-1)`.
//!
//! Positive roots are the roots whose first non-zero coordinate is positive,
//! which matches the upper triangular Borel subgroup of `GL` and `Sp`.

mod classes;
mod order;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classes::{
    conjugacy_classes, conjugacy_classes_capped, signed_cycle_type, ClassLabel, ConjugacyClass,
    DEFAULT_RANK_CAP,
};
pub use order::{
    chevalley_order, degrees, gl_order, is_prime_power, poincare_polynomial,
    poincare_polynomial_capped, poincare_product,
};

/// Square integer matrix stored as rows.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    BC,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::BC => "BC",
            Family::D => "D",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "BC" | "B" | "C" => Ok(Family::BC),
            "D" => Ok(Family::D),
            other => Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

/// A Weyl group: family plus rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    family: Family,
    rank: usize,
}

impl GroupSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidSpec("rank must be at least 1".into()));
        }
        if family == Family::D && rank < 2 {
            return Err(Error::InvalidSpec("type D needs rank at least 2".into()));
        }
        if rank > 30 {
            return Err(Error::InvalidSpec(format!("rank {rank} is unreasonably large")));
        }
        Ok(GroupSpec { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn bc(rank: usize) -> Result<Self> {
        Self::new(Family::BC, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of letters the group permutes (`n + 1` for `A_n`).
    pub fn degree(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::BC | Family::D => self.rank,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::BC => n * n,
            Family::D => n * (n - 1),
        }
    }

    /// `|W|`.
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.degree() as u128).product();
        match self.family {
            Family::A => fact,
            Family::BC => fact << self.rank,
            Family::D => fact << (self.rank - 1),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An element of a classical Weyl group in window notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    spec: GroupSpec,
    window: Vec<i32>,
}

impl WeylElement {
    /// Validates the window against the family's constraints.
    pub fn new(spec: GroupSpec, window: Vec<i32>) -> Result<Self> {
        let m = spec.degree();
        if window.len() != m {
            return Err(Error::InvalidElement(format!(
                "window {window:?} has length {} but {spec} acts on {m} letters",
                window.len()
            )));
        }
        let mut seen = vec![false; m];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > m || seen[a - 1] {
                return Err(Error::InvalidElement(format!(
                    "{window:?} is not a signed permutation of 1..={m}"
                )));
            }
            seen[a - 1] = true;
        }
        let negatives = window.iter().filter(|&&x| x < 0).count();
        match spec.family {
            Family::A if negatives > 0 => Err(Error::InvalidElement(format!(
                "{window:?} has negative entries but {spec} is of type A"
            ))),
            Family::D if negatives % 2 == 1 => Err(Error::InvalidElement(format!(
                "{window:?} has an odd number of sign changes"
            ))),
            _ => Ok(WeylElement { spec, window }),
        }
    }

    pub fn identity(spec: GroupSpec) -> Self {
        WeylElement { spec, window: (1..=spec.degree() as i32).collect() }
    }

    /// The simple reflection `s_index`, `index` in `1..=rank`.
    pub fn generator(spec: GroupSpec, index: usize) -> Result<Self> {
        let n = spec.rank;
        if index == 0 || index > n {
            return Err(Error::InvalidElement(format!(
                "generator index {index} out of range 1..={n} for {spec}"
            )));
        }
        let mut w = Self::identity(spec);
        let win = &mut w.window;
        match spec.family {
            Family::A => win.swap(index - 1, index),
            Family::BC | Family::D if index < n => win.swap(index - 1, index),
            Family::BC => win[n - 1] = -win[n - 1],
            Family::D => {
                win[n - 2] = -(n as i32);
                win[n - 1] = -(n as i32 - 1);
            }
        }
        Ok(w)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for a signed letter `i`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    fn check_same(&self, other: &WeylElement) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: other.spec.to_string(),
            });
        }
        Ok(())
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_same(other)?;
        Ok(self.compose(other))
    }

    pub(crate) fn compose(&self, other: &WeylElement) -> WeylElement {
        let window = other.window.iter().map(|&b| self.apply(b)).collect();
        WeylElement { spec: self.spec, window }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut window = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = x.unsigned_abs() as usize - 1;
            window[pos] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        WeylElement { spec: self.spec, window }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let m = w.len();
        let mut len = 0;
        match self.spec.family {
            Family::A => {
                for i in 0..m {
                    for j in i + 1..m {
                        if w[i] > w[j] {
                            len += 1;
                        }
                    }
                }
            }
            Family::BC | Family::D => {
                for i in 0..m {
                    for j in i + 1..m {
                        let (x, y) = (w[i], w[j]);
                        let x_first = x.abs() < y.abs();
                        // e_i - e_j  ->  sgn(x) e_|x| - sgn(y) e_|y|
                        if (x_first && x < 0) || (!x_first && y > 0) {
                            len += 1;
                        }
                        // e_i + e_j  ->  sgn(x) e_|x| + sgn(y) e_|y|
                        if (x_first && x < 0) || (!x_first && y < 0) {
                            len += 1;
                        }
                    }
                }
                if self.spec.family == Family::BC {
                    len += w.iter().filter(|&&x| x < 0).count();
                }
            }
        }
        len
    }

    /// Generator indices `s` with `l(s w) < l(w)`.
    pub fn left_descents(&self) -> Vec<usize> {
        let l = self.length();
        generators(self.spec)
            .iter()
            .enumerate()
            .filter(|(_, s)| s.compose(self).length() < l)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Greedy reduced word: repeatedly strip the smallest-index left descent.
    /// The word `[i1, .., ik]` satisfies `w = s_i1 * .. * s_ik`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let gens = generators(self.spec);
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        let mut len = cur.length();
        while len > 0 {
            let (idx, next) = gens
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.compose(&cur)))
                .find(|(_, x)| x.length() < len)
                .expect("non-identity element has a left descent");
            word.push(idx + 1);
            cur = next;
            len -= 1;
        }
        word
    }

    /// Product `s_i1 * .. * s_ik` of a word in the generators.
    pub fn from_word(spec: GroupSpec, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(spec);
        for &i in word {
            w = w.compose(&Self::generator(spec, i)?);
        }
        Ok(w)
    }

    /// Matrix of `w` in the reflection representation.
    ///
    /// Types BC and D use the signed permutation matrix on `Z^n`. Type `A_n`
    /// uses the root lattice basis `e_k - e_{k+1}` of the sum-zero subspace.
    pub fn reflection_rep(&self) -> IntMatrix {
        let m = self.window.len();
        match self.spec.family {
            Family::BC | Family::D => {
                let mut mat = vec![vec![0i64; m]; m];
                for (col, &x) in self.window.iter().enumerate() {
                    mat[x.unsigned_abs() as usize - 1][col] = x.signum() as i64;
                }
                mat
            }
            Family::A => {
                let r = m - 1;
                let mut mat = vec![vec![0i64; r]; r];
                for col in 0..r {
                    let a = self.window[col] as usize;
                    let b = self.window[col + 1] as usize;
                    // e_a - e_b in the basis alpha_t = e_t - e_{t+1}
                    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
                    for row in mat.iter_mut().take(hi - 1).skip(lo - 1) {
                        row[col] = sign;
                    }
                }
                mat
            }
        }
    }

    /// No eigenvalue 1 in the reflection representation, decided by the exact
    /// integer determinant of `rho(w) - I`.
    pub fn is_elliptic(&self) -> bool {
        let mut m = self.reflection_rep();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= 1;
        }
        int_det(&m) != 0
    }

    /// Image of a BC element in the symmetric group on `2n` letters: letter
    /// `i` goes to position `i`, letter `-i` to position `2n + 1 - i`.
    /// Returned as a 1-based window of length `2n`.
    pub fn symmetric_embedding(&self) -> Result<Vec<usize>> {
        if self.spec.family != Family::BC {
            return Err(Error::Unsupported(format!(
                "the embedding into S_2n is defined for type BC, not {}",
                self.spec
            )));
        }
        let n = self.spec.rank;
        let pos = |x: i32| -> usize {
            if x > 0 {
                x as usize
            } else {
                2 * n + 1 - x.unsigned_abs() as usize
            }
        };
        let mut perm = vec![0; 2 * n];
        for i in 1..=n as i32 {
            perm[pos(i) - 1] = pos(self.apply(i));
            perm[pos(-i) - 1] = pos(self.apply(-i));
        }
        Ok(perm)
    }

    /// Inverse of [`WeylElement::symmetric_embedding`].
    pub fn from_symmetric_embedding(n: usize, perm: &[usize]) -> Result<Self> {
        let spec = GroupSpec::bc(n)?;
        if perm.len() != 2 * n {
            return Err(Error::NotInEmbeddedWeylGroup(perm.to_vec()));
        }
        let mirror = |p: usize| 2 * n + 1 - p;
        let mut window = Vec::with_capacity(n);
        for i in 1..=n {
            let img = perm[i - 1];
            if img == 0 || img > 2 * n || perm[mirror(i) - 1] != mirror(img) {
                return Err(Error::NotInEmbeddedWeylGroup(perm.to_vec()));
            }
            window.push(if img <= n { img as i32 } else { -(mirror(img) as i32) });
        }
        WeylElement::new(spec, window).map_err(|_| Error::NotInEmbeddedWeylGroup(perm.to_vec()))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(s)
    }
}

/// Simple reflections `s_1, .., s_rank`.
pub fn generators(spec: GroupSpec) -> Vec<WeylElement> {
    (1..=spec.rank)
        .map(|i| WeylElement::generator(spec, i).expect("index in range"))
        .collect()
}

/// The unique element of maximal length.
pub fn longest_element(spec: GroupSpec) -> WeylElement {
    let m = spec.degree() as i32;
    let window = match spec.family {
        Family::A => (1..=m).rev().collect(),
        Family::BC => (1..=m).map(|i| -i).collect(),
        Family::D if m % 2 == 0 => (1..=m).map(|i| -i).collect(),
        Family::D => (1..=m).map(|i| if i < m { -i } else { i }).collect(),
    };
    WeylElement { spec, window }
}

/// Every element of `W`, permutations in lexicographic order with sign
/// patterns varying fastest.
pub fn all_elements(spec: GroupSpec) -> Vec<WeylElement> {
    let m = spec.degree();
    let mut perm: Vec<i32> = (1..=m as i32).collect();
    let mut out = Vec::with_capacity(spec.order() as usize);
    loop {
        match spec.family {
            Family::A => out.push(WeylElement { spec, window: perm.clone() }),
            Family::BC | Family::D => {
                for mask in 0u32..(1 << m) {
                    if spec.family == Family::D && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let window = perm
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect();
                    out.push(WeylElement { spec, window });
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Exact determinant of a small integer matrix (Bareiss elimination).
pub(crate) fn int_det(m: &IntMatrix) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests;
