use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{gauss_det, gauss_rank, Matrix};
use crate::error::{Error, Result};

/// A field with exact arithmetic. Elements are plain values; the field value
/// carries whatever context (the modulus) the operations need.
pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        gauss_rank(self, m)
    }

    fn det(&self, m: &Matrix<Self::Elem>) -> Result<Self::Elem> {
        gauss_det(self, m)
    }
}

/// `GF(p)` for a prime `p < 2^31`, elements stored as residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u32 {
        let p = self.p as u64;
        if p == 2 {
            return 1;
        }
        let order = p - 1;
        let mut factors = Vec::new();
        let mut r = order;
        let mut d = 2;
        while d * d <= r {
            if r.is_multiple_of(d) {
                factors.push(d);
                while r.is_multiple_of(d) {
                    r /= d;
                }
            }
            d += 1;
        }
        if r > 1 {
            factors.push(r);
        }
        (2..p)
            .find(|&g| factors.iter().all(|&f| self.pow(g as u32, order / f) != 1))
            .expect("prime fields have primitive roots") as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u64;
        let p = self.p as u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }

    /// Every element, `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// Product of two square matrices with a single reduction per entry.
    pub fn mul_square(&self, a: &[u32], b: &[u32], n: usize, out: &mut [u32]) {
        let p = self.p as u64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += a[i * n + k] as u64 * b[k * n + j] as u64;
                    if k & 7 == 7 {
                        acc %= p;
                    }
                }
                out[i * n + j] = (acc % p) as u32;
            }
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce(v)
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p as u64 - 2))
        }
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
}

/// The rationals with arbitrary precision. Rank and determinant use
/// fraction-free (Bareiss) elimination on an integer-scaled copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl RationalField {
    /// Scales each row by the lcm of its denominators. Returns the integer
    /// matrix and the product of the scale factors.
    fn integer_rows(m: &Matrix<BigRational>) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..m.rows())
            .map(|i| {
                let row = m.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        (rows, scale)
    }

    /// Bareiss elimination in place; returns (rank, sign of row swaps).
    fn bareiss(a: &mut [Vec<BigInt>]) -> (usize, i32) {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut sign = 1;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            if piv != rank {
                a.swap(piv, rank);
                sign = -sign;
            }
            for r in rank + 1..rows {
                for c in col + 1..cols {
                    let v = &a[r][c] * &a[rank][col] - &a[r][col] * &a[rank][c];
                    a[r][c] = v / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        (rank, sign)
    }
}

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn rank(&self, m: &Matrix<BigRational>) -> usize {
        let (mut rows, _) = Self::integer_rows(m);
        Self::bareiss(&mut rows).0
    }

    fn det(&self, m: &Matrix<BigRational>) -> Result<BigRational> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        if n == 0 {
            return Ok(BigRational::one());
        }
        let (mut rows, scale) = Self::integer_rows(m);
        let (rank, sign) = Self::bareiss(&mut rows);
        if rank < n {
            return Ok(BigRational::zero());
        }
        let mut d = rows[n - 1][n - 1].clone();
        if sign < 0 {
            d = -d;
        }
        let out = BigRational::new(d, scale);
        debug_assert!(out.denom().is_positive());
        Ok(out)
    }
}
