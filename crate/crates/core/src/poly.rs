//! Dense integer polynomials in one indeterminate `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// Polynomial with `i128` coefficients stored lowest degree first, never
/// carrying trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<i128>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: i128) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn monomial(coeff: i128, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i128 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation over any ring given by closures.
    pub fn eval_with<T: Clone>(
        &self,
        at: &T,
        zero: T,
        from_int: impl Fn(i128) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(zero, |acc, &c| add(&mul(&acc, at), &from_int(c)))
    }

    pub fn eval_i128(&self, at: i128) -> i128 {
        self.eval_with(&at, 0, |c| c, |a, b| a + b, |a, b| a * b)
    }

    /// Exact division by a monic divisor; `None` if the remainder is non-zero.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let d = divisor.degree()?;
        if divisor.coeffs[d] != 1 {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return if self.is_zero() { Some(Poly::zero()) } else { None };
        }
        let mut quot = vec![0i128; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d];
            quot[k] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Poly::from_coeffs(quot))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `q^3 + 2q^2 + 2q + 1` or `q - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (deg, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "q")?,
                (1, m) => write!(f, "{m}q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, m) => write!(f, "{m}q^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let p = Poly::from_coeffs(vec![1, 2, 2, 1]);
        assert_eq!(p.to_string(), "q^3 + 2q^2 + 2q + 1");
        assert_eq!((&Poly::q() - &Poly::one()).to_string(), "q - 1");
        assert_eq!(Poly::constant(-3).to_string(), "-3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        // (q^3 - 1) / (q - 1) = q^2 + q + 1
        let num = Poly::from_coeffs(vec![-1, 0, 0, 1]);
        let den = Poly::from_coeffs(vec![-1, 1]);
        assert_eq!(num.div_exact(&den).unwrap(), Poly::from_coeffs(vec![1, 1, 1]));
        assert!(Poly::from_coeffs(vec![1, 0, 1]).div_exact(&den).is_none());
    }

    #[test]
    fn arithmetic_trims() {
        let a = Poly::from_coeffs(vec![1, 1]);
        let b = Poly::from_coeffs(vec![0, 1]);
        assert_eq!(&(&a - &b) - &Poly::one(), Poly::zero());
        assert_eq!((&a * &a).coeffs(), &[1, 2, 1]);
        assert_eq!(a.eval_i128(3), 4);
    }
}
