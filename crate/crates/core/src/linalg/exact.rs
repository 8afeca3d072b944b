//! Field-erased scalars and matrices used at I/O boundaries, plus the JSON
//! matrix format:
//!
//! ```json
//! {"field": "Q" | {"p": 7}, "rows": 2, "cols": 2, "entries": [["1/2", 0], [1, "3"]]}
//! ```
//!
//! Rational entries may be integers or `"a/b"` strings. Prime-field entries
//! are integers and are reduced modulo `p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::field::{Field, PrimeField, RationalField};
use super::matrix::{mat_inv, mat_mul, Matrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Prime(u32),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    Prime { value: u32, p: u32 },
}

impl ExactScalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            ExactScalar::Rational(_) => FieldDescriptor::Rational,
            ExactScalar::Prime { p, .. } => FieldDescriptor::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExactScalar::Rational(r) => rational_to_json(r),
            ExactScalar::Prime { value, .. } => json!(value),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn rational_to_json(r: &BigRational) -> Value {
    if r.is_integer() {
        if let Ok(v) = i64::try_from(r.numer()) {
            return json!(v);
        }
    }
    json!(r.to_string())
}

/// A matrix over a field chosen at run time.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactMatrix {
    Rational(Matrix<BigRational>),
    Prime(PrimeField, Matrix<u32>),
}

impl ExactMatrix {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            ExactMatrix::Rational(_) => FieldDescriptor::Rational,
            ExactMatrix::Prime(f, _) => FieldDescriptor::Prime(f.modulus()),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.rows(),
            ExactMatrix::Prime(_, m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.cols(),
            ExactMatrix::Prime(_, m) => m.cols(),
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Result<Self> {
        Ok(match field {
            FieldDescriptor::Rational => ExactMatrix::Rational(Matrix::identity(&RationalField, n)),
            FieldDescriptor::Prime(p) => {
                let f = PrimeField::new(p as u64)?;
                ExactMatrix::Prime(f, Matrix::identity(&f, n))
            }
        })
    }

    /// Builds a matrix from integer entries, reduced into the field.
    pub fn from_i64_rows(field: FieldDescriptor, rows: &[Vec<i64>]) -> Result<Self> {
        Ok(match field {
            FieldDescriptor::Rational => ExactMatrix::Rational(Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&x| RationalField.from_i64(x)).collect()).collect(),
            )?),
            FieldDescriptor::Prime(p) => {
                let f = PrimeField::new(p as u64)?;
                ExactMatrix::Prime(
                    f,
                    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.reduce(x)).collect()).collect())?,
                )
            }
        })
    }

    pub fn rank(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => RationalField.rank(m),
            ExactMatrix::Prime(f, m) => f.rank(m),
        }
    }

    pub fn det(&self) -> Result<ExactScalar> {
        Ok(match self {
            ExactMatrix::Rational(m) => ExactScalar::Rational(RationalField.det(m)?),
            ExactMatrix::Prime(f, m) => ExactScalar::Prime { value: f.det(m)?, p: f.modulus() },
        })
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        match (self, other) {
            (ExactMatrix::Rational(a), ExactMatrix::Rational(b)) => {
                Ok(ExactMatrix::Rational(mat_mul(&RationalField, a, b)?))
            }
            (ExactMatrix::Prime(f, a), ExactMatrix::Prime(g, b)) if f == g => {
                Ok(ExactMatrix::Prime(*f, mat_mul(f, a, b)?))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn inv(&self) -> Result<ExactMatrix> {
        Ok(match self {
            ExactMatrix::Rational(m) => ExactMatrix::Rational(mat_inv(&RationalField, m)?),
            ExactMatrix::Prime(f, m) => ExactMatrix::Prime(*f, mat_inv(f, m)?),
        })
    }

    pub fn entry(&self, i: usize, j: usize) -> ExactScalar {
        match self {
            ExactMatrix::Rational(m) => ExactScalar::Rational(m.get(i, j).clone()),
            ExactMatrix::Prime(f, m) => ExactScalar::Prime { value: *m.get(i, j), p: f.modulus() },
        }
    }

    pub fn to_json(&self) -> Value {
        let field = match self.field() {
            FieldDescriptor::Rational => json!("Q"),
            FieldDescriptor::Prime(p) => json!({ "p": p }),
        };
        let entries: Vec<Vec<Value>> = (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.entry(i, j).to_json()).collect())
            .collect();
        json!({ "field": field, "rows": self.rows(), "cols": self.cols(), "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("matrix must be a JSON object".into()))?;
        let field = match obj.get("field") {
            Some(Value::String(s)) if s == "Q" => FieldDescriptor::Rational,
            Some(Value::Object(o)) => {
                let p = o
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("field object needs an integer \"p\"".into()))?;
                PrimeField::new(p)?;
                FieldDescriptor::Prime(p as u32)
            }
            _ => return Err(Error::Parse("\"field\" must be \"Q\" or {\"p\": prime}".into())),
        };
        let dim = |key: &str| -> Result<usize> {
            obj.get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .filter(|&x| x > 0)
                .ok_or_else(|| Error::Parse(format!("\"{key}\" must be a positive integer")))
        };
        let (rows, cols) = (dim("rows")?, dim("cols")?);
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("\"entries\" must be an array of rows".into()))?;
        if entries.len() != rows {
            return Err(Error::Parse(format!("expected {rows} rows, found {}", entries.len())));
        }
        let mut cells: Vec<&Value> = Vec::with_capacity(rows * cols);
        for (i, row) in entries.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| Error::Parse(format!("row {i} is not an array")))?;
            if row.len() != cols {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            cells.extend(row.iter());
        }
        match field {
            FieldDescriptor::Rational => {
                let data = cells.into_iter().map(parse_rational).collect::<Result<Vec<_>>>()?;
                Ok(ExactMatrix::Rational(Matrix::from_vec(rows, cols, data)?))
            }
            FieldDescriptor::Prime(p) => {
                let f = PrimeField::new(p as u64)?;
                let data = cells
                    .into_iter()
                    .map(|c| {
                        c.as_i64()
                            .map(|x| f.reduce(x))
                            .ok_or_else(|| Error::Parse(format!("GF({p}) entry {c} is not an integer")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ExactMatrix::Prime(f, Matrix::from_vec(rows, cols, data)?))
            }
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        Self::from_json(&v)
    }
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(x.into()))
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer; use an \"a/b\" string"))),
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s, "1"),
            };
            let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(Error::Parse(format!("{other} is not a rational entry"))),
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactMatrix::Rational(m) => write!(f, "{m}"),
            ExactMatrix::Prime(_, m) => write!(f, "{m}"),
        }
    }
}
