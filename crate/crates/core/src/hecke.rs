//! Iwahori-Hecke algebra of a finite Weyl group in the `T_w` basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::poly::Poly;
use crate::weyl::{GroupSpec, WeylElement};

/// A finite combination `sum_w p_w(q) T_w` with integer polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    spec: GroupSpec,
    terms: BTreeMap<WeylElement, Poly>,
}

impl HeckeElement {
    pub fn zero(spec: GroupSpec) -> Self {
        HeckeElement { spec, terms: BTreeMap::new() }
    }

    pub fn one(spec: GroupSpec) -> Self {
        t_basis(&WeylElement::identity(spec))
    }

    /// Builds an element from `(w, coefficient)` pairs, merging repeated keys.
    pub fn from_terms(spec: GroupSpec, terms: impl IntoIterator<Item = (WeylElement, Poly)>) -> Result<Self> {
        let mut out = HeckeElement::zero(spec);
        for (w, p) in terms {
            if w.spec() != spec {
                return Err(Error::SpecMismatch { left: spec.to_string(), right: w.spec().to_string() });
            }
            out.add_term(w, &p);
        }
        Ok(out)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, Poly> {
        &self.terms
    }

    pub fn coeff(&self, w: &WeylElement) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, p: &Poly) -> Self {
        let mut out = HeckeElement::zero(self.spec);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * p));
        }
        out
    }

    fn add_term(&mut self, w: WeylElement, p: &Poly) {
        if p.is_zero() {
            return;
        }
        let sum = self.terms.get(&w).map_or_else(|| p.clone(), |c| c + p);
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    /// `T_s * self` for the simple reflection with 1-based index `s`.
    pub fn left_mul_generator(&self, s: usize) -> Result<Self> {
        let gen = WeylElement::generator(self.spec, s)?;
        let mut out = HeckeElement::zero(self.spec);
        let q = Poly::q();
        let q_minus_one = &q - &Poly::one();
        for (w, c) in &self.terms {
            let sw = gen.compose(w);
            if sw.length() > w.length() {
                out.add_term(sw, c);
            } else {
                out.add_term(w.clone(), &(c * &q_minus_one));
                out.add_term(sw, &(c * &q));
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &HeckeElement) -> Result<Self> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &HeckeElement) -> Result<Self> {
        self.checked_add(&other.scale(&Poly::constant(-1)))
    }

    fn check_spec(&self, other: &HeckeElement) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch { left: self.spec.to_string(), right: other.spec.to_string() });
        }
        Ok(())
    }

    /// Evaluates every coefficient at `q = q0`, dropping terms that vanish.
    pub fn specialize<F: Field>(&self, field: &F, q0: &F::Elem) -> BTreeMap<WeylElement, F::Elem> {
        self.terms
            .iter()
            .filter_map(|(w, p)| {
                let v = p.eval_with(q0, field.zero(), |c| field.from_i64(c as i64), |a, b| field.add(a, b), |a, b| field.mul(a, b));
                (!field.is_zero(&v)).then(|| (w.clone(), v))
            })
            .collect()
    }
}

/// The basis element `T_w`.
pub fn t_basis(w: &WeylElement) -> HeckeElement {
    let mut terms = BTreeMap::new();
    terms.insert(w.clone(), Poly::one());
    HeckeElement { spec: w.spec(), terms }
}

/// Product in the Hecke algebra. Each `T_v` on the left is expanded through a
/// reduced word of `v` and applied one generator at a time, right to left.
pub fn hecke_mul(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.check_spec(b)?;
    hecke_mul_with(a, b, |v| v.reduced_word())
}

/// Like [`hecke_mul`] but with the reduced word of each left basis element
/// supplied by `word`. Used to check independence of the word chosen.
pub fn hecke_mul_with(
    a: &HeckeElement,
    b: &HeckeElement,
    word: impl Fn(&WeylElement) -> Vec<usize>,
) -> Result<HeckeElement> {
    a.check_spec(b)?;
    let mut out = HeckeElement::zero(a.spec);
    for (v, c) in &a.terms {
        let mut acc = b.clone();
        for &s in word(v).iter().rev() {
            acc = acc.left_mul_generator(s)?;
        }
        for (w, d) in &acc.terms {
            out.add_term(w.clone(), &(c * d));
        }
    }
    Ok(out)
}

impl Mul for &HeckeElement {
    type Output = HeckeElement;

    /// Panics on mismatched specs; use [`hecke_mul`] to get an error instead.
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        hecke_mul(self, rhs).expect("Hecke elements of different Weyl groups")
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;

    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        self.checked_add(rhs).expect("Hecke elements of different Weyl groups")
    }
}

/// `T_e`, `T_{s1 s2}`; the subscript is a reduced word.
pub fn basis_label(w: &WeylElement) -> String {
    let word = w.reduced_word();
    if word.is_empty() {
        "T_e".to_string()
    } else {
        let parts: Vec<String> = word.iter().map(|s| format!("s{s}")).collect();
        format!("T_{{{}}}", parts.join(" "))
    }
}

impl fmt::Display for HeckeElement {
    /// Longest basis elements first, e.g. `(q - 1)·T_{s1} + q·T_e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.length().cmp(&a.length()).then_with(|| a.cmp(b)));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let label = basis_label(w);
            let (neg, c) = match c.coeffs() {
                [x] if *x < 0 => (true, Poly::constant(-x)),
                _ => (false, c.clone()),
            };
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if c == Poly::one() {
                write!(f, "{label}")?;
            } else if c.coeffs().iter().filter(|&&x| x != 0).count() == 1 {
                write!(f, "{c}·{label}")?;
            } else {
                write!(f, "({c})·{label}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    w: &'a WeylElement,
    word: Vec<usize>,
    coeff: &'a Poly,
}

impl Serialize for HeckeElement {
    /// `{"spec": "A2", "terms": [{"w": [...], "word": [...], "coeff": [c0, c1, ...]}]}`
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson<'_>> =
            self.terms.iter().map(|(w, c)| TermJson { w, word: w.reduced_word(), coeff: c }).collect();
        let mut st = serializer.serialize_struct("HeckeElement", 3)?;
        st.serialize_field("spec", &self.spec.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}
