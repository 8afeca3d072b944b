use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{all_elements, generators, Family, GroupSpec, WeylElement};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub const DEFAULT_RANK_CAP: usize = 7;

/// Combinatorial name of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum ClassLabel {
    /// Cycle type of a permutation (type A).
    CycleType(Partition),
    /// Signed cycle type `(lambda; mu)`: lengths of positive and negative
    /// cycles (type BC).
    SignedCycleType { positive: Partition, negative: Partition },
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::CycleType(p) => write!(f, "{p}"),
            ClassLabel::SignedCycleType { positive, negative } => {
                write!(f, "({positive};{negative})")
            }
        }
    }
}

/// A full conjugacy class of `W` with its minimal-length data.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    spec: GroupSpec,
    elements: Vec<WeylElement>,
    min_length: usize,
    minimal_elements: Vec<WeylElement>,
    elliptic: bool,
    label: Option<ClassLabel>,
}

impl ConjugacyClass {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    /// Members in window order.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// `d_C`, the minimal length over the class.
    pub fn min_length(&self) -> usize {
        self.min_length
    }

    /// `C_min`, the members of length `d_C`.
    pub fn minimal_elements(&self) -> &[WeylElement] {
        &self.minimal_elements
    }

    pub fn is_elliptic(&self) -> bool {
        self.elliptic
    }

    pub fn label(&self) -> Option<&ClassLabel> {
        self.label.as_ref()
    }

    pub fn representative(&self) -> &WeylElement {
        &self.minimal_elements[0]
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.binary_search(w).is_ok()
    }
}

/// Cycle type of the underlying permutation of a type A element.
pub(crate) fn cycle_type(w: &WeylElement) -> Partition {
    let (pos, neg) = signed_cycles(w);
    debug_assert!(neg.is_empty());
    Partition::new(pos)
}

fn signed_cycles(w: &WeylElement) -> (Vec<usize>, Vec<usize>) {
    let m = w.window().len();
    let mut seen = vec![false; m];
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for start in 1..=m {
        if seen[start - 1] {
            continue;
        }
        let (mut len, mut negatives, mut cur) = (0, 0, start);
        while !seen[cur - 1] {
            seen[cur - 1] = true;
            let img = w.window()[cur - 1];
            if img < 0 {
                negatives += 1;
            }
            cur = img.unsigned_abs() as usize;
            len += 1;
        }
        if negatives % 2 == 0 {
            pos.push(len);
        } else {
            neg.push(len);
        }
    }
    (pos, neg)
}

/// `(lambda; mu)` for a signed permutation: a cycle of `|w|` is negative when
/// it carries an odd number of sign changes.
pub fn signed_cycle_type(w: &WeylElement) -> (Partition, Partition) {
    let (pos, neg) = signed_cycles(w);
    (Partition::new(pos), Partition::new(neg))
}

fn label_of(w: &WeylElement) -> Option<ClassLabel> {
    match w.spec().family() {
        Family::A => Some(ClassLabel::CycleType(cycle_type(w))),
        Family::BC => {
            let (positive, negative) = signed_cycle_type(w);
            Some(ClassLabel::SignedCycleType { positive, negative })
        }
        Family::D => None,
    }
}

/// Conjugacy classes with the default rank cap.
pub fn conjugacy_classes(spec: GroupSpec) -> Result<Vec<ConjugacyClass>> {
    conjugacy_classes_capped(spec, DEFAULT_RANK_CAP)
}

/// Partitions `W` into conjugacy classes by closing each element under
/// conjugation by the simple reflections. Classes are ordered by `d_C`,
/// then by their smallest window.
pub fn conjugacy_classes_capped(spec: GroupSpec, rank_cap: usize) -> Result<Vec<ConjugacyClass>> {
    if spec.rank() > rank_cap {
        return Err(Error::RankOverCap { rank: spec.rank(), cap: rank_cap });
    }
    let elements = all_elements(spec);
    let index: HashMap<&[i32], usize> =
        elements.iter().enumerate().map(|(i, w)| (w.window(), i)).collect();
    let gens = generators(spec);
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();

    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        class_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = &elements[orbit[head]];
            head += 1;
            for s in &gens {
                let y = s.compose(&x.compose(s));
                let j = index[y.window()];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    orbit.push(j);
                }
            }
        }
        members.push(orbit);
    }

    let mut classes: Vec<ConjugacyClass> = members
        .into_iter()
        .map(|idx| {
            let mut els: Vec<WeylElement> = idx.into_iter().map(|i| elements[i].clone()).collect();
            els.sort();
            let lengths: Vec<usize> = els.iter().map(WeylElement::length).collect();
            let min_length = *lengths.iter().min().expect("class is non-empty");
            let minimal_elements: Vec<WeylElement> = els
                .iter()
                .zip(&lengths)
                .filter(|(_, &l)| l == min_length)
                .map(|(w, _)| w.clone())
                .collect();
            let elliptic = minimal_elements[0].is_elliptic();
            let label = label_of(&minimal_elements[0]);
            ConjugacyClass { spec, elements: els, min_length, minimal_elements, elliptic, label }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.min_length, &a.elements[0]).cmp(&(b.min_length, &b.elements[0]))
    });
    Ok(classes)
}
