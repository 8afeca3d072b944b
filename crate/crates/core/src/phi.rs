//! The map Φ from conjugacy classes of `W` to unipotent classes, for the
//! general linear and symplectic groups.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{is_symplectic_partition, partitions_of, Partition};
use crate::weyl::{conjugacy_classes_capped, ClassLabel, ConjugacyClass, Family, GroupSpec, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UnipotentFamily {
    GL,
    Sp,
}

/// A unipotent class, named by the Jordan type of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnipotentClassLabel {
    family: UnipotentFamily,
    jordan_type: Partition,
}

impl UnipotentClassLabel {
    pub fn gl(jordan_type: Partition) -> Self {
        UnipotentClassLabel { family: UnipotentFamily::GL, jordan_type }
    }

    /// Fails unless every odd part has even multiplicity.
    pub fn sp(jordan_type: Partition) -> Result<Self> {
        if !is_symplectic_partition(&jordan_type) {
            return Err(Error::NonSymplecticPartition(jordan_type.to_string()));
        }
        Ok(UnipotentClassLabel { family: UnipotentFamily::Sp, jordan_type })
    }

    pub fn family(&self) -> UnipotentFamily {
        self.family
    }

    pub fn jordan_type(&self) -> &Partition {
        &self.jordan_type
    }
}

impl fmt::Display for UnipotentClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.jordan_type)
    }
}

fn perm_cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur] - 1;
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::new(parts)
}

/// Cycle type in `S_2n` of a signed permutation.
pub fn map_i_element(w: &WeylElement) -> Result<Partition> {
    Ok(perm_cycle_type(&w.symmetric_embedding()?))
}

/// Cycle type in `S_2n` of a representative of `class`.
pub fn map_i(class: &ConjugacyClass) -> Result<Partition> {
    map_i_element(class.representative())
}

/// Jordan type of a symplectic unipotent class viewed inside `GL_2n`.
pub fn map_j(label: &UnipotentClassLabel) -> Result<Partition> {
    if label.family != UnipotentFamily::Sp {
        return Err(Error::Unsupported("map_j is defined for symplectic classes".into()));
    }
    if !is_symplectic_partition(&label.jordan_type) {
        return Err(Error::NonSymplecticPartition(label.jordan_type.to_string()));
    }
    Ok(label.jordan_type.clone())
}

/// All Jordan types of unipotent classes of `Sp_2n`.
pub fn map_j_image(n: usize) -> BTreeSet<Partition> {
    partitions_of(2 * n).into_iter().filter(is_symplectic_partition).collect()
}

pub fn phi(class: &ConjugacyClass) -> Result<UnipotentClassLabel> {
    match class.spec().family() {
        Family::A => match class.label() {
            Some(ClassLabel::CycleType(p)) => Ok(UnipotentClassLabel::gl(p.clone())),
            _ => Err(Error::Integrity(format!("class of {} has no cycle-type label", class.spec()))),
        },
        Family::BC => {
            let p = map_i(class)?;
            if !is_symplectic_partition(&p) {
                return Err(Error::Integrity(format!(
                    "image {p} of class {} is not a symplectic Jordan type",
                    class.representative()
                )));
            }
            UnipotentClassLabel::sp(p)
        }
        Family::D => Err(Error::Unsupported("phi is implemented for types A and BC only".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiRow {
    pub class_label: ClassLabel,
    pub size: usize,
    #[serde(rename = "d_C")]
    pub d_c: usize,
    pub elliptic: bool,
    pub phi: Partition,
}

pub fn phi_table(spec: GroupSpec, rank_cap: usize) -> Result<Vec<PhiRow>> {
    if spec.family() == Family::D {
        return Err(Error::Unsupported("phi is implemented for types A and BC only".into()));
    }
    conjugacy_classes_capped(spec, rank_cap)?
        .iter()
        .map(|c| {
            Ok(PhiRow {
                class_label: c.label().cloned().ok_or_else(|| Error::Integrity("unlabeled class".into()))?,
                size: c.size(),
                d_c: c.min_length(),
                elliptic: c.is_elliptic(),
                phi: phi(c)?.jordan_type,
            })
        })
        .collect()
}
