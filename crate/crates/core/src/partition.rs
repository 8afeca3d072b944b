//! Integer partitions: Jordan types of unipotent classes and cycle types of
//! permutations.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Strict constructor: parts must already be weakly decreasing and positive.
    pub fn from_decreasing(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::from_decreasing(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: `a <= b` iff every partial sum of `a` is at most the
/// matching partial sum of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::PartitionSizeMismatch(a.size(), b.size()));
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in 0..len {
        sa += a.0.get(k).copied().unwrap_or(0);
        sb += b.0.get(k).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every odd part occurs with even multiplicity.
pub fn is_symplectic_partition(p: &Partition) -> bool {
    p.0.iter()
        .filter(|&&part| part % 2 == 1)
        .all(|&part| p.multiplicity(part).is_multiple_of(2))
}

/// The unique element of `set` lying below every other element in dominance
/// order, if one exists.
pub fn dominance_minimum<'a, I>(set: I) -> Option<Partition>
where
    I: IntoIterator<Item = &'a Partition>,
    I::IntoIter: Clone,
{
    let it = set.into_iter();
    let mut found: Option<&Partition> = None;
    for cand in it.clone() {
        if it.clone().all(|other| dominance_leq(cand, other).unwrap_or(false)) {
            match found {
                Some(prev) if prev != cand => return None,
                _ => found = Some(cand),
            }
        }
    }
    found.cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1, 1, 1]), &p(&[4])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert_eq!(
            dominance_leq(&p(&[2]), &p(&[2, 1])),
            Err(Error::PartitionSizeMismatch(2, 3))
        );
    }

    #[test]
    fn symplectic_examples() {
        assert!(is_symplectic_partition(&p(&[4])));
        assert!(!is_symplectic_partition(&p(&[3, 1])));
        assert!(is_symplectic_partition(&p(&[1, 1])));
        assert!(is_symplectic_partition(&p(&[2, 1, 1])));
        assert!(is_symplectic_partition(&Partition::empty()));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn conjugate_and_display() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).to_string(), "(2,1,1)");
        assert_eq!(Partition::empty().to_string(), "∅");
        assert!(Partition::from_decreasing(vec![1, 2]).is_err());
    }

    #[test]
    fn minimum_of_chain_and_antichain() {
        let chain = [p(&[4]), p(&[2, 2]), p(&[2, 1, 1])];
        assert_eq!(dominance_minimum(chain.iter()), Some(p(&[2, 1, 1])));
        // (3,1,1,1) and (2,2,2) are incomparable.
        let anti = [p(&[3, 1, 1, 1]), p(&[2, 2, 2])];
        assert_eq!(dominance_minimum(anti.iter()), None);
    }
}
