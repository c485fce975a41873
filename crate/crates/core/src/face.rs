//! Faces as bitsets over small vertex labels.
//!
//! Labels are non-negative integers below [`MAX_LABELS`]. A [`Face`] is stored
//! as a `u128` mask, but ordered canonically: lexicographically by its sorted
//! member list, so `{1,2} < {1,2,3} < {1,3}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ComplexError;

/// Number of distinct vertex labels a face can hold (labels `0..MAX_LABELS`).
pub const MAX_LABELS: u32 = 128;

/// A finite set of vertex labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(label: u32) -> Result<Self, ComplexError> {
        check_label(label)?;
        Ok(Face(1u128 << label))
    }

    /// Builds a face from labels. Duplicates are rejected.
    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self, ComplexError> {
        let mut bits = 0u128;
        for label in labels {
            check_label(label)?;
            let bit = 1u128 << label;
            if bits & bit != 0 {
                return Err(ComplexError::DuplicateLabel(label));
            }
            bits |= bit;
        }
        Ok(Face(bits))
    }

    /// `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: u32, hi: u32) -> Result<Self, ComplexError> {
        if lo > hi {
            return Ok(Face::EMPTY);
        }
        check_label(hi)?;
        Ok(Face::from_labels(lo..=hi).expect("labels checked"))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: u32) -> bool {
        label < MAX_LABELS && self.0 & (1u128 << label) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Face) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: Face) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, label: u32) -> Face {
        debug_assert!(label < MAX_LABELS);
        Face(self.0 | (1u128 << label))
    }

    pub fn without(self, label: u32) -> Face {
        if label >= MAX_LABELS {
            return self;
        }
        Face(self.0 & !(1u128 << label))
    }

    pub fn first(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn last(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    /// Members in increasing order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Position of `label` among the members, if present.
    pub fn rank_of(self, label: u32) -> Option<usize> {
        if !self.contains(label) {
            return None;
        }
        let below = self.0 & ((1u128 << label) - 1);
        Some(below.count_ones() as usize)
    }

    /// All subsets, including the empty set and the face itself.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// All subsets of exactly `k` members, in canonical order.
    pub fn subsets_of_size(self, k: usize) -> Vec<Face> {
        fn go(labels: &[u32], k: usize, acc: u128, out: &mut Vec<Face>) {
            if k == 0 {
                out.push(Face(acc));
                return;
            }
            for i in 0..labels.len() {
                if labels.len() - i < k {
                    break;
                }
                go(&labels[i + 1..], k - 1, acc | (1u128 << labels[i]), out);
            }
        }
        let labels = self.to_vec();
        let mut out = Vec::new();
        if k <= labels.len() {
            go(&labels, k, 0, &mut out);
        }
        out
    }
}

fn check_label(label: u32) -> Result<(), ComplexError> {
    if label >= MAX_LABELS {
        Err(ComplexError::LabelOutOfRange(label))
    } else {
        Ok(())
    }
}

pub struct Labels(u128);

impl Iterator for Labels {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let label = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(label)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

/// Submask enumeration; order is by increasing mask value.
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Face(cur))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(deserializer)?;
        Face::from_labels(labels).map_err(serde::de::Error::custom)
    }
}

/// Canonically sorted, deduplicated copy of `faces`.
pub fn canonical(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort();
    faces.dedup();
    faces
}

/// Inclusion-maximal elements, canonically sorted.
pub fn maximal_elements(faces: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort_by_key(|f| std::cmp::Reverse(f.len()));
    all.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in all {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    canonical(kept)
}

/// Inclusion-minimal elements, canonically sorted.
pub fn minimal_elements(faces: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort_by_key(|f| f.len());
    all.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in all {
        if !kept.iter().any(|k| k.is_subset(f)) {
            kept.push(f);
        }
    }
    canonical(kept)
}

pub fn is_antichain(faces: &[Face]) -> bool {
    faces.iter().enumerate().all(|(i, a)| faces.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(*b)))
}

/// Minimal transversals (minimal hitting sets) of a set family, by Berge's
/// incremental method. An empty family yields `{∅}`; a family containing
/// the empty set yields nothing.
pub fn minimal_transversals(sets: &[Face]) -> Vec<Face> {
    let mut trans = vec![Face::EMPTY];
    for &s in sets {
        let mut next = Vec::with_capacity(trans.len());
        for &t in &trans {
            if t.intersects(s) {
                next.push(t);
            } else {
                next.extend(s.iter().map(|v| t.with(v)));
            }
        }
        trans = minimal_elements(next);
        if trans.is_empty() {
            break;
        }
    }
    trans
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::from_labels(v.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let mut v = vec![f(&[1, 3]), f(&[1, 2, 3]), f(&[1, 2]), f(&[]), f(&[2])];
        v.sort();
        assert_eq!(v, vec![f(&[]), f(&[1, 2]), f(&[1, 2, 3]), f(&[1, 3]), f(&[2])]);
    }

    #[test]
    fn duplicate_and_range_checks() {
        assert!(matches!(Face::from_labels([1, 1]), Err(ComplexError::DuplicateLabel(1))));
        assert!(Face::from_labels([200]).is_err());
        assert_eq!(Face::range(1, 3).unwrap(), f(&[1, 2, 3]));
    }

    #[test]
    fn subset_enumeration_counts() {
        let s = f(&[0, 3, 5, 9]);
        assert_eq!(s.subsets().count(), 16);
        assert!(s.subsets().all(|x| x.is_subset(s)));
        assert_eq!(s.subsets_of_size(2).len(), 6);
        assert_eq!(s.subsets_of_size(0), vec![Face::EMPTY]);
        assert_eq!(s.subsets_of_size(4), vec![s]);
        assert!(s.subsets_of_size(5).is_empty());
        let pairs = f(&[1, 2, 3]).subsets_of_size(2);
        assert_eq!(pairs, vec![f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]);
    }

    #[test]
    fn transversals_of_small_families() {
        assert_eq!(minimal_transversals(&[]), vec![Face::EMPTY]);
        assert!(minimal_transversals(&[Face::EMPTY]).is_empty());
        let t = minimal_transversals(&[f(&[1, 2]), f(&[2, 3])]);
        assert_eq!(t, vec![f(&[1, 3]), f(&[2])]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(9, 2), 36);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(40, 20), 137846528820);
    }
}
