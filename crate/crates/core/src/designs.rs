//! Partial and full Steiner `(t, k, n)`-systems on the ground set `{1, …, n}`.

use std::collections::HashMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::DesignError;
use crate::face::{self, binomial, Face};

/// A family of `k`-subsets of `{1, …, n}`, judged at strength `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFamily {
    pub t: usize,
    pub k: usize,
    pub n: usize,
    pub blocks: Vec<Face>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignClass {
    NotPartial,
    Partial,
    Steiner,
}

impl DesignFamily {
    pub fn ground_set(&self) -> Face {
        Face::range(1, self.n as u32).expect("n checked on construction")
    }

    fn validate(&self) -> Result<(), DesignError> {
        if self.n == 0 || self.n >= face::MAX_LABELS as usize {
            return Err(DesignError::Malformed(format!("ground set size {} out of range", self.n)));
        }
        if self.t == 0 || self.t > self.k || self.k > self.n {
            return Err(DesignError::Malformed(format!(
                "need 1 ≤ t ≤ k ≤ n, got t={}, k={}, n={}",
                self.t, self.k, self.n
            )));
        }
        let ground = self.ground_set();
        for b in &self.blocks {
            if b.len() != self.k {
                return Err(DesignError::Malformed(format!("block {b} has size {}, expected {}", b.len(), self.k)));
            }
            if !b.is_subset(ground) {
                return Err(DesignError::Malformed(format!("block {b} is not inside [{}]", self.n)));
            }
        }
        Ok(())
    }
}

/// Classifies by counting, for every `t`-subset, the blocks containing it.
pub fn check_design(family: &DesignFamily) -> Result<DesignClass, DesignError> {
    family.validate()?;
    let mut counts: HashMap<Face, u32> = HashMap::new();
    for b in &family.blocks {
        for s in b.subsets_of_size(family.t) {
            *counts.entry(s).or_default() += 1;
        }
    }
    if counts.values().any(|&c| c > 1) {
        return Ok(DesignClass::NotPartial);
    }
    let all = binomial(family.n as u64, family.t as u64);
    Ok(if counts.len() as u128 == all { DesignClass::Steiner } else { DesignClass::Partial })
}

/// `⌊C(n,d) / (d+1)⌋`, the largest possible partial Steiner `(d,d+1,n)`-system.
pub fn steiner_upper_bound(d: usize, n: usize) -> Result<u128, DesignError> {
    if d < 1 || d >= n {
        return Err(DesignError::Range(format!("need 1 ≤ d < n, got d={d}, n={n}")));
    }
    Ok(binomial(n as u64, d as u64) / (d as u128 + 1))
}

/// Scans `candidates` in canonical order and keeps each one that shares no
/// `d`-subset with the blocks kept so far. The result is re-checked to be a
/// partial system that no remaining candidate can extend.
pub fn greedy_maximal_partial_steiner(candidates: &[Face], d: usize, n: usize) -> Result<DesignFamily, DesignError> {
    if d < 1 || d >= n {
        return Err(DesignError::Range(format!("need 1 ≤ d < n, got d={d}, n={n}")));
    }
    if let Some(bad) = candidates.iter().find(|c| c.len() != d + 1) {
        return Err(DesignError::Malformed(format!("candidate {bad} has size {}, expected {}", bad.len(), d + 1)));
    }
    let ordered = face::canonical(candidates.to_vec());
    let mut chosen: Vec<Face> = Vec::new();
    for &c in &ordered {
        if chosen.iter().all(|b| b.intersection(c).len() < d) {
            chosen.push(c);
        }
    }
    let family = DesignFamily { t: d, k: d + 1, n, blocks: chosen };
    if check_design(&family)? == DesignClass::NotPartial {
        return Err(DesignError::Internal("greedy output is not a partial system".into()));
    }
    for &c in &ordered {
        if family.blocks.contains(&c) {
            continue;
        }
        let mut extended = family.clone();
        extended.blocks.push(c);
        if check_design(&extended)? != DesignClass::NotPartial {
            return Err(DesignError::Internal(format!("greedy output is extendable by {c}")));
        }
    }
    Ok(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinDesign {
    /// The seven lines of the Fano plane.
    Fano,
    /// The twelve lines of the affine plane of order 3.
    Ag3,
}

impl FromStr for BuiltinDesign {
    type Err = DesignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fano" => Ok(BuiltinDesign::Fano),
            "ag3" => Ok(BuiltinDesign::Ag3),
            other => Err(DesignError::UnknownDesign(other.to_string())),
        }
    }
}

pub const FANO_LINES: [[u32; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 7], [3, 4, 6], [2, 5, 6], [3, 5, 7]];

pub fn builtin_design(which: BuiltinDesign) -> DesignFamily {
    match which {
        BuiltinDesign::Fano => DesignFamily {
            t: 2,
            k: 3,
            n: 7,
            blocks: FANO_LINES.iter().map(|l| Face::from_labels(*l).unwrap()).collect(),
        },
        BuiltinDesign::Ag3 => DesignFamily { t: 2, k: 3, n: 9, blocks: affine_plane_lines() },
    }
}

/// Lines of AG(2,3): point `(i, j)` is numbered `1 + 3i + j`, and a line is a
/// coset `{p + s·dir : s ∈ Z₃}` for one of the four directions.
fn affine_plane_lines() -> Vec<Face> {
    let label = |i: u32, j: u32| 1 + 3 * (i % 3) + (j % 3);
    let mut lines = Vec::new();
    for (di, dj) in [(0u32, 1u32), (1, 0), (1, 1), (1, 2)] {
        for i in 0..3 {
            for j in 0..3 {
                let line = Face::from_labels((0..3).map(|s| label(i + s * di, j + s * dj))).unwrap();
                lines.push(line);
            }
        }
    }
    face::canonical(lines)
}

/// Blocks meeting `tau` in all but one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearCover {
    pub count: usize,
    pub blocks: Vec<Face>,
}

/// Counts blocks `σ` with `|τ \ σ| = 1` for a set `τ` of size at most
/// `t+1` that lies in no block of a Steiner `(t, t+1, n)`-system.
pub fn near_cover_count(family: &DesignFamily, tau: Face) -> Result<NearCover, DesignError> {
    if check_design(family)? != DesignClass::Steiner || family.k != family.t + 1 {
        return Err(DesignError::Precondition("family must be a Steiner (d,d+1,n)-system".into()));
    }
    if tau.len() > family.k || !tau.is_subset(family.ground_set()) {
        return Err(DesignError::Precondition(format!("{tau} must be a subset of [n] of size ≤ d+1")));
    }
    if let Some(b) = family.blocks.iter().find(|b| tau.is_subset(**b)) {
        return Err(DesignError::Precondition(format!("{tau} is contained in block {b}")));
    }
    let blocks: Vec<Face> = family.blocks.iter().copied().filter(|b| tau.difference(*b).len() == 1).collect();
    Ok(NearCover { count: blocks.len(), blocks })
}
