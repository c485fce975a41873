//! Reduced simplicial homology over GF(2) or ℚ, Leray numbers, the
//! combinatorial Alexander duality check against Γ(X), and the
//! two-missing-face homology obstruction.
//!
//! Chains are taken over the augmented complex: the empty face spans degree
//! −1, so `{∅}` has `β̃₋₁ = 1` and the void complex has no homology at all.

mod rank;

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{gamma_complex, SimplicialComplex};
use crate::error::{HomologyError, ObstructionViolation};
use crate::face::{binomial, Face};

pub use rank::{gf2_rank, rational_rank};

/// Largest number of faces a homology computation will enumerate.
pub const MAX_FACES: usize = 1 << 22;
/// Default vertex limit for induced-subcomplex scans.
pub const LERAY_MAX_VERTICES: usize = 16;

/// Coefficient field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[default]
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "q")]
    Rationals,
}

impl FromStr for FieldTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" => Ok(FieldTag::Gf2),
            "q" | "rationals" => Ok(FieldTag::Rationals),
            other => Err(format!("unknown field {other:?} (expected gf2 or q)")),
        }
    }
}

/// Reduced Betti numbers indexed by degree, starting at −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub field: FieldTag,
    pub by_degree: BTreeMap<i64, usize>,
}

impl BettiVector {
    pub fn get(&self, degree: i64) -> usize {
        self.by_degree.get(&degree).copied().unwrap_or(0)
    }

    /// Highest degree with a non-zero Betti number.
    pub fn top_degree(&self) -> Option<i64> {
        self.by_degree.iter().rev().find(|(_, b)| **b != 0).map(|(k, _)| *k)
    }

    pub fn is_acyclic(&self) -> bool {
        self.by_degree.values().all(|b| *b == 0)
    }

    /// `Σ (−1)^k β̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_degree.iter().map(|(k, b)| if k.rem_euclid(2) == 0 { *b as i64 } else { -(*b as i64) }).sum()
    }
}

impl Serialize for BettiVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.by_degree.serialize(serializer)
    }
}

/// All faces of a complex, grouped by size and sorted by bit pattern.
#[derive(Clone, Debug)]
pub(crate) struct FaceLevels {
    levels: Vec<Vec<u128>>,
}

impl FaceLevels {
    pub(crate) fn of(x: &SimplicialComplex) -> Result<Self, HomologyError> {
        Self::up_to_size(x, usize::MAX)
    }

    /// Faces with at most `max_size` vertices.
    fn up_to_size(x: &SimplicialComplex, max_size: usize) -> Result<Self, HomologyError> {
        let mut total: usize = 0;
        for f in x.facets() {
            let count: u128 = (0..=f.len().min(max_size)).map(|k| binomial(f.len() as u64, k as u64)).sum();
            total = total.saturating_add(usize::try_from(count).unwrap_or(usize::MAX));
        }
        if total > MAX_FACES {
            return Err(HomologyError::ResourceLimit { what: "face enumeration", actual: total, limit: MAX_FACES });
        }
        let top = x.facets().iter().map(|f| f.len().min(max_size)).max();
        let mut levels: Vec<Vec<u128>> = match top {
            Some(t) => vec![Vec::new(); t + 1],
            None => Vec::new(),
        };
        for f in x.facets() {
            if f.len() <= max_size {
                for s in f.subsets() {
                    levels[s.len()].push(s.bits());
                }
            } else {
                for (k, level) in levels.iter_mut().enumerate() {
                    level.extend(f.subsets_of_size(k).into_iter().map(Face::bits));
                }
            }
        }
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        Ok(FaceLevels { levels })
    }

    fn restricted(&self, mask: u128) -> FaceLevels {
        let mut levels: Vec<Vec<u128>> =
            self.levels.iter().map(|l| l.iter().copied().filter(|f| f & !mask == 0).collect()).collect();
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        FaceLevels { levels }
    }

    /// Rank of the boundary map from faces of size `s` to faces of size `s-1`.
    fn boundary_rank(&self, s: usize, field: FieldTag) -> usize {
        if s == 0 || s >= self.levels.len() {
            return 0;
        }
        let (rows, cols) = (&self.levels[s], &self.levels[s - 1]);
        if rows.is_empty() || cols.is_empty() {
            return 0;
        }
        let col_of = |face: u128| cols.binary_search(&face).expect("boundary face present");
        match field {
            FieldTag::Gf2 => {
                let words = cols.len().div_ceil(64);
                let matrix = rows
                    .iter()
                    .map(|&f| {
                        let mut row = vec![0u64; words];
                        for v in Face::from_bits(f).iter() {
                            let c = col_of(f & !(1u128 << v));
                            row[c / 64] |= 1u64 << (c % 64);
                        }
                        row
                    })
                    .collect();
                gf2_rank(matrix)
            }
            FieldTag::Rationals => {
                let matrix = rows
                    .iter()
                    .map(|&f| {
                        let mut row: Vec<(usize, i64)> = Face::from_bits(f)
                            .iter()
                            .enumerate()
                            .map(|(i, v)| (col_of(f & !(1u128 << v)), if i % 2 == 0 { 1 } else { -1 }))
                            .collect();
                        row.sort_unstable();
                        row
                    })
                    .collect();
                rational_rank(matrix)
            }
        }
    }

    fn betti(&self, field: FieldTag) -> BettiVector {
        let mut by_degree = BTreeMap::new();
        if self.levels.is_empty() {
            by_degree.insert(-1, 0);
            return BettiVector { field, by_degree };
        }
        let ranks: Vec<usize> = (0..=self.levels.len()).map(|s| self.boundary_rank(s, field)).collect();
        for (s, level) in self.levels.iter().enumerate() {
            let b = level.len() - ranks[s] - ranks[s + 1];
            by_degree.insert(s as i64 - 1, b);
        }
        BettiVector { field, by_degree }
    }
}

/// Reduced Betti numbers `β̃_k = dim C_k − rank ∂_k − rank ∂_{k+1}`.
pub fn reduced_betti(x: &SimplicialComplex, field: FieldTag) -> Result<BettiVector, HomologyError> {
    Ok(FaceLevels::of(x)?.betti(field))
}

/// Reduced Betti numbers in degrees `≤ max_degree` only, enumerating faces
/// of dimension at most `max_degree + 1`.
pub fn reduced_betti_through(
    x: &SimplicialComplex,
    field: FieldTag,
    max_degree: i64,
) -> Result<BettiVector, HomologyError> {
    let max_size = (max_degree + 2).max(0) as usize;
    let mut b = FaceLevels::up_to_size(x, max_size)?.betti(field);
    b.by_degree.retain(|k, _| *k <= max_degree);
    Ok(b)
}

/// `Σ_{σ ∈ X} (−1)^{dim σ}` straight from face counts, including `∅`.
pub fn reduced_euler_characteristic(x: &SimplicialComplex) -> Result<i64, HomologyError> {
    let levels = FaceLevels::of(x)?;
    Ok(levels.levels.iter().enumerate().map(|(s, l)| if s % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) }).sum())
}

fn check_scan_size(x: &SimplicialComplex, limit: usize) -> Result<(), HomologyError> {
    let n = x.num_vertices();
    if n > limit {
        return Err(HomologyError::ResourceLimit { what: "induced-subcomplex scan vertices", actual: n, limit });
    }
    Ok(())
}

/// Smallest `d` such that every induced subcomplex has vanishing reduced
/// homology in all degrees `≥ d`.
pub fn leray_number(x: &SimplicialComplex, field: FieldTag) -> Result<usize, HomologyError> {
    leray_number_with_limit(x, field, LERAY_MAX_VERTICES)
}

pub fn leray_number_with_limit(
    x: &SimplicialComplex,
    field: FieldTag,
    max_vertices: usize,
) -> Result<usize, HomologyError> {
    check_scan_size(x, max_vertices)?;
    let levels = FaceLevels::of(x)?;
    let subsets: Vec<Face> = x.vertices().subsets().collect();
    let worst = subsets
        .par_iter()
        .map(|u| levels.restricted(u.bits()).betti(field).top_degree().map_or(0, |k| (k + 1).max(0) as usize))
        .max()
        .unwrap_or(0);
    Ok(worst)
}

/// Whether `x` is `d`-Leray. Induced subsets are scanned from largest to
/// smallest and the scan stops at the first violation.
pub fn is_d_leray(x: &SimplicialComplex, d: usize, field: FieldTag) -> Result<bool, HomologyError> {
    check_scan_size(x, LERAY_MAX_VERTICES)?;
    let levels = FaceLevels::of(x)?;
    let mut subsets: Vec<Face> = x.vertices().subsets().collect();
    subsets.sort_by_key(|u| std::cmp::Reverse(u.len()));
    let violated = subsets.par_iter().any(|u| {
        let b = levels.restricted(u.bits()).betti(field);
        b.by_degree.iter().any(|(k, v)| *k >= d as i64 && *v != 0)
    });
    Ok(!violated)
}

/// One degree pair of the duality comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityRow {
    pub k: i64,
    pub gamma_degree: i64,
    pub x_betti: usize,
    pub gamma_betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub field: FieldTag,
    pub n: usize,
    pub rows: Vec<DualityRow>,
    pub mismatches: Vec<DualityRow>,
    pub pass: bool,
}

/// Compares `β̃_k(X)` with `β̃_{|V|−k−3}(Γ(X))` for every `k ≥ 0` with a
/// degree `≥ −1` on the Γ side.
pub fn alexander_duality_check(x: &SimplicialComplex, field: FieldTag) -> Result<DualityReport, HomologyError> {
    let gamma = gamma_complex(x)?;
    let bx = reduced_betti(x, field)?;
    let n = x.num_vertices() as i64;
    let bg = reduced_betti_through(&gamma.complex, field, n - 3)?;
    let rows: Vec<DualityRow> = (0..=n - 2)
        .map(|k| DualityRow { k, gamma_degree: n - k - 3, x_betti: bx.get(k), gamma_betti: bg.get(n - k - 3) })
        .collect();
    let mismatches: Vec<DualityRow> = rows.iter().filter(|r| r.x_betti != r.gamma_betti).cloned().collect();
    Ok(DualityReport { field, n: n as usize, pass: mismatches.is_empty(), rows, mismatches })
}

/// Certificate that some induced subcomplex carries homology in a degree at
/// least `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    pub subcomplex_vertices: Face,
    pub degree: i64,
    pub betti: usize,
}

/// Two missing faces `A`, `B` of size `d+1` with `|A∩B| < d`, spanning the
/// vertex set, and every other missing face reaching all of `V` together with
/// either of them, force `β̃_{|V|−3}(X) ≠ 0` with `|V|−3 ≥ d`.
///
/// Each hypothesis is checked individually. The conclusion is then
/// established twice: `A` and `B` must be isolated in Γ(X), and the Betti
/// number is computed directly.
pub fn leray_obstruction(
    x: &SimplicialComplex,
    a: Face,
    b: Face,
    d: usize,
) -> Result<ObstructionWitness, HomologyError> {
    for (which, s) in [("A", a), ("B", b)] {
        if s.len() != d + 1 {
            return Err(ObstructionViolation::WrongSize { which, size: s.len(), expected: d + 1 }.into());
        }
    }
    let common = a.intersection(b).len();
    if common >= d {
        return Err(ObstructionViolation::IntersectionTooLarge { size: common, d }.into());
    }
    let v = x.vertices();
    if v != a.union(b) {
        return Err(ObstructionViolation::VertexSetNotUnion { vertices: v, union: a.union(b) }.into());
    }
    let missing = x.missing_faces();
    for s in [a, b] {
        if !missing.members.contains(&s) {
            return Err(ObstructionViolation::NotMissingFace(s).into());
        }
    }
    if let Some(t) = missing.iter().find(|&t| t != a && t != b && (t.union(a) != v || t.union(b) != v)) {
        return Err(ObstructionViolation::ForeignMissingFace(t).into());
    }

    let gamma = gamma_complex(x)?;
    let index_of = |s: Face| gamma.labels.iter().position(|m| *m == s).unwrap() as u32;
    for s in [a, b] {
        let i = index_of(s);
        if gamma.complex.facets().iter().any(|f| f.contains(i) && f.len() > 1) {
            return Err(HomologyError::Internal(format!("{s} is not isolated in Γ(X)")));
        }
    }

    let degree = v.len() as i64 - 3;
    let betti = reduced_betti(x, FieldTag::Gf2)?.get(degree);
    if betti == 0 {
        return Err(HomologyError::Internal(format!("β̃_{degree} vanishes although the obstruction hypotheses hold")));
    }
    Ok(ObstructionWitness { subcomplex_vertices: v, degree, betti })
}
