//! d-boxicity bounds.
//!
//! Upper bounds come from covers: a family of `(d+1)`-sized non-faces such
//! that every missing face `τ` has `|τ \ V_i| ≤ 1` for some member `V_i`.
//! Each cover member yields one factor complex, and the factors intersect
//! back to the input. Lower bounds come from missing faces forming a partial
//! Steiner `(d, d+1, n)`-system.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::complex::{intersect_complexes, SimplicialComplex};
use crate::designs::{self, check_design, DesignClass, DesignFamily};
use crate::error::BoxdError;
use crate::face::Face;
use crate::homology::{leray_obstruction, ObstructionWitness};

/// Vertex limit for [`exact_cover_minimum`].
pub const EXACT_COVER_MAX_VERTICES: usize = 9;

/// Sets `V_i` of size `d+1`, with the index that covers each missing face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily {
    pub d: usize,
    pub sets: Vec<Face>,
    /// Each missing face (canonical order) with the index of the first set covering it.
    pub covering: Vec<(Face, usize)>,
}

impl Serialize for CoverFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.sets.serialize(serializer)
    }
}

fn covers(set: Face, tau: Face) -> bool {
    tau.difference(set).len() <= 1
}

/// Maps the vertex set onto `{1, …, n}` preserving order.
struct Relabel {
    vertices: Face,
}

impl Relabel {
    fn to_design(&self, f: Face) -> Face {
        Face::from_labels(f.iter().map(|v| self.vertices.rank_of(v).unwrap() as u32 + 1)).unwrap()
    }

    fn to_vertices(&self, f: Face) -> Face {
        let labels = self.vertices.to_vec();
        Face::from_labels(f.iter().map(|i| labels[i as usize - 1])).unwrap()
    }
}

fn check_cover_preconditions(x: &SimplicialComplex, d: usize) -> Result<Vec<Face>, BoxdError> {
    if x.is_complete() {
        return Err(crate::error::ComplexError::CompleteComplex.into());
    }
    if d == 0 {
        return Err(BoxdError::Precondition("d must be at least 1".into()));
    }
    let n = x.num_vertices();
    if n < d + 1 {
        return Err(BoxdError::TooFewVertices { need: d + 1, have: n });
    }
    let missing = x.missing_faces().members;
    if let Some(big) = missing.iter().find(|m| m.len() > d + 1) {
        return Err(BoxdError::MissingFaceTooLarge(*big));
    }
    Ok(missing)
}

fn non_faces_of_size(x: &SimplicialComplex, size: usize) -> Vec<Face> {
    x.vertices().subsets_of_size(size).into_iter().filter(|s| !x.contains(*s)).collect()
}

/// Greedy cover: a maximal partial Steiner `(d, d+1, n)`-system among the
/// `(d+1)`-sized non-faces, taken in canonical order. Its size is at most
/// `⌊C(n,d)/(d+1)⌋`.
pub fn cover_missing_faces(x: &SimplicialComplex, d: usize) -> Result<CoverFamily, BoxdError> {
    let missing = check_cover_preconditions(x, d)?;
    let n = x.num_vertices();
    let relabel = Relabel { vertices: x.vertices() };
    let candidates: Vec<Face> = non_faces_of_size(x, d + 1).into_iter().map(|c| relabel.to_design(c)).collect();
    let greedy = designs::greedy_maximal_partial_steiner(&candidates, d, n)?;
    let sets: Vec<Face> = greedy.blocks.iter().map(|b| relabel.to_vertices(*b)).collect();

    let bound = designs::steiner_upper_bound(d, n)?;
    if sets.len() as u128 > bound {
        return Err(BoxdError::Internal(format!("cover of size {} exceeds {bound}", sets.len())));
    }
    let covering =
        assign_covering(&missing, &sets).map_err(|tau| BoxdError::Internal(format!("greedy cover misses {tau}")))?;
    Ok(CoverFamily { d, sets, covering })
}

fn assign_covering(missing: &[Face], sets: &[Face]) -> Result<Vec<(Face, usize)>, Face> {
    missing.iter().map(|&tau| sets.iter().position(|s| covers(*s, tau)).map(|i| (tau, i)).ok_or(tau)).collect()
}

/// Builds a [`CoverFamily`] from user-supplied sets after checking that
/// every set is a `(d+1)`-sized non-face and every missing face is covered.
pub fn validate_cover(x: &SimplicialComplex, d: usize, sets: Vec<Face>) -> Result<CoverFamily, BoxdError> {
    let missing = x.missing_faces().members;
    for &s in &sets {
        if !s.is_subset(x.vertices()) {
            return Err(BoxdError::InvalidCover(format!("{s} is not inside the vertex set")));
        }
        if s.len() != d + 1 {
            return Err(BoxdError::InvalidCover(format!("{s} does not have size d+1 = {}", d + 1)));
        }
        if x.contains(s) {
            return Err(BoxdError::InvalidCover(format!("{s} is a face")));
        }
    }
    let covering = assign_covering(&missing, &sets)
        .map_err(|tau| BoxdError::InvalidCover(format!("missing face {tau} is not covered")))?;
    Ok(CoverFamily { d, sets, covering })
}

/// One factor of a decomposition: the complex whose missing faces are the
/// input's missing faces dominated by `set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub set: Face,
    pub missing: Vec<Face>,
    #[serde(skip)]
    pub complex: SimplicialComplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub d: usize,
    pub cover: CoverFamily,
    pub factors: Vec<Factor>,
    /// Number of factors: an upper bound on the d-boxicity.
    pub bound: usize,
}

/// Decomposes `x` along the greedy cover.
pub fn decompose(x: &SimplicialComplex, d: usize) -> Result<Decomposition, BoxdError> {
    let cover = cover_missing_faces(x, d)?;
    decompose_with_cover(x, cover)
}

/// Factor `i` has missing faces `M_i = {τ ∈ M : |τ \ V_i| ≤ 1}`. The
/// intersection of the factors is recomputed and compared with `x`.
pub fn decompose_with_cover(x: &SimplicialComplex, cover: CoverFamily) -> Result<Decomposition, BoxdError> {
    if x.is_complete() {
        return Err(crate::error::ComplexError::CompleteComplex.into());
    }
    let cover = validate_cover(x, cover.d, cover.sets)?;
    let missing = x.missing_faces().members;
    let mut factors = Vec::with_capacity(cover.sets.len());
    for &set in &cover.sets {
        let local: Vec<Face> = missing.iter().copied().filter(|t| covers(set, *t)).collect();
        let complex = SimplicialComplex::from_missing_faces_allowing_ghosts(x.vertices(), local.clone())?;
        if complex.contains(set) {
            return Err(BoxdError::Internal(format!("cover set {set} is a face of its factor")));
        }
        factors.push(Factor { set, missing: local, complex });
    }
    let complexes: Vec<SimplicialComplex> = factors.iter().map(|f| f.complex.clone()).collect();
    if intersect_complexes(&complexes)? != *x {
        return Err(BoxdError::Internal("factors do not intersect to the input".into()));
    }
    let bound = factors.len();
    Ok(Decomposition { d: cover.d, cover, factors, bound })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundKind {
    SteinerExact,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundCertificate {
    pub kind: LowerBoundKind,
    pub value: usize,
    /// The missing faces as a design on `{1, …, n}` (vertices relabelled by rank).
    #[serde(skip)]
    pub design: Option<DesignFamily>,
}

impl LowerBoundCertificate {
    fn none() -> Self {
        LowerBoundCertificate { kind: LowerBoundKind::None, value: 0, design: None }
    }
}

/// When every missing face has size `d+1` and they form a partial Steiner
/// `(d, d+1, n)`-system, the d-boxicity equals the number of missing faces.
pub fn boxd_lower_certificate(x: &SimplicialComplex, d: usize) -> LowerBoundCertificate {
    let missing = x.missing_faces().members;
    let n = x.num_vertices();
    if d == 0 || missing.is_empty() || n < d + 1 || missing.iter().any(|m| m.len() != d + 1) {
        return LowerBoundCertificate::none();
    }
    let relabel = Relabel { vertices: x.vertices() };
    let design = DesignFamily { t: d, k: d + 1, n, blocks: missing.iter().map(|m| relabel.to_design(*m)).collect() };
    match check_design(&design) {
        Ok(DesignClass::Partial | DesignClass::Steiner) => {
            LowerBoundCertificate { kind: LowerBoundKind::SteinerExact, value: missing.len(), design: Some(design) }
        }
        _ => LowerBoundCertificate::none(),
    }
}

/// A proposed way of distributing the missing faces over `factors` complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorAssignment {
    pub factors: usize,
    pub map: BTreeMap<Face, usize>,
}

/// Why a proposed assignment cannot come from `d`-Leray factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub factor: usize,
    pub tau1: Face,
    pub tau2: Face,
    pub witness: ObstructionWitness,
}

/// Pigeonhole refutation: with fewer factors than missing faces, two missing
/// faces share a factor. The pair with the largest intersection spans an
/// induced subcomplex of that factor with homology in degree `≥ d`.
pub fn refute_small_cover(
    x: &SimplicialComplex,
    d: usize,
    assignment: &FactorAssignment,
) -> Result<Refutation, BoxdError> {
    let missing = x.missing_faces().members;
    let cert = boxd_lower_certificate(x, d);
    if cert.kind != LowerBoundKind::SteinerExact {
        return Err(BoxdError::Precondition("missing faces must form a partial Steiner (d,d+1,n)-system".into()));
    }
    let s = assignment.factors;
    if s >= missing.len() {
        return Err(BoxdError::Precondition(format!(
            "{s} factors is not fewer than the {} missing faces",
            missing.len()
        )));
    }
    if assignment.map.len() != missing.len() || missing.iter().any(|m| !assignment.map.contains_key(m)) {
        return Err(BoxdError::Precondition("assignment must list every missing face exactly once".into()));
    }
    if let Some((f, i)) = assignment.map.iter().find(|(_, i)| **i >= s) {
        return Err(BoxdError::Precondition(format!("{f} assigned to factor {i}, only {s} factors")));
    }

    let mut best: Option<(usize, Face, Face, usize)> = None;
    for (i, &t1) in missing.iter().enumerate() {
        for &t2 in &missing[i + 1..] {
            let factor = assignment.map[&t1];
            if assignment.map[&t2] != factor {
                continue;
            }
            let common = t1.intersection(t2).len();
            if best.is_none_or(|(c, ..)| common > c) {
                best = Some((common, t1, t2, factor));
            }
        }
    }
    let (_, tau1, tau2, factor) =
        best.ok_or_else(|| BoxdError::Internal("pigeonhole found no shared factor".into()))?;

    let assigned: Vec<Face> = missing.iter().copied().filter(|m| assignment.map[m] == factor).collect();
    let factor_complex = SimplicialComplex::from_missing_faces(x.vertices(), assigned)?;
    let y = factor_complex.induced(tau1.union(tau2))?;
    let witness = leray_obstruction(&y, tau1, tau2, d)
        .map_err(|e| BoxdError::Internal(format!("obstruction did not apply: {e}")))?;
    Ok(Refutation { factor, tau1, tau2, witness })
}

/// The true minimum size of a cover, by exhaustive branch and bound.
pub fn exact_cover_minimum(x: &SimplicialComplex, d: usize) -> Result<usize, BoxdError> {
    exact_cover_minimum_with_limit(x, d, EXACT_COVER_MAX_VERTICES)
}

pub fn exact_cover_minimum_with_limit(
    x: &SimplicialComplex,
    d: usize,
    max_vertices: usize,
) -> Result<usize, BoxdError> {
    let n = x.num_vertices();
    if n > max_vertices {
        return Err(BoxdError::ResourceLimit { what: "exact cover search vertices", actual: n, limit: max_vertices });
    }
    let missing = check_cover_preconditions(x, d)?;
    if missing.len() > 128 {
        return Err(BoxdError::ResourceLimit { what: "exact cover universe", actual: missing.len(), limit: 128 });
    }
    let universe: u128 = if missing.len() == 128 { u128::MAX } else { (1u128 << missing.len()) - 1 };
    let mut coverage: Vec<u128> = non_faces_of_size(x, d + 1)
        .into_iter()
        .map(|c| {
            missing.iter().enumerate().filter(|(_, t)| covers(c, **t)).fold(0u128, |acc, (i, _)| acc | (1u128 << i))
        })
        .filter(|m| *m != 0)
        .collect();
    // a set dominated by another is never needed
    coverage.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut useful: Vec<u128> = Vec::new();
    for m in coverage {
        if !useful.iter().any(|u| m & !u == 0) {
            useful.push(m);
        }
    }

    let upper = cover_missing_faces(x, d)?.sets.len();
    let mut best = upper;
    branch(&useful, universe, 0, 0, &mut best);
    Ok(best)
}

fn branch(sets: &[u128], universe: u128, covered: u128, depth: usize, best: &mut usize) {
    let open = universe & !covered;
    if open == 0 {
        *best = (*best).min(depth);
        return;
    }
    let widest = sets.iter().map(|s| (s & open).count_ones()).max().unwrap_or(0);
    if widest == 0 {
        return;
    }
    let lower = (open.count_ones()).div_ceil(widest) as usize;
    if depth + lower >= *best {
        return;
    }
    // branch on the open element with the fewest covering sets
    let target =
        Face::from_bits(open).iter().min_by_key(|&e| sets.iter().filter(|s| *s & (1u128 << e) != 0).count()).unwrap();
    let mut options: Vec<u128> = sets.iter().copied().filter(|s| s & (1u128 << target) != 0).collect();
    options.sort_by_key(|s| std::cmp::Reverse((s & open).count_ones()));
    for s in options {
        branch(sets, universe, covered | s, depth + 1, best);
    }
}

/// `⌊C(n,d)/(d+1)⌋` for the complex's vertex count.
pub fn packing_upper_bound(x: &SimplicialComplex, d: usize) -> Result<u128, BoxdError> {
    Ok(designs::steiner_upper_bound(d, x.num_vertices())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, Graph};
    use crate::designs::FANO_LINES;
    use crate::face;

    fn f(v: &[u32]) -> Face {
        Face::from_labels(v.iter().copied()).unwrap()
    }

    fn fam(v: &[&[u32]]) -> Vec<Face> {
        v.iter().map(|s| f(s)).collect()
    }

    fn fano() -> SimplicialComplex {
        SimplicialComplex::from_missing_faces(
            Face::range(1, 7).unwrap(),
            FANO_LINES.iter().map(|l| Face::from_labels(*l).unwrap()),
        )
        .unwrap()
    }

    fn c4() -> SimplicialComplex {
        clique_complex(&Graph::new(f(&[1, 2, 3, 4]), fam(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])).unwrap())
    }

    fn octahedron() -> SimplicialComplex {
        clique_complex(&Graph::complete_multipartite(&fam(&[&[1, 2], &[3, 4], &[5, 6]])).unwrap())
    }

    #[test]
    fn fano_cover_is_the_lines() {
        let c = cover_missing_faces(&fano(), 2).unwrap();
        assert_eq!(c.sets, face::canonical(FANO_LINES.iter().map(|l| Face::from_labels(*l).unwrap()).collect()));
        assert_eq!(c.sets.len(), 7);
        assert!(c.covering.iter().all(|(t, i)| c.sets[*i] == *t));
    }

    #[test]
    fn small_covers() {
        let c = cover_missing_faces(&c4(), 1).unwrap();
        assert_eq!(c.sets, fam(&[&[1, 3], &[2, 4]]));
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2]])).unwrap();
        assert_eq!(cover_missing_faces(&x, 1).unwrap().sets, fam(&[&[1, 2]]));
    }

    #[test]
    fn cover_preconditions() {
        let hollow = SimplicialComplex::from_missing_faces(f(&[1, 2, 3]), fam(&[&[1, 2, 3]])).unwrap();
        assert!(matches!(cover_missing_faces(&hollow, 1), Err(BoxdError::MissingFaceTooLarge(_))));
        assert!(cover_missing_faces(&SimplicialComplex::complete(f(&[1, 2])), 1).is_err());
    }

    #[test]
    fn small_missing_faces_are_covered_through_supersets() {
        // h = 1 but d = 2: the missing edge is covered by a non-face triple
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2]])).unwrap();
        let c = cover_missing_faces(&x, 2).unwrap();
        assert_eq!(c.sets, fam(&[&[1, 2, 3]]));
        assert_eq!(exact_cover_minimum(&x, 2).unwrap(), 1);
    }

    #[test]
    fn decompositions() {
        let dec = decompose(&fano(), 2).unwrap();
        assert_eq!(dec.bound, 7);
        for factor in &dec.factors {
            assert_eq!(factor.missing, vec![factor.set]);
        }
        let dec = decompose(&c4(), 1).unwrap();
        assert_eq!(dec.bound, 2);
        assert_eq!(dec.factors[0].missing, fam(&[&[1, 3]]));
        assert_eq!(dec.factors[1].missing, fam(&[&[2, 4]]));
        assert!(decompose(&SimplicialComplex::complete(f(&[1, 2, 3])), 1).is_err());
    }

    #[test]
    fn user_covers_are_validated() {
        let x = c4();
        assert!(validate_cover(&x, 1, fam(&[&[1, 3]])).is_err());
        assert!(validate_cover(&x, 1, fam(&[&[1, 2], &[2, 4]])).is_err());
        assert!(validate_cover(&x, 1, fam(&[&[1, 3], &[2, 4]])).is_ok());
    }

    #[test]
    fn lower_certificates() {
        let c = boxd_lower_certificate(&fano(), 2);
        assert_eq!((c.kind, c.value), (LowerBoundKind::SteinerExact, 7));
        let c = boxd_lower_certificate(&octahedron(), 1);
        assert_eq!((c.kind, c.value), (LowerBoundKind::SteinerExact, 3));
        let hollow = SimplicialComplex::from_missing_faces(f(&[1, 2, 3]), fam(&[&[1, 2, 3]])).unwrap();
        assert_eq!(boxd_lower_certificate(&hollow, 1).kind, LowerBoundKind::None);
        assert_eq!(
            serde_json::to_string(&boxd_lower_certificate(&fano(), 2)).unwrap(),
            r#"{"kind":"steiner_exact","value":7}"#
        );
    }

    #[test]
    fn refutation_of_two_disjoint_edges() {
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2], &[3, 4]])).unwrap();
        let assignment = FactorAssignment { factors: 1, map: BTreeMap::from([(f(&[1, 2]), 0), (f(&[3, 4]), 0)]) };
        let r = refute_small_cover(&x, 1, &assignment).unwrap();
        assert_eq!(r.witness.degree, 1);
        assert_eq!(r.witness.betti, 1);
        assert_eq!(r.witness.subcomplex_vertices, f(&[1, 2, 3, 4]));
    }

    #[test]
    fn refutation_preconditions() {
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2], &[3, 4]])).unwrap();
        let distinct = FactorAssignment { factors: 2, map: BTreeMap::from([(f(&[1, 2]), 0), (f(&[3, 4]), 1)]) };
        assert!(matches!(refute_small_cover(&x, 1, &distinct), Err(BoxdError::Precondition(_))));
        let partial = FactorAssignment { factors: 1, map: BTreeMap::from([(f(&[1, 2]), 0)]) };
        assert!(matches!(refute_small_cover(&x, 1, &partial), Err(BoxdError::Precondition(_))));
    }

    #[test]
    fn fano_refutation_onto_six_factors() {
        let x = fano();
        let lines = x.missing_faces().members;
        let map = lines.iter().enumerate().map(|(i, l)| (*l, i.min(5))).collect();
        let r = refute_small_cover(&x, 2, &FactorAssignment { factors: 6, map }).unwrap();
        assert_eq!(r.factor, 5);
        assert!(r.witness.degree >= 2);
        assert!(r.witness.subcomplex_vertices.len() <= 6);
    }

    #[test]
    fn exact_minimums() {
        assert_eq!(exact_cover_minimum(&fano(), 2).unwrap(), 7);
        assert_eq!(exact_cover_minimum(&c4(), 1).unwrap(), 2);
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2, 3]])).unwrap();
        assert_eq!(exact_cover_minimum(&x, 2).unwrap(), 1);
        let big = SimplicialComplex::from_missing_faces(Face::range(1, 10).unwrap(), fam(&[&[1, 2]])).unwrap();
        assert!(matches!(exact_cover_minimum(&big, 1), Err(BoxdError::ResourceLimit { .. })));
    }

    #[test]
    fn greedy_can_meet_the_bound_without_a_steiner_system() {
        let x = crate::complex::complete_skeleton(Face::range(1, 7).unwrap(), 1).unwrap();
        assert_eq!(x.missing_faces().len(), 35);
        assert_eq!(decompose(&x, 2).unwrap().bound, 7);
        assert_eq!(packing_upper_bound(&x, 2).unwrap(), 7);
        assert_eq!(exact_cover_minimum(&x, 2).unwrap(), 4);
        assert_eq!(boxd_lower_certificate(&x, 2).kind, LowerBoundKind::None);
    }
}
