use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::lp::feasible_point;
use super::{BoxFamily, RationalPoint, Representation, VPolytope, EXPAND_LIMIT};
use crate::complex::{clique_complex, Graph, SimplicialComplex};
use crate::error::GeometryError;
use crate::face::{self, Face};

/// Vertex limit for [`verify_nerve_exhaustive`].
pub const EXHAUSTIVE_MAX_VERTICES: usize = 20;

/// Decides whether the hulls share a point and returns one if so. `None`
/// entries are empty sets.
pub fn hulls_have_common_point(polys: &[Option<&VPolytope>]) -> Result<Option<RationalPoint>, GeometryError> {
    if polys.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    let present: Vec<&VPolytope> = polys.iter().flatten().copied().collect();
    if let Some(first) = present.first() {
        let dim = first.dim();
        if let Some(bad) = present.iter().find(|p| p.dim() != dim) {
            return Err(GeometryError::DimensionMismatch { expected: dim, actual: bad.dim() });
        }
    }
    if present.len() < polys.len() {
        return Ok(None);
    }
    common_point(&present)
}

pub(crate) fn common_point(polys: &[&VPolytope]) -> Result<Option<RationalPoint>, GeometryError> {
    let layout = polys[0].layout();
    if polys.iter().all(|p| p.layout() == layout) {
        // a product of hulls meets iff every factor does
        let mut witness = RationalPoint(Vec::new());
        for (f, &dim) in layout.iter().enumerate() {
            let sets: Vec<&[RationalPoint]> = polys.iter().map(|p| p.factors()[f].as_slice()).collect();
            match common_point_of_sets(&sets, dim) {
                Some(w) => witness = witness.concat(&w),
                None => return Ok(None),
            }
        }
        return Ok(Some(witness));
    }
    let flat = polys.iter().map(|p| p.flattened(EXPAND_LIMIT)).collect::<Result<Vec<_>, _>>()?;
    let sets: Vec<&[RationalPoint]> = flat.iter().map(|p| p.factors()[0].as_slice()).collect();
    Ok(common_point_of_sets(&sets, flat[0].dim()))
}

/// Variables `λ_{j,k} ≥ 0`; rows `Σ_k λ_{0,k} g_{0,k} = Σ_k λ_{j,k} g_{j,k}`
/// per coordinate and `Σ_k λ_{j,k} = 1` per set.
fn common_point_of_sets(sets: &[&[RationalPoint]], dim: usize) -> Option<RationalPoint> {
    if sets.len() == 1 || dim == 0 {
        return Some(sets[0][0].clone());
    }
    // a single point only needs membership tests
    if let Some(p) = sets.iter().find(|s| s.len() == 1) {
        let p = &p[0];
        return sets.iter().all(|s| in_hull(s, p)).then(|| p.clone());
    }
    let mut offsets = Vec::with_capacity(sets.len());
    let mut vars = 0;
    for s in sets {
        offsets.push(vars);
        vars += s.len();
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for j in 1..sets.len() {
        for c in 0..dim {
            let mut row = vec![BigRational::zero(); vars];
            for (k, g) in sets[0].iter().enumerate() {
                row[k] = g.0[c].clone();
            }
            for (k, g) in sets[j].iter().enumerate() {
                row[offsets[j] + k] = -g.0[c].clone();
            }
            a.push(row);
            b.push(BigRational::zero());
        }
    }
    for (j, s) in sets.iter().enumerate() {
        let mut row = vec![BigRational::zero(); vars];
        for k in 0..s.len() {
            row[offsets[j] + k] = BigRational::one();
        }
        a.push(row);
        b.push(BigRational::one());
    }
    let lambda = feasible_point(&a, &b, vars)?;
    let coords = (0..dim).map(|c| sets[0].iter().zip(&lambda).map(|(g, l)| &g.0[c] * l).sum()).collect();
    Some(RationalPoint(coords))
}

/// `p ∈ conv(generators)`.
pub(crate) fn in_hull(generators: &[RationalPoint], p: &RationalPoint) -> bool {
    if generators.contains(p) {
        return true;
    }
    let dim = p.dim();
    let n = generators.len();
    let mut a: Vec<Vec<BigRational>> = (0..dim).map(|c| generators.iter().map(|g| g.0[c].clone()).collect()).collect();
    let mut b: Vec<BigRational> = p.0.clone();
    a.push(vec![BigRational::one(); n]);
    b.push(BigRational::one());
    feasible_point(&a, &b, n).is_some()
}

/// The nerve together with a common point for every non-empty face.
#[derive(Clone, Debug)]
pub struct NerveData {
    pub complex: SimplicialComplex,
    pub witnesses: BTreeMap<Face, RationalPoint>,
}

pub fn nerve_of_convex_family(rep: &Representation) -> Result<SimplicialComplex, GeometryError> {
    Ok(nerve_with_witnesses(rep)?.complex)
}

/// Level-by-level search: a set is tested only when all its codimension-one
/// subsets are faces. Witnesses of those subsets are tried before solving
/// the full system.
pub fn nerve_with_witnesses(rep: &Representation) -> Result<NerveData, GeometryError> {
    let vertices = rep.vertices();
    let live: Vec<u32> = rep.sets.iter().filter(|(_, p)| p.is_some()).map(|(v, _)| *v).collect();
    let ghosts = Face::from_labels(rep.sets.iter().filter(|(_, p)| p.is_none()).map(|(v, _)| *v))?;

    let mut level: BTreeMap<Face, RationalPoint> =
        live.iter().map(|&v| (Face::singleton(v).unwrap(), rep.get(v).unwrap().some_point())).collect();
    let mut all = level.clone();
    while !level.is_empty() {
        let mut candidates = Vec::new();
        for sigma in level.keys() {
            let top = sigma.last().unwrap();
            for &v in live.iter().filter(|&&v| v > top) {
                let tau = sigma.with(v);
                if tau.iter().all(|u| level.contains_key(&tau.without(u))) {
                    candidates.push(tau);
                }
            }
        }
        let decided = candidates
            .par_iter()
            .map(|&tau| decide(rep, &level, tau).map(|w| w.map(|w| (tau, w))))
            .collect::<Result<Vec<_>, _>>()?;
        level = decided.into_iter().flatten().collect();
        all.extend(level.iter().map(|(f, w)| (*f, w.clone())));
    }

    let faces = std::iter::once(Face::EMPTY).chain(all.keys().copied());
    let complex = SimplicialComplex::from_facets_with_ghosts(vertices, faces, ghosts)?;
    Ok(NerveData { complex, witnesses: all })
}

fn decide(
    rep: &Representation,
    level: &BTreeMap<Face, RationalPoint>,
    tau: Face,
) -> Result<Option<RationalPoint>, GeometryError> {
    for u in tau.iter() {
        let w = &level[&tau.without(u)];
        if rep.get(u).unwrap().contains(w) {
            return Ok(Some(w.clone()));
        }
    }
    let polys: Vec<&VPolytope> = tau.iter().map(|u| rep.get(u).unwrap()).collect();
    common_point(&polys)
}

/// Checks that the nerve equals `expected`, returning the nerve data.
pub fn verify_representation(rep: &Representation, expected: &SimplicialComplex) -> Result<NerveData, GeometryError> {
    let data = nerve_with_witnesses(rep)?;
    if data.complex != *expected {
        return Err(GeometryError::Verification(format!(
            "nerve has facets {:?} on {}, expected {:?} on {}",
            data.complex.facets(),
            data.complex.vertices(),
            expected.facets(),
            expected.vertices()
        )));
    }
    Ok(data)
}

/// Result of testing every non-empty vertex subset independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustiveCheck {
    pub subsets_checked: usize,
    pub faces_found: usize,
    /// Subsets where the solver and the expected complex disagree.
    pub mismatches: Vec<Face>,
    /// Faces whose witness failed the separate membership test.
    pub unverified_witnesses: Vec<Face>,
}

impl ExhaustiveCheck {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty() && self.unverified_witnesses.is_empty()
    }
}

/// Solves the common-point system for all `2^n − 1` non-empty subsets,
/// without reusing results between subsets.
pub fn verify_nerve_exhaustive(
    rep: &Representation,
    expected: &SimplicialComplex,
) -> Result<ExhaustiveCheck, GeometryError> {
    let vertices = rep.vertices();
    if vertices != expected.vertices() {
        return Err(GeometryError::Verification(format!(
            "vertex sets differ: {} vs {}",
            vertices,
            expected.vertices()
        )));
    }
    let n = vertices.len();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(GeometryError::ResourceLimit {
            what: "exhaustive nerve vertices",
            actual: n as u128,
            limit: EXHAUSTIVE_MAX_VERTICES as u128,
        });
    }
    let subsets: Vec<Face> = vertices.subsets().filter(|s| !s.is_empty()).collect();
    let outcomes = subsets
        .par_iter()
        .map(|&s| {
            let polys: Vec<Option<&VPolytope>> = s.iter().map(|v| rep.get(v)).collect();
            let witness = hulls_have_common_point(&polys)?;
            let verified = witness.as_ref().is_none_or(|w| polys.iter().all(|p| p.is_some_and(|p| p.contains(w))));
            Ok((s, witness.is_some(), verified))
        })
        .collect::<Result<Vec<_>, GeometryError>>()?;
    let mut mismatches = Vec::new();
    let mut unverified = Vec::new();
    let mut faces_found = 0;
    for (s, found, verified) in outcomes {
        faces_found += found as usize;
        if found != expected.contains(s) {
            mismatches.push(s);
        }
        if !verified {
            unverified.push(s);
        }
    }
    Ok(ExhaustiveCheck {
        subsets_checked: subsets.len(),
        faces_found,
        mismatches: face::canonical(mismatches),
        unverified_witnesses: face::canonical(unverified),
    })
}

/// Boxes meet iff they meet pairwise, so the nerve is the clique complex of
/// the intersection graph.
pub fn nerve_of_boxes(boxes: &BoxFamily) -> Result<SimplicialComplex, GeometryError> {
    let labels: Vec<u32> = boxes.boxes.keys().copied().collect();
    let mut edges = Vec::new();
    for (i, &u) in labels.iter().enumerate() {
        for &v in &labels[i + 1..] {
            let overlap = boxes.boxes[&u].iter().zip(&boxes.boxes[&v]).all(|((a, b), (c, d))| a.max(c) <= b.min(d));
            if overlap {
                edges.push(Face::from_labels([u, v])?);
            }
        }
    }
    Ok(clique_complex(&Graph::new(boxes.vertices(), edges)?))
}
