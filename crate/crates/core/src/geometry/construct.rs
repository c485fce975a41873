//! Representations built from simplex facets, products and augmentation.
//! Every constructor verifies the nerve of its output before returning.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::nerve::{nerve_of_convex_family, verify_representation};
use super::{hulls_have_common_point, RationalPoint, Representation, VPolytope, EXPAND_LIMIT};
use crate::complex::{intersect_complexes, SimplicialComplex};
use crate::error::{ComplexError, GeometryError};
use crate::face::Face;

/// The simplex `conv{0, e_1, …, e_d}` with one facet per label of `U`, and a
/// barycenter `p_σ` for every proper subset `σ ⊊ U`.
#[derive(Clone, Debug)]
pub struct WegnerScaffold {
    /// `order[i]` labels the facet opposite the `i`-th simplex vertex.
    pub order: Vec<u32>,
    pub dim: usize,
    pub vertices: Vec<RationalPoint>,
    pub points: BTreeMap<Face, RationalPoint>,
}

impl WegnerScaffold {
    /// Simplex vertices not opposite any label of `tau`.
    fn vertices_off(&self, tau: Face) -> Vec<RationalPoint> {
        self.order.iter().zip(&self.vertices).filter(|(u, _)| !tau.contains(**u)).map(|(_, q)| q.clone()).collect()
    }

    /// `F_τ`, the intersection of the facets labelled by `tau`. Empty for `τ = U`.
    pub fn facet(&self, tau: Face) -> Option<VPolytope> {
        let gens = self.vertices_off(tau);
        (!gens.is_empty()).then(|| VPolytope::new(gens).expect("simplex vertices share a dimension"))
    }

    pub fn simplex(&self) -> VPolytope {
        VPolytope::new(self.vertices.clone()).expect("simplex vertices share a dimension")
    }

    pub fn point(&self, sigma: Face) -> &RationalPoint {
        &self.points[&sigma]
    }
}

pub fn wegner_scaffold(u: Face) -> Result<WegnerScaffold, GeometryError> {
    if u.len() < 2 {
        return Err(GeometryError::Precondition(format!("{u} needs at least two labels")));
    }
    let order = u.to_vec();
    let dim = order.len() - 1;
    let vertices: Vec<RationalPoint> = (0..=dim)
        .map(|i| {
            let mut p = RationalPoint::origin(dim);
            if i > 0 {
                p.0[i - 1] = BigRational::one();
            }
            p
        })
        .collect();
    let mut scaffold = WegnerScaffold { order, dim, vertices, points: BTreeMap::new() };
    for sigma in u.subsets().filter(|s| *s != u) {
        let p = RationalPoint::barycenter(&scaffold.vertices_off(sigma));
        scaffold.points.insert(sigma, p);
    }
    Ok(scaffold)
}

/// Realizes `x` in dimension `|U| − 1` when `U` is a non-face and every
/// missing face `τ` has `|τ \ U| ≤ 1`.
pub fn wegner_representation(x: &SimplicialComplex, u: Face) -> Result<Representation, GeometryError> {
    let vertices = x.vertices();
    if !u.is_subset(vertices) {
        return Err(ComplexError::UnknownLabel { face: u, vertices }.into());
    }
    if u.len() < 2 {
        return Err(GeometryError::Precondition(format!("|U| = {} is below 2", u.len())));
    }
    if x.contains(u) {
        return Err(GeometryError::Precondition(format!("{u} is a face")));
    }
    if !x.ghost_vertices().is_empty() {
        return Err(GeometryError::Precondition(format!("vertices {} are not faces", x.ghost_vertices())));
    }
    if let Some(tau) = x.missing_faces().iter().find(|t| t.difference(u).len() > 1) {
        return Err(GeometryError::Precondition(format!("missing face {tau} has |τ \\ U| > 1")));
    }

    let scaffold = wegner_scaffold(u)?;
    let proper: Vec<Face> = scaffold.points.keys().copied().collect();
    let mut sets = BTreeMap::new();
    for v in vertices.iter() {
        let chosen: Vec<RationalPoint> = if u.contains(v) {
            proper.iter().filter(|s| s.contains(v) && x.contains(**s)).map(|s| scaffold.point(*s).clone()).collect()
        } else {
            proper.iter().filter(|s| x.contains(s.with(v))).map(|s| scaffold.point(*s).clone()).collect()
        };
        sets.insert(v, Some(VPolytope::new(chosen)?));
    }
    let rep = Representation::new(scaffold.dim, sets)?;
    verify_representation(&rep, x)?;
    Ok(rep)
}

/// Per vertex, the product of the factor sets. The nerve is the
/// intersection of the factor nerves.
pub fn product_representation(reps: &[Representation]) -> Result<Representation, GeometryError> {
    let first = reps.first().ok_or(GeometryError::EmptyInput)?;
    let vertices = first.vertices();
    if let Some(other) = reps.iter().find(|r| r.vertices() != vertices) {
        return Err(ComplexError::VertexSetMismatch(vertices, other.vertices()).into());
    }
    let nerves = reps.iter().map(nerve_of_convex_family).collect::<Result<Vec<_>, _>>()?;
    let expected = intersect_complexes(&nerves)?;

    let mut sets = BTreeMap::new();
    for v in vertices.iter() {
        let parts: Option<Vec<VPolytope>> = reps.iter().map(|r| r.get(v).cloned()).collect();
        let poly = parts.map(|p| VPolytope::product(&p)).transpose()?;
        sets.insert(v, poly);
    }
    let rep = Representation::new(reps.iter().map(|r| r.dim).sum(), sets)?;
    verify_representation(&rep, &expected)?;
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// A common point of the sets indexed by `σ1 ∩ σ2`.
    Lp,
    /// `σ1 ∩ σ2 = ∅`: the barycenter of the first non-empty set's generators.
    EmptyIntersectionBarycenter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentResult {
    pub representation: Representation,
    pub witness: RationalPoint,
    pub witness_source: WitnessSource,
}

/// Lifts a representation of `X` one dimension up so that its nerve becomes
/// `X ∪ 2^σ1 ∪ 2^σ2`, using `x ± e_{d+1}` for a common point `x` of `σ1 ∩ σ2`.
pub fn augment_two_simplices(rep: &Representation, sigma1: Face, sigma2: Face) -> Result<AugmentResult, GeometryError> {
    let vertices = rep.vertices();
    for s in [sigma1, sigma2] {
        if !s.is_subset(vertices) {
            return Err(ComplexError::UnknownLabel { face: s, vertices }.into());
        }
    }
    let nerve = nerve_of_convex_family(rep)?;
    let common = sigma1.intersection(sigma2);
    let (x, source) = if common.is_empty() {
        let x = rep
            .sets
            .values()
            .flatten()
            .next()
            .map(|p| p.barycenter())
            .unwrap_or_else(|| RationalPoint::origin(rep.dim));
        (x, WitnessSource::EmptyIntersectionBarycenter)
    } else {
        if !nerve.contains(common) {
            return Err(GeometryError::Precondition(format!("{common} is not a face of the nerve")));
        }
        let polys: Vec<Option<&VPolytope>> = common.iter().map(|v| rep.get(v)).collect();
        let x = hulls_have_common_point(&polys)?
            .ok_or_else(|| GeometryError::Verification(format!("no common point for face {common}")))?;
        (x, WitnessSource::Lp)
    };

    let zero = BigRational::zero();
    let x1 = x.with_coordinate(BigRational::one());
    let x2 = x.with_coordinate(BigRational::from_integer(BigInt::from(-1)));
    let mut sets = BTreeMap::new();
    for (&v, poly) in &rep.sets {
        let mut gens: Vec<RationalPoint> = match poly {
            Some(p) => p.generators(EXPAND_LIMIT)?.iter().map(|g| g.with_coordinate(zero.clone())).collect(),
            None => Vec::new(),
        };
        if sigma1.contains(v) {
            gens.push(x1.clone());
        }
        if sigma2.contains(v) {
            gens.push(x2.clone());
        }
        let lifted = if gens.is_empty() { None } else { Some(VPolytope::new(gens)?) };
        sets.insert(v, lifted);
    }
    let representation = Representation::new(rep.dim + 1, sets)?;
    let expected = SimplicialComplex::from_parts(vertices, nerve.facets().iter().copied().chain([sigma1, sigma2]));
    verify_representation(&representation, &expected)?;
    Ok(AugmentResult { representation, witness: x, witness_source: source })
}

/// The complex on `V` with the single missing face `τ`, in dimension `|τ| − 1`:
/// labels of `τ` get distinct facets of a simplex, all others the simplex.
pub fn single_missing_face_representation(vertices: Face, tau: Face) -> Result<Representation, GeometryError> {
    if !tau.is_subset(vertices) {
        return Err(ComplexError::UnknownLabel { face: tau, vertices }.into());
    }
    if tau.len() < 2 {
        return Err(GeometryError::Precondition(format!("|τ| = {} is below 2", tau.len())));
    }
    let scaffold = wegner_scaffold(tau)?;
    let sets = vertices
        .iter()
        .map(|v| {
            let poly = if tau.contains(v) {
                scaffold.facet(Face::singleton(v).unwrap()).expect("proper facet")
            } else {
                scaffold.simplex()
            };
            (v, Some(poly))
        })
        .collect();
    let rep = Representation::new(scaffold.dim, sets)?;
    let expected = SimplicialComplex::from_missing_faces(vertices, [tau])?;
    verify_representation(&rep, &expected)?;
    Ok(rep)
}
