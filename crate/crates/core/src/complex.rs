//! Finite simplicial complexes stored by their facets.
//!
//! A complex is a vertex set together with the antichain of its maximal
//! faces; membership of `σ` is decided as "σ lies in some facet". The void
//! complex (no faces at all) has no facets, the empty complex `{∅}` has the
//! single facet `∅`.
//!
//! Vertices that lie in no face are *ghost vertices*. They only arise when a
//! caller explicitly asks for them (singleton missing faces, empty convex
//! sets in a representation, degenerate Γ complexes).

use std::collections::HashSet;

use serde::Serialize;

use crate::error::ComplexError;
use crate::face::{self, Face};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    vertices: Face,
    facets: Vec<Face>,
}

/// The inclusion-minimal non-faces of a complex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MissingFaceFamily {
    pub n: usize,
    pub members: Vec<Face>,
}

impl MissingFaceFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.members.iter().copied()
    }

    /// Largest missing-face size minus one.
    pub fn h(&self) -> Option<usize> {
        self.members.iter().map(|m| m.len()).max().and_then(|s| s.checked_sub(1))
    }
}

fn check_within(vertices: Face, face: Face) -> Result<(), ComplexError> {
    if face.is_subset(vertices) {
        Ok(())
    } else {
        Err(ComplexError::UnknownLabel { face, vertices })
    }
}

impl SimplicialComplex {
    /// Builds a complex from a list of faces, keeping only the maximal ones.
    /// Every vertex must appear in some face.
    pub fn from_facets(vertices: Face, facets: impl IntoIterator<Item = Face>) -> Result<Self, ComplexError> {
        Self::from_facets_with_ghosts(vertices, facets, Face::EMPTY)
    }

    /// Like [`from_facets`](Self::from_facets), but vertices listed in
    /// `ghosts` may be left uncovered.
    pub fn from_facets_with_ghosts(
        vertices: Face,
        facets: impl IntoIterator<Item = Face>,
        ghosts: Face,
    ) -> Result<Self, ComplexError> {
        let facets: Vec<Face> = facets.into_iter().collect();
        for &f in &facets {
            check_within(vertices, f)?;
        }
        check_within(vertices, ghosts)?;
        let x = Self::from_parts(vertices, facets);
        if let Some(v) = x.ghost_vertices().difference(ghosts).first() {
            return Err(ComplexError::UncoveredVertex(v));
        }
        Ok(x)
    }

    /// Trusted constructor: reduces to the maximal faces, no label checks.
    pub(crate) fn from_parts(vertices: Face, facets: impl IntoIterator<Item = Face>) -> Self {
        SimplicialComplex { vertices, facets: face::maximal_elements(facets) }
    }

    /// The complex with no faces, not even `∅`.
    pub fn void(vertices: Face) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    /// `{∅}`: every vertex is a ghost.
    pub fn empty(vertices: Face) -> Self {
        SimplicialComplex { vertices, facets: vec![Face::EMPTY] }
    }

    /// `2^V`.
    pub fn complete(vertices: Face) -> Self {
        SimplicialComplex { vertices, facets: vec![vertices] }
    }

    /// `{σ ⊆ V : no m ∈ M with m ⊆ σ}`. Singletons in `M` are rejected.
    pub fn from_missing_faces(vertices: Face, missing: impl IntoIterator<Item = Face>) -> Result<Self, ComplexError> {
        Self::from_missing_faces_impl(vertices, missing.into_iter().collect(), false)
    }

    /// Like [`from_missing_faces`](Self::from_missing_faces), but singleton
    /// missing faces are allowed and turn their vertex into a ghost.
    pub fn from_missing_faces_allowing_ghosts(
        vertices: Face,
        missing: impl IntoIterator<Item = Face>,
    ) -> Result<Self, ComplexError> {
        Self::from_missing_faces_impl(vertices, missing.into_iter().collect(), true)
    }

    fn from_missing_faces_impl(vertices: Face, missing: Vec<Face>, allow_ghosts: bool) -> Result<Self, ComplexError> {
        let missing = face::canonical(missing);
        for &m in &missing {
            check_within(vertices, m)?;
            if m.is_empty() {
                return Err(ComplexError::EmptyMissingFace);
            }
            if m.len() == 1 && !allow_ghosts {
                return Err(ComplexError::SingletonMissingFace(m));
            }
        }
        for (i, &a) in missing.iter().enumerate() {
            for &b in &missing[i + 1..] {
                if a.is_subset(b) {
                    return Err(ComplexError::NotAntichain(a, b));
                }
                if b.is_subset(a) {
                    return Err(ComplexError::NotAntichain(b, a));
                }
            }
        }
        // σ avoids every m iff V \ σ hits every m.
        let facets = face::minimal_transversals(&missing).into_iter().map(|t| vertices.difference(t));
        Ok(Self::from_parts(vertices, facets))
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Maximal faces in canonical order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn ghost_vertices(&self) -> Face {
        let covered = self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        self.vertices.difference(covered)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertices
    }

    /// Dimension of the largest face; `-1` for `{∅}`, `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Membership test without label validation.
    pub fn contains(&self, sigma: Face) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    pub fn is_face(&self, sigma: Face) -> Result<bool, ComplexError> {
        check_within(self.vertices, sigma)?;
        Ok(self.contains(sigma))
    }

    /// The inclusion-minimal non-faces. These are the minimal transversals of
    /// the facet complements.
    pub fn missing_faces(&self) -> MissingFaceFamily {
        let complements: Vec<Face> = self.facets.iter().map(|f| self.vertices.difference(*f)).collect();
        MissingFaceFamily { n: self.vertices.len(), members: face::minimal_transversals(&complements) }
    }

    /// Maximal dimension of a missing face.
    pub fn h_number(&self) -> Result<usize, ComplexError> {
        self.missing_faces().h().ok_or(ComplexError::HUndefined)
    }

    /// `X[U] = {σ ∈ X : σ ⊆ U}` on vertex set `U`.
    pub fn induced(&self, subset: Face) -> Result<Self, ComplexError> {
        check_within(self.vertices, subset)?;
        Ok(self.induced_unchecked(subset))
    }

    pub(crate) fn induced_unchecked(&self, subset: Face) -> Self {
        Self::from_parts(subset, self.facets.iter().map(|f| f.intersection(subset)))
    }

    /// Every face, canonically sorted. Exponential in facet size; meant for
    /// small complexes and tests.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        face::canonical(seen.into_iter().collect())
    }

    /// Vertices and edges of the complex.
    pub fn one_skeleton(&self) -> Graph {
        let mut edges = HashSet::new();
        for f in &self.facets {
            edges.extend(f.subsets_of_size(2));
        }
        Graph::new_unchecked(self.vertices.difference(self.ghost_vertices()), edges.into_iter().collect())
    }

    /// The same complex with vertex set enlarged to `vertices` (new vertices
    /// become ghosts).
    pub fn with_vertex_set(&self, vertices: Face) -> Result<Self, ComplexError> {
        check_within(vertices, self.vertices)?;
        Ok(SimplicialComplex { vertices, facets: self.facets.clone() })
    }
}

/// Convenience wrapper: [`SimplicialComplex::from_facets`].
pub fn build_from_facets(
    vertices: Face,
    facets: impl IntoIterator<Item = Face>,
) -> Result<SimplicialComplex, ComplexError> {
    SimplicialComplex::from_facets(vertices, facets)
}

/// Convenience wrapper: [`SimplicialComplex::from_missing_faces`].
pub fn build_from_missing_faces(
    vertices: Face,
    missing: impl IntoIterator<Item = Face>,
) -> Result<SimplicialComplex, ComplexError> {
    SimplicialComplex::from_missing_faces(vertices, missing)
}

/// Intersection of complexes on a common vertex set.
///
/// Computed on facets (pairwise facet intersections, reduced to the maximal
/// ones), independently of the missing-face description.
pub fn intersect_complexes(xs: &[SimplicialComplex]) -> Result<SimplicialComplex, ComplexError> {
    let (first, rest) = xs.split_first().ok_or(ComplexError::EmptyInput)?;
    let mut acc = first.clone();
    for x in rest {
        if x.vertices != acc.vertices {
            return Err(ComplexError::VertexSetMismatch(acc.vertices, x.vertices));
        }
        let mut pieces = Vec::with_capacity(acc.facets.len() * x.facets.len());
        for a in &acc.facets {
            for b in &x.facets {
                pieces.push(a.intersection(*b));
            }
        }
        acc = SimplicialComplex::from_parts(acc.vertices, pieces);
    }
    Ok(acc)
}

/// The complete `k`-skeleton `{σ ⊆ V : |σ| ≤ k+1}`.
pub fn complete_skeleton(vertices: Face, k: usize) -> Result<SimplicialComplex, ComplexError> {
    let n = vertices.len();
    if n == 0 || k > n - 1 {
        return Err(ComplexError::SkeletonOutOfRange { k, n });
    }
    Ok(SimplicialComplex::from_parts(vertices, vertices.subsets_of_size(k + 1)))
}

/// A simple undirected graph on small labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertices: Face,
    edges: Vec<Face>,
}

impl Graph {
    pub fn new(vertices: Face, edges: impl IntoIterator<Item = Face>) -> Result<Self, ComplexError> {
        let edges: Vec<Face> = edges.into_iter().collect();
        for &e in &edges {
            if e.len() != 2 {
                return Err(ComplexError::BadEdge(e));
            }
            check_within(vertices, e)?;
        }
        Ok(Self::new_unchecked(vertices, edges))
    }

    fn new_unchecked(vertices: Face, edges: Vec<Face>) -> Self {
        Graph { vertices, edges: face::canonical(edges) }
    }

    /// Complete multipartite graph with the given parts.
    pub fn complete_multipartite(parts: &[Face]) -> Result<Self, ComplexError> {
        let mut vertices = Face::EMPTY;
        for &p in parts {
            if vertices.intersects(p) {
                return Err(ComplexError::NotAntichain(p, vertices));
            }
            vertices = vertices.union(p);
        }
        let mut edges = Vec::new();
        for (i, &p) in parts.iter().enumerate() {
            for &q in &parts[i + 1..] {
                for a in p.iter() {
                    for b in q.iter() {
                        edges.push(Face::from_labels([a, b])?);
                    }
                }
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn edges(&self) -> &[Face] {
        &self.edges
    }

    pub fn complement(&self) -> Graph {
        let present: HashSet<Face> = self.edges.iter().copied().collect();
        let edges = self.vertices.subsets_of_size(2).into_iter().filter(|e| !present.contains(e)).collect();
        Graph::new_unchecked(self.vertices, edges)
    }

    fn adjacency(&self) -> Vec<u128> {
        let mut adj = vec![0u128; crate::face::MAX_LABELS as usize];
        for e in &self.edges {
            let (a, b) = (e.first().unwrap(), e.last().unwrap());
            adj[a as usize] |= 1u128 << b;
            adj[b as usize] |= 1u128 << a;
        }
        adj
    }
}

/// Flag complex: faces are the cliques of `g`. Maximal cliques are found by
/// Bron–Kerbosch with pivoting.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    fn expand(r: u128, mut p: u128, mut x: u128, adj: &[u128], out: &mut Vec<Face>) {
        if p == 0 {
            if x == 0 {
                out.push(Face::from_bits(r));
            }
            return;
        }
        let pivot = Face::from_bits(p | x).iter().max_by_key(|&u| (p & adj[u as usize]).count_ones()).unwrap();
        for v in Face::from_bits(p & !adj[pivot as usize]).iter() {
            let bit = 1u128 << v;
            expand(r | bit, p & adj[v as usize], x & adj[v as usize], adj, out);
            p &= !bit;
            x |= bit;
        }
    }
    let adj = g.adjacency();
    let mut cliques = Vec::new();
    expand(0, g.vertices.bits(), 0, &adj, &mut cliques);
    SimplicialComplex::from_parts(g.vertices, cliques)
}

/// Γ(X) together with the map from its vertex labels back to missing faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaComplex {
    pub complex: SimplicialComplex,
    /// `labels[i]` is the missing face that Γ-vertex `i` stands for.
    pub labels: Vec<Face>,
    /// Γ-vertices whose missing face is all of `V`; they lie in no face.
    pub excluded: Face,
}

/// `Γ(X) = {N ⊆ M : ∪N ≠ V}` on vertex set `{0, …, |M|-1}`.
pub fn gamma_complex(x: &SimplicialComplex) -> Result<GammaComplex, ComplexError> {
    if x.is_complete() {
        return Err(ComplexError::CompleteComplex);
    }
    let labels = x.missing_faces().members;
    if labels.len() > crate::face::MAX_LABELS as usize {
        return Err(ComplexError::TooManyMissingFaces(labels.len()));
    }
    let indices = |pred: &dyn Fn(Face) -> bool| {
        labels.iter().enumerate().filter(|(_, m)| pred(**m)).fold(Face::EMPTY, |acc, (i, _)| acc.with(i as u32))
    };
    let gamma_vertices = Face::from_bits(if labels.len() == 128 { u128::MAX } else { (1u128 << labels.len()) - 1 });
    // A family misses vertex v iff all members avoid v.
    let facets: Vec<Face> = x.vertices().iter().map(|v| indices(&|m: Face| !m.contains(v))).collect();
    let excluded = indices(&|m: Face| m == x.vertices());
    Ok(GammaComplex { complex: SimplicialComplex::from_parts(gamma_vertices, facets), labels, excluded })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::from_labels(v.iter().copied()).unwrap()
    }

    fn fam(v: &[&[u32]]) -> Vec<Face> {
        v.iter().map(|s| f(s)).collect()
    }

    fn fano_lines() -> Vec<Face> {
        fam(&[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7], &[2, 4, 7], &[3, 4, 6], &[2, 5, 6], &[3, 5, 7]])
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(f(&[1, 2, 3]), fam(&[&[1, 2], &[1, 3], &[2, 3]])).unwrap()
    }

    fn cycle4() -> Graph {
        Graph::new(f(&[1, 2, 3, 4]), fam(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])).unwrap()
    }

    #[test]
    fn facets_are_reduced_to_antichain() {
        let x = hollow_triangle();
        assert_eq!(x.facets().len(), 3);
        let y = SimplicialComplex::from_facets(f(&[1, 2, 3]), fam(&[&[1, 2, 3], &[1, 2]])).unwrap();
        assert_eq!(y.facets(), &[f(&[1, 2, 3])]);
    }

    #[test]
    fn unknown_label_is_rejected() {
        let err = SimplicialComplex::from_facets(f(&[1, 2]), fam(&[&[1, 5]])).unwrap_err();
        assert!(matches!(err, ComplexError::UnknownLabel { .. }));
        assert!(hollow_triangle().is_face(f(&[4])).is_err());
    }

    #[test]
    fn uncovered_vertex_needs_ghost_flag() {
        let err = SimplicialComplex::from_facets(f(&[1, 2, 3]), fam(&[&[1, 2]])).unwrap_err();
        assert_eq!(err, ComplexError::UncoveredVertex(3));
        let x = SimplicialComplex::from_facets_with_ghosts(f(&[1, 2, 3]), fam(&[&[1, 2]]), f(&[3])).unwrap();
        assert_eq!(x.ghost_vertices(), f(&[3]));
        assert_eq!(x.missing_faces().members, fam(&[&[3]]));
    }

    #[test]
    fn fano_complex_from_missing_faces() {
        let v = Face::range(1, 7).unwrap();
        let x = SimplicialComplex::from_missing_faces(v, fano_lines()).unwrap();
        let expected = fam(&[
            &[4, 5, 6, 7],
            &[2, 3, 6, 7],
            &[2, 3, 4, 5],
            &[1, 3, 5, 6],
            &[1, 2, 5, 7],
            &[1, 3, 4, 7],
            &[1, 2, 4, 6],
        ]);
        let from_facets = SimplicialComplex::from_facets(v, expected.clone()).unwrap();
        assert_eq!(x, from_facets);
        assert_eq!(x.facets(), face::canonical(expected).as_slice());
        assert_eq!(x.missing_faces().members, face::canonical(fano_lines()));
        assert_eq!(x.h_number().unwrap(), 2);
        assert!(x.is_face(f(&[4, 5, 6, 7])).unwrap());
        assert!(!x.is_face(f(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn missing_edge_on_four_vertices() {
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2]])).unwrap();
        assert_eq!(x.facets(), fam(&[&[1, 3, 4], &[2, 3, 4]]).as_slice());
    }

    #[test]
    fn missing_faces_must_be_antichain_and_non_singleton() {
        let v = f(&[1, 2, 3]);
        assert!(matches!(
            SimplicialComplex::from_missing_faces(v, fam(&[&[1, 2], &[1, 2, 3]])),
            Err(ComplexError::NotAntichain(..))
        ));
        assert!(matches!(
            SimplicialComplex::from_missing_faces(v, fam(&[&[1]])),
            Err(ComplexError::SingletonMissingFace(_))
        ));
        let g = SimplicialComplex::from_missing_faces_allowing_ghosts(v, fam(&[&[1]])).unwrap();
        assert_eq!(g.ghost_vertices(), f(&[1]));
        assert_eq!(g.facets(), &[f(&[2, 3])]);
    }

    #[test]
    fn complete_and_hollow_h_numbers() {
        let full = SimplicialComplex::complete(f(&[1, 2, 3, 4]));
        assert!(full.missing_faces().is_empty());
        assert_eq!(full.h_number(), Err(ComplexError::HUndefined));
        assert_eq!(hollow_triangle().h_number().unwrap(), 2);
        let m = clique_complex(&cycle4()).missing_faces();
        assert_eq!(m.members, fam(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn induced_subcomplexes() {
        let v = Face::range(1, 7).unwrap();
        let x = SimplicialComplex::from_missing_faces(v, fano_lines()).unwrap();
        let y = x.induced(f(&[1, 2, 3])).unwrap();
        assert_eq!(y, hollow_triangle());
        assert_eq!(x.induced(v).unwrap(), x);
        let edge = hollow_triangle().induced(f(&[1, 2])).unwrap();
        assert_eq!(edge.facets(), &[f(&[1, 2])]);
        assert!(x.induced(f(&[8])).is_err());
    }

    #[test]
    fn intersections() {
        let v = f(&[1, 2, 3]);
        let x = hollow_triangle();
        assert_eq!(intersect_complexes(&[x.clone(), SimplicialComplex::complete(v)]).unwrap(), x);
        let x1 = SimplicialComplex::from_missing_faces(v, fam(&[&[1, 2]])).unwrap();
        let x2 = SimplicialComplex::from_missing_faces(v, fam(&[&[1, 2, 3]])).unwrap();
        let both = intersect_complexes(&[x1, x2]).unwrap();
        assert_eq!(both.missing_faces().members, fam(&[&[1, 2]]));

        let all = Face::range(1, 7).unwrap();
        let parts: Vec<_> =
            fano_lines().into_iter().map(|l| SimplicialComplex::from_missing_faces(all, [l]).unwrap()).collect();
        let fano = SimplicialComplex::from_missing_faces(all, fano_lines()).unwrap();
        assert_eq!(intersect_complexes(&parts).unwrap(), fano);

        let other = SimplicialComplex::complete(f(&[1, 2]));
        assert!(matches!(intersect_complexes(&[x, other]), Err(ComplexError::VertexSetMismatch(..))));
        assert_eq!(intersect_complexes(&[]), Err(ComplexError::EmptyInput));
    }

    #[test]
    fn clique_complexes() {
        let k4 = Graph::new(f(&[1, 2, 3, 4]), f(&[1, 2, 3, 4]).subsets_of_size(2)).unwrap();
        assert!(clique_complex(&k4).is_complete());
        let c4 = clique_complex(&cycle4());
        assert_eq!(c4.facets(), fam(&[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]).as_slice());
        let oct = clique_complex(&Graph::complete_multipartite(&fam(&[&[1, 2], &[3, 4], &[5, 6]])).unwrap());
        assert_eq!(oct.facets().len(), 8);
        assert!(oct.facets().iter().all(|f| f.len() == 3));
        assert_eq!(oct.missing_faces().members, fam(&[&[1, 2], &[3, 4], &[5, 6]]));
        let isolated = clique_complex(&Graph::new(f(&[1, 2, 3]), fam(&[&[1, 2]])).unwrap());
        assert_eq!(isolated.facets(), fam(&[&[1, 2], &[3]]).as_slice());
    }

    #[test]
    fn bad_edges() {
        assert!(matches!(Graph::new(f(&[1, 2]), fam(&[&[1]])), Err(ComplexError::BadEdge(_))));
        assert!(Graph::new(f(&[1, 2]), fam(&[&[1, 3]])).is_err());
    }

    #[test]
    fn skeletons() {
        assert_eq!(complete_skeleton(f(&[1, 2, 3]), 1).unwrap(), hollow_triangle());
        assert!(complete_skeleton(f(&[1, 2, 3, 4]), 3).unwrap().is_complete());
        let s = complete_skeleton(f(&[1, 2, 3, 4]), 2).unwrap();
        assert_eq!(s.missing_faces().members, vec![f(&[1, 2, 3, 4])]);
        assert!(complete_skeleton(f(&[1, 2]), 2).is_err());
        assert!(complete_skeleton(Face::EMPTY, 0).is_err());
    }

    #[test]
    fn gamma_of_hollow_triangle_is_empty_complex() {
        let g = gamma_complex(&hollow_triangle()).unwrap();
        assert_eq!(g.labels, vec![f(&[1, 2, 3])]);
        assert_eq!(g.complex, SimplicialComplex::empty(f(&[0])));
        assert_eq!(g.excluded, f(&[0]));
    }

    #[test]
    fn gamma_of_two_disjoint_edges() {
        let x = SimplicialComplex::from_missing_faces(f(&[1, 2, 3, 4]), fam(&[&[1, 2], &[3, 4]])).unwrap();
        let g = gamma_complex(&x).unwrap();
        assert_eq!(g.complex.facets(), fam(&[&[0], &[1]]).as_slice());
        assert!(g.excluded.is_empty());
    }

    #[test]
    fn gamma_of_fano() {
        let v = Face::range(1, 7).unwrap();
        let x = SimplicialComplex::from_missing_faces(v, fano_lines()).unwrap();
        let g = gamma_complex(&x).unwrap();
        assert_eq!(g.labels.len(), 7);
        let gc = &g.complex;
        let lines = &g.labels;
        for pair in Face::range(0, 6).unwrap().subsets_of_size(2) {
            assert!(gc.contains(pair));
        }
        for triple in Face::range(0, 6).unwrap().subsets_of_size(3) {
            let idx = triple.to_vec();
            let common = idx.iter().fold(v, |acc, &i| acc.intersection(lines[i as usize]));
            // three lines are a face iff they do not pass through one point
            assert_eq!(gc.contains(triple), common.is_empty(), "{triple}");
        }
    }

    #[test]
    fn gamma_rejects_complete_complex() {
        assert_eq!(gamma_complex(&SimplicialComplex::complete(f(&[1, 2]))), Err(ComplexError::CompleteComplex));
    }
}
