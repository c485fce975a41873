//! Slow reference implementations used to cross-check the library.
//!
//! Everything here works by direct enumeration or elimination and shares no
//! code paths with the production algorithms beyond [`Face`] itself.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{Graph, SimplicialComplex};
use crate::face::{self, Face};
use crate::geometry::RationalPoint;
use crate::homology::FieldTag;

/// Every face, by testing each subset of the vertex set against the facets.
pub fn faces(x: &SimplicialComplex) -> Vec<Face> {
    let all = x.vertices().subsets().filter(|s| x.facets().iter().any(|f| s.is_subset(*f)));
    face::canonical(all.collect())
}

/// Non-faces whose codimension-one subsets are all faces.
pub fn missing_faces(x: &SimplicialComplex) -> Vec<Face> {
    let is_face = |s: Face| x.facets().iter().any(|f| s.is_subset(*f));
    let found = x.vertices().subsets().filter(|&s| !is_face(s) && s.iter().all(|v| is_face(s.without(v))));
    face::canonical(found.collect())
}

/// Maximal subsets of `vertices` containing no member of `missing`.
pub fn facets_avoiding(vertices: Face, missing: &[Face]) -> Vec<Face> {
    let ok: Vec<Face> = vertices.subsets().filter(|s| missing.iter().all(|m| !m.is_subset(*s))).collect();
    let maximal = ok.iter().copied().filter(|s| !ok.iter().any(|t| s.is_proper_subset(*t)));
    face::canonical(maximal.collect())
}

/// Maximal vertex sets that are pairwise adjacent.
pub fn clique_facets(g: &Graph) -> Vec<Face> {
    let adjacent = |u: u32, v: u32| g.edges().contains(&Face::from_labels([u, v]).unwrap());
    let cliques: Vec<Face> = g
        .vertices()
        .subsets()
        .filter(|s| {
            let l = s.to_vec();
            l.iter().enumerate().all(|(i, &u)| l[i + 1..].iter().all(|&v| adjacent(u, v)))
        })
        .collect();
    let maximal = cliques.iter().copied().filter(|s| !cliques.iter().any(|t| s.is_proper_subset(*t)));
    face::canonical(maximal.collect())
}

/// Index sets of missing faces whose union is not the whole vertex set.
pub fn gamma_faces(x: &SimplicialComplex) -> Vec<Face> {
    let m = missing_faces(x);
    if m.is_empty() {
        return vec![Face::EMPTY];
    }
    let indices = Face::range(0, m.len() as u32 - 1).unwrap();
    let v = x.vertices();
    let found = indices.subsets().filter(|s| {
        let union = s.iter().fold(Face::EMPTY, |acc, i| acc.union(m[i as usize]));
        union != v
    });
    face::canonical(found.collect())
}

/// Reduced Betti numbers from dense boundary matrices in canonical face
/// order, by plain Gaussian elimination over rationals or bits.
pub fn reduced_betti(x: &SimplicialComplex, field: FieldTag) -> Vec<(i64, usize)> {
    let all = faces(x);
    if all.is_empty() {
        return Vec::new();
    }
    let top = all.iter().map(|f| f.len()).max().unwrap();
    let by_size: Vec<Vec<Face>> = (0..=top).map(|k| all.iter().copied().filter(|f| f.len() == k).collect()).collect();
    // rank of ∂_k : C_k → C_{k-1}, indexed by face size k
    let rank = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let rows = &by_size[k - 1];
        let cols = &by_size[k];
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
        for (j, sigma) in cols.iter().enumerate() {
            for (pos, v) in sigma.iter().enumerate() {
                let i = rows.iter().position(|r| *r == sigma.without(v)).unwrap();
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m[i][j] = BigRational::from_integer(sign.into());
            }
        }
        match field {
            FieldTag::Rationals => dense_rank(m),
            FieldTag::Gf2 => {
                let bits = m.iter().map(|r| r.iter().map(|v| !v.is_zero()).collect()).collect();
                bit_rank(bits)
            }
        }
    };
    (0..=top)
        .map(|k| {
            let dim = by_size[k].len() - rank(k) - rank(k + 1);
            (k as i64 - 1, dim)
        })
        .collect()
}

fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let cols = m.first().map_or(0, |r| r.len());
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn bit_rank(mut m: Vec<Vec<bool>>) -> usize {
    let mut rank = 0;
    let cols = m.first().map_or(0, |r| r.len());
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] {
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Minimum number of `(d+1)`-sized non-faces covering the missing faces,
/// trying every family in order of size.
pub fn min_cover(x: &SimplicialComplex, d: usize) -> Option<usize> {
    let missing = missing_faces(x);
    let candidates: Vec<Face> = x.vertices().subsets_of_size(d + 1).into_iter().filter(|s| !x.contains(*s)).collect();
    let covers = |fam: &[Face]| missing.iter().all(|t| fam.iter().any(|s| t.difference(*s).len() <= 1));
    (1..=candidates.len()).find(|&k| {
        let idx = Face::range(0, candidates.len() as u32 - 1).unwrap();
        idx.subsets_of_size(k)
            .into_iter()
            .any(|pick| covers(&pick.iter().map(|i| candidates[i as usize]).collect::<Vec<_>>()))
    })
}

/// Linear constraint `coeffs · y ≤ rhs` (or `=` while equalities are being
/// substituted), with the set of original rows it was combined from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Ineq {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
    origin: Vec<bool>,
}

impl Ineq {
    fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Ineq { coeffs, rhs, origin: Vec::new() }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Projects `{y : eqs, ineqs}` onto the variables not listed in `eliminate`.
/// Equalities are substituted away through eliminated variables where
/// possible, then Fourier–Motzkin removes the rest one at a time, dropping
/// rows built from more than `t + 1` originals after `t` steps. Returns
/// `None` once the system is seen to be infeasible.
fn project(mut eqs: Vec<Ineq>, mut ineqs: Vec<Ineq>, eliminate: &[usize]) -> Option<Vec<Ineq>> {
    while let Some(eq) = eqs.pop() {
        let Some(p) = eliminate.iter().copied().find(|&j| !eq.coeffs[j].is_zero()) else {
            if eq.is_trivial() {
                if !eq.rhs.is_zero() {
                    return None;
                }
            } else {
                let negated = Ineq::new(eq.coeffs.iter().map(|c| -c).collect(), -&eq.rhs);
                ineqs.push(negated);
                ineqs.push(eq);
            }
            continue;
        };
        let substitute = |row: &mut Ineq| {
            if row.coeffs[p].is_zero() {
                return;
            }
            let f = &row.coeffs[p] / &eq.coeffs[p];
            for (x, y) in row.coeffs.iter_mut().zip(&eq.coeffs) {
                *x -= &f * y;
            }
            row.rhs -= &f * &eq.rhs;
        };
        eqs.iter_mut().for_each(substitute);
        ineqs.iter_mut().for_each(substitute);
    }

    let count = ineqs.len();
    for (i, row) in ineqs.iter_mut().enumerate() {
        row.origin = vec![false; count];
        row.origin[i] = true;
    }
    let mut remaining = eliminate.to_vec();
    let mut steps = 0;
    loop {
        ineqs = normalize(ineqs);
        if ineqs.iter().any(|r| r.is_trivial() && r.rhs.is_negative()) {
            return None;
        }
        ineqs.retain(|r| !r.is_trivial());
        remaining.retain(|&k| ineqs.iter().any(|r| !r.coeffs[k].is_zero()));
        if remaining.is_empty() {
            return Some(ineqs);
        }
        let cost = |k: usize| {
            let pos = ineqs.iter().filter(|r| r.coeffs[k].is_positive()).count();
            let neg = ineqs.iter().filter(|r| r.coeffs[k].is_negative()).count();
            pos * neg
        };
        let (slot, &k) = remaining.iter().enumerate().min_by_key(|(_, k)| cost(**k)).unwrap();
        remaining.remove(slot);
        let (pos, rest): (Vec<Ineq>, Vec<Ineq>) = ineqs.into_iter().partition(|r| r.coeffs[k].is_positive());
        let (neg, zero): (Vec<Ineq>, Vec<Ineq>) = rest.into_iter().partition(|r| r.coeffs[k].is_negative());
        let mut next = zero;
        for p in &pos {
            for n in &neg {
                let origin: Vec<bool> = p.origin.iter().zip(&n.origin).map(|(x, y)| *x || *y).collect();
                if origin.iter().filter(|o| **o).count() > steps + 2 {
                    continue;
                }
                let (sp, sn) = (p.coeffs[k].abs(), n.coeffs[k].abs());
                let coeffs = p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| x / &sp + y / &sn).collect();
                next.push(Ineq { coeffs, rhs: &p.rhs / &sp + &n.rhs / &sn, origin });
            }
        }
        steps += 1;
        ineqs = next;
    }
}

fn normalize(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut out: Vec<Ineq> = rows
        .into_iter()
        .map(|r| match r.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            Some(s) => Ineq { coeffs: r.coeffs.iter().map(|c| c / &s).collect(), rhs: r.rhs / s, origin: r.origin },
            None => r,
        })
        .collect();
    let weight = |r: &Ineq| r.origin.iter().filter(|o| **o).count();
    out.sort_by(|x, y| (&x.coeffs, &x.rhs, weight(x)).cmp(&(&y.coeffs, &y.rhs, weight(y))));
    out.dedup_by(|x, y| x.coeffs == y.coeffs && x.rhs == y.rhs);
    out
}

fn nonnegativity(vars: usize, range: std::ops::Range<usize>) -> Vec<Ineq> {
    range
        .map(|i| {
            let mut coeffs = vec![BigRational::zero(); vars];
            coeffs[i] = -BigRational::one();
            Ineq::new(coeffs, BigRational::zero())
        })
        .collect()
}

/// Fourier–Motzkin decision of `A·λ = b, λ ≥ 0`.
pub fn fm_feasible(a: &[Vec<BigRational>], b: &[BigRational], vars: usize) -> bool {
    let eqs = a.iter().zip(b).map(|(r, v)| Ineq::new(r.clone(), v.clone())).collect();
    let all: Vec<usize> = (0..vars).collect();
    project(eqs, nonnegativity(vars, 0..vars), &all).is_some()
}

/// Inequalities in `x` describing `conv(generators)`, by projecting
/// `x = Σ λ_j g_j, Σ λ_j = 1, λ ≥ 0` onto `x`.
fn hull_inequalities(generators: &[RationalPoint]) -> Option<Vec<Ineq>> {
    let dim = generators[0].dim();
    let vars = dim + generators.len();
    let mut eqs = Vec::with_capacity(dim + 1);
    for c in 0..dim {
        let mut row = vec![BigRational::zero(); vars];
        row[c] = BigRational::one();
        for (j, g) in generators.iter().enumerate() {
            row[dim + j] = -g.0[c].clone();
        }
        eqs.push(Ineq::new(row, BigRational::zero()));
    }
    let mut sum = vec![BigRational::zero(); vars];
    sum[dim..].iter_mut().for_each(|c| *c = BigRational::one());
    eqs.push(Ineq::new(sum, BigRational::one()));
    let lambdas: Vec<usize> = (dim..vars).collect();
    let rows = project(eqs, nonnegativity(vars, dim..vars), &lambdas)?;
    Some(rows.into_iter().map(|r| Ineq::new(r.coeffs[..dim].to_vec(), r.rhs)).collect())
}

/// Common point of several hulls: each hull is projected to inequalities in
/// `x` separately, then the union is decided by eliminating `x`.
pub fn fm_hulls_meet(sets: &[Vec<RationalPoint>]) -> bool {
    let dim = sets[0][0].dim();
    let mut rows = Vec::new();
    for s in sets {
        match hull_inequalities(s) {
            Some(r) => rows.extend(r),
            None => return false,
        }
    }
    let all: Vec<usize> = (0..dim).collect();
    project(Vec::new(), rows, &all).is_some()
}

/// `p ∈ conv(generators)` by Fourier–Motzkin.
pub fn fm_in_hull(generators: &[RationalPoint], p: &RationalPoint) -> bool {
    let n = generators.len();
    let mut a: Vec<Vec<BigRational>> =
        (0..p.dim()).map(|c| generators.iter().map(|g| g.0[c].clone()).collect()).collect();
    let mut b = p.0.clone();
    a.push(vec![BigRational::one(); n]);
    b.push(BigRational::one());
    fm_feasible(&a, &b, n)
}
