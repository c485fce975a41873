//! Built-in pipelines, each returning a self-checking JSON artifact.

use boxd_core::boxicity::{boxd_lower_certificate, decompose, Decomposition, LowerBoundCertificate};
use boxd_core::complex::{clique_complex, Graph};
use boxd_core::designs::{builtin_design, BuiltinDesign, FANO_LINES};
use boxd_core::error::GeometryError;
use boxd_core::geometry::{
    augment_two_simplices, product_representation, verify_nerve_exhaustive, verify_representation,
    wegner_representation, AugmentResult, ExhaustiveCheck, RationalPoint, Representation, VPolytope,
};
use boxd_core::homology::{reduced_betti, FieldTag};
use boxd_core::io::{complex_to_value, decomposition_to_value};
use boxd_core::{Face, SimplicialComplex};
use serde_json::{json, Value};

use crate::commands::{betti_json, witnesses_json};
use crate::{CliError, DemoName};

fn face(labels: &[u32]) -> Face {
    Face::from_labels(labels.iter().copied()).expect("built-in labels are small")
}

/// The complex whose missing faces are the lines of the Fano plane.
pub fn fano_complex() -> SimplicialComplex {
    SimplicialComplex::from_missing_faces(Face::range(1, 7).unwrap(), FANO_LINES.iter().map(|l| face(l)))
        .expect("Fano lines form an antichain")
}

/// Starting complex of the Fano pipeline: facets 124, 2345, 4567.
pub fn x0() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        Face::range(1, 7).unwrap(),
        [face(&[1, 2, 4]), face(&[2, 3, 4, 5]), face(&[4, 5, 6, 7])],
    )
    .expect("facets cover the vertices")
}

/// `(vertex, left, right)` for the interval representation of [`x0`].
pub const X0_INTERVALS: [(u32, i64, i64); 7] =
    [(1, 0, 1), (2, 1, 2), (3, 2, 3), (4, 0, 5), (5, 2, 5), (6, 4, 5), (7, 4, 5)];

/// The three pairs of simplices added, in order, on the way from [`x0`] to the Fano complex.
pub const FANO_AUGMENTATIONS: [(&[u32], &[u32]); 3] =
    [(&[1, 2, 5, 7], &[1, 2, 4, 6]), (&[1, 3], &[2, 3, 6, 7]), (&[1, 3, 5, 6], &[1, 3, 4, 7])];

pub fn x0_intervals() -> Representation {
    let sets = X0_INTERVALS
        .iter()
        .map(|&(v, a, b)| {
            let seg = VPolytope::new(vec![RationalPoint::from_integers(&[a]), RationalPoint::from_integers(&[b])])
                .expect("non-empty");
            (v, Some(seg))
        })
        .collect();
    Representation::new(1, sets).expect("one-dimensional segments")
}

pub struct FanoRep4 {
    pub steps: Vec<AugmentResult>,
    pub representation: Representation,
    pub check: ExhaustiveCheck,
}

/// Intervals for [`x0`], three augmentations, then an independent check of
/// all 127 vertex subsets against the Fano complex.
pub fn fano_rep4() -> Result<FanoRep4, CliError> {
    let mut rep = x0_intervals();
    verify_representation(&rep, &x0())?;
    let mut steps = Vec::new();
    for (s1, s2) in FANO_AUGMENTATIONS {
        let step = augment_two_simplices(&rep, face(s1), face(s2))?;
        rep = step.representation.clone();
        steps.push(step);
    }
    let check = verify_nerve_exhaustive(&rep, &fano_complex())?;
    if !check.pass() {
        return Err(GeometryError::Verification(format!(
            "nerve differs from the Fano complex on {:?}",
            check.mismatches
        ))
        .into());
    }
    Ok(FanoRep4 { steps, representation: rep, check })
}

pub struct FanoBox2 {
    pub decomposition: Decomposition,
    pub lower: LowerBoundCertificate,
    pub factor_representations: Vec<Representation>,
    pub product: Representation,
}

/// Decomposition of the Fano complex with `d = 2`, a verified planar
/// representation of each factor, and their verified product.
pub fn fano_box2() -> Result<FanoBox2, CliError> {
    let x = fano_complex();
    let decomposition = decompose(&x, 2)?;
    let factor_representations = decomposition
        .factors
        .iter()
        .map(|f| wegner_representation(&f.complex, f.set))
        .collect::<Result<Vec<_>, _>>()?;
    let product = product_representation(&factor_representations)?;
    verify_representation(&product, &x)?;
    Ok(FanoBox2 { lower: boxd_lower_certificate(&x, 2), decomposition, factor_representations, product })
}

pub struct Roberts {
    pub n: usize,
    pub complex: SimplicialComplex,
    pub decomposition: Decomposition,
    pub lower: LowerBoundCertificate,
    /// `β̃_{n/2−1}`.
    pub top_betti: usize,
}

/// Clique complex of the complete `n/2`-partite graph with parts of size 2.
pub fn cross_polytope_boundary(n: usize) -> Result<SimplicialComplex, CliError> {
    if n < 2 || !n.is_multiple_of(2) || n > 8 {
        return Err(CliError::Usage(format!("roberts-n needs an even n with 2 ≤ n ≤ 8, got {n}")));
    }
    let parts: Vec<Face> = (0..n as u32 / 2).map(|i| face(&[2 * i + 1, 2 * i + 2])).collect();
    Ok(clique_complex(&Graph::complete_multipartite(&parts)?))
}

pub fn roberts(n: usize, field: FieldTag) -> Result<Roberts, CliError> {
    let complex = cross_polytope_boundary(n)?;
    let decomposition = decompose(&complex, 1)?;
    let lower = boxd_lower_certificate(&complex, 1);
    let top_betti = reduced_betti(&complex, field)?.get(n as i64 / 2 - 1);
    Ok(Roberts { n, complex, decomposition, lower, top_betti })
}

/// The complex on nine vertices whose missing faces are the lines of AG(2,3).
pub fn x29() -> SimplicialComplex {
    let design = builtin_design(BuiltinDesign::Ag3);
    SimplicialComplex::from_missing_faces(design.ground_set(), design.blocks).expect("lines form an antichain")
}

fn exact_value(upper: usize, lower: &LowerBoundCertificate) -> Option<usize> {
    (lower.value > 0 && upper == lower.value).then_some(upper)
}

pub(crate) fn run_demo(name: DemoName, n: usize, field: FieldTag) -> Result<Value, CliError> {
    match name {
        DemoName::FanoRep4 => {
            let out = fano_rep4()?;
            let steps: Vec<Value> = FANO_AUGMENTATIONS
                .iter()
                .zip(&out.steps)
                .map(|((s1, s2), step)| {
                    json!({
                        "sigma1": s1,
                        "sigma2": s2,
                        "dim": step.representation.dim,
                        "witness": step.witness,
                        "witness_source": step.witness_source,
                    })
                })
                .collect();
            Ok(json!({
                "complex": complex_to_value(&fano_complex()),
                "start": complex_to_value(&x0()),
                "start_representation": x0_intervals(),
                "steps": steps,
                "representation": out.representation,
                "check": out.check,
                "pass": out.check.pass(),
            }))
        }
        DemoName::FanoBox2 => {
            let out = fano_box2()?;
            let data = verify_representation(&out.product, &fano_complex())?;
            Ok(json!({
                "complex": complex_to_value(&fano_complex()),
                "decomposition": decomposition_to_value(&out.decomposition, &out.lower),
                "factor_representations": out.factor_representations,
                "product_dim": out.product.dim,
                "product_witnesses": witnesses_json(&data),
                "box_2": exact_value(out.decomposition.bound, &out.lower),
            }))
        }
        DemoName::RobertsN => {
            let out = roberts(n, field)?;
            Ok(json!({
                "n": out.n,
                "complex": complex_to_value(&out.complex),
                "decomposition": decomposition_to_value(&out.decomposition, &out.lower),
                "betti": betti_json(&reduced_betti(&out.complex, field)?),
                "top_betti": out.top_betti,
                "box_1": exact_value(out.decomposition.bound, &out.lower),
            }))
        }
        DemoName::X29Build => {
            let x = x29();
            let lower = boxd_lower_certificate(&x, 2);
            let upper = decompose(&x, 2)?.bound;
            Ok(json!({
                "complex": complex_to_value(&x),
                "missing_faces": x.missing_faces().members,
                "num_missing_faces": x.missing_faces().len(),
                "upper": upper,
                "lower": lower,
                "box_2": exact_value(upper, &lower),
            }))
        }
    }
}
