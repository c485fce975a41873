use std::path::Path;

use boxd_core::boxicity::{
    boxd_lower_certificate, cover_missing_faces, decompose, decompose_with_cover, exact_cover_minimum,
    refute_small_cover, validate_cover, FactorAssignment, EXACT_COVER_MAX_VERTICES,
};
use boxd_core::complex::gamma_complex;
use boxd_core::designs::{
    builtin_design, check_design, near_cover_count, steiner_upper_bound, BuiltinDesign, DesignClass, DesignFamily,
};
use boxd_core::error::GeometryError;
use boxd_core::geometry::{
    augment_two_simplices, nerve_of_boxes, nerve_with_witnesses, product_representation, verify_nerve_exhaustive,
    verify_representation, wegner_representation, BoxFamily, NerveData, Representation,
};
use boxd_core::homology::{alexander_duality_check, leray_number_with_limit, reduced_betti, BettiVector};
use boxd_core::io::{complex_from_str, complex_to_value, decomposition_to_value};
use boxd_core::{Face, SimplicialComplex};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::demo;
use crate::{read_file, BoxdCmd, CliError, Command, ComplexCmd, Context, DesignsCmd, RepresentCmd};

pub(crate) fn dispatch(command: &Command, ctx: &Context) -> Result<Value, CliError> {
    match command {
        Command::Complex(cmd) => complex(cmd, ctx),
        Command::Boxd(cmd) => boxd(cmd, ctx),
        Command::Designs(cmd) => designs(cmd),
        Command::Represent(cmd) => represent(cmd, ctx),
        Command::Demo { name, n } => demo::run_demo(*name, *n, ctx.field),
    }
}

fn load_complex(path: &Path, ctx: &Context) -> Result<SimplicialComplex, CliError> {
    let x = complex_from_str(&read_file(path)?)?;
    ctx.guard("complex vertices", x.num_vertices())?;
    Ok(x)
}

fn load_representation(path: &Path, ctx: &Context) -> Result<Representation, CliError> {
    let rep: Representation = serde_json::from_str(&read_file(path)?)?;
    ctx.guard("representation vertices", rep.vertices().len())?;
    Ok(rep)
}

/// `{"-1":b,"0":b,...}`.
pub(crate) fn betti_json(b: &BettiVector) -> Value {
    let map: serde_json::Map<String, Value> = b.by_degree.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    Value::Object(map)
}

pub(crate) fn witnesses_json(data: &NerveData) -> Value {
    json!(data.witnesses.iter().map(|(f, p)| json!([f, p])).collect::<Vec<_>>())
}

fn complex(cmd: &ComplexCmd, ctx: &Context) -> Result<Value, CliError> {
    match cmd {
        ComplexCmd::Info { complex } => {
            let x = load_complex(complex, ctx)?;
            let missing = x.missing_faces().members;
            Ok(json!({
                "n": x.num_vertices(),
                "vertices": x.vertices(),
                "ghost_vertices": x.ghost_vertices(),
                "dimension": x.dimension(),
                "facets": x.facets(),
                "num_facets": x.facets().len(),
                "missing_faces": missing,
                "num_missing_faces": missing.len(),
                "h": x.h_number().ok(),
            }))
        }
        ComplexCmd::Homology { complex } => {
            let x = load_complex(complex, ctx)?;
            let b = reduced_betti(&x, ctx.field)?;
            Ok(json!({
                "field": ctx.field,
                "betti": betti_json(&b),
                "reduced_euler_characteristic": b.euler_characteristic(),
            }))
        }
        ComplexCmd::Leray { complex } => {
            let x = load_complex(complex, ctx)?;
            let l = leray_number_with_limit(&x, ctx.field, ctx.max_vertices)?;
            Ok(json!({ "field": ctx.field, "leray": l }))
        }
        ComplexCmd::Gamma { complex } => {
            let x = load_complex(complex, ctx)?;
            let gamma = gamma_complex(&x)?;
            let duality = alexander_duality_check(&x, ctx.field)?;
            Ok(json!({
                "gamma": complex_to_value(&gamma.complex),
                "labels": gamma.labels,
                "excluded": gamma.excluded,
                "duality": duality,
            }))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AssignmentFile {
    factors: usize,
    map: Vec<(Face, usize)>,
}

fn boxd(cmd: &BoxdCmd, ctx: &Context) -> Result<Value, CliError> {
    match cmd {
        BoxdCmd::Run { complex } => {
            let x = load_complex(complex, ctx)?;
            let d = ctx.d()?;
            let upper = decompose(&x, d)?.bound;
            let lower = boxd_lower_certificate(&x, d);
            let exact =
                if x.num_vertices() <= EXACT_COVER_MAX_VERTICES { Some(exact_cover_minimum(&x, d)?) } else { None };
            Ok(json!({ "upper": upper, "lower": lower, "exact": exact }))
        }
        BoxdCmd::Cover { complex } => {
            let x = load_complex(complex, ctx)?;
            let cover = cover_missing_faces(&x, ctx.d()?)?;
            let covering: Vec<Value> =
                cover.covering.iter().map(|(m, i)| json!({ "missing_face": m, "set": i })).collect();
            Ok(json!({ "d": cover.d, "cover": cover.sets, "covering": covering }))
        }
        BoxdCmd::Decompose { complex, cover } => {
            let x = load_complex(complex, ctx)?;
            let d = ctx.d()?;
            let dec = match cover {
                Some(path) => {
                    let sets: Vec<Face> = serde_json::from_str(&read_file(path)?)?;
                    decompose_with_cover(&x, validate_cover(&x, d, sets)?)?
                }
                None => decompose(&x, d)?,
            };
            Ok(decomposition_to_value(&dec, &boxd_lower_certificate(&x, d)))
        }
        BoxdCmd::Refute { complex, assignment } => {
            let x = load_complex(complex, ctx)?;
            let file: AssignmentFile = serde_json::from_str(&read_file(assignment)?)?;
            let assignment = FactorAssignment { factors: file.factors, map: file.map.into_iter().collect() };
            Ok(json!(refute_small_cover(&x, ctx.d()?, &assignment)?))
        }
    }
}

fn designs(cmd: &DesignsCmd) -> Result<Value, CliError> {
    match cmd {
        DesignsCmd::Check { design } => {
            let family: DesignFamily = serde_json::from_str(&read_file(design)?)?;
            Ok(design_report(&family)?)
        }
        DesignsCmd::Builtin { name } => {
            let which: BuiltinDesign = name.parse()?;
            Ok(json!(builtin_design(which)))
        }
    }
}

/// Class, block count and, for `k = t+1`, the packing bound. Steiner systems
/// also get the smallest near-cover count over all uncovered `(t+1)`-sets.
pub(crate) fn design_report(family: &DesignFamily) -> Result<Value, CliError> {
    let class = check_design(family)?;
    let mut report =
        json!({ "t": family.t, "k": family.k, "n": family.n, "class": class, "blocks": family.blocks.len() });
    if family.k == family.t + 1 && family.t < family.n {
        let bound = steiner_upper_bound(family.t, family.n)?;
        report["bound"] = json!(bound);
        report["meets_bound"] = json!(family.blocks.len() as u128 == bound);
        if class == DesignClass::Steiner {
            let uncovered: Vec<Face> = family
                .ground_set()
                .subsets_of_size(family.k)
                .into_iter()
                .filter(|s| !family.blocks.iter().any(|b| s.is_subset(*b)))
                .collect();
            let counts = uncovered
                .iter()
                .map(|tau| near_cover_count(family, *tau).map(|c| c.count))
                .collect::<Result<Vec<_>, _>>()?;
            report["uncovered"] = json!(uncovered.len());
            report["min_near_cover"] = json!(counts.iter().min());
        }
    }
    Ok(report)
}

fn represent(cmd: &RepresentCmd, ctx: &Context) -> Result<Value, CliError> {
    match cmd {
        RepresentCmd::Wegner { complex, u } => {
            let x = load_complex(complex, ctx)?;
            Ok(json!(wegner_representation(&x, *u)?))
        }
        RepresentCmd::Product { representations } => {
            let reps = representations.iter().map(|p| load_representation(p, ctx)).collect::<Result<Vec<_>, _>>()?;
            Ok(json!(product_representation(&reps)?))
        }
        RepresentCmd::Augment { representation, s1, s2 } => {
            let rep = load_representation(representation, ctx)?;
            Ok(json!(augment_two_simplices(&rep, *s1, *s2)?))
        }
        RepresentCmd::Verify { representation, complex, exhaustive } => {
            let rep = load_representation(representation, ctx)?;
            let x = load_complex(complex, ctx)?;
            let data = verify_representation(&rep, &x)?;
            let mut report = json!({
                "pass": true,
                "dim": rep.dim,
                "faces": data.witnesses.len(),
                "witnesses": witnesses_json(&data),
            });
            if *exhaustive {
                let check = verify_nerve_exhaustive(&rep, &x)?;
                if !check.pass() {
                    return Err(GeometryError::Verification(format!(
                        "exhaustive check disagrees on {:?}, unverified witnesses {:?}",
                        check.mismatches, check.unverified_witnesses
                    ))
                    .into());
                }
                report["exhaustive"] = json!(check);
            }
            Ok(report)
        }
        RepresentCmd::Nerve { input } => {
            let value: Value = serde_json::from_str(&read_file(input)?)?;
            if value.get("boxes").is_some() {
                let boxes: BoxFamily = serde_json::from_value(value)?;
                ctx.guard("box family vertices", boxes.vertices().len())?;
                Ok(json!({ "nerve": complex_to_value(&nerve_of_boxes(&boxes)?) }))
            } else {
                let rep: Representation = serde_json::from_value(value)?;
                ctx.guard("representation vertices", rep.vertices().len())?;
                let data = nerve_with_witnesses(&rep)?;
                Ok(json!({ "nerve": complex_to_value(&data.complex), "witnesses": witnesses_json(&data) }))
            }
        }
    }
}
