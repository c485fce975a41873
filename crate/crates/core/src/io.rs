//! JSON file formats.
//!
//! Complexes are `{"vertices":[...],"facets":[[...],...]}` or
//! `{"vertices":[...],"missing_faces":[[...],...]}`, with exactly one of the
//! two face keys. An optional `"ghost_vertices"` list names vertices that are
//! allowed to lie in no face.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::boxicity::{Decomposition, LowerBoundCertificate};
use crate::complex::SimplicialComplex;
use crate::error::{ComplexError, Error};
use crate::face::Face;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    vertices: Vec<u32>,
    facets: Option<Vec<Vec<u32>>>,
    missing_faces: Option<Vec<Vec<u32>>>,
    ghost_vertices: Option<Vec<u32>>,
}

fn face_of(labels: &[u32]) -> Result<Face, ComplexError> {
    Face::from_labels(labels.iter().copied())
}

pub fn complex_from_str(s: &str) -> Result<SimplicialComplex, Error> {
    complex_from_value(serde_json::from_str(s)?)
}

pub fn complex_from_value(value: Value) -> Result<SimplicialComplex, Error> {
    let file: ComplexFile = serde_json::from_value(value).map_err(|e| Error::Schema(e.to_string()))?;
    let vertices = face_of(&file.vertices)?;
    let ghosts = face_of(file.ghost_vertices.as_deref().unwrap_or(&[]))?;
    let x = match (file.facets, file.missing_faces) {
        (Some(facets), None) => {
            let facets = facets.iter().map(|f| face_of(f)).collect::<Result<Vec<_>, _>>()?;
            SimplicialComplex::from_facets_with_ghosts(vertices, facets, ghosts)?
        }
        (None, Some(missing)) => {
            let missing = missing.iter().map(|f| face_of(f)).collect::<Result<Vec<_>, _>>()?;
            if ghosts.is_empty() {
                SimplicialComplex::from_missing_faces(vertices, missing)?
            } else {
                let x = SimplicialComplex::from_missing_faces_allowing_ghosts(vertices, missing)?;
                if let Some(v) = x.ghost_vertices().difference(ghosts).first() {
                    return Err(ComplexError::UncoveredVertex(v).into());
                }
                x
            }
        }
        _ => return Err(Error::Schema("exactly one of \"facets\" and \"missing_faces\" is required".into())),
    };
    Ok(x)
}

/// Facet form, with `ghost_vertices` only when there are any.
pub fn complex_to_value(x: &SimplicialComplex) -> Value {
    let mut v = json!({ "vertices": x.vertices(), "facets": x.facets() });
    if !x.ghost_vertices().is_empty() {
        v["ghost_vertices"] = json!(x.ghost_vertices());
    }
    v
}

/// Missing-face form.
pub fn complex_to_missing_value(x: &SimplicialComplex) -> Value {
    let mut v = json!({ "vertices": x.vertices(), "missing_faces": x.missing_faces().members });
    if !x.ghost_vertices().is_empty() {
        v["ghost_vertices"] = json!(x.ghost_vertices());
    }
    v
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        complex_to_value(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        complex_from_value(value).map_err(serde::de::Error::custom)
    }
}

/// `{"d","cover","factors","bound","lower"}`; each factor is written in
/// missing-face form.
pub fn decomposition_to_value(dec: &Decomposition, lower: &LowerBoundCertificate) -> Value {
    json!({
        "d": dec.d,
        "cover": dec.cover.sets,
        "factors": dec.factors.iter().map(|f| complex_to_missing_value(&f.complex)).collect::<Vec<_>>(),
        "bound": dec.bound,
        "lower": lower,
    })
}
