use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use boxd_core::geometry::Representation;
use serde_json::{json, Value};
use tempfile::TempDir;

const FANO: &str =
    r#"{"vertices":[1,2,3,4,5,6,7],"missing_faces":[[1,2,3],[1,4,5],[1,6,7],[2,4,7],[3,4,6],[2,5,6],[3,5,7]]}"#;
const C4: &str = r#"{"vertices":[1,2,3,4],"facets":[[1,2],[2,3],[3,4],[1,4]]}"#;

fn boxd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxd")).args(args).output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = boxd(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn info_on_fano() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    let v = ok_json(&["complex", "info", s(&fano)]);
    assert_eq!(v["n"], 7);
    assert_eq!(v["num_facets"], 7);
    assert_eq!(v["num_missing_faces"], 7);
    assert_eq!(v["h"], 2);
}

#[test]
fn boxd_run_on_fano() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    let v = ok_json(&["boxd", "run", s(&fano), "-d", "2"]);
    assert_eq!(v, json!({"upper":7,"lower":{"kind":"steiner_exact","value":7},"exact":7}));
}

#[test]
fn homology_and_leray_of_the_four_cycle() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.json", C4);
    let h = ok_json(&["complex", "homology", s(&c4), "--field", "q"]);
    assert_eq!(h["betti"], json!({"-1":0,"0":0,"1":1}));
    assert_eq!(h["field"], "q");
    assert_eq!(ok_json(&["complex", "leray", s(&c4)])["leray"], 2);
    let g = ok_json(&["complex", "gamma", s(&c4)]);
    assert_eq!(g["duality"]["pass"], true);
    assert_eq!(g["labels"], json!([[1, 3], [2, 4]]));
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    for args in [
        vec!["boxd", "decompose", s(&fano), "-d", "2"],
        vec!["complex", "gamma", s(&fano)],
        vec!["demo", "fano-rep4"],
        vec!["demo", "roberts-n", "--n", "6"],
    ] {
        let a = boxd(&args);
        let b = boxd(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    let target = dir.path().join("cover.json");
    let out = boxd(&["boxd", "cover", s(&fano), "-d", "2", "-o", s(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["cover"].as_array().unwrap().len(), 7);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    let bad = write(&dir, "bad.json", r#"{"vertices":[1,2],"facets":[[1,2]],"missing_faces":[]}"#);

    let guard = boxd(&["complex", "leray", s(&fano), "--max-vertices", "6"]);
    assert_eq!(guard.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&guard.stderr).contains("warning"));
    let v: Value = serde_json::from_slice(&guard.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "guard");

    let schema = boxd(&["complex", "info", s(&bad)]);
    assert_eq!(schema.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&schema.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "schema");

    for args in [
        vec!["boxd", "run", s(&fano)],
        vec!["demo", "no-such-demo"],
        vec!["demo", "roberts-n", "--n", "5"],
        vec!["complex", "info", "/nonexistent/file.json"],
    ] {
        let out = boxd(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(v["error"]["message"].is_string());
    }

    assert_eq!(boxd(&["--help"]).status.code(), Some(0));
}

#[test]
fn user_cover_and_refutation() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    let cover = write(&dir, "cover.json", "[[1,2,3],[1,4,5],[1,6,7],[2,4,7],[3,4,6],[2,5,6],[3,5,7]]");
    let dec = ok_json(&["boxd", "decompose", s(&fano), "-d", "2", "--cover", s(&cover)]);
    assert_eq!(dec["bound"], 7);
    assert_eq!(dec["factors"][0], json!({"vertices":[1,2,3,4,5,6,7],"missing_faces":[[1,2,3]]}));

    let short = write(&dir, "short.json", "[[1,2,3]]");
    assert_eq!(boxd(&["boxd", "decompose", s(&fano), "-d", "2", "--cover", s(&short)]).status.code(), Some(1));

    let assignment = write(
        &dir,
        "assign.json",
        r#"{"factors":6,"map":[[[1,2,3],0],[[1,4,5],0],[[1,6,7],1],[[2,4,7],2],[[3,4,6],3],[[2,5,6],4],[[3,5,7],5]]}"#,
    );
    let r = ok_json(&["boxd", "refute", s(&fano), "-d", "2", "--assignment", s(&assignment)]);
    assert_eq!(r["factor"], 0);
    assert_eq!(r["tau1"], json!([1, 2, 3]));
    assert_eq!(r["tau2"], json!([1, 4, 5]));
}

#[test]
fn designs_commands() {
    let dir = TempDir::new().unwrap();
    let fano = ok_json(&["designs", "builtin", "fano"]);
    assert_eq!(fano["blocks"].as_array().unwrap().len(), 7);
    let path = write(&dir, "fano-design.json", &fano.to_string());
    let report = ok_json(&["designs", "check", s(&path)]);
    assert_eq!(report["class"], "steiner");
    assert_eq!(report["bound"], 7);
    assert_eq!(report["uncovered"], 28);
    assert_eq!(report["min_near_cover"], 3);
    let partial = write(&dir, "partial.json", r#"{"t":2,"k":3,"n":7,"blocks":[[1,2,3],[1,4,5]]}"#);
    assert_eq!(ok_json(&["designs", "check", s(&partial)])["class"], "partial");
    assert_eq!(boxd(&["designs", "builtin", "nope"]).status.code(), Some(1));
}

#[test]
fn emitted_representations_reverify() {
    let dir = TempDir::new().unwrap();
    let fano = write(&dir, "fano.json", FANO);
    let demo = ok_json(&["demo", "fano-rep4"]);
    assert_eq!(demo["pass"], true);
    assert_eq!(demo["representation"]["dim"], 4);
    let rep = write(&dir, "rep4.json", &demo["representation"].to_string());
    let v = ok_json(&["represent", "verify", s(&rep), s(&fano), "--exhaustive"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["exhaustive"]["subsets_checked"], 127);

    let start = write(&dir, "x0.json", &demo["start_representation"].to_string());
    let step = ok_json(&["represent", "augment", s(&start), "--s1", "1,2,5,7", "--s2", "1,2,4,6"]);
    assert_eq!(step["witness"], json!(["1"]));
    assert_eq!(step["witness_source"], "lp");

    let c4 = write(&dir, "c4.json", C4);
    let hollow = write(&dir, "hollow.json", r#"{"vertices":[1,2,3,4],"missing_faces":[[1,3]]}"#);
    let r1 = ok_json(&["represent", "wegner", s(&hollow), "--u", "1,3"]);
    let hollow2 = write(&dir, "hollow2.json", r#"{"vertices":[1,2,3,4],"missing_faces":[[2,4]]}"#);
    let r2 = ok_json(&["represent", "wegner", s(&hollow2), "--u", "2,4"]);
    let p1 = write(&dir, "r1.json", &r1.to_string());
    let p2 = write(&dir, "r2.json", &r2.to_string());
    let product = ok_json(&["represent", "product", s(&p1), s(&p2)]);
    assert_eq!(product["dim"], 2);
    let pp = write(&dir, "prod.json", &product.to_string());
    serde_json::from_value::<Representation>(product).unwrap();
    assert_eq!(ok_json(&["represent", "verify", s(&pp), s(&c4)])["pass"], true);
    assert_eq!(boxd(&["represent", "verify", s(&p1), s(&c4)]).status.code(), Some(1));
}

#[test]
fn nerve_of_boxes_and_of_intervals() {
    let dir = TempDir::new().unwrap();
    let boxes = write(&dir, "boxes.json", r#"{"dim":1,"boxes":{"1":[["0","1"]],"2":[["1","2"]],"3":[["3","4"]]}}"#);
    let v = ok_json(&["represent", "nerve", s(&boxes)]);
    assert_eq!(v["nerve"], json!({"vertices":[1,2,3],"facets":[[1,2],[3]]}));
    let rep = write(&dir, "rep.json", r#"{"dim":1,"sets":{"1":[["0"],["1"]],"2":[["1/2"],["2"]],"3":null}}"#);
    let v = ok_json(&["represent", "nerve", s(&rep)]);
    assert_eq!(v["nerve"], json!({"vertices":[1,2,3],"facets":[[1,2]],"ghost_vertices":[3]}));
}

#[test]
fn remaining_demos() {
    let b2 = ok_json(&["demo", "fano-box2"]);
    assert_eq!(b2["box_2"], 7);
    assert_eq!(b2["factor_representations"].as_array().unwrap().len(), 7);
    assert!(b2["factor_representations"].as_array().unwrap().iter().all(|r| r["dim"] == 2));
    let r = ok_json(&["demo", "roberts-n", "--n", "8"]);
    assert_eq!(r["box_1"], 4);
    assert_eq!(r["top_betti"], 1);
    let x = ok_json(&["demo", "x29-build"]);
    assert_eq!(x["num_missing_faces"], 12);
    assert_eq!(x["lower"], json!({"kind":"steiner_exact","value":12}));
    assert!(x.get("representation").is_none());
}
