use std::path::Path;
use std::process::Command;

use fanoq::cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use fanoq::lattice2d::known;
use fanoq::polygonal::{build_bquiv, build_quiv, markov_point};
use tempfile::TempDir;

fn fanoq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("fanoq").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn degree_of_p112() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p112.json", r#"{"vertices": [[2,-1],[0,1],[-1,0]]}"#);
    assert_eq!(fanoq(&["degree", &p]), (EXIT_OK, "8\n".into(), String::new()));
}

#[test]
fn reconstruct_p113_block_quiver() {
    let dir = TempDir::new().unwrap();
    let q = write(&dir, "q113.json", r#"{"labels": [[1,1],[1,1],[1,3]], "exchange": [[0,5,-5],[-5,0,5],[5,-5,0]]}"#);
    let (code, out, _) = fanoq(&["reconstruct", &q]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outcome"], "success");
    assert_eq!(v["polygon"]["vertices"].as_array().unwrap().len(), 3);
    for key in ["y", "x", "s", "t"] {
        assert!(v["transcript"][key].is_array(), "{key}");
    }
}

#[test]
fn failed_reconstruction_names_the_condition() {
    let dir = TempDir::new().unwrap();
    let q = write(&dir, "bad.json", r#"{"labels": [[2,1],[1,1],[1,1]], "exchange": [[0,4,-4],[-4,0,8],[4,-8,0]]}"#);
    let (code, out, _) = fanoq(&["reconstruct", &q]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outcome"], "failure");
    assert_eq!(v["failed_condition"]["condition"], "C6");
}

#[test]
fn feasibility_of_the_impossible_triangle() {
    let (code, out, _) = fanoq(&["feasibility", "--w", "1,1,2", "--l", "1,3,2", "--tau", "2", "--residual", "-5/3"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "infeasible: 8g = 50\n"));
}

#[test]
fn outputs_match_library_calls() {
    let dir = TempDir::new().unwrap();
    let p = known::p116();
    let path = write(&dir, "p.json", &serde_json::to_string(&p).unwrap());
    let cases: [(&str, String); 3] = [
        ("quiver", serde_json::to_string(&build_quiv(&p)).unwrap()),
        ("block", serde_json::to_string(&build_bquiv(&p)).unwrap()),
        ("markov", serde_json::to_string(&markov_point(&p)).unwrap()),
    ];
    for (cmd, expected) in cases {
        let (code, out, _) = fanoq(&[cmd, &path]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim_end(), expected, "{cmd}");
    }
}

#[test]
fn rationals_are_exact_strings() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", &serde_json::to_string(&known::p116()).unwrap());
    let (_, out, _) = fanoq(&["markov", &p]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["t"], "32/3");
    assert_eq!(v["residual"], "0");
    let (_, out, _) = fanoq(&["content", &p]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["residual_sum"], "2/3");
    assert_eq!(v["tau"], 2);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("out.jsonl");
    let target = target.to_str().unwrap();
    assert_eq!(fanoq(&["enumerate", "--bound", "1", "--out", target]).0, EXIT_OK);
    let first = std::fs::read_to_string(target).unwrap();
    assert_eq!(first.lines().count(), 11);
    assert_eq!(fanoq(&["enumerate", "--bound", "1"]).1, first);
}

#[test]
fn mutations() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p1xp1.json", r#"{"vertices": [[1,0],[0,1],[-1,0],[0,-1]]}"#);
    let (code, out, _) = fanoq(&["mutate-polygon", &p, "--vertex", "0"]);
    assert_eq!(code, EXIT_OK);
    let mutated = write(&dir, "m.json", &out);
    assert_eq!(fanoq(&["degree", &mutated]).1, "8\n");
    let q = write(&dir, "q.json", &serde_json::to_string(&build_quiv(&known::p1xp1()).quiver).unwrap());
    let (code, out, _) = fanoq(&["mutate-quiver", &q, "--vertex", "0", "--k", "-2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("[-5,1]"), "{out}");
    let r = write(&dir, "r.json", &serde_json::to_string(&known::p116()).unwrap());
    let (code, _, err) = fanoq(&["mutate-polygon", &r, "--vertex", "2"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("R-cone"), "{err}");
}

#[test]
fn complex3_and_equivalence() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p3.json", r#"{"vertices": [[-1,-1,-1],[-1,0,-1],[0,-1,-1],[2,2,3]]}"#);
    let (code, out, _) = fanoq(&["complex3", &p]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mults: Vec<i64> =
        v["simplices"].as_array().unwrap().iter().map(|s| s["multiplicity"].as_i64().unwrap()).collect();
    assert_eq!(mults, vec![16; 4]);

    let a = write(&dir, "a.json", r#"{"vertices": [[1,0],[1,2],[-2,-1]]}"#);
    let b = write(&dir, "b.json", r#"{"vertices": [[-1,0],[2,-1],[-1,2]]}"#);
    assert_eq!(fanoq(&["equivalent", &a, &b]).1, "true\n");
    assert_eq!(fanoq(&["equivalent", &a, &b, "--group", "SL"]).1, "false\n");
}

#[test]
fn errors_and_usage() {
    let dir = TempDir::new().unwrap();
    assert_eq!(fanoq(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(fanoq(&[]).0, EXIT_USAGE);
    assert_eq!(fanoq(&["degree"]).0, EXIT_USAGE);
    assert_eq!(fanoq(&["--help"]).0, EXIT_OK);
    let missing = dir.path().join("missing.json");
    assert_eq!(fanoq(&["degree", missing.to_str().unwrap()]).0, EXIT_DOMAIN);
    let not_fano = write(&dir, "bad.json", r#"{"vertices": [[1,0],[0,1],[1,1]]}"#);
    let (code, _, err) = fanoq(&["degree", &not_fano]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.starts_with("error:"), "{err}");
    let asym = write(&dir, "asym.json", r#"{"labels": [[1,1],[1,1]], "exchange": [[0,1],[1,0]]}"#);
    assert_eq!(fanoq(&["block", &asym]).0, EXIT_DOMAIN);
}

#[test]
fn check_on_a_polygon_and_a_corpus() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "oct.json", &serde_json::to_string(&known::octagon()).unwrap());
    let (code, out, _) = fanoq(&["check", &p]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("1 polygons"));
    assert!(!out.contains("FAIL"));
    assert_eq!(fanoq(&["check", "--bound", "1"]).0, EXIT_OK);
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fanoq"))
}

#[test]
fn binary_exit_codes_and_seeded_sampling() {
    let status = binary().arg("nope").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));

    let sample = |seed: &str| {
        let out = binary().args(["check", "--bound", "2", "--sample", "4"]).env("FANOQ_SEED", seed).output().unwrap();
        assert_eq!(out.status.code(), Some(EXIT_OK));
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(sample("11"), sample("11"));
    assert!(sample("11").starts_with("4 polygons"));

    let bad = binary().args(["check", "--bound", "1", "--sample", "2"]).env("FANOQ_SEED", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_DOMAIN));
    assert!(Path::new(env!("CARGO_BIN_EXE_fanoq")).exists());
}
