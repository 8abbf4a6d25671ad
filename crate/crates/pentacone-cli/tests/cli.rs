//! End-to-end tests of the `pentacone` binary: exit codes, result document
//! shape, determinism, and the artifact emitters.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pentacone"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pentacone-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_input(name: &str, content: &str) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

const CONIC_INPUT: &str = "dim 2\nP 2 3\nQ 3 5\nR 7 7\nS 13 6\nT 11 2\n";
const QUADRIC_INPUT: &str = "dim 3\nA 4 3 0\nB 4 10 4\nC 9 8 3\nD -1 7 2\nE 2 3 5\nF -3 9 7\nG 12 0 0\nH 0 10 0\nJ 0 0 5\n";
const PENTAGON_INPUT: &str = "dim 2\nA 0 0\nB 5 0\nC 1 -1\nD 0 -3\nE 4 -2\n";
const SECTION_INPUT: &str = "dim 3\nA -2.8265 0 -2.8265\nB -0.7076 -1.3267 1.5036\nC -1.8720 0.5822 -1.9605\n";

#[test]
fn conic5_reproduces_fixture() {
    let input = write_input("conic.txt", CONIC_INPUT);
    let out = run(&["conic5", input.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let coeffs: Vec<&str> = doc["pencil"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["6286", "-762", "-1101", "134", "-67", "404"]);
    assert_eq!(doc["multipliers"][0], "494");
    assert_eq!(doc["multipliers"][1], "1064");
    assert_eq!(doc["pencil"]["classification"], "Ellipse");
    assert_eq!(doc["oracle"]["agrees_with_pencil"], true);
    for r in doc["residuals"].as_array().unwrap() {
        assert_eq!(r, "0");
    }
    let ratio = doc["flops"]["ratio"].as_f64().unwrap();
    assert!(ratio > 0.01 && ratio < 0.05);
}

#[test]
fn conic5_pentagon_is_hyperbola_with_plot() {
    let input = write_input("pentagon-conic.txt", PENTAGON_INPUT);
    let plot = scratch("pentagon.svg");
    let out = run(&[
        "conic5",
        input.to_str().unwrap(),
        "--plot",
        plot.to_str().unwrap(),
        "--resolution",
        "128",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pencil"]["classification"], "Hyperbola");
    let svg = std::fs::read_to_string(&plot).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 5);
}

#[test]
fn conic5_exit_codes() {
    // malformed document -> 1
    let bad = write_input("bad.txt", "dim 2\nP 1 oops\n");
    let out = run(&["conic5", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    // wrong arity -> 1
    let four = write_input("four.txt", "dim 2\nA 0 0\nB 1 0\nC 0 1\nD 1 1\n");
    let out = run(&["conic5", four.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // duplicate points -> 2 with named reason
    let dup = write_input("dup.txt", "dim 2\nA 0 0\nA2 0 0\nC 0 1\nD 1 1\nE 2 5\n");
    let out = run(&["conic5", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate"));
}

#[test]
fn quadric9_reproduces_fixture_and_json_input() {
    let input = write_input("quadric.txt", QUADRIC_INPUT);
    let out = run(&["quadric9", input.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["system"][0][0], "-103944");
    assert_eq!(doc["multipliers"][0], "-9842336242680");
    assert_eq!(doc["oracle"]["agrees_with_pencil"], true);

    // the JSON input variant gives the identical result section
    let json_input = serde_json::json!({
        "dimension": 3,
        "points": [
            {"label": "A", "coords": [4, 3, 0]},
            {"label": "B", "coords": [4, 10, 4]},
            {"label": "C", "coords": [9, 8, 3]},
            {"label": "D", "coords": [-1, 7, 2]},
            {"label": "E", "coords": [2, 3, 5]},
            {"label": "F", "coords": [-3, 9, 7]},
            {"label": "G", "coords": [12, 0, 0]},
            {"label": "H", "coords": [0, 10, 0]},
            {"label": "J", "coords": [0, 0, 5]}
        ]
    });
    let jpath = write_input("quadric.json", &json_input.to_string());
    let out2 = run(&["quadric9", jpath.to_str().unwrap(), "--oracle"]);
    assert!(out2.status.success());
    let doc2: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    assert_eq!(doc["coefficients"], doc2["coefficients"]);
    assert_eq!(doc["multipliers"], doc2["multipliers"]);
}

#[test]
fn quadric9_alternative_pairing_same_quadric() {
    let input = write_input("quadric-alt.txt", QUADRIC_INPUT);
    let a = run(&["quadric9", input.to_str().unwrap()]);
    let b = run(&[
        "quadric9",
        input.to_str().unwrap(),
        "--pairing",
        "0,1,2,4",
    ]);
    assert!(a.status.success() && b.status.success());
    let da: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let db: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(da["coefficients"], db["coefficients"]);
    assert_ne!(da["multipliers"], db["multipliers"]);
}

#[test]
fn quadric9_arity_error() {
    let eight = write_input(
        "eight.txt",
        "dim 3\nA 4 3 0\nB 4 10 4\nC 9 8 3\nD -1 7 2\nE 2 3 5\nF -3 9 7\nG 12 0 0\nH 0 10 0\n",
    );
    let out = run(&["quadric9", eight.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("9 points"));
}

#[test]
fn quadric9_mesh_artifact() {
    let input = write_input("quadric-mesh.txt", QUADRIC_INPUT);
    let mesh = scratch("quadric.obj");
    let out = run(&[
        "quadric9",
        input.to_str().unwrap(),
        "--mesh",
        mesh.to_str().unwrap(),
        "--resolution",
        "24",
    ]);
    assert!(out.status.success());
    let obj = std::fs::read_to_string(&mesh).unwrap();
    assert!(obj.lines().filter(|l| l.starts_with("v ")).count() > 100);
    assert!(obj.lines().filter(|l| l.starts_with("f ")).count() > 100);
}

#[test]
fn place_cone_finds_eight_classes_and_is_seed_stable() {
    let input = write_input("pentagon.txt", PENTAGON_INPUT);
    let out = run(&["place-cone", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["class_count"], 8);
    assert_eq!(doc["complete"], true);
    let mut x0: Vec<f64> = doc["x0_values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    x0.sort_by(|a, b| b.total_cmp(a));
    let table = [0.8324, 0.6333, 0.5907, 0.4806, 0.3656, 0.3411, 0.2391, 0.1380];
    for (g, w) in x0.iter().zip(table) {
        assert!((g - w).abs() < 1e-3);
    }
    assert_eq!(doc["mirror_pairs"].as_array().unwrap().len(), 4);

    // a different seed finds the same class set after the deterministic sort
    let out2 = run(&["place-cone", input.to_str().unwrap(), "--seed", "12345"]);
    assert_eq!(out2.status.code(), Some(0));
    let doc2: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    let x0b: Vec<f64> = doc2["x0_values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    for (a, b) in x0.iter().zip(&x0b) {
        assert!((a - b).abs() < 1e-6);
    }
}

#[test]
fn place_cone_budget_and_precondition_exits() {
    let input = write_input("pentagon-budget.txt", PENTAGON_INPUT);
    let out = run(&["place-cone", input.to_str().unwrap(), "--max-starts", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    // A off the origin -> precondition diagnostic, exit 2
    let off = write_input("off.txt", "dim 2\nA 1 0\nB 5 0\nC 1 -1\nD 0 -3\nE 4 -2\n");
    let out = run(&["place-cone", off.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("origin"));
}

#[test]
fn cone_pair_recovers_translation() {
    let input = write_input("section.txt", SECTION_INPUT);
    let out = run(&["cone-pair", input.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let t = doc["selected_translation"].as_array().unwrap();
    let want = [-1.9418, 1.2160, -1.3227];
    for (got, want) in t.iter().zip(want) {
        assert!((got.as_f64().unwrap() - want).abs() < 1e-3);
    }
    let ratio = doc["shared_conic"]["plane_ratio"].as_f64().unwrap();
    assert!((ratio - 0.9449).abs() < 1e-3);
}

#[test]
fn cone_pair_off_cone_exit() {
    let off = write_input("off-cone.txt", "dim 3\nA 1 1 1\nB 2 0 2\nC 0 3 3\n");
    let out = run(&["cone-pair", off.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("off the cone"));
}

#[test]
fn result_documents_are_byte_identical() {
    let input = write_input("det.txt", CONIC_INPUT);
    let a = run(&["conic5", input.to_str().unwrap(), "--oracle"]);
    let b = run(&["conic5", input.to_str().unwrap(), "--oracle"]);
    assert_eq!(a.stdout, b.stdout);
    let input = write_input("det-pent.txt", PENTAGON_INPUT);
    let a = run(&["place-cone", input.to_str().unwrap(), "--seed", "7"]);
    let b = run(&["place-cone", input.to_str().unwrap(), "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selfcheck_passes() {
    let out = run(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("selfcheck: all PASS"));
    assert!(!text.contains("FAIL "));
}
