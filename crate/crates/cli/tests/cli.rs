use std::path::PathBuf;
use std::process::{Command, Output};

fn weilalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weilalg")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn broken_jacobi_exits_one_with_witness() {
    let o = weilalg(&["--input", &data("broken_jacobi.json"), "validate"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL  jacobi"), "{out}");
    assert!(out.contains("basis triple (0, 1, 2)"), "{out}");
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("first failing check: jacobi"), "{err}");
}

#[test]
fn malformed_input_exits_two() {
    for file in ["truncated.json", "bad_index.json", "missing.json"] {
        let o = weilalg(&["--input", &data(file), "validate"]);
        assert_eq!(o.status.code(), Some(2), "{file}");
    }
    assert_eq!(weilalg(&["--catalog", "no-such-algebra", "validate"]).status.code(), Some(2));
    assert_eq!(weilalg(&["--catalog", "sl2", "quantize", "yx0"]).status.code(), Some(2));
    assert_eq!(weilalg(&["--catalog", "sl2", "quantize", "x7"]).status.code(), Some(2));
    assert_eq!(weilalg(&["--catalog", "sl2", "--max-degree", "0", "validate"]).status.code(), Some(2));
    assert_eq!(weilalg(&["validate"]).status.code(), Some(2));
}

#[test]
fn commands_that_need_a_decomposition_refuse_without_one() {
    assert_eq!(weilalg(&["--catalog", "dext-sl2", "hc"]).status.code(), Some(2));
    assert_eq!(weilalg(&["--catalog", "sl2-semidirect", "hc"]).status.code(), Some(2));
    assert_eq!(weilalg(&["--catalog", "sl2", "rouviere"]).status.code(), Some(2));
}

#[test]
fn file_input_matches_catalog_output() {
    let a = weilalg(&["--input", &data("sl2.json"), "--format", "json", "dirac-square"]);
    let b = weilalg(&["--catalog", "sl2", "--format", "json", "dirac-square"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_report_shape() {
    let o = weilalg(&["--catalog", "sl2", "--format", "json", "vogan"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["algebra"], "sl2");
    assert_eq!(v["command"], "vogan");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["summary"]["passed"].as_u64().unwrap() as usize, checks.len());
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["summary"].get("seconds").is_none());
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert!(c["anchor"].as_str().is_some_and(|s| !s.is_empty()));
    }
    let timed = json(&weilalg(&["--catalog", "sl2", "--format", "json", "--timings", "vogan"]));
    assert!(timed["summary"]["seconds"].is_number());
}

#[test]
fn dirac_square_on_abelian_plane() {
    // 𝒟 = Σ ê_a e^a squares to ½ Cas with no trace term
    let out = stdout(&weilalg(&["--catalog", "abelian2", "dirac-square"]));
    assert!(out.contains("tr(Cas) = 0"), "{out}");
    assert!(out.contains("Cas = 2 e0 e1"), "{out}");
    assert!(out.contains("D^2 = hx0 hx1"), "{out}");
}

#[test]
fn quantization_of_generators() {
    let q = |tok: &str| {
        let o = weilalg(&["--catalog", "sl2", "--format", "json", "quantize", tok]);
        assert_eq!(o.status.code(), Some(0));
        json(&o)["result"][0].as_str().unwrap().to_string()
    };
    assert_eq!(q("x0"), "Q(x0) = x0");
    // ē = ê + γ(e) and γ(e) = ½([e,h] h/2 + [e,f] e) = ½(h e - e h) = -e h
    assert_eq!(q("bx0"), "Q(bx0) = -x0 x1 + hx0");
    // two odd generators: Q(μμ') is the Clifford product minus half the pairing
    assert_eq!(q("x0 x2"), "Q(x0 x2) = -1/2 + x0 x2");
}

#[test]
fn every_command_passes_on_its_natural_algebra() {
    let runs: &[&[&str]] = &[
        &["--catalog", "sl2", "validate"],
        &["--catalog", "sl2", "duflo", "4"],
        &["--catalog", "heis1", "dirac"],
        &["--catalog", "dext-sl2", "dirac-square"],
        &["--catalog", "heis1", "quantize", "hx0 x1 bx2"],
        &["--catalog", "sl2", "hc"],
        &["--catalog", "heis1", "vogan"],
        &["--catalog", "cubic-n3", "--max-degree", "3", "rouviere"],
        &["--catalog", "sl2", "--max-degree", "3", "rigidity"],
        &["--catalog", "abelian2", "verify", "--suite", "all"],
        &["--catalog", "heis1", "verify", "--suite", "relative"],
    ];
    for args in runs {
        let o = weilalg(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
    }
}
