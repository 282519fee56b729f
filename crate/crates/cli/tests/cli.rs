use std::process::{Command, Output};

use parh_cli::schema::{conforms, schemas};
use serde_json::Value;

fn parh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = parh(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn kpar_dimension_line() {
    let o = parh(&["kpar", "dim", "--group", "C3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next().unwrap(), "dim K_par C3 = 8");
}

#[test]
fn corollary_b_json_prefix() {
    let o = parh(&["verify", "corollary-b", "--group", "C2", "--field", "F2", "--max", "3", "--json"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with(r#"{"dims_bar":[2,1,1,1],"dims_sum":[2,1,1,1],"equal":true"#), "{}", stdout(&o));
}

#[test]
fn quotient_report() {
    let v = json(&["z", "quotient", "--k", "1", "--bound", "6"]);
    assert_eq!(v["s2_in_s1"], Value::Bool(true));
    assert_eq!(v["N"], 6);
}

#[test]
fn help_lists_the_command_tree() {
    let top = stdout(&parh(&["--help"]));
    for c in ["groups", "kpar", "groupoid", "homology", "verify", "z"] {
        assert!(top.contains(c), "{c}");
    }
    let verify = stdout(&parh(&["verify", "--help"]));
    for c in ["theorem-a", "corollary-b", "section5", "section6", "kpar-coeff-vanishing"] {
        assert!(verify.contains(c), "{c}");
    }
    let z = stdout(&parh(&["z", "--help"]));
    for c in ["relations", "quotient", "cancellation", "ig-decompose"] {
        assert!(z.contains(c), "{c}");
    }
    let h = stdout(&parh(&["homology", "--help"]));
    for c in ["partial", "cohomology", "ordinary"] {
        assert!(h.contains(c), "{c}");
    }
}

#[test]
fn exit_status_contract() {
    assert_eq!(parh(&["verify", "corollary-b", "--group", "C2"]).status.code(), Some(0));
    let unknown = parh(&["verfy"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("verify"));
    assert_eq!(parh(&["kpar", "dim", "--group", "C7x"]).status.code(), Some(2));
    assert_eq!(parh(&["homology", "partial", "--field", "F4"]).status.code(), Some(2));
    assert_eq!(parh(&["homology", "partial", "--module", "W⊗trivial"]).status.code(), Some(2));
    assert_eq!(parh(&["z", "quotient", "--k", "2", "--bound", "5"]).status.code(), Some(2));
    let cap = parh(&["homology", "partial", "--group", "S3", "--max", "6"]);
    assert_eq!(cap.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&cap.stderr).lines().count(), 1);
    assert_eq!(parh(&["groupoid", "components", "--group", "C3", "--max-order", "2"]).status.code(), Some(3));
    assert_eq!(parh(&["homology", "partial", "--group", "C3", "--cap", "10"]).status.code(), Some(3));
    assert_eq!(parh(&["homology", "partial", "--group", "C3", "--cap", "10", "--no-cap"]).status.code(), Some(0));
}

#[test]
fn reports_match_their_schemas() {
    let s = schemas();
    let cases: &[(&str, &[&str])] = &[
        ("groups list", &["groups", "list"]),
        ("groups show", &["groups", "show", "--group", "S3"]),
        ("kpar dim", &["kpar", "dim", "--group", "C2xC2"]),
        ("kpar basis", &["kpar", "basis", "--group", "C3"]),
        ("groupoid components", &["groupoid", "components", "--group", "C4"]),
        ("homology partial", &["homology", "partial", "--group", "C2", "--field", "F2"]),
        ("homology cohomology", &["homology", "cohomology", "--group", "C3", "--module", "regular"]),
        ("homology ordinary", &["homology", "ordinary", "--group", "C3", "--component", "2"]),
        ("verify theorem-a", &["verify", "theorem-a", "--group", "C3", "--field", "F3"]),
        ("verify corollary-b", &["verify", "corollary-b", "--group", "C3", "--field", "F3"]),
        ("verify section5", &["verify", "section5", "--group", "C3"]),
        ("verify section6", &["verify", "section6", "--group", "C2"]),
        ("verify kpar-coeff-vanishing", &["verify", "kpar-coeff-vanishing", "--group", "C2"]),
        ("z relations", &["z", "relations", "--bound", "2"]),
        ("z quotient", &["z", "quotient"]),
        ("z cancellation", &["z", "cancellation", "--group", "C3", "--count", "5"]),
        ("z ig-decompose", &["z", "ig-decompose", "--count", "5", "--bound", "3"]),
    ];
    assert_eq!(cases.len(), s.as_object().unwrap().len());
    for (name, args) in cases {
        let v = json(args);
        assert!(conforms(&v, &s[*name]), "{name}: {v}");
    }
    assert!(!conforms(&json(&["kpar", "dim"]), &s["homology partial"]));
    let decomposed = json(&["z", "ig-decompose", "--element", "e{1}[2] - e{1}e{2}"]);
    assert!(conforms(&decomposed, &s["z ig-decompose"]));
}

#[test]
fn help_schema_is_json() {
    let o = parh(&["--help-schema"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, schemas());
}

#[test]
fn text_and_json_agree() {
    let v = json(&["verify", "corollary-b", "--group", "C2xC2", "--field", "F2"]);
    let text = stdout(&parh(&["verify", "corollary-b", "--group", "C2xC2", "--field", "F2"]));
    let dims: Vec<String> = v["dims_bar"].as_array().unwrap().iter().map(|d| d.to_string()).collect();
    assert_eq!(dims, ["6", "5", "6"]);
    assert!(text.contains(&format!("homology ({})", dims.join(", "))), "{text}");
    let h = json(&["homology", "partial", "--group", "C3", "--field", "F3", "--module", "B"]);
    let text = stdout(&parh(&["homology", "partial", "--group", "C3", "--field", "F3", "--module", "B"]));
    assert_eq!(h["dims"], serde_json::json!([3, 1, 1]));
    assert!(text.contains("dims (3, 1, 1)"));
}

#[test]
fn seeded_runs_are_deterministic() {
    let run = |seed: &str| stdout(&parh(&["z", "cancellation", "--k", "4", "--count", "3", "--seed", seed, "--json"]));
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
    let v: Value = serde_json::from_str(&run("0")).unwrap();
    assert_eq!(v["passed"], 3);
}

#[test]
fn cayley_table_input() {
    let path = std::env::temp_dir().join(format!("parh-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let o = parh(&["kpar", "dim", "--group", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("= 8"));
}

#[test]
fn induced_module_needs_a_component() {
    let v = json(&["homology", "partial", "--group", "C3", "--module", "W⊗regular", "--component", "2"]);
    assert_eq!(v["module"], "W2⊗regular");
    assert_eq!(v["dims"], serde_json::json!([1, 0, 0]));
}
