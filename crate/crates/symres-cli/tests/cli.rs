use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symres")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normal_form() {
    let o = run(&["nf", "s2 s1 s2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "s1 s2 s1");
}

#[test]
fn twisted_homology() {
    let o = run(&["homology", "--n", "6", "--module", "perm:2", "--ring", "z", "--deg", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["free_rank"], 0);
    assert_eq!(v["invariant_factors"], serde_json::json!([2, 2]));
}

#[test]
fn h3_of_s6() {
    let o = run(&["h3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("factors (2,2,12)"));
}

#[test]
fn json_is_deterministic() {
    let a = run(&["verify", "cocycles", "--n", "6", "--json", "--jobs", "3"]);
    let b = run(&["verify", "cocycles", "--n", "6", "--json", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verifications_exit_zero() {
    for args in [
        &["verify", "d2", "--n", "7"][..],
        &["verify", "exactness", "--n", "4"],
        &["verify", "chain-maps", "--n", "5"],
        &["verify", "q-boundaries", "--n", "5"],
        &["d8-suite"],
        &["transfer", "--n", "6"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["homology", "--n", "4", "--ring", "q", "--deg", "1"][..],
        &["homology", "--n", "4", "--module", "perm:x", "--deg", "1"],
        &["cells", "--n", "9", "--dim", "2"],
        &["h3", "--n", "7"],
        &["nf", "s5", "--n", "3"],
        &["frobnicate"],
        &["verify", "d2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unsafe_large_lifts_bounds() {
    let o = run(&["cells", "--n", "9", "--dim", "1", "--unsafe-large"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8 cells"));
}

#[test]
fn boundaries_and_cells() {
    let o = run(&["boundary", "e1", "--n", "3"]);
    assert_eq!(stdout(&o).trim(), "d e1 = (-1 + s1)*");
    let o = run(&["cells", "--n", "4", "--dim", "2", "--complex", "q", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["count"].as_u64().unwrap() > 0);
    let first = v["cells"][0].as_str().unwrap().to_string();
    let o = run(&["boundary", &first, "--n", "4", "--complex", "q"]);
    assert_eq!(o.status.code(), Some(0), "{first}");
}

#[test]
fn export_writes_json() {
    let dir = std::env::temp_dir().join(format!("symres-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("p4.json");
    let o = run(&["export-complex", "--n", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["group"], "S_4");
    assert_eq!(v["dims"].as_array().unwrap().len(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_output() {
    let o = run(&["cohomology", "--n", "5", "--deg", "2", "--csv"]);
    let s = stdout(&o);
    assert!(s.starts_with("group,module,direction,degree,free_rank,invariant_factors"));
    assert!(s.contains("S_5"));
}
