use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fused-hecke").chain(args.iter().copied());
    let code = fused_hecke_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dimension_and_kostka() {
    assert_eq!(run(&["dim", "--k", "2,2,2"]), (0, "21\n".into(), String::new()));
    assert_eq!(run(&["dim", "--k", "const:3", "--n", "2"]).1, "4\n");
    assert_eq!(run(&["kostka", "--shape", "4,4", "--weight", "2,2,2,2"]).1, "3\n");
}

#[test]
fn short_composition_is_extended_with_a_warning() {
    let (code, out, err) = run(&["dim", "--k", "2", "--n", "3"]);
    assert_eq!((code, out.as_str()), (0, "21\n"));
    assert!(err.contains("warning"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["dim"]).0, 2);
    assert_eq!(run(&["dim", "--k", "2,x"]).0, 2);
    assert_eq!(run(&["kostka", "--shape", "1,2", "--weight", "3"]).0, 2);
    assert_eq!(run(&["mul", "--k", "2,2", "--left", "1,1/1,1", "--right", "2,0/0,1"]).0, 2);
    assert_eq!(run(&["dim", "--k", "2,2", "--format", "dot"]).0, 2);
    assert_eq!(run(&["golden", "--only", "no_such_fixture"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn classical_and_q_products() {
    let v = json(&["mul", "--k", "2,2", "--left", "1,1/1,1", "--right", "1,1/1,1", "--classical"]);
    let coeffs: Vec<&str> = v.as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap()).collect();
    assert_eq!(coeffs, vec!["1/4", "1/2", "1/4"]);
    let v = json(&["mul", "--k", "2,2", "--left", "1,1/1,1", "--right", "1,1/1,1", "--at", "1"]);
    let at_one: Vec<&str> = v.as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap()).collect();
    assert_eq!(at_one, coeffs);
    let v = json(&["mul", "--k", "2,2", "--left", "1,1/1,1", "--right", "1,1/1,1"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn basis_and_s_set() {
    let v = json(&["basis", "--k", "2,1,1"]);
    assert_eq!(v.as_array().unwrap().len(), 7);
    let v = json(&["sset", "--k", "2,2,2"]);
    let dims: u64 = v.as_array().unwrap().iter().map(|x| x["dim"].as_u64().unwrap().pow(2)).sum();
    assert_eq!(dims, 21);
}

#[test]
fn diagrams_in_dot_and_json() {
    let (code, dot, _) = run(&["bratteli", "--k", "const:2", "--n-max", "3", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph bratteli {"));
    assert!(dot.contains("(2,2) (1)"));
    assert_eq!(dot, run(&["bratteli", "--k", "const:2", "--n-max", "3", "--format", "dot"]).1);
    let v = json(&["centralizer-diagram", "--k", "const:1", "--N", "2", "--n-max", "4"]);
    let last = v["levels"].as_array().unwrap().last().unwrap().as_array().unwrap();
    assert!(last.iter().all(|x| x["partition"].as_array().unwrap().len() <= 2));
}

#[test]
fn irrep_dimensions() {
    let v = json(&["irrep", "--k", "2,2", "--shape", "3,1", "--at", "2"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 3);
}

#[test]
fn schur_weyl_rank_agrees() {
    let v = json(&["sw-rank", "--k", "1,1,1", "--N", "2"]);
    assert_eq!(v["expected"], 5);
    assert_eq!(v["agrees"], true);
}

#[test]
fn conjecture_check_single_case() {
    let v = json(&["check-conjectures", "--k", "2,2,2", "--N", "2"]);
    assert_eq!(v["centrality"], "verified");
    assert_eq!(v["ideal_generation"], "verified");
    assert_eq!(v["ideal_dim_computed"], v["ideal_dim_expected"]);
    assert_eq!(run(&["check-conjectures", "--k", "2,2"]).0, 2);
}

#[test]
fn golden_suite_through_the_binary() {
    let exe = env!("CARGO_BIN_EXE_fused-hecke");
    let out = Command::new(exe).args(["golden", "--format", "table"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
    let listed = Command::new(exe).args(["golden", "--list"]).output().unwrap();
    assert_eq!(String::from_utf8(listed.stdout).unwrap().lines().count(), text.lines().count());
    let bad = Command::new(exe).args(["dim", "--k"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("check-conjectures"));
}
