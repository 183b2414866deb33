use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellsurf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn surface_at_four() {
    let o = run(&["surface", "--a", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("computed: 2I3 + I6"));
    assert!(s.contains("[PASS] rho") && s.contains("computed: 12"));
}

#[test]
fn surface_generic_parameter() {
    let o = run(&["--json", "surface", "--a", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let claims = v["claims"].as_array().unwrap();
    let rho = claims.iter().find(|c| c["label"] == "rho").unwrap();
    assert_eq!(rho["computed"], "11");
    assert!(claims.iter().any(|c| c["computed"] == "4I3"));
}

#[test]
fn rational_parameter_syntax() {
    let o = run(&["surface", "--a", "9/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4I3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["surface", "--a", "x"]).status.code(), Some(2));
    assert_eq!(run(&["surface"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["qseries", "--form", "1,3,1"]).status.code(), Some(2));
    assert_eq!(run(&["qseries", "--tau", "0,-1"]).status.code(), Some(2));
}

#[test]
fn excluded_parameter_is_a_failure() {
    let o = run(&["surface", "--a", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
}

#[test]
fn qseries_zero_check_reports_the_failure() {
    assert_eq!(run(&["qseries"]).status.code(), Some(0));
    let o = run(&["qseries", "--check-zero"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("[FAIL] |theta(i/sqrt 11)| < 1e-4"));
    assert!(s.contains("[PASS] theta zero at (1 + i/sqrt 11)/2"));
}

#[test]
fn qseries_options() {
    let o = run(&["--json", "qseries", "--terms", "40", "--form", "1,0,1", "--tau", "0.1,0.5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r: Vec<i64> = v["details"]["form"]["r_Q"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(&r[..6], &[1, 4, 4, 0, 4, 8]);
    assert!(v["details"]["tau"]["F"]["abs"].as_f64().unwrap() > 0.0);
}

#[test]
fn module_commands_pass() {
    for cmd in ["hesse", "quotient", "trisection", "basechange", "lattice", "reduction", "hurwitz"] {
        let o = run(&[cmd]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stdout(&o));
    }
}

#[test]
fn hurwitz_prints_cycle_notation() {
    let s = stdout(&run(&["hurwitz"]));
    assert!(s.contains("((123),(12),(23),(123)) ((123),(12),(12),(132))"));
}

#[test]
fn all_is_deterministic() {
    let a = run(&["--json", "all"]);
    let b = run(&["--json", "all"]);
    assert_eq!(a.stdout, b.stdout);
    // the q-series zero clause is the one recorded failure
    assert_eq!(a.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let failing: Vec<u64> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["report"]["claims"].as_array().unwrap().iter().any(|cl| cl["status"] == "FAIL"))
        .map(|c| c["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, vec![11]);
}
