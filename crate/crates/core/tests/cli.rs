use std::path::{Path, PathBuf};

use cofl::cli::run;
use tempfile::TempDir;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["cofl"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const EMPTY4: &str =
    r#"{"kind":"segment","metric":"l2","segment":{"p":[0,0],"q":[12,0]},"k":4,"points":[]}"#;
const ONE_POINT: &str =
    r#"{"kind":"segment","metric":"l2","segment":{"p":[0,0],"q":[10,0]},"k":2,"points":[[5,3]]}"#;

#[test]
fn decide_yes_and_no() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "empty4.json", EMPTY4);
    assert_eq!(run_args(&["decide", s(&f), "--radius", "2"]), (0, "YES 0 4 8 12\n".into(), String::new()));
    let (code, out, _) = run_args(&["decide", s(&f), "--radius", "2.1"]);
    assert_eq!((code, out.as_str()), (2, "NO\n"));
}

#[test]
fn solve_prints_radius_centers_and_stats() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "one.json", ONE_POINT);
    let (code, out, _) = run_args(&["solve", s(&f)]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "5.000000000000");
    assert_eq!(lines[1], "centers 0 10");
    assert!(lines[2].starts_with("stats engine=exact decision_calls="));
}

#[test]
fn exact_and_parametric_print_the_same_radius() {
    let dir = TempDir::new().unwrap();
    for seed in 0..5 {
        let f = dir.path().join(format!("g{seed}.json"));
        let seed = seed.to_string();
        assert_eq!(run_args(&["gen", "--seed", &seed, "--n", "6", "--k", "3", "-o", s(&f)]).0, 0);
        let exact = run_args(&["solve", s(&f), "--engine", "exact"]).1;
        let par = run_args(&["solve", s(&f), "--engine", "parametric"]).1;
        assert_eq!(exact.lines().next(), par.lines().next());
    }
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", "{\n  \"kind\": \"segment\",\n  oops\n}\n");
    let (code, out, err) = run_args(&["solve", s(&f)]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("bad.json:3:"), "{err}");
}

#[test]
fn engine_mismatches_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let three = write(&dir, "k3.json", &ONE_POINT.replace("\"k\":2", "\"k\":3"));
    assert_eq!(run_args(&["solve", s(&three), "--engine", "k2"]).0, 1);
    let linf = write(&dir, "linf.json", &ONE_POINT.replace("l2", "linf"));
    assert_eq!(run_args(&["solve", s(&linf), "--engine", "parametric"]).0, 1);
    assert_eq!(run_args(&["solve", s(&linf), "--engine", "exact"]).0, 0);
    let circle = write(&dir, "c.json", r#"{"kind":"circle","circle":{"center":[0,0],"r":5},"k":2,"points":[]}"#);
    assert_eq!(run_args(&["solve", s(&circle), "--engine", "exact"]).0, 1);
    let (code, out, _) = run_args(&["solve", s(&circle), "--engine", "fptas", "--eps", "0.01"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(2).unwrap().starts_with("stats engine=fptas"));
}

#[test]
fn gen_round_trips_through_stdout_and_file() {
    let dir = TempDir::new().unwrap();
    let (code, text, _) = run_args(&["gen", "--seed", "7", "--n", "4", "--k", "2"]);
    assert_eq!(code, 0);
    let f = dir.path().join("g.json");
    run_args(&["gen", "--seed", "7", "--n", "4", "--k", "2", "-o", s(&f)]);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), text);
    assert!(cofl::io::parse_instance(&text, "gen").is_ok());
    let (code, circ, _) = run_args(&["gen", "--seed", "7", "--n", "4", "--k", "2", "--circle"]);
    assert_eq!(code, 0);
    assert!(circ.contains("\"circle\""));
    assert_eq!(run_args(&["gen", "--seed", "7", "--n", "4", "--k", "2", "--circle", "--metric", "linf"]).0, 1);
}

#[test]
fn render_writes_svg() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "one.json", ONE_POINT);
    let svg = dir.path().join("out.svg");
    assert_eq!(run_args(&["render", s(&f), "--radius", "5", "--centers", "0", "10", "-o", s(&svg)]).0, 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<svg"));
    assert_eq!(text.matches("<circle").count(), 2);
    assert_eq!(run_args(&["render", s(&f), "--radius", "-1", "-o", s(&svg)]).0, 1);
}
