use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use invbasis::cli::{run, Outcome, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION};

fn problem_path(name: &str) -> String {
    format!("{}/problems/{name}.txt", env!("CARGO_MANIFEST_DIR"))
}

fn invoke(args: &[&str]) -> Outcome {
    run(std::iter::once("invbasis").chain(args.iter().copied()))
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("invbasis-cli-{}-{name}.txt", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

fn body_lines(out: &str) -> Vec<&str> {
    out.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn janet_basis_of_small_xyz() {
    let out = invoke(&["basis", "janet", &problem_path("small_xyz")]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("# size: 6\n"));
    let mut got = body_lines(&out.stdout);
    got.sort();
    let mut want = vec!["x^2*y - z", "x^2*z - z^3", "x*y - y*z", "x*z - z^2", "y^2*z - y", "y*z^2 - z"];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn separation_table_of_infinite_pommaret() {
    let out = invoke(&["separation", "--division", "janet", &problem_path("infinite_pommaret")]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        body_lines(&out.stdout),
        [
            "x1*x2 | mult: x1, x2, x3 | nonmult: -",
            "x2*x3 | mult: x2, x3 | nonmult: x1",
            "x3^2 | mult: x3 | nonmult: x1, x2",
        ]
    );
    let out = invoke(&["separation", "--division", "pommaret", &problem_path("infinite_pommaret")]);
    assert!(out.stdout.contains("x3^2 | mult: x3 | nonmult: x1, x2"));
    assert!(out.stdout.contains("x1*x2 | mult: x2, x3 | nonmult: x1"));
}

#[test]
fn exit_codes() {
    let empty = scratch("empty", "vars: x, y\norder: degrevlex\nchar: 0\npolys:\n");
    assert_eq!(invoke(&["basis", "janet", empty.to_str().unwrap()]).code, EXIT_PARSE);

    let bad = scratch("bad", "vars: x, y\norder: degrevlex\nchar: 0\npolys:\nx^^2\n");
    let out = invoke(&["basis", "janet", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("at 5:3"), "{}", out.stderr);

    let out = invoke(&["check", "finite-pommaret", &problem_path("infinite_pommaret")]);
    assert_eq!(out.code, EXIT_PRECONDITION);

    let out = invoke(&["check", "finite-pommaret", &problem_path("zero_dim_basis")]);
    assert_eq!((out.code, out.stdout.trim()), (EXIT_OK, "true"));

    let out = invoke(&["check", "janet", &problem_path("small_xyz")]);
    assert_eq!((out.code, out.stdout.trim()), (EXIT_OK, "false"));
    assert_eq!(invoke(&["basis", "frobnicate", &problem_path("small_xyz")]).code, EXIT_PARSE);
    assert_eq!(invoke(&["basis", "janet", "/nonexistent/input.txt"]).code, 1);
    for p in [empty, bad] {
        std::fs::remove_file(p).unwrap();
    }
}

#[test]
fn output_is_deterministic() {
    for name in ["four_vars", "small_xyz", "heat"] {
        let a = invoke(&["--stats", "basis", "minimal-janet", &problem_path(name)]);
        let b = invoke(&["--stats", "basis", "minimal-janet", &problem_path(name)]);
        assert_eq!(a.code, EXIT_OK, "{name}: {}", a.stderr);
        assert_eq!(a, b);
    }
}

#[test]
fn verify_over_corpus() {
    for name in ["infinite_pommaret", "four_vars", "small_xyz", "zero_dim", "zero_dim_basis", "modular", "heat", "two_unknowns"] {
        for kind in ["janet", "minimal-janet", "groebner"] {
            let out = invoke(&["--verify", "basis", kind, &problem_path(name)]);
            assert_eq!(out.code, EXIT_OK, "{name} {kind}: {}", out.stderr);
        }
    }
}

#[test]
fn differential_output_uses_derivative_names() {
    let out = invoke(&["basis", "minimal-janet", &problem_path("heat")]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(body_lines(&out.stdout).iter().all(|l| l.contains('[')), "{}", out.stdout);
}

#[test]
fn binary_round_trip() {
    let out = Command::new(env!("CARGO_BIN_EXE_invbasis"))
        .args(["basis", "janet", &problem_path("small_xyz")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), invoke(&["basis", "janet", &problem_path("small_xyz")]).stdout);

    let out = Command::new(env!("CARGO_BIN_EXE_invbasis"))
        .args(["check", "finite-pommaret", &problem_path("infinite_pommaret")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_PRECONDITION));
    assert!(!out.stderr.is_empty());
}
