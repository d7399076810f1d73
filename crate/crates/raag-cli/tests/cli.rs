//! End-to-end tests of the `raag` binary: exit codes, stdout/stderr
//! content, and byte-for-byte golden output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raag"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_exit_codes_cover_all_classes() {
    for (name, expected) in [
        ("p4.graph", 0),
        ("k3.graph", 2),
        ("p3.graph", 2),
        ("edgeless2.graph", 2),
        ("edgeless3.graph", 2),
        ("star_pendant.graph", 0),
        ("malformed.graph", 1),
    ] {
        let out = run(&["analyze", fixture(name).to_str().unwrap()]);
        assert_eq!(code(&out), expected, "analyze {name}\n{}", stderr(&out));
    }
}

#[test]
fn analyze_path_graph_matches_golden() {
    let out = run(&["analyze", fixture("p4.graph").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), golden("p4_analyze.txt"));
    assert!(stderr(&out).is_empty());
}

#[test]
fn analyze_reports_the_right_tags() {
    for (name, tag) in [
        ("k3.graph", "adjacent-transvections-but-no-witness"),
        ("p3.graph", "adjacent-transvections-but-no-witness"),
        ("edgeless2.graph", "no-adjacent-transvection"),
        ("edgeless3.graph", "no-adjacent-transvection"),
        ("star_pendant.graph", "heisenberg-witness-found"),
    ] {
        let out = run(&["analyze", fixture(name).to_str().unwrap()]);
        let text = stdout(&out);
        assert!(
            text.contains(&format!("classification: {tag}")),
            "{name}: {text}"
        );
    }
}

#[test]
fn verify_path_witness_matches_golden() {
    let out = run(&["verify", fixture("p4.graph").to_str().unwrap(), "a", "b"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("p4_verify.txt"));
}

#[test]
fn verify_second_witness_also_passes() {
    let out = run(&["verify", fixture("p4.graph").to_str().unwrap(), "d", "c"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("witness pair (d, c)"));
    assert!(stdout(&out).contains("RESULT: PASS"));
}

#[test]
fn verify_rejects_bad_pairs_with_exit_three() {
    let cases = [
        (
            "p4.graph",
            "b",
            "a",
            "domination fails: c in lk(b) but not st(a)",
        ),
        ("k3.graph", "a", "b", "st(b) contains every vertex"),
        ("edgeless2.graph", "a", "b", "not adjacent"),
        ("p4.graph", "a", "a", "two distinct vertices"),
    ];
    for (file, a, b, needle) in cases {
        let out = run(&["verify", fixture(file).to_str().unwrap(), a, b]);
        assert_eq!(code(&out), 3, "{file} {a} {b}");
        let err = stderr(&out);
        assert!(err.starts_with("hypothesis not satisfied: "), "{err}");
        assert!(err.contains(needle), "{err}");
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn verify_unknown_vertex_is_a_usage_error() {
    let out = run(&["verify", fixture("p4.graph").to_str().unwrap(), "a", "q"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("unknown vertex `q`"));
}

#[test]
fn verify_writes_certificate_to_file() {
    let target = std::env::temp_dir().join(format!("raag-cert-{}.txt", std::process::id()));
    let out = run(&[
        "verify",
        fixture("p4.graph").to_str().unwrap(),
        "a",
        "b",
        "-o",
        target.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    std::fs::remove_file(&target).unwrap();
    assert_eq!(written, golden("p4_verify.txt"));
}

#[test]
fn verify_honors_custom_bounds() {
    let out = run(&[
        "verify",
        fixture("p4.graph").to_str().unwrap(),
        "a",
        "b",
        "--injectivity-bound",
        "1",
        "--eq1-bound",
        "2",
        "--power-bound",
        "1",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("26/26 nonzero coordinate triples"));
    assert!(text.contains("1 <= m, n <= 2 (4/4 ok)"));
    assert!(text.contains("(1/1 ok)"));
}

#[test]
fn verify_rejects_nonpositive_bounds() {
    let out = run(&[
        "verify",
        fixture("p4.graph").to_str().unwrap(),
        "a",
        "b",
        "--injectivity-bound",
        "0",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn nf_prints_canonical_forms() {
    for (word, expected) in [
        ("b a", "a b\n"),
        ("a a^-1", "1\n"),
        ("c a", "c a\n"),
        ("a b a^-1", "b\n"),
        ("a^3 b^-2", "a^3 b^-2\n"),
        ("d a c b", "d a b c\n"),
    ] {
        let out = run(&["nf", fixture("p4.graph").to_str().unwrap(), word]);
        assert_eq!(code(&out), 0, "nf {word}");
        assert_eq!(stdout(&out), expected, "nf {word}");
    }
}

#[test]
fn nf_rejects_bad_words() {
    for bad in ["q", "a^x", "a^"] {
        let out = run(&["nf", fixture("p4.graph").to_str().unwrap(), bad]);
        assert_eq!(code(&out), 1, "nf {bad}");
        assert!(stderr(&out).contains("bad token"));
    }
}

#[test]
fn malformed_graph_errors_carry_the_line_number() {
    let path = fixture("malformed.graph");
    for sub in [
        vec!["analyze"],
        vec!["verify", "a", "b"],
        vec!["nf", "a"],
    ] {
        let mut args = vec![sub[0], path.to_str().unwrap()];
        args.extend(&sub[1..]);
        let out = run(&args);
        assert_eq!(code(&out), 1, "{sub:?}");
        assert!(stderr(&out).contains("line 2: unknown vertex `q`"), "{sub:?}");
    }
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = run(&["analyze", "/nonexistent/nowhere.graph"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn usage_errors_exit_one_help_exits_zero() {
    let out = run(&[]);
    assert_eq!(code(&out), 1);

    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 1);

    let out = run(&["analyze"]);
    assert_eq!(code(&out), 1);

    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("analyze"));
    assert!(text.contains("Exit codes"));

    let out = run(&["--version"]);
    assert_eq!(code(&out), 0);
}
