use std::process::{Command, Output};

fn ringloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn minprimes_of_zmod12() {
    let o = ringloc(&["minprimes", "zmod(12)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(2) = {0, 2, 4, 6, 8, 10}"), "{out}");
    assert!(out.contains("(3) = {0, 3, 6, 9}"), "{out}");
    assert_eq!(
        out.lines().filter(|l| !l.trim().is_empty()).count(),
        2,
        "{out}"
    );
}

#[test]
fn localizing_zmod6_at_powers_of_two() {
    let o = ringloc(&["localize", "zmod(6)", "--gens", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("(3)"), "{out}");
    assert!(
        out.contains("order 3") || out.contains("3 elements"),
        "{out}"
    );
}

#[test]
fn monomial_minimal_primes() {
    let o = ringloc(&["mono", "minprimes", "mono(vars=3, gens=[v1*v2, v2*v3])"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["(v2)", "(v1, v3)"]);
    let o = ringloc(&[
        "mono",
        "localize",
        "mono(vars=2, gens=[v1*v2])",
        "--vars",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("min S⁻¹R    (v2)"));
}

#[test]
fn describe_and_ideals() {
    let o = ringloc(&["describe", "zmod(6)"]);
    let out = stdout(&o);
    assert!(out.contains("units       {1, 5}"), "{out}");
    assert!(out.contains("semiprime   true"), "{out}");
    let o = ringloc(&["ideals", "zmod(4)"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3, "{out}");
    assert!(
        out.lines()
            .any(|l| l.starts_with("(2) = {0, 2}") && l.contains("minimal prime")),
        "{out}"
    );
}

#[test]
fn exit_code_two_for_bad_input() {
    let o = ringloc(&["minprimes", "zmod("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column 6"), "{}", stderr(&o));
    assert_eq!(ringloc(&["minprimes", "gf(6)"]).status.code(), Some(2));
    assert_eq!(
        ringloc(&["localize", "zmod(6)", "--gens", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ringloc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        ringloc(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_code_three_for_size_limit() {
    assert_eq!(ringloc(&["describe", "zmod(99)"]).status.code(), Some(3));
    assert_eq!(
        ringloc(&["--cap", "8", "describe", "mat(2, gf(2))"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn clean_verify_exits_zero() {
    let o = ringloc(&["verify", "--suite", "A11Sep23,4Jul10", "--max-order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no counterexamples"));
}

#[test]
fn fault_is_reported_and_explained() {
    let o = ringloc(&["verify", "--suite", "finite", "--max-order", "6", "--fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("ring-axioms: 1 counterexample(s)"),
        "{}",
        stdout(&o)
    );
    let o = ringloc(&[
        "verify",
        "--suite",
        "finite",
        "--max-order",
        "6",
        "--fault",
        "--explain",
        "ring-axioms:0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("fault      mul[2][3] := 1"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn literal_an_verification_fails() {
    let o = ringloc(&["an", "verify", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ringloc(&["an", "verify", "--n", "2", "--extra", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ringloc(&["verify", "--suite", "all", "--max-order", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("b29Sep23: 9 counterexample(s)"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn machine_output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-order",
        "6",
        "--format",
        "machine",
    ];
    let one = ringloc(&[&args[..], &["--jobs", "1"]].concat());
    let four = ringloc(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let again = ringloc(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(one.stdout, again.stdout);
    assert!(stdout(&one).trim_start().starts_with('{'));
}
