use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakbrace")).args(args).output().unwrap()
}

fn run_fixture(cmd: &str, name: &str, rest: &[&str]) -> (i32, String, String) {
    let path = fixture(name);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(rest);
    let out = run(&args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn check_exit_codes() {
    assert_eq!(run_fixture("check", "twin.tbl", &["--as", "clifford"]).0, 0);
    let (code, out, _) = run_fixture("check", "twin_b2.tbl", &["--as", "dual-brace"]);
    assert_eq!(code, 1);
    assert!(out.contains("mul not Clifford, witness a"), "{out}");
    let (code, out, err) = run_fixture("check", "malformed.tbl", &["--as", "semigroup"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 4"), "{err}");
    assert_eq!(run_fixture("check", "twin_b2.tbl", &["--as", "brace"]).0, 0);
    assert_eq!(run_fixture("check", "b2.tbl", &["--as", "inverse"]).0, 0);
    let (code, out, _) = run_fixture("check", "b2.tbl", &["--as", "clifford"]);
    assert_eq!(code, 1);
    assert!(out.contains("not Clifford"));
    assert_eq!(run_fixture("check", "b2_brace.tbl", &["--as", "affine"]).0, 0);
    let (code, out, _) = run_fixture("check", "b2_diamond_aa_a.tbl", &["--as", "affine"]);
    assert_eq!(code, 1);
    assert!(out.contains("(A1) fails, witness (a, e, a)"), "{out}");
    let (code, out, _) = run_fixture("check", "no_inverse_axiom.tbl", &["--as", "brace"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness 0"), "{out}");
    assert_eq!(run_fixture("check", "c2.tbl", &["--as", "brace"]).0, 2);
}

#[test]
fn missing_file_is_a_parse_error() {
    let (code, _, err) = run_fixture("check", "no_such_file.tbl", &["--as", "semigroup"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn enumerate_summaries() {
    let (code, out, _) = run_fixture("enumerate", "twin.tbl", &["--route", "gamma"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("2 Gamma functions (1 dual)\n"), "{out}");
    let (code, out, _) = run_fixture("enumerate", "twin.tbl", &["--route", "good"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("2 good inverse subsemigroups (1 Clifford)\n"), "{out}");
    let (code, out, _) = run_fixture("enumerate", "b2.tbl", &["--route", "affine"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 affine structure\n"), "{out}");
    let (code, out, _) = run_fixture("enumerate", "c3.tbl", &["--route", "oracle"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 brace (1 dual)\n"), "{out}");
    let (code, out, _) = run_fixture("enumerate", "c3.tbl", &["--route", "oracle", "--fix", "mul"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 brace (1 dual)\n"), "{out}");
    let (code, _, err) = run_fixture("enumerate", "b2.tbl", &["--route", "oracle"]);
    assert_eq!(code, 3);
    assert!(err.contains("exceeds the bound 4"), "{err}");
}

#[test]
fn enumerate_tables_parse_back() {
    let (code, out, _) = run_fixture("enumerate", "b2.tbl", &["--route", "affine", "--emit", "tables"]);
    assert_eq!(code, 0);
    let diamond_block = "op diamond:\n0 0 0 0 0\n0 e 0 a 0\n0 0 f 0 b\n0 f 0 b 0\n0 0 e 0 a\n";
    assert!(out.contains(diamond_block), "{out}");
}

#[test]
fn enumerate_wrong_blocks() {
    assert_eq!(run_fixture("enumerate", "b2.tbl", &["--route", "gamma"]).0, 2);
    assert_eq!(run_fixture("enumerate", "twin.tbl", &["--route", "affine"]).0, 2);
    let (code, out, _) = run_fixture("enumerate", "c2.tbl", &["--route", "gamma"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 Gamma function (1 dual)\n"), "{out}");
}

#[test]
fn budget_exhaustion_exits_3_with_partial_report() {
    let (code, out, err) = run_fixture("enumerate", "s3.tbl", &["--route", "good", "--budget", "50"]);
    assert_eq!(code, 3);
    assert!(out.contains("best-effort incomplete"), "{out}");
    assert!(err.contains("budget"), "{err}");
    let (code, out, _) =
        run_fixture("enumerate", "s3.tbl", &["--route", "gamma", "--budget", "50", "--emit", "json"]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["complete"], false);
}

#[test]
fn json_is_stable_across_worker_counts() {
    let one = run_fixture("enumerate", "s3.tbl", &["--route", "good", "--emit", "json", "--jobs", "1"]);
    let four = run_fixture("enumerate", "s3.tbl", &["--route", "good", "--emit", "json", "--jobs", "4"]);
    assert_eq!(one.0, 0);
    assert_eq!(one.1, four.1);
    let v: Value = serde_json::from_str(&one.1).unwrap();
    assert_eq!(v["count"], 8);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["carrier", "complete", "count", "fixed", "results", "route", "stats"]);
}

#[test]
fn classify_reports() {
    let (code, out, _) = run_fixture("classify", "twin_trivial.tbl", &[]);
    assert_eq!(code, 0);
    for line in ["weak ✓", "dual ✓", "symmetric ✓", "λ-homomorphic ✓", "λ-anti-homomorphic ✓"] {
        assert!(out.lines().any(|l| l == line), "{line} in {out}");
    }
    let (code, out, _) = run_fixture("classify", "twin_b2.tbl", &[]);
    assert_eq!(code, 0);
    assert!(out.contains("dual ✗ mul not Clifford, witness a"));
    for label in ["symmetric ✗", "λ-homomorphic ✗", "λ-anti-homomorphic ✗"] {
        assert!(out.lines().any(|l| l.starts_with(label)), "{label} in {out}");
    }
    let (code, out, _) = run_fixture("classify", "singleton.tbl", &["--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    for k in ["weak", "dual", "skew"] {
        assert_eq!(v[k], true);
    }
    for k in ["symmetric", "lambda_homomorphic", "lambda_anti_homomorphic"] {
        assert_eq!(v[k]["holds"], true);
    }
    assert_eq!(run_fixture("classify", "weak2_only.tbl", &[]).0, 1);
    assert_eq!(run_fixture("classify", "malformed.tbl", &[]).0, 2);
}

#[test]
fn semilattice_commands() {
    let (code, out, _) = run_fixture("semilattice", "twin.sl", &["--compose"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("elements: ε0.0 εe.e εe.a εf.f εf.b\n"), "{out}");
    let (code, out, _) = run_fixture("semilattice", "twin.sl", &["--roundtrip"]);
    assert_eq!(code, 0);
    assert!(out.contains("roundtrip ✓"));
    let (code, out, _) = run_fixture("semilattice", "twin_bad_identity.sl", &["--compose"]);
    assert_eq!(code, 1);
    assert!(out.contains("condition (1)"), "{out}");
    let (code, out, _) = run_fixture("semilattice", "single.sl", &["--compose"]);
    assert_eq!(code, 0);
    assert!(out.contains("op add:\nα.0 α.1 α.2\n"), "{out}");
}

#[test]
fn semilattice_components_resolve_relative_to_the_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("parts")).unwrap();
    let c2 = fs::read_to_string(fixture("c2.tbl")).unwrap();
    fs::write(dir.path().join("parts/c2.tbl"), format!("{c2}\nop mul:\n0 1\n1 0\n")).unwrap();
    fs::write(dir.path().join("parts/one.tbl"), "elements: z\n\nop add:\nz\n\nop mul:\nz\n").unwrap();
    let sl = "semilattice: 1 0\nop meet:\n1 0\n0 0\n\ncomponent 1: parts/c2.tbl\ncomponent 0: parts/one.tbl\n\nhom 1 -> 0:\n0 -> z\n1 -> z\n";
    let path = dir.path().join("chain.sl");
    fs::write(&path, sl).unwrap();
    let out = run(&["semilattice", path.to_str().unwrap(), "--roundtrip"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    fs::write(&path, sl.replace("1 -> z", "1 -> w")).unwrap();
    let out = run(&["semilattice", path.to_str().unwrap(), "--compose"]);
    assert_eq!(out.status.code(), Some(2));
}
