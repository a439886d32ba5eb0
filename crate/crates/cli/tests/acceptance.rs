use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use weakbrace::brace::axioms::{inverse_axiom, weak1, weak2, weak3};
use weakbrace::correspond::affine::{affine_from_brace, brace_from_affine, check_affine};
use weakbrace::correspond::gamma::{brace_from_gamma, gamma_from_brace};
use weakbrace::correspond::good::{brace_from_good, good_from_brace};
use weakbrace::io::report::brace_file;
use weakbrace::io::read_table_file;
use weakbrace::search::{
    enumerate_affine_structures, enumerate_gamma_functions, enumerate_good_subsemigroups,
    inverse_semigroups, oracle_enumerate_braces, EnumerationReport, Fixed, SearchOptions, Witness,
};
use weakbrace::special::{classify, compose_semilattice, decompose_semilattice};
use weakbrace::{BraceError, CayleyTable, CliffordStructure, Holomorph, InverseSemigroup, WeakBrace};

type Check = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn table(name: &str, label: &str) -> CayleyTable {
    read_table_file(&fixture(name)).unwrap().op(label).unwrap().clone()
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weakbrace")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let (code, out) = cli(args);
    if code != 0 {
        return Err(format!("`weakbrace {}` exited {code}", args.join(" ")));
    }
    serde_json::from_str(&out).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `["00000", "0e0a0"]` as rows of names.
fn rows(rs: &[&str]) -> Value {
    Value::from(rs.iter().map(|r| r.chars().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn strip(map: &Value) -> String {
    map.as_str().unwrap_or_default().trim_matches(|c| c == '(' || c == ')').to_string()
}

const TWIN_ADD: [&str; 5] = ["00000", "0e0a0", "00f0b", "0a0e0", "00b0f"];
const TWIN_CIRC2: [&str; 5] = ["00000", "0e0a0", "00f0b", "00a0e", "0b0f0"];
const B2_MUL: [&str; 5] = TWIN_CIRC2;
const B2_DIAMOND: [&str; 5] = ["00000", "0e0a0", "00f0b", "0f0b0", "00e0a"];
const B2_PLUS: [&str; 5] = ["00000", "0e0a0", "00f0b", "0a0e0", "00b0f"];

const PHI: [&str; 11] = [
    "00000", "eeeee", "fffff", "00e0e", "00e0a", "0e0e0", "0e0a0", "0f0f0", "0f0b0", "00f0f", "00f0b",
];

fn phi_pairs(ks: [usize; 5]) -> BTreeSet<(String, String)> {
    ks.iter().zip("0efab".chars()).map(|(&k, x)| (PHI[k - 1].to_string(), x.to_string())).collect()
}

fn criterion_1() -> Check {
    let path = fixture("twin.tbl");
    let v = cli_json(&["enumerate", path.to_str().unwrap(), "--route", "good", "--emit", "json"])?;
    let results = v["results"].as_array().ok_or("no results")?;
    ensure(results.len() == 2, || format!("{} good subsemigroups", results.len()))?;
    let h1 = phi_pairs([1, 7, 11, 7, 11]);
    let h2 = phi_pairs([1, 7, 11, 5, 9]);
    let mut matched = BTreeSet::new();
    for r in results {
        let w = &r["witness"];
        let h: BTreeSet<(String, String)> = w["elements"]
            .as_array()
            .ok_or("no elements")?
            .iter()
            .map(|p| (strip(&p[0]), p[1].as_str().unwrap_or_default().to_string()))
            .collect();
        let clifford = w["clifford"].as_bool() == Some(true);
        if h == h1 {
            ensure(clifford, || "H1 is not Clifford".into())?;
            ensure(r["mul"] == rows(&TWIN_ADD), || "B(H1) multiplication is not +".into())?;
            matched.insert(1);
        } else if h == h2 {
            ensure(!clifford, || "H2 is Clifford".into())?;
            ensure(r["mul"] == rows(&TWIN_CIRC2), || "B(H2) multiplication is not ∘2".into())?;
            matched.insert(2);
        } else {
            return Err(format!("unexpected good subsemigroup {h:?}"));
        }
    }
    ensure(matched.len() == 2, || "H1 and H2 not both found".into())?;
    Ok("{H1, H2}; H1 Clifford with ∘1 = +, H2 not Clifford with ∘2".into())
}

fn criterion_2() -> Check {
    let path = fixture("twin.tbl");
    let v = cli_json(&["enumerate", path.to_str().unwrap(), "--route", "gamma", "--emit", "json"])?;
    let results = v["results"].as_array().ok_or("no results")?;
    ensure(results.len() == 2, || format!("{} Gamma functions", results.len()))?;
    let gamma = |ks: [usize; 5]| ks.iter().map(|&k| PHI[k - 1].to_string()).collect::<Vec<_>>();
    let (g1, g2) = (gamma([1, 7, 11, 7, 11]), gamma([1, 7, 11, 5, 9]));
    let mut matched = BTreeSet::new();
    for r in results {
        let w = &r["witness"];
        let maps: Vec<String> = w["maps"].as_array().ok_or("no maps")?.iter().map(strip).collect();
        let dual = w["dual"].as_bool() == Some(true);
        if maps == g1 && dual {
            matched.insert(1);
        } else if maps == g2 && !dual {
            matched.insert(2);
        } else {
            return Err(format!("unexpected Gamma function {maps:?} (dual {dual})"));
        }
    }
    ensure(matched.len() == 2, || "γ1 and γ2 not both found".into())?;
    Ok("{γ1 dual, γ2 not dual}, elementwise".into())
}

fn criterion_3() -> Check {
    let path = fixture("b2.tbl");
    let v = cli_json(&["enumerate", path.to_str().unwrap(), "--route", "affine", "--emit", "json"])?;
    let results = v["results"].as_array().ok_or("no results")?;
    ensure(results.len() == 1, || format!("{} affine structures", results.len()))?;
    let r = &results[0];
    ensure(r["mul"] == rows(&B2_MUL), || "multiplication is not B2".into())?;
    ensure(r["witness"]["diamond"] == rows(&B2_DIAMOND), || format!("⋄ = {}", r["witness"]["diamond"]))?;
    ensure(r["add"] == rows(&B2_PLUS), || format!("induced + = {}", r["add"]))?;

    let aa_a = fixture("b2_diamond_aa_a.tbl");
    let (code, out) = cli(&["check", aa_a.to_str().unwrap(), "--as", "affine"]);
    ensure(code == 1 && out.contains("(A1)"), || format!("a⋄a = a not rejected: {out}"))?;
    Ok("exactly one ⋄ (a⋄a = b, b⋄b = a), inducing +1; a⋄a = a is rejected by (A1)".into())
}

fn criterion_4() -> Check {
    let pair = |name: &str| -> Result<(InverseSemigroup, InverseSemigroup), String> {
        let add = InverseSemigroup::new(table(name, "add")).map_err(|e| format!("{name} add: {e}"))?;
        let mul = InverseSemigroup::new(table(name, "mul")).map_err(|e| format!("{name} mul: {e}"))?;
        Ok((add, mul))
    };
    let (add, mul) = pair("weak2_only.tbl")?;
    ensure(weak2(&add, &mul).is_ok() && weak1(&add, &mul).is_err(), || "pair 1 pattern".into())?;
    let (add, mul) = pair("weak3_only.tbl")?;
    ensure(weak3(&add, &mul).is_ok() && weak1(&add, &mul) == Err([0, 0, 1]), || "pair 2 pattern".into())?;
    let (add, mul) = pair("no_inverse_axiom.tbl")?;
    ensure(
        weak1(&add, &mul).is_ok() && weak2(&add, &mul).is_ok() && weak3(&add, &mul).is_ok(),
        || "pair 3 distributive forms".into(),
    )?;
    ensure(inverse_axiom(&add, &mul) == Err(0), || "pair 3 inverse axiom".into())?;
    ensure(
        WeakBrace::new(add.table(), mul.table()).err() == Some(BraceError::InverseAxiomFails(0)),
        || "pair 3 brace check".into(),
    )?;

    let (mut pairs, mut exceptions) = (0, 0);
    for n in 1..=3 {
        let sgs = inverse_semigroups(n);
        for a in &sgs {
            for m in &sgs {
                pairs += 1;
                let w1 = weak1(a, m).is_ok();
                if w1 != (weak2(a, m).is_ok() && weak3(a, m).is_ok()) {
                    exceptions += 1;
                }
            }
        }
    }
    ensure(exceptions == 0, || format!("{exceptions} exceptions"))?;
    Ok(format!("three counterexample pairs; weak1 ⇔ weak2 ∧ weak3 on {pairs} pairs, 0 exceptions"))
}

/// Braces found by the enumerations of criteria 1–3 and 6, plus the brace
/// fixtures and the braces on `S3`.
fn corpus() -> Vec<WeakBrace> {
    let opts = SearchOptions::default();
    let mut out = Vec::new();
    for n in 1..=3 {
        for s in inverse_semigroups(n) {
            out.extend(oracle_enumerate_braces(&s, Fixed::Add, &opts).unwrap().results.into_iter().map(|f| f.brace));
        }
    }
    for name in ["twin.tbl", "s3.tbl"] {
        let add = CliffordStructure::from_table(table(name, "add")).unwrap();
        out.extend(enumerate_gamma_functions(&add, &opts).unwrap().results.into_iter().map(|f| f.brace));
    }
    let b2 = InverseSemigroup::new(table("b2.tbl", "mul")).unwrap();
    out.extend(enumerate_affine_structures(&b2, &opts).unwrap().results.into_iter().map(|f| f.brace));
    for name in ["twin_trivial.tbl", "twin_b2.tbl", "b2_brace.tbl", "c3.tbl", "singleton.tbl"] {
        out.push(WeakBrace::new(&table(name, "add"), &table(name, "mul")).unwrap());
    }
    out
}

fn criterion_5() -> Check {
    let opts = SearchOptions::default();
    let mut violations = Vec::new();
    let mut checked = 0;
    for b in corpus() {
        checked += 1;
        let hol = Holomorph::new(b.add(), 8).map_err(|e| e.to_string())?;
        match good_from_brace(&hol, &b) {
            Ok(h) if brace_from_good(&hol, &h).is_ok_and(|c| c.same_tables(&b)) => {}
            _ => violations.push("B∘S"),
        }
        match gamma_from_brace(&b) {
            Ok(g) if brace_from_gamma(b.add(), &g).is_ok_and(|c| c.same_tables(&b)) => {}
            _ => violations.push("B∘G"),
        }
        match affine_from_brace(&b) {
            Ok(d) if brace_from_affine(b.mul(), &d).is_ok_and(|c| c.same_tables(&b)) => {}
            _ => violations.push("B∘A"),
        }
    }
    let mut carriers: Vec<CliffordStructure> = (1..=3)
        .flat_map(inverse_semigroups)
        .filter_map(|s| CliffordStructure::new(s).ok())
        .collect();
    carriers.push(CliffordStructure::from_table(table("twin.tbl", "add")).unwrap());
    carriers.push(CliffordStructure::from_table(table("s3.tbl", "add")).unwrap());
    for add in &carriers {
        for f in enumerate_gamma_functions(add, &opts).map_err(|e| e.to_string())?.results {
            checked += 1;
            let Witness::Gamma(g) = f.witness else { unreachable!() };
            if gamma_from_brace(&f.brace).ok() != Some(g) {
                violations.push("G∘B");
            }
        }
        let hol = Holomorph::new(add, 8).map_err(|e| e.to_string())?;
        for f in enumerate_good_subsemigroups(&hol, &opts).map_err(|e| e.to_string())?.results {
            checked += 1;
            let Witness::Good(h) = f.witness else { unreachable!() };
            if good_from_brace(&hol, &f.brace).ok() != Some(h) {
                violations.push("S∘B");
            }
        }
    }
    let mut muls: Vec<InverseSemigroup> = (1..=3).flat_map(inverse_semigroups).collect();
    muls.push(InverseSemigroup::new(table("b2.tbl", "mul")).unwrap());
    for mul in &muls {
        for f in enumerate_affine_structures(mul, &opts).map_err(|e| e.to_string())?.results {
            checked += 1;
            let Witness::Affine(d) = f.witness else { unreachable!() };
            if affine_from_brace(&f.brace).ok() != Some(d) {
                violations.push("A∘B");
            }
        }
    }
    let aa_a = table("b2_diamond_aa_a.tbl", "diamond");
    ensure(check_affine(&muls[muls.len() - 1], &aa_a).is_err(), || "a⋄a = a accepted".into())?;
    ensure(violations.is_empty(), || format!("violations: {violations:?}"))?;
    Ok(format!("{checked} structures, 0 violations"))
}

fn keys(r: &EnumerationReport) -> BTreeSet<Vec<u8>> {
    r.brace_keys().into_iter().collect()
}

fn criterion_6() -> Check {
    let opts = SearchOptions::default();
    let (mut carriers, mut braces) = (0, 0);
    for n in 1..=3 {
        for s in inverse_semigroups(n) {
            carriers += 1;
            let oracle = keys(&oracle_enumerate_braces(&s, Fixed::Add, &opts).map_err(|e| e.to_string())?);
            braces += oracle.len();
            match CliffordStructure::new(s.clone()) {
                Ok(add) => {
                    let gamma = keys(&enumerate_gamma_functions(&add, &opts).map_err(|e| e.to_string())?);
                    let hol = Holomorph::new(&add, 8).map_err(|e| e.to_string())?;
                    let good = keys(&enumerate_good_subsemigroups(&hol, &opts).map_err(|e| e.to_string())?);
                    ensure(oracle == gamma && oracle == good, || format!("disagreement on {:?}", s.table()))?;
                }
                Err(_) => ensure(oracle.is_empty(), || format!("brace on non-Clifford {:?}", s.table()))?,
            }
            let by_mul = keys(&oracle_enumerate_braces(&s, Fixed::Mul, &opts).map_err(|e| e.to_string())?);
            let affine = keys(&enumerate_affine_structures(&s, &opts).map_err(|e| e.to_string())?);
            ensure(by_mul == affine, || format!("affine disagreement on {:?}", s.table()))?;
        }
    }
    Ok(format!("{carriers} inverse semigroups, {braces} braces, oracle = gamma = good"))
}

fn criterion_7() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let corpus = corpus();
    let mut violations = 0;
    for (i, b) in corpus.iter().enumerate() {
        let c = classify(b);
        let symmetric = c.symmetric.holds;
        let anti = c.lambda_anti_homomorphic.holds;
        let any = symmetric || c.lambda_homomorphic.holds || anti;
        if !c.violations.is_empty() || symmetric != anti || (any && !c.dual) {
            violations += 1;
        }
        let path = dir.path().join(format!("b{i}.tbl"));
        fs::write(&path, brace_file(b).emit()).map_err(|e| e.to_string())?;
        let (code, _) = cli(&["classify", path.to_str().unwrap()]);
        if code != 0 {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!("{} braces, 0 violations", corpus.len()))
}

fn criterion_8() -> Check {
    let mut checked = 0;
    for b in corpus().into_iter().filter(WeakBrace::is_dual) {
        checked += 1;
        let d = decompose_semilattice(&b).map_err(|e| e.to_string())?;
        ensure(d.sl.components().iter().all(WeakBrace::is_skew), || "component not skew".into())?;
        let again = compose_semilattice(&d.sl).map_err(|e| e.to_string())?;
        let n = b.len();
        for x in 0..n {
            for y in 0..n {
                let (px, py) = (d.position[x], d.position[y]);
                ensure(
                    again.sum(px, py) == d.position[b.sum(x, y)] && again.prod(px, py) == d.position[b.prod(x, y)],
                    || format!("recomposition differs at ({x}, {y})"),
                )?;
            }
        }
    }
    let sl = fixture("twin.sl");
    let (code, _) = cli(&["semilattice", sl.to_str().unwrap(), "--roundtrip"]);
    ensure(code == 0, || format!("twin.sl roundtrip exited {code}"))?;
    Ok(format!("{checked} dual braces reproduced exactly"))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 8] = [
        ("good subsemigroups over twin", Duration::from_secs(5), criterion_1),
        ("Gamma functions over twin", Duration::from_secs(5), criterion_2),
        ("affine structure on B2", Duration::from_secs(5), criterion_3),
        ("axiom decomposition", Duration::from_secs(60), criterion_4),
        ("round trips", Duration::from_secs(600), criterion_5),
        ("oracle agreement", Duration::from_secs(600), criterion_6),
        ("special-class implications", Duration::from_secs(600), criterion_7),
        ("semilattice round trip", Duration::from_secs(10), criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if outcome.is_ok() && took > *limit {
            outcome = Err(format!("took {took:?}, limit {limit:?}"));
        }
        match outcome {
            Ok(detail) => println!("criterion {} PASS {title}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {title}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
