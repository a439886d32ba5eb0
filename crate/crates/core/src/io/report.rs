//! Human-readable and JSON renderings of results, with element names in
//! place of indices.

use serde_json::{json, Value};

use crate::brace::{BraceError, WeakBrace};
use crate::correspond::{AffineError, GammaError, GoodError};
use crate::inverse::AlgebraError;
use crate::search::{EnumerationReport, Found, Route, Witness};
use crate::special::{Classification, Verdict};
use crate::table::CayleyTable;

use super::TableFile;

fn tuple(names: &[String], xs: &[usize]) -> String {
    let parts: Vec<&str> = xs.iter().map(|&x| names[x].as_str()).collect();
    if parts.len() == 1 {
        parts[0].to_string()
    } else {
        format!("({})", parts.join(", "))
    }
}

pub fn algebra_error_message(e: &AlgebraError, names: &[String]) -> String {
    match *e {
        AlgebraError::NotAssociative { x, y, z } => {
            format!("not associative, witness {}", tuple(names, &[x, y, z]))
        }
        AlgebraError::NotRegular(a) => format!("not regular, witness {}", names[a]),
        AlgebraError::InverseNotUnique { element, first, second } => format!(
            "inverse not unique: {} and {} are both inverses of {}",
            names[first], names[second], names[element]
        ),
        AlgebraError::IdempotentsDontCommute(e, f) => {
            format!("idempotents do not commute, witness {}", tuple(names, &[e, f]))
        }
        AlgebraError::NotClifford(a) => format!("not Clifford, witness {}", names[a]),
    }
}

pub fn brace_error_message(e: &BraceError, names: &[String]) -> String {
    match e {
        BraceError::CarrierMismatch => "add and mul are on different carriers".to_string(),
        BraceError::AddNotInverse(a) => format!("add {}", algebra_error_message(a, names)),
        BraceError::MulNotInverse(a) => format!("mul {}", algebra_error_message(a, names)),
        BraceError::DistributivityFails { x, y, z } => {
            format!("x(y+z) = xy-x+xz fails, witness {}", tuple(names, &[*x, *y, *z]))
        }
        BraceError::InverseAxiomFails(x) => format!("xx⁻¹ = -x+x fails, witness {}", names[*x]),
        BraceError::AddNotClifford(x) => format!("add not Clifford, witness {}", names[*x]),
        BraceError::IdempotentMismatch(x) => {
            format!("add and mul have different idempotents, witness {}", names[*x])
        }
        BraceError::LambdaNotEndo(a) => format!("λ_{} is not an endomorphism of add", names[*a]),
    }
}

pub fn gamma_error_message(e: &GammaError, names: &[String]) -> String {
    match e {
        GammaError::Brace(b) => brace_error_message(b, names),
        other => other.to_string(),
    }
}

pub fn good_error_message(e: &GoodError, names: &[String]) -> String {
    match e {
        GoodError::Brace(b) => brace_error_message(b, names),
        GoodError::NotInverseSub(a) => format!("H {}", algebra_error_message(a, names)),
        other => other.to_string(),
    }
}

pub fn affine_error_message(e: &AffineError, names: &[String]) -> String {
    match *e {
        AffineError::A1Fails(a, b, c) => format!("(A1) fails, witness {}", tuple(names, &[a, b, c])),
        AffineError::A2Fails(a, b, c) => format!("(A2) fails, witness {}", tuple(names, &[a, b, c])),
        AffineError::A3Left(x, a) => format!("(A3) e⋄a = ea fails, witness {}", tuple(names, &[x, a])),
        AffineError::A3Right(a, x) => {
            format!("(A3) a⋄e = a⁻¹ea fails, witness {}", tuple(names, &[a, x]))
        }
        AffineError::Brace(ref b) => brace_error_message(b, names),
        AffineError::CarrierMismatch { .. } => e.to_string(),
    }
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

/// `2 Gamma functions (1 dual)` and similar, followed by search statistics.
pub fn summary(r: &EnumerationReport) -> String {
    let n = r.len();
    let head = match r.route {
        Route::Gamma => {
            format!("{} ({} dual)", plural(n, "Gamma function", "Gamma functions"), r.dual_count())
        }
        Route::Good => format!(
            "{} ({} Clifford)",
            plural(n, "good inverse subsemigroup", "good inverse subsemigroups"),
            r.dual_count()
        ),
        Route::Affine => plural(n, "affine structure", "affine structures"),
        Route::Oracle => format!("{} ({} dual)", plural(n, "brace", "braces"), r.dual_count()),
    };
    let mut out = format!("{head}\nnodes: {}, pruned: {}\n", r.stats.nodes, r.stats.pruned);
    if !r.complete {
        out.push_str("best-effort incomplete: search budget exhausted\n");
    }
    out
}

pub fn brace_file(b: &WeakBrace) -> TableFile {
    TableFile::new(b.names().to_vec())
        .with_block("add", b.add().table())
        .with_block("mul", b.mul().table())
}

fn endo_list(names: &[String], maps: impl Iterator<Item = String>) -> String {
    names.iter().zip(maps).map(|(x, m)| format!("{x} ↦ {m}")).collect::<Vec<_>>().join(", ")
}

fn witness_file(f: &Found, carrier: &CayleyTable) -> TableFile {
    let b = &f.brace;
    let names = b.names();
    let mut file = TableFile::new(names.to_vec());
    match &f.witness {
        Witness::Gamma(g) => {
            let maps = (0..g.len()).map(|x| g.map(x).display(carrier).to_string());
            file = file
                .with_comment(format!("γ: {}", endo_list(names, maps)))
                .with_comment(format!("dual: {}", g.is_dual()));
        }
        Witness::Good(h) => {
            let elems: Vec<String> = (0..b.len())
                .map(|x| format!("({}, {})", h.map_at(x).display(carrier), names[x]))
                .collect();
            file = file
                .with_comment(format!("H = {{{}}}", elems.join(", ")))
                .with_comment(format!("clifford: {}", h.is_clifford()));
        }
        Witness::Affine(d) => file = file.with_block("diamond", d.table()),
        Witness::Table => {}
    }
    file.with_block("add", b.add().table()).with_block("mul", b.mul().table())
}

/// Every result as a table file, separated by blank lines.
pub fn tables(r: &EnumerationReport) -> String {
    let mut parts = Vec::with_capacity(r.len());
    for (i, f) in r.results.iter().enumerate() {
        let file = witness_file(f, &r.carrier);
        let mut commented = TableFile::new(file.names.clone())
            .with_comment(format!("result {} of {} ({} route)", i + 1, r.len(), r.route));
        commented.comments.extend(file.comments);
        commented.blocks = file.blocks;
        parts.push(commented.emit());
    }
    parts.join("\n")
}

fn rows(t: &CayleyTable) -> Value {
    Value::from(
        (0..t.len())
            .map(|a| t.row(a).iter().map(|&v| t.name(v as usize).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )
}

fn witness_json(f: &Found, carrier: &CayleyTable) -> Value {
    let names = f.brace.names();
    match &f.witness {
        Witness::Gamma(g) => json!({
            "kind": "gamma",
            "dual": g.is_dual(),
            "maps": (0..g.len()).map(|x| g.map(x).display(carrier).to_string()).collect::<Vec<_>>(),
            "inverse_witnesses": (0..g.len())
                .map(|x| g.inverse_witnesses(x).iter().map(|y| names[y].clone()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
        Witness::Good(h) => json!({
            "kind": "good",
            "clifford": h.is_clifford(),
            "elements": (0..names.len())
                .map(|x| vec![h.map_at(x).display(carrier).to_string(), names[x].clone()])
                .collect::<Vec<_>>(),
        }),
        Witness::Affine(d) => json!({ "kind": "affine", "diamond": rows(d.table()) }),
        Witness::Table => json!({ "kind": "table" }),
    }
}

/// Keys are sorted; wall time is left out so output is reproducible.
pub fn report_json(r: &EnumerationReport) -> Value {
    json!({
        "route": r.route,
        "fixed": r.fixed,
        "complete": r.complete,
        "count": r.len(),
        "carrier": { "elements": r.carrier.names(), "table": rows(&r.carrier) },
        "stats": r.stats,
        "results": r.results.iter().map(|f| json!({
            "add": rows(f.brace.add().table()),
            "mul": rows(f.brace.mul().table()),
            "dual": f.brace.is_dual(),
            "witness": witness_json(f, &r.carrier),
        })).collect::<Vec<_>>(),
    })
}

fn verdict_line(label: &str, v: &Verdict, names: &[String]) -> String {
    match &v.witness {
        None => format!("{label} ✓"),
        Some(w) => format!("{label} ✗ witness {}", tuple(names, w)),
    }
}

pub fn classification_text(c: &Classification, b: &WeakBrace) -> String {
    let names = b.names();
    let dual = match b.mul().clifford_witness() {
        None => "dual ✓".to_string(),
        Some(a) => format!("dual ✗ mul not Clifford, witness {}", names[a]),
    };
    let mut lines = vec![
        "weak ✓".to_string(),
        dual,
        format!("skew {}", if c.skew { "✓" } else { "✗" }),
        verdict_line("symmetric", &c.symmetric, names),
        verdict_line("λ-homomorphic", &c.lambda_homomorphic, names),
        verdict_line("λ-anti-homomorphic", &c.lambda_anti_homomorphic, names),
    ];
    for v in &c.violations {
        lines.push(format!("implication violated: {v}"));
    }
    lines.join("\n") + "\n"
}

pub fn classification_json(c: &Classification, b: &WeakBrace) -> Value {
    let names = b.names();
    let verdict = |v: &Verdict| {
        json!({
            "holds": v.holds,
            "witness": v.witness.as_ref().map(|w| w.iter().map(|&x| names[x].clone()).collect::<Vec<_>>()),
        })
    };
    json!({
        "weak": true,
        "dual": c.dual,
        "skew": c.skew,
        "symmetric": verdict(&c.symmetric),
        "lambda_homomorphic": verdict(&c.lambda_homomorphic),
        "lambda_anti_homomorphic": verdict(&c.lambda_anti_homomorphic),
        "violations": c.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}
