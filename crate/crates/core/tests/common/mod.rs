#![allow(dead_code)]

use std::path::PathBuf;

use weakbrace::io::{read_table_file, TableFile};
use weakbrace::{CayleyTable, CliffordStructure, EndoMap, InverseSemigroup, WeakBrace};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> TableFile {
    read_table_file(&fixture_path(name)).unwrap()
}

pub fn op(name: &str, label: &str) -> CayleyTable {
    fixture(name).op(label).unwrap().clone()
}

pub fn clifford(name: &str) -> CliffordStructure {
    CliffordStructure::from_table(op(name, "add")).unwrap()
}

pub fn inverse(name: &str) -> InverseSemigroup {
    InverseSemigroup::new(op(name, "mul")).unwrap()
}

pub fn brace(name: &str) -> WeakBrace {
    WeakBrace::new(&op(name, "add"), &op(name, "mul")).unwrap()
}

/// `"0e0a0"` style map over single-character names.
pub fn map(t: &CayleyTable, images: &str) -> EndoMap {
    EndoMap::new(images.chars().map(|c| t.index_of(&c.to_string()).unwrap()).collect())
}

pub fn idx(t: &CayleyTable, name: &str) -> usize {
    t.index_of(name).unwrap()
}

use weakbrace::search::{inverse_semigroups, oracle_enumerate_braces, Fixed, SearchOptions};

/// Every labelled weak brace of order at most 3, found by the oracle with
/// `+` fixed.
pub fn small_braces() -> Vec<WeakBrace> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for s in inverse_semigroups(n) {
            let r = oracle_enumerate_braces(&s, Fixed::Add, &SearchOptions::default()).unwrap();
            out.extend(r.results.into_iter().map(|f| f.brace));
        }
    }
    out
}

pub const BRACE_FIXTURES: [&str; 5] =
    ["twin_trivial.tbl", "twin_b2.tbl", "b2_brace.tbl", "c3.tbl", "singleton.tbl"];

/// Small braces, the brace fixtures, and every brace on `S3` and on the
/// twin addition found through Gamma functions.
pub fn corpus() -> Vec<WeakBrace> {
    let mut out = small_braces();
    out.extend(BRACE_FIXTURES.iter().map(|f| brace(f)));
    for f in ["s3.tbl", "twin.tbl"] {
        let r = weakbrace::search::enumerate_gamma_functions(&clifford(f), &SearchOptions::default())
            .unwrap();
        out.extend(r.results.into_iter().map(|f| f.brace));
    }
    out
}
