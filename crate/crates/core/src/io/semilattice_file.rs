//! Strong-semilattice description files.
//!
//! ```text
//! semilattice: 0 e f
//! op meet:
//! 0 0 0
//! 0 e 0
//! 0 0 f
//! component 0: zero.tbl
//! component e: ce.tbl
//! hom e -> 0:
//! e -> 0
//! a -> 0
//! ```
//!
//! Component paths are relative to the description file. Each component
//! file carries `add` and `mul` blocks. Identity maps may be omitted.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::brace::WeakBrace;
use crate::special::semilattice::StrongSemilattice;
use crate::table::CayleyTable;

use super::table_file::{format_rows, parse_block, parse_names, significant_lines};
use super::{LoadError, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBlock {
    pub from: String,
    pub to: String,
    pub pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilatticeFile {
    pub comments: Vec<String>,
    pub meet: CayleyTable,
    pub components: Vec<(String, String)>,
    pub homs: Vec<HomBlock>,
}

impl SemilatticeFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (comments, lines) = significant_lines(text);
        let Some(&(lineno, first)) = lines.first() else {
            return Err(ParseError::new(0, "empty file"));
        };
        let rest = first
            .strip_prefix("semilattice:")
            .ok_or_else(|| ParseError::new(lineno, "expected `semilattice:` line"))?;
        let names = parse_names(rest, lineno)?;
        match lines.get(1) {
            Some(&(_, "op meet:")) => {}
            Some(&(l, _)) => return Err(ParseError::new(l, "expected `op meet:`")),
            None => return Err(ParseError::new(lineno, "missing `op meet:` block")),
        }
        let (meet, mut i) = parse_block(&lines, 2, &names, "meet")?;
        let mut components: Vec<(String, String)> = Vec::new();
        let mut homs: Vec<HomBlock> = Vec::new();
        let declared = |s: &str, l: usize| {
            if names.iter().any(|n| n == s) {
                Ok(s.to_string())
            } else {
                Err(ParseError::new(l, format!("`{s}` is not an element of the semilattice")))
            }
        };
        while i < lines.len() {
            let (lineno, line) = lines[i];
            if let Some(rest) = line.strip_prefix("component ") {
                let (alpha, path) = rest
                    .split_once(':')
                    .ok_or_else(|| ParseError::new(lineno, "expected `component <name>: <path>`"))?;
                let alpha = declared(alpha.trim(), lineno)?;
                if components.iter().any(|(a, _)| *a == alpha) {
                    return Err(ParseError::new(lineno, format!("component `{alpha}` given twice")));
                }
                let path = path.trim();
                if path.is_empty() {
                    return Err(ParseError::new(lineno, "missing component path"));
                }
                components.push((alpha, path.to_string()));
                i += 1;
            } else if let Some(rest) = line.strip_prefix("hom ").and_then(|r| r.strip_suffix(':')) {
                let (from, to) = rest
                    .split_once("->")
                    .ok_or_else(|| ParseError::new(lineno, "expected `hom <a> -> <b>:`"))?;
                let (from, to) = (declared(from.trim(), lineno)?, declared(to.trim(), lineno)?);
                if homs.iter().any(|h| h.from == from && h.to == to) {
                    return Err(ParseError::new(lineno, format!("hom {from} -> {to} given twice")));
                }
                let mut pairs = Vec::new();
                i += 1;
                while let Some(&(l, m)) = lines.get(i) {
                    if m.starts_with("component ") || m.starts_with("hom ") {
                        break;
                    }
                    let (x, y) = m
                        .split_once("->")
                        .ok_or_else(|| ParseError::new(l, format!("expected `x -> y`, found `{m}`")))?;
                    pairs.push((x.trim().to_string(), y.trim().to_string()));
                    i += 1;
                }
                homs.push(HomBlock { from, to, pairs });
            } else {
                return Err(ParseError::new(lineno, format!("unexpected line `{line}`")));
            }
        }
        if let Some(missing) = names.iter().find(|n| !components.iter().any(|(a, _)| a == *n)) {
            return Err(ParseError::new(lineno, format!("no component given for `{missing}`")));
        }
        Ok(SemilatticeFile { comments, meet, components, homs })
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "semilattice: {}", self.meet.names().join(" "));
        let _ = writeln!(out, "op meet:");
        out.push_str(&format_rows(&self.meet));
        out.push('\n');
        for (alpha, path) in &self.components {
            let _ = writeln!(out, "component {alpha}: {path}");
        }
        for h in &self.homs {
            let _ = writeln!(out, "\nhom {} -> {}:", h.from, h.to);
            for (x, y) in &h.pairs {
                let _ = writeln!(out, "{x} -> {y}");
            }
        }
        out
    }

    /// Resolves every name and validates the result.
    pub fn resolve(&self, components: Vec<WeakBrace>) -> Result<StrongSemilattice, LoadError> {
        let y = &self.meet;
        let index = |s: &str| y.index_of(s).expect("checked while parsing");
        let mut ordered: Vec<Option<WeakBrace>> = vec![None; y.len()];
        for ((alpha, _), b) in self.components.iter().zip(components) {
            ordered[index(alpha)] = Some(b);
        }
        let ordered: Vec<WeakBrace> = ordered.into_iter().map(|b| b.expect("all given")).collect();
        let mut homs = BTreeMap::new();
        for h in &self.homs {
            let (a, b) = (index(&h.from), index(&h.to));
            let (src, dst) = (&ordered[a], &ordered[b]);
            let mut map = vec![None; src.len()];
            for (x, v) in &h.pairs {
                let xi = src.names().iter().position(|s| s == x).ok_or_else(|| {
                    LoadError::Reference(format!("`{x}` is not in component {}", h.from))
                })?;
                let vi = dst.names().iter().position(|s| s == v).ok_or_else(|| {
                    LoadError::Reference(format!("`{v}` is not in component {}", h.to))
                })?;
                if map[xi].replace(vi).is_some() {
                    return Err(LoadError::Reference(format!(
                        "`{x}` mapped twice in hom {} -> {}",
                        h.from, h.to
                    )));
                }
            }
            let map: Option<Vec<usize>> = map.into_iter().collect();
            let map = map.ok_or_else(|| {
                LoadError::Reference(format!("hom {} -> {} is not defined everywhere", h.from, h.to))
            })?;
            homs.insert((a, b), map);
        }
        Ok(StrongSemilattice::new(y.clone(), ordered, homs)?)
    }
}

/// Reads a description file and the component files it names.
pub fn load_semilattice(path: &Path) -> Result<StrongSemilattice, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(path.to_path_buf(), e))?;
    let file = SemilatticeFile::parse(&text).map_err(|e| LoadError::Parse(path.to_path_buf(), e))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut components = Vec::new();
    for (alpha, rel) in &file.components {
        let p: PathBuf = dir.join(rel);
        let t = super::read_table_file(&p)?;
        let (Some(add), Some(mul)) = (t.op("add"), t.op("mul")) else {
            return Err(LoadError::Reference(format!(
                "component {alpha} ({}) needs add and mul blocks",
                p.display()
            )));
        };
        let b = WeakBrace::new(add, mul)
            .map_err(|e| LoadError::Reference(format!("component {alpha}: {e}")))?;
        components.push(b);
    }
    file.resolve(components)
}
