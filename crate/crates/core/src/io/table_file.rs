//! The text table format.
//!
//! ```text
//! # comment
//! elements: 0 e f a b
//! op add:
//! 0 0 0 0 0
//! ...
//! ```
//!
//! Each `op <label>:` block has one row per element; row `i`, column `j`
//! holds `element_i * element_j`. Labels are `add`, `mul` and `diamond`.

use std::fmt::Write as _;

use crate::table::CayleyTable;

use super::ParseError;

pub const LABELS: [&str; 3] = ["add", "mul", "diamond"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub comments: Vec<String>,
    pub names: Vec<String>,
    pub blocks: Vec<(String, CayleyTable)>,
}

impl TableFile {
    pub fn new(names: Vec<String>) -> Self {
        TableFile { comments: Vec::new(), names, blocks: Vec::new() }
    }

    pub fn op(&self, label: &str) -> Option<&CayleyTable> {
        self.blocks.iter().find(|(l, _)| l == label).map(|(_, t)| t)
    }

    pub fn with_comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn with_block(mut self, label: &str, table: &CayleyTable) -> Self {
        let t = table.with_names(self.names.clone()).expect("block size matches the elements");
        self.blocks.push((label.to_string(), t));
        self
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse(text)
    }

    /// Canonical form: comments, the element line, then each block after a
    /// blank line with cells left-aligned to the widest name.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                let _ = writeln!(out, "# {c}");
            }
        }
        let _ = writeln!(out, "elements: {}", self.names.join(" "));
        for (label, t) in &self.blocks {
            let _ = writeln!(out, "\nop {label}:");
            out.push_str(&format_rows(t));
        }
        out
    }
}

/// Rows of a table, one line each, padded to the widest name.
pub fn format_rows(t: &CayleyTable) -> String {
    let width = t.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for a in 0..t.len() {
        let cells: Vec<String> =
            t.row(a).iter().map(|&v| format!("{:<width$}", t.name(v as usize))).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Resolves one whitespace-separated row of names.
pub(crate) fn parse_row(
    line: &str,
    names: &[String],
    lineno: usize,
) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            names.iter().position(|s| s == tok).ok_or_else(|| {
                ParseError::new(lineno, format!("undeclared element `{tok}`"))
            })
        })
        .collect()
}

/// Reads `n` rows of a block starting after line `start` (0-based index
/// into `lines`); returns the table and the index of the next line.
pub(crate) fn parse_block(
    lines: &[(usize, &str)],
    start: usize,
    names: &[String],
    label: &str,
) -> Result<(CayleyTable, usize), ParseError> {
    let n = names.len();
    let mut rows = Vec::with_capacity(n);
    let mut i = start;
    while rows.len() < n {
        let Some(&(lineno, line)) = lines.get(i) else {
            let last = lines.last().map_or(0, |l| l.0);
            return Err(ParseError::new(
                last,
                format!("block `{label}` has {} rows, expected {n}", rows.len()),
            ));
        };
        let row = parse_row(line, names, lineno)?;
        if row.len() != n {
            return Err(ParseError::new(
                lineno,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
        i += 1;
    }
    let t = CayleyTable::new(names.to_vec(), rows)
        .map_err(|e| ParseError::new(lines[start].0, e.to_string()))?;
    Ok((t, i))
}

/// Numbered lines with comments stripped into a separate list and blank
/// lines dropped.
pub(crate) fn significant_lines(text: &str) -> (Vec<String>, Vec<(usize, &str)>) {
    let mut comments = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).trim_end().to_string());
        } else if !line.is_empty() {
            lines.push((i + 1, line));
        }
    }
    (comments, lines)
}

pub(crate) fn parse_names(line: &str, lineno: usize) -> Result<Vec<String>, ParseError> {
    let names: Vec<String> = line.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err(ParseError::new(lineno, "no elements declared"));
    }
    for (i, s) in names.iter().enumerate() {
        if names[..i].contains(s) {
            return Err(ParseError::new(lineno, format!("element `{s}` declared twice")));
        }
        if s.contains(':') {
            return Err(ParseError::new(lineno, format!("element name `{s}` contains ':'")));
        }
    }
    Ok(names)
}

fn parse(text: &str) -> Result<TableFile, ParseError> {
    let (comments, lines) = significant_lines(text);
    let Some(&(lineno, first)) = lines.first() else {
        return Err(ParseError::new(0, "empty file"));
    };
    let rest = first
        .strip_prefix("elements:")
        .ok_or_else(|| ParseError::new(lineno, "expected `elements:` line"))?;
    let names = parse_names(rest, lineno)?;
    let mut file = TableFile { comments, names, blocks: Vec::new() };
    let mut i = 1;
    while i < lines.len() {
        let (lineno, line) = lines[i];
        let label = line
            .strip_prefix("op ")
            .and_then(|l| l.strip_suffix(':'))
            .map(str::trim)
            .ok_or_else(|| ParseError::new(lineno, format!("expected `op <label>:`, found `{line}`")))?;
        if !LABELS.contains(&label) {
            return Err(ParseError::new(lineno, format!("unknown operation label `{label}`")));
        }
        if file.op(label).is_some() {
            return Err(ParseError::new(lineno, format!("operation `{label}` given twice")));
        }
        let (t, next) = parse_block(&lines, i + 1, &file.names, label)?;
        file.blocks.push((label.to_string(), t));
        i = next;
    }
    if file.blocks.is_empty() {
        return Err(ParseError::new(lineno, "no operation blocks"));
    }
    Ok(file)
}
