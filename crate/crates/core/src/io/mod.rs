//! File formats and report rendering.

pub mod report;
pub mod semilattice_file;
pub mod table_file;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::special::semilattice::SemilatticeCondition;

pub use semilattice_file::{load_semilattice, HomBlock, SemilatticeFile};
pub use table_file::TableFile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}", path = .0.display(), source = .1)]
    Io(PathBuf, std::io::Error),
    #[error("{path}: {err}", path = .0.display(), err = .1)]
    Parse(PathBuf, ParseError),
    #[error("{0}")]
    Reference(String),
    #[error("invalid semilattice description: {0}")]
    Semilattice(#[from] SemilatticeCondition),
}

pub fn read_table_file(path: &Path) -> Result<TableFile, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(path.to_path_buf(), e))?;
    TableFile::parse(&text).map_err(|e| LoadError::Parse(path.to_path_buf(), e))
}
