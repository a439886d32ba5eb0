//! Finite magmas given by their Cayley tables.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::set::ElemSet;

/// Largest supported carrier; element sets must fit in one `u64`.
pub const MAX_CARRIER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("carrier is empty")]
    Empty,
    #[error("carrier of size {0} exceeds the maximum of {MAX_CARRIER}")]
    TooLarge(usize),
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) = {value} is not a carrier index")]
    IndexOutOfRange { row: usize, col: usize, value: usize },
    #[error("element name {0:?} is declared twice")]
    DuplicateName(String),
    #[error("element {0} has an empty name")]
    EmptyName(usize),
}

/// A binary operation on `{0, .., n-1}` with display names for the elements.
///
/// `op(i, j)` is the index of `element_i * element_j`. Element identity is the
/// index; names only matter for input and output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    names: Vec<String>,
    cells: Vec<u8>,
}

impl CayleyTable {
    /// Validates a raw table given row by row.
    pub fn new(names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self, TableError> {
        let n = names.len();
        if rows.len() != n {
            return Err(TableError::DimensionMismatch { expected: n, found: rows.len() });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(TableError::DimensionMismatch { expected: n, found: row.len() });
            }
            flat.extend(row);
        }
        Self::from_flat(names, flat)
    }

    /// Validates a raw table given in row-major order.
    pub fn from_flat(names: Vec<String>, cells: Vec<usize>) -> Result<Self, TableError> {
        let n = names.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > MAX_CARRIER {
            return Err(TableError::TooLarge(n));
        }
        if cells.len() != n * n {
            return Err(TableError::DimensionMismatch { expected: n * n, found: cells.len() });
        }
        let mut seen = HashSet::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(TableError::EmptyName(i));
            }
            if !seen.insert(name.as_str()) {
                return Err(TableError::DuplicateName(name.clone()));
            }
        }
        if let Some(k) = cells.iter().position(|&v| v >= n) {
            return Err(TableError::IndexOutOfRange { row: k / n, col: k % n, value: cells[k] });
        }
        Ok(CayleyTable { names, cells: cells.into_iter().map(|v| v as u8).collect() })
    }

    /// Builds a table by evaluating `f` on every pair.
    pub fn from_fn(
        names: Vec<String>,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, TableError> {
        let n = names.len();
        let cells = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_flat(names, cells)
    }

    /// `"0", "1", .., "n-1"`.
    pub fn default_names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.len() + b] as usize
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn row(&self, a: usize) -> &[u8] {
        let n = self.len();
        &self.cells[a * n..(a + 1) * n]
    }

    /// Same carrier size and same operation, ignoring names.
    pub fn same_operation(&self, other: &CayleyTable) -> bool {
        self.cells == other.cells
    }

    /// First `(x, y, z)` in row-major order with `(xy)z != x(yz)`.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Fixed points of squaring.
    pub fn idempotents(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.op(x, x) == x).collect()
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> ElemSet {
        let n = self.len();
        (0..n).filter(|&x| (0..n).all(|a| self.op(x, a) == self.op(a, x))).collect()
    }

    /// The two-sided identity, if there is one.
    pub fn identity_element(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&e| (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
    }

    /// Transports the table along the bijection `perm` (old index to new index).
    pub fn relabel(&self, perm: &[usize]) -> CayleyTable {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut names = vec![String::new(); n];
        let mut cells = vec![0u8; n * n];
        for a in 0..n {
            names[perm[a]] = self.names[a].clone();
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.op(a, b)] as u8;
            }
        }
        CayleyTable { names, cells }
    }

    /// The same operation under different names.
    pub fn with_names(&self, names: Vec<String>) -> Result<CayleyTable, TableError> {
        Self::from_flat(names, self.cells.iter().map(|&c| c as usize).collect())
    }

    /// Whether `s` is closed under the operation.
    pub fn is_closed(&self, s: ElemSet) -> bool {
        s.iter().all(|a| s.iter().all(|b| s.contains(self.op(a, b))))
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CayleyTable [{}]", self.names.join(" "))?;
        for a in 0..self.len() {
            let row: Vec<&str> = self.row(a).iter().map(|&c| self.name(c as usize)).collect();
            writeln!(f, "  {} | {}", self.name(a), row.join(" "))?;
        }
        Ok(())
    }
}
