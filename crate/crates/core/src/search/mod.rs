//! Enumeration of every weak brace over a fixed carrier.
//!
//! Four routes share one backtracking engine: Gamma functions and good
//! subsemigroups (fixed `(S,+)`), affine structures (fixed `(S,·)`), and a
//! brute-force oracle that fills the missing table cell by cell and uses
//! none of the correspondences. Results are sorted by the flattened table of
//! the operation that was searched for, so reports do not depend on the
//! number of workers.

mod census;
mod engine;
mod iso;
mod oracle;
mod routes;

use std::fmt;
use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::brace::WeakBrace;
use crate::correspond::{AffineStructure, GammaFunction, GoodSubsemigroup};
use crate::morphism::MorphismError;
use crate::table::CayleyTable;

pub use census::{clifford_semigroups, inverse_semigroups, semigroups};
pub use iso::{conjugacy_classes, find_isomorphism, isomorphism_classes, MAX_ISO_CARRIER};
pub use oracle::{oracle_enumerate_braces, MAX_ORACLE_CARRIER};
pub use routes::{
    affine_cell_domain, enumerate_affine_structures, enumerate_gamma_functions,
    enumerate_good_subsemigroups,
};

/// Default cap on explored search nodes.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Gamma,
    Good,
    Affine,
    Oracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Gamma => "gamma",
            Route::Good => "good",
            Route::Affine => "affine",
            Route::Oracle => "oracle",
        })
    }
}

/// Which operation of the brace is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Fixed {
    Add,
    Mul,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, jobs: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub pruned: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

/// The structure found by a route, next to the brace it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Gamma(GammaFunction),
    Good(GoodSubsemigroup),
    Affine(AffineStructure),
    /// The oracle finds the brace directly.
    Table,
}

#[derive(Clone, Debug)]
pub struct Found {
    pub witness: Witness,
    pub brace: WeakBrace,
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub route: Route,
    pub fixed: Fixed,
    pub carrier: CayleyTable,
    pub results: Vec<Found>,
    pub stats: Stats,
    /// False when the budget ran out; `results` is then a partial list.
    pub complete: bool,
}

impl EnumerationReport {
    pub fn len(&self) -> usize {
        self.results.len()
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }

    pub fn braces(&self) -> impl Iterator<Item = &WeakBrace> {
        self.results.iter().map(|f| &f.brace)
    }

    pub fn dual_count(&self) -> usize {
        self.braces().filter(|b| b.is_dual()).count()
    }

    /// The operation that was searched for.
    pub fn found_table<'a>(&self, b: &'a WeakBrace) -> &'a CayleyTable {
        match self.fixed {
            Fixed::Add => b.mul().table(),
            Fixed::Mul => b.add().table(),
        }
    }

    /// Flattened searched-for tables, in report order.
    pub fn brace_keys(&self) -> Vec<Vec<u8>> {
        self.braces().map(|b| self.found_table(b).cells().to_vec()).collect()
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search budget of {budget} nodes exceeded after {found} results", found = .partial.len())]
    BudgetExceeded { budget: u64, partial: Box<EnumerationReport> },
    #[error("carrier of size {n} exceeds the bound {bound} for this search")]
    CarrierTooLarge { n: usize, bound: usize },
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("validated structure failed to induce a brace: {0}")]
    Inconsistent(String),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}
