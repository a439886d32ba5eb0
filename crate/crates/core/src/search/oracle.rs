//! Brute-force enumeration of the missing operation table.

use crate::brace::WeakBrace;
use crate::inverse::InverseSemigroup;
use crate::table::CayleyTable;

use super::engine::{run, Problem};
use super::routes::finish_report;
use super::{EnumerationReport, Fixed, Found, Route, SearchError, SearchOptions, Witness};

/// Largest carrier the oracle accepts; at this size it may need the budget.
pub const MAX_ORACLE_CARRIER: usize = 4;

const UNKNOWN: u8 = u8::MAX;

struct OracleSearch<'a> {
    fixed: &'a InverseSemigroup,
    which: Fixed,
    values: Vec<usize>,
}

impl OracleSearch<'_> {
    fn partial(&self, assign: &[usize]) -> Vec<u8> {
        let n = self.fixed.len();
        let mut t = vec![UNKNOWN; n * n];
        for (k, &v) in assign.iter().enumerate() {
            t[k] = v as u8;
        }
        t
    }
}

fn known(t: &[u8], n: usize, a: usize, b: usize) -> Option<usize> {
    let v = t[a * n + b];
    (v != UNKNOWN).then_some(v as usize)
}

fn partial_associative(t: &[u8], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = known(t, n, x, y) else { continue };
            for z in 0..n {
                let lhs = known(t, n, xy, z);
                let rhs = known(t, n, y, z).and_then(|yz| known(t, n, x, yz));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `x(y+z) = xy - x + xz` on the known cells of a partial multiplication.
fn partial_distributive(add: &InverseSemigroup, t: &[u8]) -> bool {
    let n = add.len();
    for x in 0..n {
        let nx = add.inv(x);
        for y in 0..n {
            let Some(xy) = known(t, n, x, y) else { continue };
            for z in 0..n {
                let lhs = known(t, n, x, add.op(y, z));
                let rhs = known(t, n, x, z).map(|xz| add.op(add.op(xy, nx), xz));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl Problem for OracleSearch<'_> {
    type Out = Found;

    fn slots(&self) -> usize {
        self.fixed.len() * self.fixed.len()
    }

    fn candidates(&self, _slot: usize) -> &[usize] {
        &self.values
    }

    fn consistent(&self, assign: &[usize], _slot: usize) -> bool {
        let t = self.partial(assign);
        let n = self.fixed.len();
        partial_associative(&t, n) && (self.which == Fixed::Mul || partial_distributive(self.fixed, &t))
    }

    fn finish(&self, assign: &[usize]) -> Result<Option<Found>, SearchError> {
        let names = self.fixed.table().names().to_vec();
        let other = CayleyTable::from_flat(names, assign.to_vec())
            .map_err(|e| SearchError::Inconsistent(e.to_string()))?;
        let brace = match self.which {
            Fixed::Add => WeakBrace::new(self.fixed.table(), &other),
            Fixed::Mul => WeakBrace::new(&other, self.fixed.table()),
        };
        Ok(brace.ok().map(|brace| Found { witness: Witness::Table, brace }))
    }
}

/// Every table `T` such that `(fixed, T)` (for `which = Add`) or
/// `(T, fixed)` (for `which = Mul`) is a weak brace, found by filling `T`
/// row by row with associativity and, when `+` is fixed, distributivity
/// checked on the known cells. The full brace check runs on each leaf.
pub fn oracle_enumerate_braces(
    fixed: &InverseSemigroup,
    which: Fixed,
    opts: &SearchOptions,
) -> Result<EnumerationReport, SearchError> {
    let n = fixed.len();
    if n > MAX_ORACLE_CARRIER {
        return Err(SearchError::CarrierTooLarge { n, bound: MAX_ORACLE_CARRIER });
    }
    let p = OracleSearch { fixed, which, values: (0..n).collect() };
    let outcome = run(&p, opts)?;
    finish_report(Route::Oracle, which, fixed.table(), outcome, opts.budget)
}
