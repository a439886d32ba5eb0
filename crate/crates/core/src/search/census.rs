//! All labelled semigroups on a small carrier.

use crate::inverse::{CliffordStructure, InverseSemigroup};
use crate::table::CayleyTable;

fn extend(n: usize, cells: &mut Vec<usize>, out: &mut Vec<CayleyTable>) {
    let k = cells.len();
    if k == n * n {
        let t = CayleyTable::from_flat(CayleyTable::default_names(n), cells.clone())
            .expect("values are in range");
        out.push(t);
        return;
    }
    for v in 0..n {
        cells.push(v);
        // Every triple whose three products are already filled in.
        let get = |a: usize, b: usize| cells.get(a * n + b).copied();
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let lhs = get(x, y).and_then(|xy| get(xy, z));
                    let rhs = get(y, z).and_then(|yz| get(x, yz));
                    match (lhs, rhs) {
                        (Some(l), Some(r)) => l == r,
                        _ => true,
                    }
                })
            })
        });
        if ok {
            extend(n, cells, out);
        }
        cells.pop();
    }
}

/// Every associative table on `{0..n-1}`, in lexicographic order of cells.
pub fn semigroups(n: usize) -> Vec<CayleyTable> {
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n * n), &mut out);
    out
}

pub fn inverse_semigroups(n: usize) -> Vec<InverseSemigroup> {
    semigroups(n).into_iter().filter_map(|t| InverseSemigroup::new(t).ok()).collect()
}

pub fn clifford_semigroups(n: usize) -> Vec<CliffordStructure> {
    inverse_semigroups(n).into_iter().filter_map(|s| CliffordStructure::new(s).ok()).collect()
}
