//! Isomorphism classes of braces on one carrier size.

use itertools::Itertools;

use crate::brace::WeakBrace;
use crate::correspond::GoodSubsemigroup;
use crate::morphism::{Holomorph, MorphismError};

use super::SearchError;

/// Largest carrier for the exhaustive bijection scan.
pub const MAX_ISO_CARRIER: usize = 8;

/// Some bijection `p` with `p(x+y) = p(x)+p(y)` and `p(xy) = p(x)p(y)`
/// from `a` onto `b`.
pub fn find_isomorphism(a: &WeakBrace, b: &WeakBrace) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.idempotents().len() != b.idempotents().len() || a.is_dual() != b.is_dual() {
        return None;
    }
    (0..n).permutations(n).find(|p| {
        (0..n).all(|x| {
            (0..n).all(|y| {
                p[a.sum(x, y)] == b.sum(p[x], p[y]) && p[a.prod(x, y)] == b.prod(p[x], p[y])
            })
        })
    })
}

/// Partition of `braces` into isomorphism classes, each listed by index and
/// classes ordered by their first member.
pub fn isomorphism_classes(braces: &[WeakBrace]) -> Result<Vec<Vec<usize>>, SearchError> {
    if let Some(b) = braces.iter().find(|b| b.len() > MAX_ISO_CARRIER) {
        return Err(SearchError::CarrierTooLarge { n: b.len(), bound: MAX_ISO_CARRIER });
    }
    Ok(partition(braces.len(), |i, j| find_isomorphism(&braces[i], &braces[j]).is_some()))
}

/// Partition of good subsemigroups under `H ↦ (ψ,0)H(ψ⁻¹,0)`, `ψ ∈ Aut(S,+)`.
pub fn conjugacy_classes(
    hol: &Holomorph,
    hs: &[GoodSubsemigroup],
) -> Result<Vec<Vec<usize>>, MorphismError> {
    let sets: Vec<_> = hs.iter().map(GoodSubsemigroup::to_set).collect();
    let mut related = vec![vec![false; hs.len()]; hs.len()];
    for i in 0..hs.len() {
        for j in 0..hs.len() {
            related[i][j] = hol.are_conjugate(&sets[i], &sets[j])?.is_some();
        }
    }
    Ok(partition(hs.len(), |i, j| related[i][j]))
}

fn partition(len: usize, same: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..len {
        match classes.iter_mut().find(|c| same(c[0], i)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}
