//! Strong semilattices `[Y; B_α; φ_{α,β}]` of skew left braces.
//!
//! Composition: for `a ∈ B_α`, `b ∈ B_β`,
//! `a + b = φ_{α,αβ}(a) + φ_{β,αβ}(b)` and likewise for the product.
//! Decomposition of a dual brace: `Y = E(S)` with `e ∧ f = e + f`,
//! `B_e = {x : x⁰ = e}` and `φ_{e,f}(x) = f + x` for `e ≥ f`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::brace::{BraceError, WeakBrace};
use crate::table::CayleyTable;

/// The condition of a semilattice description that fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemilatticeCondition {
    #[error("Y is not a meet-semilattice: {0}")]
    MeetNotSemilattice(&'static str),
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("component {0} is not a skew left brace")]
    ComponentNotSkew(String),
    #[error("no map given for {0} >= {1}")]
    MissingHom(String, String),
    #[error("map given for {0} -> {1} but {0} >= {1} does not hold")]
    HomNotComparable(String, String),
    #[error("map {0} -> {1} has the wrong length or leaves the target")]
    HomOutOfRange(String, String),
    #[error("map {0} -> {1} does not preserve {2}")]
    HomNotBraceHom(String, String, &'static str),
    #[error("condition (1) fails: φ_({0},{0}) is not the identity")]
    IdentityCondition(String),
    #[error("condition (2) fails: φ_({1},{2}) ∘ φ_({0},{1}) != φ_({0},{2})")]
    CompositionCondition(String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemilatticeError {
    #[error("invalid semilattice description: {0}")]
    Invalid(#[from] SemilatticeCondition),
    #[error("the brace is not dual")]
    NotDual,
    #[error("the composed structure is not a weak brace: {0}")]
    Composite(#[from] BraceError),
    #[error("the composed brace is not dual")]
    CompositeNotDual,
    #[error("H-class of {0} is not a skew left brace under the restricted operations")]
    ClassNotSkew(String),
    #[error("recomposition does not reproduce the brace")]
    RecompositionMismatch,
}

/// A validated `[Y; B_α; φ_{α,β}]`. Components are indexed like the
/// elements of `Y`; homs map local indices of `B_α` to local indices of
/// `B_β` and are stored for every `α >= β`, including the identities.
#[derive(Clone, Debug)]
pub struct StrongSemilattice {
    meet: CayleyTable,
    components: Vec<WeakBrace>,
    homs: BTreeMap<(usize, usize), Vec<usize>>,
}

impl StrongSemilattice {
    /// Validates the description. Omitted identity maps `φ_{α,α}` are filled
    /// in; every strict `α > β` needs an explicit map.
    pub fn new(
        meet: CayleyTable,
        components: Vec<WeakBrace>,
        mut homs: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self, SemilatticeCondition> {
        let k = meet.len();
        if !meet.is_associative() {
            return Err(SemilatticeCondition::MeetNotSemilattice("not associative"));
        }
        if !meet.is_commutative() {
            return Err(SemilatticeCondition::MeetNotSemilattice("not commutative"));
        }
        if meet.idempotents().len() != k {
            return Err(SemilatticeCondition::MeetNotSemilattice("not idempotent"));
        }
        if components.len() != k {
            return Err(SemilatticeCondition::ComponentCount { expected: k, found: components.len() });
        }
        let name = |a: usize| meet.name(a).to_string();
        if let Some(a) = (0..k).find(|&a| !components[a].is_skew()) {
            return Err(SemilatticeCondition::ComponentNotSkew(name(a)));
        }
        let geq = |a: usize, b: usize| meet.op(a, b) == b;
        for &(a, b) in homs.keys() {
            if !geq(a, b) {
                return Err(SemilatticeCondition::HomNotComparable(name(a), name(b)));
            }
        }
        for a in 0..k {
            homs.entry((a, a)).or_insert_with(|| (0..components[a].len()).collect());
            for b in 0..k {
                if geq(a, b) && !homs.contains_key(&(a, b)) {
                    return Err(SemilatticeCondition::MissingHom(name(a), name(b)));
                }
            }
        }
        for (&(a, b), map) in &homs {
            let (src, dst) = (&components[a], &components[b]);
            if map.len() != src.len() || map.iter().any(|&v| v >= dst.len()) {
                return Err(SemilatticeCondition::HomOutOfRange(name(a), name(b)));
            }
            if a == b && map.iter().enumerate().any(|(x, &v)| x != v) {
                return Err(SemilatticeCondition::IdentityCondition(name(a)));
            }
            let n = src.len();
            for x in 0..n {
                for y in 0..n {
                    if map[src.sum(x, y)] != dst.sum(map[x], map[y]) {
                        return Err(SemilatticeCondition::HomNotBraceHom(name(a), name(b), "+"));
                    }
                    if map[src.prod(x, y)] != dst.prod(map[x], map[y]) {
                        return Err(SemilatticeCondition::HomNotBraceHom(name(a), name(b), "·"));
                    }
                }
            }
        }
        for (&(a, b), f) in &homs {
            for (&(b2, c), g) in homs.range((b, 0)..=(b, k)) {
                debug_assert_eq!(b2, b);
                let h = &homs[&(a, c)];
                if (0..f.len()).any(|x| g[f[x]] != h[x]) {
                    return Err(SemilatticeCondition::CompositionCondition(name(a), name(b), name(c)));
                }
            }
        }
        Ok(StrongSemilattice { meet, components, homs })
    }

    pub fn meet(&self) -> &CayleyTable {
        &self.meet
    }

    pub fn components(&self) -> &[WeakBrace] {
        &self.components
    }

    /// `φ_{α,β}` as local indices, for `α >= β`.
    pub fn hom(&self, alpha: usize, beta: usize) -> Option<&[usize]> {
        self.homs.get(&(alpha, beta)).map(Vec::as_slice)
    }

    pub fn homs(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.homs
    }

    /// `(α, x)` for every element of the union, in composed order.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(a, c)| (0..c.len()).map(move |x| (a, x)))
            .collect()
    }
}

/// The strong semilattice on the disjoint union, elements named `α.x` and
/// ordered by component, then by local index.
pub fn compose_semilattice(sl: &StrongSemilattice) -> Result<WeakBrace, SemilatticeError> {
    let pos = sl.positions();
    let mut offset = Vec::with_capacity(sl.components.len());
    let mut total = 0;
    for c in &sl.components {
        offset.push(total);
        total += c.len();
    }
    let names: Vec<String> = pos
        .iter()
        .map(|&(a, x)| format!("{}.{}", sl.meet.name(a), sl.components[a].name(x)))
        .collect();
    let combine = |i: usize, j: usize, op: &dyn Fn(&WeakBrace, usize, usize) -> usize| {
        let ((a, x), (b, y)) = (pos[i], pos[j]);
        let m = sl.meet.op(a, b);
        let (px, py) = (sl.homs[&(a, m)][x], sl.homs[&(b, m)][y]);
        offset[m] + op(&sl.components[m], px, py)
    };
    let add = CayleyTable::from_fn(names.clone(), |i, j| combine(i, j, &|c, p, q| c.sum(p, q)))
        .map_err(|_| SemilatticeError::RecompositionMismatch)?;
    let mul = CayleyTable::from_fn(names, |i, j| combine(i, j, &|c, p, q| c.prod(p, q)))
        .map_err(|_| SemilatticeError::RecompositionMismatch)?;
    let b = WeakBrace::new(&add, &mul)?;
    if !b.is_dual() {
        return Err(SemilatticeError::CompositeNotDual);
    }
    Ok(b)
}

/// A decomposition with `position[x]` the composed index of element `x`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub sl: StrongSemilattice,
    pub position: Vec<usize>,
}

/// Splits a dual brace along its H-classes and verifies that recomposing
/// gives back the same tables.
pub fn decompose_semilattice(b: &WeakBrace) -> Result<Decomposition, SemilatticeError> {
    if !b.is_dual() {
        return Err(SemilatticeError::NotDual);
    }
    let ys: Vec<usize> = b.idempotents().iter().collect();
    let y_index = |e: usize| ys.iter().position(|&f| f == e).expect("idempotent");
    let y_names: Vec<String> = ys.iter().map(|&e| b.name(e).to_string()).collect();
    let meet = CayleyTable::from_fn(y_names, |i, j| y_index(b.sum(ys[i], ys[j])))
        .expect("idempotents are closed under +");

    let members: Vec<Vec<usize>> =
        ys.iter().map(|&e| b.add().class_of(e).members.iter().collect()).collect();
    let local = |cls: &[usize], x: usize| cls.iter().position(|&y| y == x).expect("member");
    let mut components = Vec::with_capacity(ys.len());
    for (i, cls) in members.iter().enumerate() {
        let names: Vec<String> = cls.iter().map(|&x| b.name(x).to_string()).collect();
        let add = CayleyTable::from_fn(names.clone(), |p, q| local(cls, b.sum(cls[p], cls[q])));
        let mul = CayleyTable::from_fn(names, |p, q| local(cls, b.prod(cls[p], cls[q])));
        let (add, mul) = add.and_then(|a| mul.map(|m| (a, m))).expect("H-classes are closed");
        let c = WeakBrace::new(&add, &mul)
            .ok()
            .filter(WeakBrace::is_skew)
            .ok_or_else(|| SemilatticeError::ClassNotSkew(b.name(ys[i]).to_string()))?;
        components.push(c);
    }

    let mut homs = BTreeMap::new();
    for (i, &e) in ys.iter().enumerate() {
        for (j, &f) in ys.iter().enumerate() {
            if b.sum(e, f) == f {
                let map = members[i].iter().map(|&x| local(&members[j], b.sum(f, x))).collect();
                homs.insert((i, j), map);
            }
        }
    }
    let sl = StrongSemilattice::new(meet, components, homs)?;
    let composed = compose_semilattice(&sl)?;

    let mut position = vec![0; b.len()];
    for (k, &(i, p)) in sl.positions().iter().enumerate() {
        position[members[i][p]] = k;
    }
    let n = b.len();
    for x in 0..n {
        for y in 0..n {
            if composed.sum(position[x], position[y]) != position[b.sum(x, y)]
                || composed.prod(position[x], position[y]) != position[b.prod(x, y)]
            {
                return Err(SemilatticeError::RecompositionMismatch);
            }
        }
    }
    Ok(Decomposition { sl, position })
}
