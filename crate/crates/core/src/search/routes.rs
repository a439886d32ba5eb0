//! The Gamma-function, good-subsemigroup and affine-structure routes.

use crate::correspond::affine::{brace_from_affine, check_affine};
use crate::correspond::gamma::{brace_from_gamma, check_gamma};
use crate::correspond::good::{brace_from_good, check_good};
use crate::inverse::{CliffordStructure, InverseSemigroup};
use crate::morphism::{EndoMap, EndomorphismMonoid, HolElem, HolSet, Holomorph, DEFAULT_ENDO_BOUND};

use super::engine::{run, Problem};
use super::{EnumerationReport, Fixed, Found, Route, SearchError, SearchOptions, Witness};

/// Idempotents first, then the rest, each group in index order.
fn idempotents_first(add: &CliffordStructure) -> Vec<usize> {
    let e = add.idempotents();
    let mut order: Vec<usize> = e.iter().collect();
    order.extend((0..add.len()).filter(|&x| !e.contains(x)));
    order
}

/// Shared state for the two searches over maps `x ↦ f_x ∈ End(S,+)`.
struct EndoAssignment<'a> {
    add: &'a CliffordStructure,
    end: &'a EndomorphismMonoid,
    order: Vec<usize>,
    slot_of: Vec<usize>,
    cands: Vec<Vec<usize>>,
}

impl<'a> EndoAssignment<'a> {
    fn new(
        add: &'a CliffordStructure,
        end: &'a EndomorphismMonoid,
        local: impl Fn(usize, &EndoMap) -> bool,
    ) -> Self {
        let order = idempotents_first(add);
        let mut slot_of = vec![0; add.len()];
        for (s, &x) in order.iter().enumerate() {
            slot_of[x] = s;
        }
        let cands = order
            .iter()
            .map(|&x| (0..end.len()).filter(|&i| local(x, end.get(i))).collect())
            .collect();
        EndoAssignment { add, end, order, slot_of, cands }
    }

    /// `f_p ∘ f_q = f_{p + f_p(q)}` wherever all three are assigned and
    /// the newest slot is involved.
    fn compositions_agree(&self, assign: &[usize], slot: usize) -> bool {
        let n = self.add.len();
        let known = |x: usize| self.slot_of[x] <= slot;
        let map = |x: usize| self.end.get(assign[self.slot_of[x]]);
        let new = self.order[slot];
        for p in (0..n).filter(|&p| known(p)) {
            for q in (0..n).filter(|&q| known(q)) {
                let z = self.add.op(p, map(p).apply(q));
                if !known(z) || (p != new && q != new && z != new) {
                    continue;
                }
                let (fp, fq, fz) = (map(p), map(q), map(z));
                if (0..n).any(|t| fp.apply(fq.apply(t)) != fz.apply(t)) {
                    return false;
                }
            }
        }
        true
    }

    fn maps(&self, assign: &[usize]) -> Vec<EndoMap> {
        (0..self.add.len()).map(|x| self.end.get(assign[self.slot_of[x]]).clone()).collect()
    }
}

struct GammaSearch<'a>(EndoAssignment<'a>);

impl Problem for GammaSearch<'_> {
    type Out = Found;

    fn slots(&self) -> usize {
        self.0.order.len()
    }

    fn candidates(&self, slot: usize) -> &[usize] {
        &self.0.cands[slot]
    }

    fn consistent(&self, assign: &[usize], slot: usize) -> bool {
        self.0.compositions_agree(assign, slot)
    }

    fn finish(&self, assign: &[usize]) -> Result<Option<Found>, SearchError> {
        let Ok(g) = check_gamma(self.0.add, self.0.maps(assign)) else {
            return Ok(None);
        };
        let brace = brace_from_gamma(self.0.add, &g)
            .map_err(|e| SearchError::Inconsistent(format!("Gamma function: {e}")))?;
        Ok(Some(Found { witness: Witness::Gamma(g), brace }))
    }
}

/// Conditions of the Gamma axioms that involve a single `γ_x`.
fn gamma_local(add: &CliffordStructure, x: usize, f: &EndoMap) -> bool {
    let n = add.len();
    let x0 = add.unit(x);
    let absorb = (0..n).all(|y| add.op(x0, f.apply(y)) == f.apply(y));
    let f2 = f.apply(x) != x0 || x == x0;
    let idem = !add.is_idempotent(x)
        || (add.idempotents().iter().all(|e| f.apply(e) == add.op(x, e))
            && add.class_of(x).members.iter().all(|a| f.apply(a) == a));
    absorb && f2 && idem
}

fn sort_results(results: &mut [Found], fixed: Fixed) {
    let key = |f: &Found| match fixed {
        Fixed::Add => f.brace.mul().table().cells().to_vec(),
        Fixed::Mul => f.brace.add().table().cells().to_vec(),
    };
    results.sort_by_cached_key(key);
}

pub(super) fn finish_report(
    route: Route,
    fixed: Fixed,
    carrier: &crate::table::CayleyTable,
    outcome: super::engine::Outcome<Found>,
    budget: u64,
) -> Result<EnumerationReport, SearchError> {
    let mut results = outcome.results;
    sort_results(&mut results, fixed);
    let report = EnumerationReport {
        route,
        fixed,
        carrier: carrier.clone(),
        results,
        stats: outcome.stats,
        complete: outcome.complete,
    };
    if report.complete {
        Ok(report)
    } else {
        Err(SearchError::BudgetExceeded { budget, partial: Box::new(report) })
    }
}

/// All Gamma functions on `(S,+)`. Idempotents are assigned first, with
/// the single-map conditions of (F1), (F2) and (F4) applied as candidate
/// filters; the composition law of (F1) prunes partial assignments.
pub fn enumerate_gamma_functions(
    add: &CliffordStructure,
    opts: &SearchOptions,
) -> Result<EnumerationReport, SearchError> {
    let end = crate::morphism::enumerate_endomorphisms(add.table(), DEFAULT_ENDO_BOUND)?;
    let p = GammaSearch(EndoAssignment::new(add, &end, |x, f| gamma_local(add, x, f)));
    let outcome = run(&p, opts)?;
    finish_report(Route::Gamma, Fixed::Add, add.table(), outcome, opts.budget)
}

struct GoodSearch<'a> {
    hol: &'a Holomorph,
    inner: EndoAssignment<'a>,
}

impl Problem for GoodSearch<'_> {
    type Out = Found;

    fn slots(&self) -> usize {
        self.inner.order.len()
    }

    fn candidates(&self, slot: usize) -> &[usize] {
        &self.inner.cands[slot]
    }

    /// With one element over each point, closure of `H` means the element
    /// over `p + f_p(q)` is `(f_p ∘ f_q, p + f_p(q))`.
    fn consistent(&self, assign: &[usize], slot: usize) -> bool {
        self.inner.compositions_agree(assign, slot)
    }

    fn finish(&self, assign: &[usize]) -> Result<Option<Found>, SearchError> {
        let h: HolSet = (0..self.inner.add.len())
            .map(|x| HolElem::new(assign[self.inner.slot_of[x]], x))
            .collect();
        let Ok(g) = check_good(self.hol, &h) else {
            return Ok(None);
        };
        let brace = brace_from_good(self.hol, &g)
            .map_err(|e| SearchError::Inconsistent(format!("good subsemigroup: {e}")))?;
        Ok(Some(Found { witness: Witness::Good(g), brace }))
    }
}

/// All good inverse subsemigroups of `End(S,+) ⋊ (S,+)`. One element is
/// chosen over each point; (G3) and (G4) filter the candidates and closure
/// prunes partial choices.
pub fn enumerate_good_subsemigroups(
    hol: &Holomorph,
    opts: &SearchOptions,
) -> Result<EnumerationReport, SearchError> {
    let add = hol.additive();
    let n = add.len();
    let zero = add.table().identity_element();
    let local = |x: usize, f: &EndoMap| {
        let x0 = add.unit(x);
        (0..n).all(|y| add.op(x0, f.apply(y)) == f.apply(y)) && zero.is_none_or(|z| f.apply(z) == x0)
    };
    let p = GoodSearch { hol, inner: EndoAssignment::new(add, hol.endos(), local) };
    let outcome = run(&p, opts)?;
    finish_report(Route::Good, Fixed::Add, add.table(), outcome, opts.budget)
}

const UNKNOWN: u8 = u8::MAX;

struct AffineSearch<'a> {
    mul: &'a InverseSemigroup,
    pinned: Vec<u8>,
    free: Vec<usize>,
    cands: Vec<Vec<usize>>,
}

impl AffineSearch<'_> {
    fn table(&self, assign: &[usize]) -> Vec<u8> {
        let mut t = self.pinned.clone();
        for (k, &v) in assign.iter().enumerate() {
            t[self.free[k]] = v as u8;
        }
        t
    }
}

/// (A1) and (A2) on every triple whose cells are all known.
fn partial_affine_ok(mul: &InverseSemigroup, t: &[u8]) -> bool {
    let n = mul.len();
    let d = |a: usize, b: usize| {
        let v = t[a * n + b];
        (v != UNKNOWN).then_some(v as usize)
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if let (Some(ac), Some(abc)) = (d(a, c), d(mul.op(a, b), c)) {
                    if let Some(r) = d(b, ac) {
                        if r != abc {
                            return false;
                        }
                    }
                }
                let lhs = d(b, c).and_then(|bc| d(a, mul.op(b, bc)));
                let rhs = d(a, b).and_then(|ab| {
                    d(a, c).and_then(|ac| d(ab, ac)).map(|v| mul.op(ab, v))
                });
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

impl Problem for AffineSearch<'_> {
    type Out = Found;

    fn slots(&self) -> usize {
        self.free.len()
    }

    fn candidates(&self, slot: usize) -> &[usize] {
        &self.cands[slot]
    }

    fn consistent(&self, assign: &[usize], _slot: usize) -> bool {
        partial_affine_ok(self.mul, &self.table(assign))
    }

    fn finish(&self, assign: &[usize]) -> Result<Option<Found>, SearchError> {
        let names = self.mul.table().names().to_vec();
        let cells = self.table(assign).into_iter().map(usize::from).collect();
        let table = crate::table::CayleyTable::from_flat(names, cells)
            .map_err(|e| SearchError::Inconsistent(e.to_string()))?;
        let Ok(d) = check_affine(self.mul, &table) else {
            return Ok(None);
        };
        let brace = brace_from_affine(self.mul, &d)
            .map_err(|e| SearchError::Inconsistent(format!("affine structure: {e}")))?;
        Ok(Some(Found { witness: Witness::Affine(d), brace }))
    }
}

/// Values allowed in cell `a ⋄ b` before any search: the (A3) pin if there
/// is one, otherwise every `v` with `(a⁻¹a)v = v`.
pub fn affine_cell_domain(mul: &InverseSemigroup, a: usize, b: usize) -> Vec<usize> {
    let n = mul.len();
    let left = mul.is_idempotent(a).then(|| mul.op(a, b));
    let right = mul.is_idempotent(b).then(|| mul.op(mul.op(mul.inv(a), b), a));
    match (left, right) {
        (Some(l), Some(r)) if l != r => vec![],
        (Some(v), _) | (_, Some(v)) => vec![v],
        (None, None) => {
            let u = mul.left_unit(a);
            (0..n).filter(|&v| mul.op(u, v) == v).collect()
        }
    }
}

/// All affine structures on `(S,·)`: (A3) pins the rows of idempotents and
/// the columns of idempotents, the remaining cells range over
/// [`affine_cell_domain`], and (A1)/(A2) prune partial tables.
pub fn enumerate_affine_structures(
    mul: &InverseSemigroup,
    opts: &SearchOptions,
) -> Result<EnumerationReport, SearchError> {
    let n = mul.len();
    let mut pinned = vec![UNKNOWN; n * n];
    let mut free = Vec::new();
    let mut cands = Vec::new();
    let mut contradiction = false;
    for a in 0..n {
        for b in 0..n {
            let dom = affine_cell_domain(mul, a, b);
            let pin = mul.is_idempotent(a) || mul.is_idempotent(b);
            match (pin, dom.as_slice()) {
                (true, [v]) => pinned[a * n + b] = *v as u8,
                (true, _) => contradiction = true,
                (false, _) => {
                    free.push(a * n + b);
                    cands.push(dom);
                }
            }
        }
    }
    let p = AffineSearch { mul, pinned, free, cands };
    let outcome = if contradiction || !partial_affine_ok(mul, &p.pinned) {
        super::engine::Outcome { results: vec![], stats: Default::default(), complete: true }
    } else {
        run(&p, opts)?
    };
    finish_report(Route::Affine, Fixed::Mul, mul.table(), outcome, opts.budget)
}
