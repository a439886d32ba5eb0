//! Gamma functions `γ: S → End(S,+)` on a Clifford semigroup `(S,+)`.
//!
//! * (F1) `γ_x γ_y = γ_{x+γ_x(y)}`, `γ_{x⁰}(x) = x`, `x⁰ + γ_x(y) = γ_x(y)`
//! * (F2) `γ_x(x) = x⁰` implies `x = x⁰`
//! * (F3) some `x⁻¹` has `γ_x(x⁻¹) = -x` and `γ_{x⁻¹}(x) = -x⁻¹`
//! * (F4) `γ_e(f) = e + f` for idempotents `e, f`
//!
//! The dual variant replaces (F2)/(F3) and the middle part of (F1) with
//! (D1): `γ_x` restricts to an automorphism of the group `H_x`.

use thiserror::Error;

use crate::brace::{BraceError, WeakBrace};
use crate::inverse::CliffordStructure;
use crate::morphism::{EndoMap, EndomorphismMonoid, MorphismError};
use crate::set::ElemSet;
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("expected {expected} maps, found {found}")]
    CarrierMismatch { expected: usize, found: usize },
    #[error("γ_{0} is not an endomorphism of (S,+)")]
    NotEndomorphism(usize),
    #[error("(F1) γ_x γ_y != γ_(x+γ_x(y)) at (x,y) = ({x},{y})")]
    F1Composition { x: usize, y: usize },
    #[error("(F1) γ_(x⁰)(x) != x at x = {0}")]
    F1Unit(usize),
    #[error("(F1) x⁰ + γ_x(y) != γ_x(y) at (x,y) = ({x},{y})")]
    F1Absorb { x: usize, y: usize },
    #[error("(F2) γ_x(x) = x⁰ but x != x⁰ at x = {0}")]
    F2Fails(usize),
    #[error("(F3) no x⁻¹ exists for x = {0}")]
    F3Fails(usize),
    #[error("(F4) γ_e(f) != e+f at (e,f) = ({0},{1})")]
    F4Fails(usize, usize),
    #[error("the (F3) witnesses {witnesses:?} of {x} are not exactly its ∘-inverse")]
    F3WitnessNotInverse { x: usize, witnesses: ElemSet },
    #[error(transparent)]
    Brace(#[from] BraceError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualGammaError {
    #[error("expected {expected} maps, found {found}")]
    CarrierMismatch { expected: usize, found: usize },
    #[error("γ_{0} is not an endomorphism of (S,+)")]
    NotEndomorphism(usize),
    #[error("(D1) γ_{x}({a}) leaves H_{x}")]
    D1NotInvariant { x: usize, a: usize },
    #[error("(D1) γ_{0} is not injective on H_{0}")]
    D1NotBijective(usize),
    #[error("(D2) γ_x γ_y != γ_(x+γ_x(y)) at (x,y) = ({x},{y})")]
    D2Composition { x: usize, y: usize },
    #[error("(D2) x⁰ + γ_x(y) != γ_x(y) at (x,y) = ({x},{y})")]
    D2Absorb { x: usize, y: usize },
    #[error("(D3) γ_e(f) != e+f at (e,f) = ({0},{1})")]
    D3Fails(usize, usize),
}

/// A validated Gamma function with its (F3) witness sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFunction {
    maps: Vec<EndoMap>,
    dual: bool,
    witnesses: Vec<ElemSet>,
}

impl GammaFunction {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `γ_x`
    pub fn map(&self, x: usize) -> &EndoMap {
        &self.maps[x]
    }

    pub fn maps(&self) -> &[EndoMap] {
        &self.maps
    }

    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.maps[x].apply(y)
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// Every `y` satisfying (F3) for `x`.
    pub fn inverse_witnesses(&self, x: usize) -> ElemSet {
        self.witnesses[x]
    }

    /// Positions of the `γ_x` in an enumerated endomorphism list.
    pub fn indices(&self, end: &EndomorphismMonoid) -> Result<Vec<usize>, MorphismError> {
        self.maps.iter().map(|f| end.resolve(f)).collect()
    }
}

fn check_endos(add: &CliffordStructure, maps: &[EndoMap]) -> Result<(), (usize, usize, Option<usize>)> {
    let n = add.len();
    if maps.len() != n {
        return Err((n, maps.len(), None));
    }
    match (0..n).find(|&x| !maps[x].is_endomorphism_of(add.table())) {
        Some(x) => Err((n, maps.len(), Some(x))),
        None => Ok(()),
    }
}

fn composition_witness(add: &CliffordStructure, maps: &[EndoMap]) -> Option<(usize, usize)> {
    let n = add.len();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| {
        let z = add.op(x, maps[x].apply(y));
        (0..n).any(|t| maps[x].apply(maps[y].apply(t)) != maps[z].apply(t))
    })
}

fn absorb_witness(add: &CliffordStructure, maps: &[EndoMap]) -> Option<(usize, usize)> {
    let n = add.len();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| {
        let g = maps[x].apply(y);
        add.op(add.unit(x), g) != g
    })
}

fn idempotent_witness(add: &CliffordStructure, maps: &[EndoMap]) -> Option<(usize, usize)> {
    let e = add.idempotents();
    e.iter()
        .flat_map(|a| e.iter().map(move |b| (a, b)))
        .find(|&(a, b)| maps[a].apply(b) != add.op(a, b))
}

/// All `y` with `γ_x(y) = -x` and `γ_y(x) = -y`.
fn f3_witnesses(add: &CliffordStructure, maps: &[EndoMap], x: usize) -> ElemSet {
    (0..add.len())
        .filter(|&y| maps[x].apply(y) == add.inv(x) && maps[y].apply(x) == add.inv(y))
        .collect()
}

/// Validates (F1)-(F4) in that order and sets the dual flag.
pub fn check_gamma(add: &CliffordStructure, maps: Vec<EndoMap>) -> Result<GammaFunction, GammaError> {
    check_endos(add, &maps).map_err(|(expected, found, x)| match x {
        Some(x) => GammaError::NotEndomorphism(x),
        None => GammaError::CarrierMismatch { expected, found },
    })?;
    let n = add.len();
    if let Some((x, y)) = composition_witness(add, &maps) {
        return Err(GammaError::F1Composition { x, y });
    }
    if let Some(x) = (0..n).find(|&x| maps[add.unit(x)].apply(x) != x) {
        return Err(GammaError::F1Unit(x));
    }
    if let Some((x, y)) = absorb_witness(add, &maps) {
        return Err(GammaError::F1Absorb { x, y });
    }
    if let Some(x) = (0..n).find(|&x| maps[x].apply(x) == add.unit(x) && x != add.unit(x)) {
        return Err(GammaError::F2Fails(x));
    }
    let witnesses: Vec<ElemSet> = (0..n).map(|x| f3_witnesses(add, &maps, x)).collect();
    if let Some(x) = (0..n).find(|&x| witnesses[x].is_empty()) {
        return Err(GammaError::F3Fails(x));
    }
    if let Some((e, f)) = idempotent_witness(add, &maps) {
        return Err(GammaError::F4Fails(e, f));
    }
    let dual = check_dual_gamma(add, &maps).is_ok();
    Ok(GammaFunction { maps, dual, witnesses })
}

/// Validates (D1)-(D3); containment `γ_x(H_x) ⊆ H_x` is tested before
/// injectivity.
pub fn check_dual_gamma(add: &CliffordStructure, maps: &[EndoMap]) -> Result<(), DualGammaError> {
    check_endos(add, maps).map_err(|(expected, found, x)| match x {
        Some(x) => DualGammaError::NotEndomorphism(x),
        None => DualGammaError::CarrierMismatch { expected, found },
    })?;
    for x in 0..add.len() {
        let class = add.class_of(x).members;
        if let Some(a) = class.iter().find(|&a| !class.contains(maps[x].apply(a))) {
            return Err(DualGammaError::D1NotInvariant { x, a });
        }
        let image: ElemSet = class.iter().map(|a| maps[x].apply(a)).collect();
        if image.len() != class.len() {
            return Err(DualGammaError::D1NotBijective(x));
        }
    }
    if let Some((x, y)) = composition_witness(add, maps) {
        return Err(DualGammaError::D2Composition { x, y });
    }
    if let Some((x, y)) = absorb_witness(add, maps) {
        return Err(DualGammaError::D2Absorb { x, y });
    }
    if let Some((e, f)) = idempotent_witness(add, maps) {
        return Err(DualGammaError::D3Fails(e, f));
    }
    Ok(())
}

pub fn is_dual_gamma(add: &CliffordStructure, maps: &[EndoMap]) -> bool {
    check_dual_gamma(add, maps).is_ok()
}

/// `x ∘ y = x + γ_x(y)` as a table.
pub fn circle_table(add: &CliffordStructure, maps: &[EndoMap]) -> CayleyTable {
    CayleyTable::from_fn(add.table().names().to_vec(), |x, y| add.op(x, maps[x].apply(y)))
        .expect("endomorphisms map into the carrier")
}

/// `B(γ) = (S, +, ∘)`; also checks that each (F3) witness set is exactly
/// `{x⁻¹}` for the inverse in `(S,∘)`.
pub fn brace_from_gamma(add: &CliffordStructure, g: &GammaFunction) -> Result<WeakBrace, GammaError> {
    let b = WeakBrace::new(add.table(), &circle_table(add, &g.maps))?;
    for x in 0..b.len() {
        if g.witnesses[x] != ElemSet::singleton(b.inv(x)) {
            return Err(GammaError::F3WitnessNotInverse { x, witnesses: g.witnesses[x] });
        }
    }
    Ok(b)
}

/// `G(B) = λ`, validated.
pub fn gamma_from_brace(b: &WeakBrace) -> Result<GammaFunction, GammaError> {
    check_gamma(b.add(), (0..b.len()).map(|x| b.lambda_of(x)).collect())
}

/// `γ_x(y) = x⁰ + y`, the Gamma function of the trivial brace.
pub fn trivial_gamma(add: &CliffordStructure) -> Vec<EndoMap> {
    let n = add.len();
    (0..n)
        .map(|x| EndoMap::new((0..n).map(|y| add.op(add.unit(x), y)).collect()))
        .collect()
}
