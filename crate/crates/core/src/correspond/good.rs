//! Good inverse subsemigroups of `End(S,+) ⋊ (S,+)`.
//!
//! `H` is good when it is an inverse subsemigroup and
//!
//! * (G1) `(f, x) ↦ x` is a bijection `H → S`;
//! * (G2) `(f,x) ∈ H` with `(f,x)⁻¹ = (g,y)` implies `(f, f(-y)) ∈ H`;
//! * (G3) `(f,x) ∈ H` implies `-x + x + f(y) = f(y)` for all `y`;
//! * (G4) if `(S,+)` has an identity `0`, `f(0) = -x + x` for `(f,x) ∈ H`.

use thiserror::Error;

use crate::brace::{BraceError, WeakBrace};
use crate::inverse::{AlgebraError, InverseSemigroup};
use crate::morphism::{EndoMap, HolElem, HolSet, Holomorph, MorphismError};
use crate::table::CayleyTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GoodKind {
    Inverse,
    Clifford,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoodError {
    #[error("H is not closed under the product")]
    NotClosed,
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("(G1) fails: point {point} has {count} preimages in H")]
    G1Fails { point: usize, count: usize },
    #[error("H is not an inverse subsemigroup: {0}")]
    NotInverseSub(AlgebraError),
    #[error("(G2) fails at {0:?}")]
    G2Fails(HolElem),
    #[error("(G3) fails at {element:?} with y = {y}")]
    G3Fails { element: HolElem, y: usize },
    #[error("(G4) fails at {0:?}")]
    G4Fails(HolElem),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

/// A validated good subsemigroup, stored by point: `elements[x] = (f, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodSubsemigroup {
    elements: Vec<HolElem>,
    maps: Vec<EndoMap>,
    kind: GoodKind,
}

impl GoodSubsemigroup {
    pub fn elements(&self) -> &[HolElem] {
        &self.elements
    }

    /// The endomorphism index paired with `x`.
    pub fn endo_at(&self, x: usize) -> usize {
        self.elements[x].endo
    }

    /// The endomorphism paired with `x`.
    pub fn map_at(&self, x: usize) -> &EndoMap {
        &self.maps[x]
    }

    pub fn to_set(&self) -> HolSet {
        self.elements.iter().copied().collect()
    }

    pub fn kind(&self) -> GoodKind {
        self.kind
    }

    pub fn is_clifford(&self) -> bool {
        self.kind == GoodKind::Clifford
    }
}

/// `a ∘ b = a + f(b)` where `(f, a)` is the element over `a`.
fn transferred_table(hol: &Holomorph, by_point: &[HolElem]) -> CayleyTable {
    let add = hol.add();
    CayleyTable::from_fn(add.names().to_vec(), |a, b| {
        add.op(a, hol.endo(by_point[a]).apply(b))
    })
    .expect("points are carrier indices")
}

/// Checks closure, (G1), the inverse-subsemigroup property, then (G2)-(G4).
pub fn check_good(hol: &Holomorph, h: &HolSet) -> Result<GoodSubsemigroup, GoodError> {
    if !hol.is_closed(h)? {
        return Err(GoodError::NotClosed);
    }
    let add = hol.add();
    let n = add.len();
    let mut by_point: Vec<Option<HolElem>> = vec![None; n];
    let mut counts = vec![0usize; n];
    for &u in h {
        counts[u.point] += 1;
        by_point[u.point] = Some(u);
    }
    if let Some(point) = (0..n).find(|&x| counts[x] != 1) {
        return Err(GoodError::G1Fails { point, count: counts[point] });
    }
    let by_point: Vec<HolElem> = by_point.into_iter().map(Option::unwrap).collect();

    // H ≅ (S, ∘) through the second projection.
    let circ = InverseSemigroup::new(transferred_table(hol, &by_point))
        .map_err(GoodError::NotInverseSub)?;
    let add_s = hol.additive();

    for &u in &by_point {
        let f = hol.endo(u);
        let y = circ.inv(u.point);
        if by_point[f.apply(add_s.inv(y))].endo != u.endo {
            return Err(GoodError::G2Fails(u));
        }
    }
    for &u in &by_point {
        let f = hol.endo(u);
        let x0 = add_s.left_unit(u.point);
        if let Some(y) = (0..n).find(|&y| add.op(x0, f.apply(y)) != f.apply(y)) {
            return Err(GoodError::G3Fails { element: u, y });
        }
    }
    if let Some(zero) = add.identity_element() {
        for &u in &by_point {
            if hol.endo(u).apply(zero) != add_s.left_unit(u.point) {
                return Err(GoodError::G4Fails(u));
            }
        }
    }
    let kind = if circ.is_clifford() { GoodKind::Clifford } else { GoodKind::Inverse };
    let maps = by_point.iter().map(|&u| hol.endo(u).clone()).collect();
    Ok(GoodSubsemigroup { elements: by_point, maps, kind })
}

/// `B(H) = (S, +, ∘)` with `a ∘ b = a + f(b)`.
pub fn brace_from_good(hol: &Holomorph, g: &GoodSubsemigroup) -> Result<WeakBrace, BraceError> {
    WeakBrace::new(hol.add(), &transferred_table(hol, &g.elements))
}

/// `S(B) = {(λ_a, a)}`, validated.
pub fn good_from_brace(hol: &Holomorph, b: &WeakBrace) -> Result<GoodSubsemigroup, GoodError> {
    if !b.add().table().same_operation(hol.add()) {
        return Err(GoodError::Brace(BraceError::CarrierMismatch));
    }
    let h = (0..b.len())
        .map(|a| Ok(HolElem::new(hol.endos().resolve(&b.lambda_of(a))?, a)))
        .collect::<Result<HolSet, MorphismError>>()?;
    check_good(hol, &h)
}
