//! Endomorphisms of a finite additive semigroup and the semidirect product
//! `End(S,+) ⋊ (S,+)` with `(f,x)(g,y) = (f∘g, x + f(y))`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::inverse::CliffordStructure;
use crate::table::CayleyTable;

/// Default carrier bound for the `n^n` endomorphism scan.
pub const DEFAULT_ENDO_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("carrier of size {n} exceeds the endomorphism search bound {bound}")]
    CarrierTooLarge { n: usize, bound: usize },
    #[error("map {0:?} is not in the enumerated endomorphism list")]
    EndoNotInList(EndoMap),
    #[error("the additive semigroup has no identity element")]
    NoIdentity,
}

/// A self-map of the carrier, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoMap(Vec<u8>);

impl EndoMap {
    pub fn new(images: Vec<usize>) -> Self {
        EndoMap(images.into_iter().map(|v| v as u8).collect())
    }

    pub fn identity(n: usize) -> Self {
        EndoMap((0..n as u8).collect())
    }

    pub fn constant(n: usize, value: usize) -> Self {
        EndoMap(vec![value as u8; n])
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.len()];
        self.0.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    pub fn inverse(&self) -> Option<EndoMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0u8; self.len()];
        for (x, &v) in self.0.iter().enumerate() {
            inv[v as usize] = x as u8;
        }
        Some(EndoMap(inv))
    }

    /// First `(x, y)` with `f(x*y) != f(x)*f(y)`.
    pub fn homomorphism_witness(&self, t: &CayleyTable) -> Option<(usize, usize)> {
        let n = t.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.apply(t.op(x, y)) != t.op(self.apply(x), self.apply(y)))
    }

    pub fn is_endomorphism_of(&self, t: &CayleyTable) -> bool {
        self.len() == t.len() && self.homomorphism_witness(t).is_none()
    }

    /// The `(x1x2..xn)` notation, e.g. `(00e0a)`.
    pub fn display<'a>(&'a self, t: &'a CayleyTable) -> impl fmt::Display + 'a {
        struct D<'a>(&'a EndoMap, &'a CayleyTable);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let short = self.1.names().iter().all(|s| s.chars().count() == 1);
                f.write_str("(")?;
                for (i, v) in self.0.images().enumerate() {
                    if i > 0 && !short {
                        f.write_str(" ")?;
                    }
                    f.write_str(self.1.name(v))?;
                }
                f.write_str(")")
            }
        }
        D(self, t)
    }
}

impl fmt::Debug for EndoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EndoMap{:?}", self.0)
    }
}

/// All endomorphisms of one table, interned in lexicographic order of their
/// image arrays.
#[derive(Clone, Debug)]
pub struct EndomorphismMonoid {
    maps: Vec<EndoMap>,
    index: HashMap<EndoMap, usize>,
}

impl EndomorphismMonoid {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn get(&self, i: usize) -> &EndoMap {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[EndoMap] {
        &self.maps
    }

    pub fn position(&self, f: &EndoMap) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn resolve(&self, f: &EndoMap) -> Result<usize, MorphismError> {
        self.position(f).ok_or_else(|| MorphismError::EndoNotInList(f.clone()))
    }

    /// Index of `maps[f] ∘ maps[g]`.
    pub fn compose(&self, f: usize, g: usize) -> Result<usize, MorphismError> {
        self.resolve(&self.maps[f].compose(&self.maps[g]))
    }

    pub fn identity(&self) -> usize {
        let n = self.maps.first().map_or(0, EndoMap::len);
        self.position(&EndoMap::identity(n)).expect("identity is an endomorphism")
    }

    /// Indices of the bijective endomorphisms.
    pub fn automorphisms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maps[i].is_bijective()).collect()
    }
}

/// Enumerates `End(t)` by depth-first assignment of images in index order.
///
/// A partial map is abandoned as soon as some `x*y` with `x`, `y` and `x*y`
/// all assigned breaks the homomorphism law, so the output comes out in
/// lexicographic order without sorting.
pub fn enumerate_endomorphisms(
    t: &CayleyTable,
    bound: usize,
) -> Result<EndomorphismMonoid, MorphismError> {
    let n = t.len();
    if n > bound {
        return Err(MorphismError::CarrierTooLarge { n, bound });
    }
    let mut maps = Vec::new();
    let mut image = vec![0usize; n];
    extend_endo(t, &mut image, 0, &mut maps);
    let index = maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    Ok(EndomorphismMonoid { maps, index })
}

fn extend_endo(t: &CayleyTable, image: &mut [usize], k: usize, out: &mut Vec<EndoMap>) {
    let n = t.len();
    if k == n {
        out.push(EndoMap::new(image.to_vec()));
        return;
    }
    for v in 0..n {
        image[k] = v;
        // Pairs whose operands and product all lie in 0..=k, touching k.
        let consistent = (0..=k).all(|x| {
            (0..=k).all(|y| {
                let p = t.op(x, y);
                x.max(y).max(p) != k || p > k || image[p] == t.op(image[x], image[y])
            })
        });
        if consistent {
            extend_endo(t, image, k + 1, out);
        }
    }
}

/// The bijective endomorphisms of `t`.
pub fn enumerate_automorphisms(t: &CayleyTable, bound: usize) -> Result<Vec<EndoMap>, MorphismError> {
    let end = enumerate_endomorphisms(t, bound)?;
    Ok(end.automorphisms().into_iter().map(|i| end.get(i).clone()).collect())
}

/// An element `(f, x)` of `End(S,+) ⋊ (S,+)`; `endo` indexes the
/// enumerated endomorphism list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolElem {
    pub endo: usize,
    pub point: usize,
}

impl HolElem {
    pub fn new(endo: usize, point: usize) -> Self {
        HolElem { endo, point }
    }
}

/// A finite subset of the semidirect product.
pub type HolSet = BTreeSet<HolElem>;

/// `End(S,+) ⋊ (S,+)` for a fixed additive table.
#[derive(Clone, Debug)]
pub struct Holomorph {
    add: CliffordStructure,
    endos: EndomorphismMonoid,
}

impl Holomorph {
    pub fn new(add: &CliffordStructure, bound: usize) -> Result<Self, MorphismError> {
        let endos = enumerate_endomorphisms(add.table(), bound)?;
        Ok(Holomorph { add: add.clone(), endos })
    }

    /// The additive table.
    pub fn add(&self) -> &CayleyTable {
        self.add.table()
    }

    pub fn additive(&self) -> &CliffordStructure {
        &self.add
    }

    pub fn endos(&self) -> &EndomorphismMonoid {
        &self.endos
    }

    pub fn endo(&self, u: HolElem) -> &EndoMap {
        self.endos.get(u.endo)
    }

    /// `(f,x)(g,y) = (f∘g, x + f(y))`
    pub fn product(&self, u: HolElem, v: HolElem) -> Result<HolElem, MorphismError> {
        let endo = self.endos.compose(u.endo, v.endo)?;
        let point = self.add.op(u.point, self.endos.get(u.endo).apply(v.point));
        Ok(HolElem { endo, point })
    }

    /// Least product-closed superset of `elems`.
    pub fn closure(&self, elems: impl IntoIterator<Item = HolElem>) -> Result<HolSet, MorphismError> {
        let mut set: HolSet = elems.into_iter().collect();
        let mut frontier: Vec<HolElem> = set.iter().copied().collect();
        while let Some(u) = frontier.pop() {
            let current: Vec<HolElem> = set.iter().copied().collect();
            for v in current {
                for w in [self.product(u, v)?, self.product(v, u)?] {
                    if set.insert(w) {
                        frontier.push(w);
                    }
                }
            }
        }
        Ok(set)
    }

    pub fn is_closed(&self, h: &HolSet) -> Result<bool, MorphismError> {
        for &u in h {
            for &v in h {
                if !h.contains(&self.product(u, v)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `(ψ,0) H (ψ⁻¹,0)` for an automorphism `psi` (index into the list).
    pub fn conjugate(&self, psi: usize, h: &HolSet) -> Result<HolSet, MorphismError> {
        let zero = self.add().identity_element().ok_or(MorphismError::NoIdentity)?;
        let inv = self.endos.get(psi).inverse().expect("conjugating map must be bijective");
        let psi_inv = self.endos.resolve(&inv)?;
        let left = HolElem::new(psi, zero);
        let right = HolElem::new(psi_inv, zero);
        h.iter().map(|&u| self.product(self.product(left, u)?, right)).collect()
    }

    /// Some `ψ ∈ Aut(S,+)` with `(ψ,0)H(ψ⁻¹,0) = K`, scanning all automorphisms.
    pub fn are_conjugate(&self, h: &HolSet, k: &HolSet) -> Result<Option<usize>, MorphismError> {
        if self.add().identity_element().is_none() {
            return Err(MorphismError::NoIdentity);
        }
        if h.len() != k.len() {
            return Ok(None);
        }
        for psi in self.endos.automorphisms() {
            if &self.conjugate(psi, h)? == k {
                return Ok(Some(psi));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::from_fn(CayleyTable::default_names(n), |x, y| (x + y) % n).unwrap()
    }

    fn cyclic_holomorph(n: usize) -> Holomorph {
        Holomorph::new(&CliffordStructure::from_table(cyclic(n)).unwrap(), 8).unwrap()
    }

    #[test]
    fn cyclic_group_endomorphisms() {
        // End(C_n) = {x ↦ kx}, n of them.
        for n in 1..=6 {
            let end = enumerate_endomorphisms(&cyclic(n), 8).unwrap();
            assert_eq!(end.len(), n);
            assert!(end.position(&EndoMap::identity(n)).is_some());
        }
        assert_eq!(enumerate_automorphisms(&cyclic(3), 8).unwrap().len(), 2);
        assert_eq!(enumerate_automorphisms(&cyclic(1), 8).unwrap().len(), 1);
    }

    #[test]
    fn output_is_sorted_and_deduplicated() {
        let t = CayleyTable::from_fn(CayleyTable::default_names(4), |x, y| x.min(y)).unwrap();
        let end = enumerate_endomorphisms(&t, 8).unwrap();
        assert!(end.maps().windows(2).all(|w| w[0] < w[1]));
        // Endomorphisms of a chain are the order-preserving maps: C(2n-1, n) = 35 for n = 4.
        assert_eq!(end.len(), 35);
    }

    #[test]
    fn carrier_bound() {
        let t = cyclic(9);
        assert_eq!(
            enumerate_endomorphisms(&t, 8).unwrap_err(),
            MorphismError::CarrierTooLarge { n: 9, bound: 8 }
        );
        assert_eq!(enumerate_endomorphisms(&t, 9).unwrap().len(), 9);
    }

    #[test]
    fn trivial_holomorph_product() {
        let hol = cyclic_holomorph(3);
        let id = hol.endos().identity();
        for x in 0..3 {
            for y in 0..3 {
                let p = hol.product(HolElem::new(id, x), HolElem::new(id, y)).unwrap();
                assert_eq!(p, HolElem::new(id, (x + y) % 3));
            }
        }
        assert!(hol.closure([]).unwrap().is_empty());
    }

    #[test]
    fn conjugation_by_identity() {
        let hol = cyclic_holomorph(3);
        let id = hol.endos().identity();
        let h = hol.closure([HolElem::new(id, 1)]).unwrap();
        assert_eq!(h.len(), 3);
        assert_eq!(hol.conjugate(id, &h).unwrap(), h);
        assert!(hol.are_conjugate(&h, &h).unwrap().is_some());
    }
}
