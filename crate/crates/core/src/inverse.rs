//! Inverse and Clifford semigroups.
//!
//! The operation is written multiplicatively in the docs below; for an
//! additive structure read `a * b` as `a + b` and `a⁻¹` as `-a`.

use std::ops::Deref;

use thiserror::Error;

use crate::set::ElemSet;
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operation is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element {0} has no von Neumann inverse")]
    NotRegular(usize),
    #[error("element {element} has several inverses, e.g. {first} and {second}")]
    InverseNotUnique { element: usize, first: usize, second: usize },
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDontCommute(usize, usize),
    #[error("not Clifford: a⁻¹a != aa⁻¹ for a = {0}")]
    NotClifford(usize),
}

/// An associative table in which every element has exactly one inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSemigroup {
    table: CayleyTable,
    inv: Vec<u8>,
    idempotents: ElemSet,
    /// `a⁻¹ * a`
    left_unit: Vec<u8>,
    /// `a * a⁻¹`
    right_unit: Vec<u8>,
}

impl InverseSemigroup {
    /// Computes the von Neumann inverses of an associative table.
    ///
    /// Fails on the first element (in index order) with zero or several
    /// inverses, then on the first non-commuting pair of idempotents.
    pub fn new(table: CayleyTable) -> Result<Self, AlgebraError> {
        if let Some([x, y, z]) = table.associativity_witness() {
            return Err(AlgebraError::NotAssociative { x, y, z });
        }
        let n = table.len();
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let mut candidates = (0..n).filter(|&x| {
                table.op(table.op(a, x), a) == a && table.op(table.op(x, a), x) == x
            });
            let first = candidates.next().ok_or(AlgebraError::NotRegular(a))?;
            if let Some(second) = candidates.next() {
                return Err(AlgebraError::InverseNotUnique { element: a, first, second });
            }
            inv.push(first as u8);
        }
        let idempotents = table.idempotents();
        for e in idempotents {
            for f in idempotents {
                if f > e && table.op(e, f) != table.op(f, e) {
                    return Err(AlgebraError::IdempotentsDontCommute(e, f));
                }
            }
        }
        let left_unit = (0..n).map(|a| table.op(inv[a] as usize, a) as u8).collect();
        let right_unit = (0..n).map(|a| table.op(a, inv[a] as usize) as u8).collect();
        Ok(InverseSemigroup { table, inv, idempotents, left_unit, right_unit })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.op(a, b)
    }

    /// The unique inverse of `a`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn inverses(&self) -> impl Iterator<Item = usize> + '_ {
        self.inv.iter().map(|&i| i as usize)
    }

    pub fn idempotents(&self) -> ElemSet {
        self.idempotents
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotents.contains(a)
    }

    /// `a⁻¹ * a`
    #[inline]
    pub fn left_unit(&self, a: usize) -> usize {
        self.left_unit[a] as usize
    }

    /// `a * a⁻¹`
    #[inline]
    pub fn right_unit(&self, a: usize) -> usize {
        self.right_unit[a] as usize
    }

    pub fn name(&self, a: usize) -> &str {
        self.table.name(a)
    }

    /// First `a` with `a⁻¹a != aa⁻¹`.
    pub fn clifford_witness(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.left_unit(a) != self.right_unit(a))
    }

    pub fn is_clifford(&self) -> bool {
        self.clifford_witness().is_none()
    }

    /// Clifford via the characterization "regular with central idempotents".
    pub fn clifford_by_centrality(&self) -> bool {
        self.idempotents.is_subset(self.table.center())
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1 && self.table.identity_element().is_some()
    }
}

/// An H-class `{x : x⁰ = e}`, a maximal subgroup with identity `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HClass {
    pub identity: usize,
    pub members: ElemSet,
}

/// A Clifford semigroup together with its partition into maximal subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordStructure {
    semigroup: InverseSemigroup,
    classes: Vec<HClass>,
    class_of: Vec<u8>,
}

impl CliffordStructure {
    pub fn new(semigroup: InverseSemigroup) -> Result<Self, AlgebraError> {
        if let Some(a) = semigroup.clifford_witness() {
            return Err(AlgebraError::NotClifford(a));
        }
        let n = semigroup.len();
        let mut classes: Vec<HClass> = semigroup
            .idempotents()
            .iter()
            .map(|e| HClass { identity: e, members: ElemSet::EMPTY })
            .collect();
        let mut class_of = vec![0u8; n];
        for x in 0..n {
            let unit = semigroup.left_unit(x);
            let k = classes.iter().position(|c| c.identity == unit).expect("a⁰ is idempotent");
            classes[k].members.insert(x);
            class_of[x] = k as u8;
        }
        for class in &classes {
            let closed = semigroup.table().is_closed(class.members)
                && class.members.iter().all(|x| class.members.contains(semigroup.inv(x)));
            let unit = class.members.iter().all(|x| {
                semigroup.op(class.identity, x) == x && semigroup.op(x, class.identity) == x
            });
            assert!(closed && unit, "H-class of {} is not a group", class.identity);
        }
        Ok(CliffordStructure { semigroup, classes, class_of })
    }

    pub fn from_table(table: CayleyTable) -> Result<Self, AlgebraError> {
        Self::new(InverseSemigroup::new(table)?)
    }

    pub fn semigroup(&self) -> &InverseSemigroup {
        &self.semigroup
    }

    /// `a⁰ = a⁻¹a = aa⁻¹`
    #[inline]
    pub fn unit(&self, a: usize) -> usize {
        self.semigroup.left_unit(a)
    }

    pub fn classes(&self) -> &[HClass] {
        &self.classes
    }

    /// The H-class containing `a`.
    pub fn class_of(&self, a: usize) -> &HClass {
        &self.classes[self.class_of[a] as usize]
    }
}

impl Deref for CliffordStructure {
    type Target = InverseSemigroup;

    fn deref(&self) -> &InverseSemigroup {
        &self.semigroup
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: usize, rows: &[&[usize]]) -> CayleyTable {
        CayleyTable::new(CayleyTable::default_names(n), rows.iter().map(|r| r.to_vec()).collect())
            .unwrap()
    }

    #[test]
    fn left_zero_band_has_two_inverses() {
        let t = named(2, &[&[0, 0], &[1, 1]]);
        assert_eq!(
            InverseSemigroup::new(t),
            Err(AlgebraError::InverseNotUnique { element: 0, first: 0, second: 1 })
        );
    }

    #[test]
    fn null_semigroup_is_not_regular() {
        // x*y = 0 on {0, 1}: 1*x*1 = 0 != 1.
        let t = named(2, &[&[0, 0], &[0, 0]]);
        assert_eq!(InverseSemigroup::new(t), Err(AlgebraError::NotRegular(1)));
    }

    #[test]
    fn non_associative_is_rejected_first() {
        let t = named(2, &[&[1, 0], &[0, 0]]);
        assert!(matches!(InverseSemigroup::new(t), Err(AlgebraError::NotAssociative { .. })));
    }

    #[test]
    fn cyclic_group_is_clifford_with_one_class() {
        let t = CayleyTable::from_fn(CayleyTable::default_names(3), |x, y| (x + y) % 3).unwrap();
        let c = CliffordStructure::from_table(t).unwrap();
        assert_eq!(c.inv(1), 2);
        assert_eq!(c.classes().len(), 1);
        assert_eq!(c.classes()[0].members, ElemSet::full(3));
        assert!(c.is_group());
        assert!(c.clifford_by_centrality());
    }

    #[test]
    fn two_element_semilattice() {
        let t = named(2, &[&[0, 0], &[0, 1]]);
        let c = CliffordStructure::from_table(t).unwrap();
        assert_eq!(c.idempotents(), ElemSet::full(2));
        assert_eq!(c.classes().len(), 2);
        assert!(!c.is_group());
    }
}
