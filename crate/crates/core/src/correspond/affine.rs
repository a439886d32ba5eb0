//! Affine structures `⋄` on an inverse semigroup `(S,·)`.
//!
//! * (A1) `(ab) ⋄ c = b ⋄ (a ⋄ c)`
//! * (A2) `a ⋄ (b(b ⋄ c)) = (a ⋄ b)((a ⋄ b) ⋄ (a ⋄ c))`
//! * (A3) `e ⋄ a = ea` and `a ⋄ e = a⁻¹ea` for idempotent `e`
//!
//! The induced addition is `x + y = x(x ⋄ y)`; conversely `a ⋄ b = a⁻¹(a + b)`.

use thiserror::Error;

use crate::brace::{BraceError, WeakBrace};
use crate::inverse::InverseSemigroup;
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("⋄ has {found} elements, (S,·) has {expected}")]
    CarrierMismatch { expected: usize, found: usize },
    #[error("(A1) fails at (a,b,c) = ({0},{1},{2})")]
    A1Fails(usize, usize, usize),
    #[error("(A2) fails at (a,b,c) = ({0},{1},{2})")]
    A2Fails(usize, usize, usize),
    #[error("(A3) e⋄a != ea at (e,a) = ({0},{1})")]
    A3Left(usize, usize),
    #[error("(A3) a⋄e != a⁻¹ea at (a,e) = ({0},{1})")]
    A3Right(usize, usize),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

/// A validated `⋄` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineStructure {
    diamond: CayleyTable,
}

impl AffineStructure {
    pub fn table(&self) -> &CayleyTable {
        &self.diamond
    }

    pub fn into_table(self) -> CayleyTable {
        self.diamond
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.diamond.op(a, b)
    }

    pub fn len(&self) -> usize {
        self.diamond.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diamond.is_empty()
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

pub fn a1_witness(mul: &InverseSemigroup, d: &CayleyTable) -> Option<(usize, usize, usize)> {
    triples(mul.len()).find(|&(a, b, c)| d.op(mul.op(a, b), c) != d.op(b, d.op(a, c)))
}

pub fn a2_witness(mul: &InverseSemigroup, d: &CayleyTable) -> Option<(usize, usize, usize)> {
    triples(mul.len()).find(|&(a, b, c)| {
        let ab = d.op(a, b);
        d.op(a, mul.op(b, d.op(b, c))) != mul.op(ab, d.op(ab, d.op(a, c)))
    })
}

pub fn a3_check(mul: &InverseSemigroup, d: &CayleyTable) -> Result<(), AffineError> {
    let n = mul.len();
    for e in mul.idempotents().iter() {
        if let Some(a) = (0..n).find(|&a| d.op(e, a) != mul.op(e, a)) {
            return Err(AffineError::A3Left(e, a));
        }
    }
    for a in 0..n {
        if let Some(e) =
            mul.idempotents().iter().find(|&e| d.op(a, e) != mul.op(mul.op(mul.inv(a), e), a))
        {
            return Err(AffineError::A3Right(a, e));
        }
    }
    Ok(())
}

/// Validates (A1), (A2), (A3) in that order.
pub fn check_affine(mul: &InverseSemigroup, d: &CayleyTable) -> Result<AffineStructure, AffineError> {
    if d.len() != mul.len() {
        return Err(AffineError::CarrierMismatch { expected: mul.len(), found: d.len() });
    }
    if let Some((a, b, c)) = a1_witness(mul, d) {
        return Err(AffineError::A1Fails(a, b, c));
    }
    if let Some((a, b, c)) = a2_witness(mul, d) {
        return Err(AffineError::A2Fails(a, b, c));
    }
    a3_check(mul, d)?;
    let diamond = d.with_names(mul.table().names().to_vec()).expect("sizes were checked");
    Ok(AffineStructure { diamond })
}

/// `x + y = x(x ⋄ y)`
pub fn induced_addition(mul: &InverseSemigroup, d: &CayleyTable) -> CayleyTable {
    CayleyTable::from_fn(mul.table().names().to_vec(), |x, y| mul.op(x, d.op(x, y)))
        .expect("products stay in the carrier")
}

/// `B(⋄) = (S, +, ·)`
pub fn brace_from_affine(mul: &InverseSemigroup, d: &AffineStructure) -> Result<WeakBrace, BraceError> {
    WeakBrace::new(&induced_addition(mul, &d.diamond), mul.table())
}

/// `a ⋄ b = a⁻¹(a + b)`, before validation.
pub fn diamond_table(b: &WeakBrace) -> CayleyTable {
    CayleyTable::from_fn(b.names().to_vec(), |x, y| b.prod(b.inv(x), b.sum(x, y)))
        .expect("products stay in the carrier")
}

/// `A(B)`, validated against (A1)-(A3); failures are returned, not repaired.
pub fn affine_from_brace(b: &WeakBrace) -> Result<AffineStructure, AffineError> {
    check_affine(b.mul(), &diamond_table(b))
}
