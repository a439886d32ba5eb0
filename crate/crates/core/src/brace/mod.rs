//! Weak left braces `(S, +, ·)`.
//!
//! Both operations are inverse semigroups on one carrier and
//!
//! ```text
//! x(y + z) = xy - x + xz        x x⁻¹ = -x + x
//! ```
//!
//! where `-x` is the inverse in `(S,+)` and `x⁻¹` the inverse in `(S,·)`.
//! The map `λ_a(b) = -a + ab` is cached as a table on construction.

pub mod axioms;
pub mod laws;

use thiserror::Error;

use crate::inverse::{AlgebraError, CliffordStructure, InverseSemigroup};
use crate::morphism::EndoMap;
use crate::set::ElemSet;
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("addition and multiplication live on different carriers")]
    CarrierMismatch,
    #[error("(S,+) is not an inverse semigroup: {0}")]
    AddNotInverse(AlgebraError),
    #[error("(S,·) is not an inverse semigroup: {0}")]
    MulNotInverse(AlgebraError),
    #[error("x(y+z) != xy - x + xz at (x,y,z) = ({x},{y},{z})")]
    DistributivityFails { x: usize, y: usize, z: usize },
    #[error("x x⁻¹ != -x + x at x = {0}")]
    InverseAxiomFails(usize),
    #[error("(S,+) satisfies the axioms but is not Clifford at {0}")]
    AddNotClifford(usize),
    #[error("E(S,+) and E(S,·) differ at {0}")]
    IdempotentMismatch(usize),
    #[error("λ_{0} is not an endomorphism of (S,+)")]
    LambdaNotEndo(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBrace {
    add: CliffordStructure,
    mul: InverseSemigroup,
    lambda: Vec<u8>,
}

impl WeakBrace {
    /// Validates `(add, mul)` as a weak left brace.
    ///
    /// Reports the first failing axiom; axiom witnesses are the first
    /// counterexample in row-major order.
    pub fn new(add: &CayleyTable, mul: &CayleyTable) -> Result<Self, BraceError> {
        if add.len() != mul.len() || add.names() != mul.names() {
            return Err(BraceError::CarrierMismatch);
        }
        let add = InverseSemigroup::new(add.clone()).map_err(BraceError::AddNotInverse)?;
        let mul = InverseSemigroup::new(mul.clone()).map_err(BraceError::MulNotInverse)?;
        Self::from_semigroups(add, mul)
    }

    pub fn from_semigroups(add: InverseSemigroup, mul: InverseSemigroup) -> Result<Self, BraceError> {
        if add.len() != mul.len() {
            return Err(BraceError::CarrierMismatch);
        }
        if let Err([x, y, z]) = axioms::weak1(&add, &mul) {
            return Err(BraceError::DistributivityFails { x, y, z });
        }
        axioms::inverse_axiom(&add, &mul).map_err(BraceError::InverseAxiomFails)?;
        let add = CliffordStructure::new(add).map_err(|e| match e {
            AlgebraError::NotClifford(a) => BraceError::AddNotClifford(a),
            other => BraceError::AddNotInverse(other),
        })?;
        let n = add.len();
        if let Some(x) = (0..n).find(|&x| add.is_idempotent(x) != mul.is_idempotent(x)) {
            return Err(BraceError::IdempotentMismatch(x));
        }
        let lambda: Vec<u8> =
            (0..n * n).map(|k| add.op(add.inv(k / n), mul.op(k / n, k % n)) as u8).collect();
        let brace = WeakBrace { add, mul, lambda };
        for a in 0..n {
            if !brace.lambda_of(a).is_endomorphism_of(brace.add.table()) {
                return Err(BraceError::LambdaNotEndo(a));
            }
        }
        Ok(brace)
    }

    pub fn len(&self) -> usize {
        self.mul.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mul.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.mul.table().names()
    }

    pub fn name(&self, a: usize) -> &str {
        self.mul.name(a)
    }

    /// `(S,+)`, Clifford by construction.
    pub fn add(&self) -> &CliffordStructure {
        &self.add
    }

    /// `(S,·)`
    pub fn mul(&self) -> &InverseSemigroup {
        &self.mul
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn prod(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// `-a`
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `a⁻¹`
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `a⁰ = -a + a`
    #[inline]
    pub fn unit(&self, a: usize) -> usize {
        self.add.unit(a)
    }

    pub fn idempotents(&self) -> ElemSet {
        self.add.idempotents()
    }

    /// `λ_a(b) = -a + ab`
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.len() + b] as usize
    }

    pub fn lambda_of(&self, a: usize) -> EndoMap {
        EndoMap::new((0..self.len()).map(|b| self.lambda(a, b)).collect())
    }

    /// `λ_{ab} = λ_a ∘ λ_b`; on failure the first `(a, b, c)` with
    /// `λ_{ab}(c) != λ_a(λ_b(c))`.
    pub fn lambda_is_mul_homomorphism(&self) -> Result<(), [usize; 3]> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.prod(a, b);
                for c in 0..n {
                    if self.lambda(ab, c) != self.lambda(a, self.lambda(b, c)) {
                        return Err([a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Dual: `(S,·)` is Clifford.
    pub fn is_dual(&self) -> bool {
        self.mul.is_clifford()
    }

    /// Skew left brace: both operations are groups.
    pub fn is_skew(&self) -> bool {
        self.add.is_group() && self.mul.is_group()
    }

    /// For dual braces `λ_a` restricts to an automorphism of `H_a`; returns
    /// the first `a` where it does not.
    pub fn local_automorphism_violation(&self) -> Option<usize> {
        (0..self.len()).find(|&a| {
            let class = self.add.class_of(a).members;
            let image: ElemSet = class.iter().map(|x| self.lambda(a, x)).collect();
            image != class
        })
    }

    /// Both tables transported along `perm` (old index to new index).
    pub fn relabel(&self, perm: &[usize]) -> WeakBrace {
        WeakBrace::new(&self.add.table().relabel(perm), &self.mul.table().relabel(perm))
            .expect("relabelling preserves the brace axioms")
    }

    /// Same carrier size and identical operation tables, ignoring names.
    pub fn same_tables(&self, other: &WeakBrace) -> bool {
        self.add.table().same_operation(other.add.table())
            && self.mul.table().same_operation(other.mul.table())
    }
}
