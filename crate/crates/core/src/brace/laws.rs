//! Identities that hold in every inverse semigroup, Clifford semigroup and
//! weak left brace, checked verbatim over all tuples of a finite instance.

use std::fmt;

use crate::brace::WeakBrace;
use crate::inverse::{CliffordStructure, InverseSemigroup};

/// A named identity and the tuple on which it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

impl std::error::Error for LawViolation {}

pub type LawResult = Result<(), LawViolation>;

fn check1(law: &'static str, n: usize, ok: impl Fn(usize) -> bool) -> LawResult {
    match (0..n).find(|&a| !ok(a)) {
        Some(a) => Err(LawViolation { law, witness: vec![a] }),
        None => Ok(()),
    }
}

fn check2(law: &'static str, n: usize, ok: impl Fn(usize, usize) -> bool) -> LawResult {
    for a in 0..n {
        for b in 0..n {
            if !ok(a, b) {
                return Err(LawViolation { law, witness: vec![a, b] });
            }
        }
    }
    Ok(())
}

/// `-(-a) = a`, `-(a*b) = (-b)*(-a)`, `-e = e`, and `E(S)` is a commutative
/// subsemigroup.
pub fn inverse_semigroup_laws(s: &InverseSemigroup) -> LawResult {
    let n = s.len();
    check1("-(-a) = a", n, |a| s.inv(s.inv(a)) == a)?;
    check2("-(a*b) = (-b)*(-a)", n, |a, b| s.inv(s.op(a, b)) == s.op(s.inv(b), s.inv(a)))?;
    check1("-e = e", n, |e| !s.is_idempotent(e) || s.inv(e) == e)?;
    check2("e*f = f*e in E(S)", n, |e, f| {
        !(s.is_idempotent(e) && s.is_idempotent(f))
            || (s.op(e, f) == s.op(f, e) && s.is_idempotent(s.op(e, f)))
    })?;
    check1("E(S) = {-x*x}", n, |e| {
        !s.is_idempotent(e) || (0..n).any(|x| s.left_unit(x) == e)
    })
}

/// `a⁰a = aa⁰ = a`, `(a*b)⁰ = a⁰*b⁰`, `(-a)⁰ = a⁰`, idempotents central.
pub fn clifford_laws(s: &CliffordStructure) -> LawResult {
    let n = s.len();
    check1("a⁰*a = a*a⁰ = a", n, |a| s.op(s.unit(a), a) == a && s.op(a, s.unit(a)) == a)?;
    check2("(a*b)⁰ = a⁰*b⁰", n, |a, b| s.unit(s.op(a, b)) == s.op(s.unit(a), s.unit(b)))?;
    check1("(-a)⁰ = a⁰", n, |a| s.unit(s.inv(a)) == s.unit(a))?;
    check2("e*a = a*e", n, |e, a| !s.is_idempotent(e) || s.op(e, a) == s.op(a, e))?;
    check2("x in H_a iff x⁰ = a⁰", n, |x, a| {
        s.class_of(a).members.contains(x) == (s.unit(x) == s.unit(a))
    })
}

/// Identities valid in every weak left brace:
/// `ea = e + a = a + e`, `a⁰ + b⁰ = (a+b)⁰`, `ab = a + λ_a(b)`,
/// `λ_a(a⁻¹) = -a`, and the additive identity is the multiplicative one.
pub fn brace_laws(b: &WeakBrace) -> LawResult {
    let n = b.len();
    let is_e = |e: usize| b.idempotents().contains(e);
    check2("e·a = e+a = a+e", n, |e, a| {
        !is_e(e) || (b.prod(e, a) == b.sum(e, a) && b.sum(e, a) == b.sum(a, e))
    })?;
    check2("a⁰+b⁰ = (a+b)⁰", n, |x, y| b.sum(b.unit(x), b.unit(y)) == b.unit(b.sum(x, y)))?;
    check2("ab = a + λ_a(b)", n, |x, y| b.prod(x, y) == b.sum(x, b.lambda(x, y)))?;
    check1("λ_a(a⁻¹) = -a", n, |a| b.lambda(a, b.inv(a)) == b.neg(a))?;
    let zero_add = b.add().table().identity_element();
    let zero_mul = b.mul().table().identity_element();
    if zero_add != zero_mul {
        let witness = zero_add.or(zero_mul).into_iter().collect();
        return Err(LawViolation { law: "0 is + identity iff · identity", witness });
    }
    Ok(())
}

/// Extra identities of dual braces: `x⁰ = xx⁻¹ = x⁻¹x`,
/// `(ab)⁰ = a⁰b⁰ = a⁰+b⁰`, `a = a⁰a = aa⁰`, `ae = a+e = e+a`,
/// `(a⁻¹)⁰ = a⁰`, and `λ_a|H_a ∈ Aut(H_a)`.
pub fn dual_brace_laws(b: &WeakBrace) -> LawResult {
    let n = b.len();
    let is_e = |e: usize| b.idempotents().contains(e);
    check1("x⁰ = xx⁻¹ = x⁻¹x", n, |x| {
        b.unit(x) == b.prod(x, b.inv(x)) && b.unit(x) == b.prod(b.inv(x), x)
    })?;
    check2("(ab)⁰ = a⁰b⁰ = a⁰+b⁰", n, |x, y| {
        let u = b.unit(b.prod(x, y));
        u == b.prod(b.unit(x), b.unit(y)) && u == b.sum(b.unit(x), b.unit(y))
    })?;
    check1("a = a⁰a = aa⁰", n, |a| b.prod(b.unit(a), a) == a && b.prod(a, b.unit(a)) == a)?;
    check2("ae = a+e = e+a", n, |a, e| {
        !is_e(e) || (b.prod(a, e) == b.sum(a, e) && b.sum(a, e) == b.sum(e, a))
    })?;
    check1("(a⁻¹)⁰ = a⁰", n, |a| b.unit(b.inv(a)) == b.unit(a))?;
    check1("λ_a|H_a ∈ Aut(H_a)", n, |a| b.local_automorphism_violation() != Some(a))
}
