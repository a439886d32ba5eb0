//! Symmetric, λ-homomorphic and λ-anti-homomorphic weak left braces.
//!
//! * symmetric: `x + yz = (x+y) x⁻¹ (x+z)`
//! * λ-homomorphic: `λ_x λ_y = λ_{x+y}`
//! * λ-anti-homomorphic: `λ_y λ_x = λ_{x+y}`, or as a single axiom
//!   `y(-x + xz) = -x + (x+y)z`
//!
//! Each class forces the brace to be dual. [`classify`] evaluates all three
//! and reports every implication between them that fails on the input.

use std::fmt;

use serde::Serialize;

use crate::brace::WeakBrace;
use crate::special::semilattice::decompose_semilattice;

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// First `(x, y, z)` with `x + yz != (x+y) x⁻¹ (x+z)`.
pub fn symmetric_witness(b: &WeakBrace) -> Option<[usize; 3]> {
    first_triple(b.len(), |x, y, z| {
        b.sum(x, b.prod(y, z)) != b.prod(b.prod(b.sum(x, y), b.inv(x)), b.sum(x, z))
    })
}

pub fn is_symmetric(b: &WeakBrace) -> bool {
    symmetric_witness(b).is_none()
}

/// First `(x, y, z)` with `λ_x λ_y (z) != λ_{x+y}(z)`.
pub fn lambda_homomorphic_witness(b: &WeakBrace) -> Option<[usize; 3]> {
    first_triple(b.len(), |x, y, z| b.lambda(x, b.lambda(y, z)) != b.lambda(b.sum(x, y), z))
}

pub fn is_lambda_homomorphic(b: &WeakBrace) -> bool {
    lambda_homomorphic_witness(b).is_none()
}

/// First `(x, y, z)` with `λ_y λ_x (z) != λ_{x+y}(z)`.
pub fn lambda_anti_homomorphic_witness(b: &WeakBrace) -> Option<[usize; 3]> {
    first_triple(b.len(), |x, y, z| b.lambda(y, b.lambda(x, z)) != b.lambda(b.sum(x, y), z))
}

/// First `(x, y, z)` with `y(-x + xz) != -x + (x+y)z`.
pub fn anti_homomorphic_axiom_witness(b: &WeakBrace) -> Option<[usize; 3]> {
    first_triple(b.len(), |x, y, z| {
        b.prod(y, b.lambda(x, z)) != b.sum(b.neg(x), b.prod(b.sum(x, y), z))
    })
}

pub fn is_lambda_anti_homomorphic(b: &WeakBrace) -> bool {
    lambda_anti_homomorphic_witness(b).is_none()
}

/// First `x` with `-x + x != xx⁻¹` or `x - x != x⁻¹x`.
pub fn unit_agreement_witness(b: &WeakBrace) -> Option<usize> {
    (0..b.len()).find(|&x| {
        b.sum(b.neg(x), x) != b.prod(x, b.inv(x)) || b.sum(x, b.neg(x)) != b.prod(b.inv(x), x)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialClass {
    Symmetric,
    LambdaHomomorphic,
    LambdaAntiHomomorphic,
}

impl SpecialClass {
    pub const ALL: [SpecialClass; 3] =
        [SpecialClass::Symmetric, SpecialClass::LambdaHomomorphic, SpecialClass::LambdaAntiHomomorphic];

    pub fn holds(self, b: &WeakBrace) -> bool {
        match self {
            SpecialClass::Symmetric => is_symmetric(b),
            SpecialClass::LambdaHomomorphic => is_lambda_homomorphic(b),
            SpecialClass::LambdaAntiHomomorphic => is_lambda_anti_homomorphic(b),
        }
    }
}

impl fmt::Display for SpecialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialClass::Symmetric => "symmetric",
            SpecialClass::LambdaHomomorphic => "λ-homomorphic",
            SpecialClass::LambdaAntiHomomorphic => "λ-anti-homomorphic",
        })
    }
}

/// A consequence that should hold but was observed to fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ImplicationViolation {
    /// A class member whose multiplication is not Clifford.
    NotDual { class: SpecialClass },
    /// Symmetric, yet `-x + x != xx⁻¹` or `x - x != x⁻¹x`.
    UnitsDisagree { element: usize },
    /// The two λ-anti-homomorphic formulations give different answers.
    AntiHomomorphicFormsDisagree,
    /// Symmetric and λ-anti-homomorphic differ.
    SymmetricVersusAntiHomomorphic { symmetric: bool },
    /// Membership of the brace and of its semilattice components differ.
    ComponentMismatch { class: SpecialClass, brace: bool, components: bool },
    /// A dual brace whose decomposition failed.
    Decomposition { message: String },
}

impl fmt::Display for ImplicationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImplicationViolation::NotDual { class } => write!(f, "{class} but not dual"),
            ImplicationViolation::UnitsDisagree { element } => {
                write!(f, "symmetric but -x+x != xx⁻¹ or x-x != x⁻¹x at {element}")
            }
            ImplicationViolation::AntiHomomorphicFormsDisagree => {
                f.write_str("λ_yλ_x = λ_(x+y) and y(-x+xz) = -x+(x+y)z disagree")
            }
            ImplicationViolation::SymmetricVersusAntiHomomorphic { symmetric } => {
                write!(f, "symmetric = {symmetric} but λ-anti-homomorphic = {}", !symmetric)
            }
            ImplicationViolation::ComponentMismatch { class, brace, components } => write!(
                f,
                "{class}: brace = {brace}, all semilattice components = {components}"
            ),
            ImplicationViolation::Decomposition { message } => {
                write!(f, "decomposition failed: {message}")
            }
        }
    }
}

/// A class flag with the first counterexample when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    fn from_witness<const K: usize>(w: Option<[usize; K]>) -> Self {
        Verdict { holds: w.is_none(), witness: w.map(|w| w.to_vec()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub dual: bool,
    pub skew: bool,
    pub symmetric: Verdict,
    pub lambda_homomorphic: Verdict,
    pub lambda_anti_homomorphic: Verdict,
    pub violations: Vec<ImplicationViolation>,
}

impl Classification {
    pub fn verdict(&self, class: SpecialClass) -> &Verdict {
        match class {
            SpecialClass::Symmetric => &self.symmetric,
            SpecialClass::LambdaHomomorphic => &self.lambda_homomorphic,
            SpecialClass::LambdaAntiHomomorphic => &self.lambda_anti_homomorphic,
        }
    }
}

/// Evaluates the three classes and checks every implication among them,
/// including membership of the semilattice components of a dual brace.
pub fn classify(b: &WeakBrace) -> Classification {
    let dual = b.is_dual();
    let symmetric = Verdict::from_witness(symmetric_witness(b));
    let lambda_homomorphic = Verdict::from_witness(lambda_homomorphic_witness(b));
    let lambda_anti_homomorphic = Verdict::from_witness(lambda_anti_homomorphic_witness(b));
    let mut violations = Vec::new();

    for (class, v) in [
        (SpecialClass::Symmetric, &symmetric),
        (SpecialClass::LambdaHomomorphic, &lambda_homomorphic),
        (SpecialClass::LambdaAntiHomomorphic, &lambda_anti_homomorphic),
    ] {
        if v.holds && !dual {
            violations.push(ImplicationViolation::NotDual { class });
        }
    }
    if symmetric.holds {
        if let Some(element) = unit_agreement_witness(b) {
            violations.push(ImplicationViolation::UnitsDisagree { element });
        }
    }
    if anti_homomorphic_axiom_witness(b).is_none() != lambda_anti_homomorphic.holds {
        violations.push(ImplicationViolation::AntiHomomorphicFormsDisagree);
    }
    if symmetric.holds != lambda_anti_homomorphic.holds {
        violations.push(ImplicationViolation::SymmetricVersusAntiHomomorphic {
            symmetric: symmetric.holds,
        });
    }
    if dual {
        match decompose_semilattice(b) {
            Ok(d) => {
                for class in SpecialClass::ALL {
                    let brace = match class {
                        SpecialClass::Symmetric => symmetric.holds,
                        SpecialClass::LambdaHomomorphic => lambda_homomorphic.holds,
                        SpecialClass::LambdaAntiHomomorphic => lambda_anti_homomorphic.holds,
                    };
                    let components = d.sl.components().iter().all(|c| class.holds(c));
                    if brace != components {
                        violations.push(ImplicationViolation::ComponentMismatch {
                            class,
                            brace,
                            components,
                        });
                    }
                }
            }
            Err(e) => violations.push(ImplicationViolation::Decomposition { message: e.to_string() }),
        }
    }
    Classification {
        dual,
        skew: b.is_skew(),
        symmetric,
        lambda_homomorphic,
        lambda_anti_homomorphic,
        violations,
    }
}
