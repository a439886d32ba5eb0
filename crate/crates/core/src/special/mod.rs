//! Special classes of weak left braces and their description as strong
//! semilattices of skew left braces.

pub mod classes;
pub mod semilattice;

pub use classes::{
    classify, is_lambda_anti_homomorphic, is_lambda_homomorphic, is_symmetric, Classification,
    ImplicationViolation, SpecialClass, Verdict,
};
pub use semilattice::{
    compose_semilattice, decompose_semilattice, Decomposition, SemilatticeError, StrongSemilattice,
    SemilatticeCondition,
};
