//! Finite inverse and Clifford semigroups, weak left braces, and the
//! constructions that characterize them.
//!
//! Carriers are `{0, .., n-1}` with `n <= 64`; every check is an exhaustive
//! loop over the Cayley tables. The main entry points:
//!
//! * [`CayleyTable`], [`InverseSemigroup`], [`CliffordStructure`]
//! * [`WeakBrace`] and the axiom checks in [`brace::axioms`]
//! * the three correspondences in [`correspond`] (good inverse
//!   subsemigroups of `End(S,+) ⋊ (S,+)`, Gamma functions, affine structures)
//! * [`special`]: symmetric and λ-(anti-)homomorphic braces and strong
//!   semilattice (de)composition
//! * [`search`]: enumeration of every brace over a fixed carrier
//! * [`io`]: the text table format, semilattice files and reports

pub mod brace;
pub mod correspond;
pub mod inverse;
pub mod io;
pub mod morphism;
pub mod search;
pub mod set;
pub mod special;
pub mod table;

pub use brace::{BraceError, WeakBrace};
pub use inverse::{AlgebraError, CliffordStructure, HClass, InverseSemigroup};
pub use morphism::{EndoMap, EndomorphismMonoid, HolElem, Holomorph, MorphismError};
pub use set::ElemSet;
pub use table::{CayleyTable, TableError};
