//! The three descriptions of the weak brace structures with a fixed additive
//! (or multiplicative) part, with constructions in both directions:
//!
//! * [`good`]: good inverse subsemigroups `H ⊆ End(S,+) ⋊ (S,+)`,
//!   `a ∘ b = a + f(b)` for `(f, a) ∈ H`;
//! * [`gamma`]: Gamma functions `γ: S → End(S,+)`, `x ∘ y = x + γ_x(y)`;
//! * [`affine`]: affine structures `⋄` on `(S,·)`, `x + y = x(x ⋄ y)`.
//!
//! Every constructed object is validated again by the corresponding checker.

pub mod affine;
pub mod gamma;
pub mod good;

pub use affine::{AffineError, AffineStructure};
pub use gamma::{DualGammaError, GammaError, GammaFunction};
pub use good::{GoodError, GoodKind, GoodSubsemigroup};
