//! Finite skew bracoids.
//!
//! A skew bracoid `(G, N, ⊙)` is a pair of finite groups with a transitive
//! action of `G` on `N` satisfying
//! `g⊙(η₁★η₂) = (g⊙η₁)★(g⊙e_N)⁻¹★(g⊙η₂)`.
//!
//! The crate builds and validates such objects, classifies them
//! (contains a brace / almost a brace / almost classical), moves between
//! bracoids and transitive subgroups of the holomorph `Hol(N)`, and derives
//! set-theoretic Yang–Baxter solutions from them.

pub mod bracoid;
pub mod bridge;
pub mod constructions;
pub mod error;
pub mod groups;
pub mod json;
pub mod ybe;

pub use bracoid::{Classification, GammaMap, SkewBracoid};
pub use error::{Error, Result};
pub use groups::{FiniteGroup, Limits, Permutation, Subgroup};
