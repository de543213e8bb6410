//! Exact-arithmetic verification toolkit for the 13-dimensional subgroup
//! `H = S·H₀` of `SL₁₉`, where `H₀ ≅ (𝔾_a)¹²` is a unipotent group whose
//! invariant ring on `𝕜¹⁹` is not finitely generated and `S` is a
//! one-dimensional torus normalizing it.
//!
//! Every computation is carried out over ℚ with arbitrary-precision
//! rationals. The crate is organised by what each part checks:
//!
//! * [`linalg`]: dense and sparse exact linear algebra, plus a prime field
//!   for large sampled systems.
//! * [`group`]: the matrices `h(μ̄)`, `s`, and the Lie algebra of `H`.
//! * [`irreducibility`]: ranks of the maps `φ_w : μ̄ ↦ M(μ̄)·w` and the
//!   argument that a reductive overgroup acts irreducibly.
//! * [`highest_weight`]: Bruhat factors, torus exponents, the star pattern
//!   bounds and a probe for `H`-fixed highest-weight lines.
//! * [`repdim`]: root systems and the Weyl dimension formula.
//! * [`invariants`]: graded pieces of `𝕜[V]^{H₀}` in low degree.
//! * [`report`] and [`cli`]: machine-readable reports and the command line.

pub mod cli;
pub mod error;
pub mod group;
pub mod highest_weight;
pub mod invariants;
pub mod irreducibility;
pub mod linalg;
pub mod repdim;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use linalg::{Rational, RationalMatrix};
