//! Cayley-Dickson algebras, the spectra of `N_x = L_x̄ L_x`, and the meson
//! mass relation `2 m(D_s) ≈ m(η_c) + m(η′)` that those spectra suggest.
//!
//! Layout:
//!
//! * [`algebra`]: elements of 𝔸ₙ, products, conjugation, identity checks
//! * [`operators`]: `L_x`, `R_x` and `N_x` as dense matrices
//! * [`spectral`]: Jacobi eigensolver and spectrum clustering
//! * [`structure`]: Δ, alternative-entry elements, degeneracy and inclusion checks
//! * [`physics`]: meson tables and mass relations
//! * [`report`]: the JSON reports behind the `cdmass` binary

pub mod algebra;
pub mod error;
pub mod operators;
pub mod physics;
pub mod report;
pub mod sampling;
pub mod spectral;
pub mod structure;

pub use algebra::{associator, commutator, is_alternative, CdElement};
pub use error::{Error, Result};
