//! Coulomb bound states as poles of the scattering matrix.
//!
//! The Coulomb amplitude carries `Γ(ℓ + (D-1)/2 - iZ/k)` in its denominator.
//! Continued to negative energy with `k = iκ` the argument becomes real,
//! `ℓ + (D-1)/2 - Z/κ`, and the amplitude has a pole wherever that gamma
//! function has one, i.e. wherever the reciprocal gamma vanishes.

mod gamma;
mod poles;

pub use gamma::{gamma, gamma_value, reciprocal_gamma, GammaEval};
pub use poles::{find_poles, has_pole_at, pole_condition, PoleResult, MAX_POLES};
