//! Bound-state spectra of radial single-particle problems in `D` dimensions.
//!
//! Energies are in Hartree atomic units (`ħ = m = a₀ = 1`). The reduced
//! radial equation `-u''/2 + V_eff(R) u = E u` is solved four ways: closed
//! forms ([`analytic`]), Numerov shooting with a finite-difference check
//! ([`numerov`]), Bohr-Sommerfeld quantization ([`semiclassical`]) and
//! Coulomb scattering-amplitude poles ([`smatrix`]). [`nodes`] counts radial
//! and angular nodes.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod analytic;
pub mod error;
pub mod nodes;
pub mod numerov;
pub mod parallel;
pub mod potentials;
pub mod roots;
pub mod semiclassical;
pub mod smatrix;

pub use analytic::{Engine, EnergyLevel};
pub use error::{Error, Result};
pub use parallel::Execution;
pub use potentials::{Centrifugal, EnergyUnit, PotentialModel, RadialProblem};
