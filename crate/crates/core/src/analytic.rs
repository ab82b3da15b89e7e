//! Closed-form spectra of the exactly solvable models.
//!
//! Levels are always labelled by their node count `n_r`; unit offsets such
//! as the hydrogen principal quantum number `n = n_r + ℓ + 1` are left to the
//! display layer.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Which engine produced a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Analytic,
    Numerov,
    FiniteDifference,
    Wkb,
    SMatrix,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Analytic => "analytic",
            Engine::Numerov => "numerov",
            Engine::FiniteDifference => "fd-oracle",
            Engine::Wkb => "wkb",
            Engine::SMatrix => "smatrix",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bound-state energy with its labels.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyLevel {
    /// Radial node count.
    pub n_r: usize,
    pub ell: u32,
    pub dimension: u32,
    /// Hartree.
    pub energy: f64,
    /// Node count reported by the engine; equals `n_r` for a correct level.
    pub nodes: usize,
    pub engine: Engine,
    /// Absolute energy tolerance the engine vouches for.
    pub tolerance: f64,
}

impl EnergyLevel {
    pub(crate) fn exact(n_r: usize, ell: u32, dimension: u32, energy: f64) -> Self {
        Self { n_r, ell, dimension, energy, nodes: n_r, engine: Engine::Analytic, tolerance: 0.0 }
    }
}

/// `ν = n_r + ℓ + (D-1)/2`, the number that enters the Bohr formula in `D` dimensions.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EffectiveQuantumNumber(f64);

impl EffectiveQuantumNumber {
    pub fn new(n_r: usize, ell: u32, dimension: u32) -> Self {
        Self(n_r as f64 + ell as f64 + (dimension as f64 - 1.0) / 2.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn require_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {value}")))
    }
}

/// `E = -Z²/(2ν²)` Hartree.
pub fn coulomb_energy(z: f64, n_r: usize, ell: u32, dimension: u32) -> Result<EnergyLevel> {
    require_positive("Z", z)?;
    if dimension < 2 {
        return Err(Error::Unsupported(
            "no Bohr levels in D = 1: the bare 1/|x| well binds without limit".into(),
        ));
    }
    let nu = EffectiveQuantumNumber::new(n_r, ell, dimension).value();
    Ok(EnergyLevel::exact(n_r, ell, dimension, coulomb_energy_nu(z, nu)))
}

/// Bohr formula as a function of a continuous `ν`.
pub fn coulomb_energy_nu(z: f64, nu: f64) -> f64 {
    -z * z / (2.0 * nu * nu)
}

/// `dE/dν = Z²/ν³`.
pub fn coulomb_de_dnu(z: f64, nu: f64) -> Result<f64> {
    require_positive("nu", nu)?;
    Ok(z * z / (nu * nu * nu))
}

/// Isotropic oscillator, `E = ω(2n_r + ℓ + D/2)`; in `D = 1`, `n_r` is the
/// full-line node count and `E = ω(n + 1/2)`.
pub fn oscillator_energy(omega: f64, n_r: usize, ell: u32, dimension: u32) -> Result<EnergyLevel> {
    require_positive("omega", omega)?;
    let energy = match dimension {
        0 => return Err(Error::Domain("dimension must be at least 1".into())),
        1 if ell != 0 => return Err(Error::Domain("D = 1 requires ell = 0".into())),
        1 => omega * (n_r as f64 + 0.5),
        d => omega * (2.0 * n_r as f64 + ell as f64 + d as f64 / 2.0),
    };
    Ok(EnergyLevel::exact(n_r, ell, dimension, energy))
}

/// Oscillator for `x > 0` behind a wall at the origin: `E = ω(2n_r + 3/2)`.
pub fn half_oscillator_energy(omega: f64, n_r: usize) -> Result<EnergyLevel> {
    require_positive("omega", omega)?;
    Ok(EnergyLevel::exact(n_r, 0, 1, omega * (2.0 * n_r as f64 + 1.5)))
}

/// Particle in a box of length `L` with `n` interior nodes:
/// `E = (n+1)²π²/(2L²)`.
pub fn box_energy(length: f64, n: usize) -> Result<EnergyLevel> {
    require_positive("L", length)?;
    let k = (n as f64 + 1.0) * PI / length;
    Ok(EnergyLevel::exact(n, 0, 1, 0.5 * k * k))
}

/// Planar rotor, `m²/(2I)`.
pub fn rotor_energy(m: i64, inertia: f64) -> Result<f64> {
    require_positive("I", inertia)?;
    let m = m.unsigned_abs() as f64;
    Ok(m * m / (2.0 * inertia))
}
