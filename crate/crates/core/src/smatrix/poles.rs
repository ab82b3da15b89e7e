use num_complex::Complex64;

use crate::analytic::{coulomb_energy_nu, EffectiveQuantumNumber};
use crate::error::{Error, Result};
use crate::roots;

use super::gamma::{gamma_value, reciprocal_gamma};

pub const MAX_POLES: usize = 50;

/// A bound state located as a zero of the continued reciprocal gamma factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleResult {
    /// Decay constant, `k = iκ`.
    pub kappa: f64,
    /// `Z/κ`.
    pub nu: f64,
    pub n_r: usize,
    /// Distance of the gamma argument from its pole, `|1/Γ(a)| / n_r!`.
    pub residual: f64,
}

impl PoleResult {
    /// `E = -κ²/2`.
    pub fn energy(&self) -> f64 {
        -0.5 * self.kappa * self.kappa
    }
}

fn validate(z: f64, dimension: u32) -> Result<()> {
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::Domain(format!("Z must be positive (attractive), got {z}")));
    }
    if dimension < 2 {
        return Err(Error::Unsupported("pole search needs D >= 2".into()));
    }
    Ok(())
}

fn offset(ell: u32, dimension: u32) -> f64 {
    EffectiveQuantumNumber::new(0, ell, dimension).value()
}

/// `1/Γ(ℓ + (D-1)/2 - Z/κ)`; its zeros are the bound states.
pub fn pole_condition(z: f64, ell: u32, dimension: u32, kappa: f64) -> Result<f64> {
    validate(z, dimension)?;
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::Domain(format!("kappa must be positive, got {kappa}")));
    }
    Ok(reciprocal_gamma(Complex64::new(offset(ell, dimension) - z / kappa, 0.0)).re)
}

/// Whether the S-matrix has a pole at effective quantum number `nu`.
pub fn has_pole_at(z: f64, ell: u32, dimension: u32, nu: f64) -> Result<bool> {
    Ok(pole_condition(z, ell, dimension, z / nu)?.abs() <= 1e-12)
}

/// The `count` largest-κ poles, scanning κ downwards for sign changes of
/// the reciprocal gamma and bisecting each to 1e-12 relative or better.
pub fn find_poles(z: f64, ell: u32, dimension: u32, count: usize) -> Result<Vec<PoleResult>> {
    validate(z, dimension)?;
    if count == 0 || count > MAX_POLES {
        return Err(Error::Domain(format!("count must be in 1..={MAX_POLES}, got {count}")));
    }
    // Scan in t = Z/κ, which places successive poles one unit apart; the
    // offset keeps samples off the half-integer lattice where poles sit.
    const STEP: f64 = 0.25;
    const START: f64 = 0.1;
    let condition = |kappa: f64| pole_condition(z, ell, dimension, kappa).expect("validated");
    let mut poles = Vec::with_capacity(count);
    let mut t_prev = START;
    let mut f_prev = condition(z / t_prev);
    let mut step = 1usize;
    while poles.len() < count {
        let t = START + STEP * step as f64;
        let f = condition(z / t);
        if f == 0.0 || f.signum() != f_prev.signum() {
            let (k_hi, k_lo) = (z / t_prev, z / t);
            let kappa = if f == 0.0 {
                z / t
            } else {
                roots::bisect(condition, k_lo, k_hi, 1e-15 * k_lo, 200)?
            };
            let n_r = poles.len();
            let nu = z / kappa;
            let factorial = gamma_value(Complex64::new(n_r as f64 + 1.0, 0.0))?.re;
            poles.push(PoleResult {
                kappa,
                nu,
                n_r,
                residual: condition(kappa).abs() / factorial,
            });
        }
        t_prev = t;
        f_prev = f;
        step += 1;
        if step > 8 * (MAX_POLES + 100) {
            return Err(Error::NonConvergence {
                iterations: step,
                context: "pole bracketing ran past the expected ladder".into(),
            });
        }
    }
    Ok(poles)
}

impl PoleResult {
    /// Cross-check against the Bohr formula.
    pub fn bohr_energy(&self, z: f64) -> f64 {
        coulomb_energy_nu(z, self.nu)
    }
}
