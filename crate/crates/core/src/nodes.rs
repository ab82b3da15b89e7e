//! Node counting for sampled wavefunctions and angular nodes of spherical
//! harmonics.

use crate::error::{Error, Result};

/// Interior sign changes of a sampled function.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NodeReport {
    pub total: usize,
    /// Linearly interpolated crossing positions, strictly increasing.
    pub positions: Vec<f64>,
}

/// Values below this fraction of the peak magnitude count as zero.
pub const ZERO_THRESHOLD: f64 = 1e-12;

/// Counts strict sign changes between consecutive nonzero samples.
///
/// Near-zero samples are bridged, so boundary zeros and touching zeros are
/// not nodes.
pub fn count_nodes(samples: &[(f64, f64)]) -> Result<NodeReport> {
    if samples.len() < 3 {
        return Err(Error::Domain(format!(
            "node counting needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    let peak = samples.iter().fold(0.0f64, |m, s| m.max(s.1.abs()));
    let floor = ZERO_THRESHOLD * peak;
    let mut positions = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for &(x, v) in samples {
        if v.abs() <= floor {
            continue;
        }
        if let Some((xa, va)) = last {
            if va.signum() != v.signum() {
                positions.push(xa - va * (x - xa) / (v - va));
            }
        }
        last = Some((x, v));
    }
    Ok(NodeReport { total: positions.len(), positions })
}

/// Convenience wrapper for parallel position/value slices.
pub fn count_nodes_xy(xs: &[f64], values: &[f64]) -> Result<NodeReport> {
    if xs.len() != values.len() {
        return Err(Error::Domain("position and value slices differ in length".into()));
    }
    let samples: Vec<(f64, f64)> = xs.iter().copied().zip(values.iter().copied()).collect();
    count_nodes(&samples)
}

/// Associated Legendre function `P_ℓ^m(x)` for `m ≥ 0` (Condon-Shortley phase),
/// by upward recurrence in `ℓ` from `P_m^m`.
pub fn associated_legendre(ell: u32, m: u32, x: f64) -> f64 {
    if m > ell {
        return 0.0;
    }
    let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    let mut pmm = 1.0;
    let mut odd = 1.0;
    for _ in 0..m {
        pmm *= -odd * s;
        odd += 2.0;
    }
    if ell == m {
        return pmm;
    }
    let mut pm1 = x * (2 * m + 1) as f64 * pmm;
    if ell == m + 1 {
        return pm1;
    }
    let mut pm2 = pmm;
    for l in (m + 2)..=ell {
        let p = (x * (2 * l - 1) as f64 * pm1 - (l + m - 1) as f64 * pm2) / (l - m) as f64;
        pm2 = pm1;
        pm1 = p;
    }
    pm1
}

/// Number of sample points used to scan `P_ℓ^m(cos θ)` on `(0, π)`.
pub const LEGENDRE_SCAN_POINTS: usize = 10_000;

/// Numerically counted zeros of `P_ℓ^m(cos θ)` on the open interval `(0, π)`.
pub fn legendre_theta_zeros(ell: u32, m: u32) -> NodeReport {
    let samples: Vec<(f64, f64)> = (0..LEGENDRE_SCAN_POINTS)
        .map(|i| {
            let theta = std::f64::consts::PI * (i as f64 + 0.5) / LEGENDRE_SCAN_POINTS as f64;
            (theta, associated_legendre(ell, m, theta.cos()))
        })
        .collect();
    count_nodes(&samples).expect("scan has many samples")
}

/// Nodes of `Y_ℓ^m` split between the polar and azimuthal coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngularNodes {
    pub theta: u32,
    pub phi: u32,
}

impl AngularNodes {
    pub fn total(self) -> u32 {
        self.theta + self.phi
    }
}

/// `(ℓ - |m|, |m|)`, with the polar count checked against a zero scan of the
/// associated Legendre function.
pub fn angular_node_counts(ell: u32, m: i64) -> Result<AngularNodes> {
    let am = m.unsigned_abs();
    if am > ell as u64 {
        return Err(Error::Domain(format!("|m| = {am} exceeds ell = {ell}")));
    }
    let am = am as u32;
    let counted = legendre_theta_zeros(ell, am).total as u32;
    if counted != ell - am {
        return Err(Error::NonConvergence {
            iterations: LEGENDRE_SCAN_POINTS,
            context: format!("Legendre scan found {counted} polar nodes for ell={ell}, m={m}"),
        });
    }
    Ok(AngularNodes { theta: ell - am, phi: am })
}
