use crate::analytic::EffectiveQuantumNumber;
use crate::error::{Error, Result};
use crate::potentials::{Edge, PotentialKind, RadialProblem};

pub const MIN_POINTS: usize = 200;
pub const DEFAULT_POINTS: usize = 4000;

/// Uniform grid `r_min, r_min + h, ..., r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    r_min: f64,
    r_max: f64,
    points: usize,
}

impl Grid {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        if !(r_min.is_finite() && r_max.is_finite()) || r_max <= r_min {
            return Err(Error::Domain(format!("grid needs r_max > r_min, got [{r_min}, {r_max}]")));
        }
        if points < MIN_POINTS {
            return Err(Error::Domain(format!("grid needs at least {MIN_POINTS} points, got {points}")));
        }
        Ok(Self { r_min, r_max, points })
    }

    /// Radial grid on `[0, r_max]`.
    pub fn radial(r_max: f64, points: usize) -> Result<Self> {
        Self::new(0.0, r_max, points)
    }

    /// Symmetric full-line grid on `[-x_max, x_max]`. An odd point count puts
    /// a node of the grid at the origin.
    pub fn symmetric(x_max: f64, points: usize) -> Result<Self> {
        Self::new(-x_max, x_max, points)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.points - 1) as f64
    }

    pub fn position(&self, i: usize) -> f64 {
        self.r_min + (self.r_max - self.r_min) * (i as f64 / (self.points - 1) as f64)
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.position(i)).collect()
    }

    /// Same span with `points` replaced.
    pub fn with_points(&self, points: usize) -> Result<Self> {
        Self::new(self.r_min, self.r_max, points)
    }
}

/// Grid used when the caller does not supply one.
///
/// The span is 40 characteristic lengths (`ν²/Z` for Coulomb,
/// `sqrt((2n_r+ℓ+2)/ω)` for oscillators); the point count is at least
/// [`DEFAULT_POINTS`] and grows so the spacing resolves the shortest local
/// length of the level.
pub fn default_grid(problem: &RadialProblem, n_r: usize) -> Result<Grid> {
    let ell = problem.ell();
    let d = problem.dimension();
    let pts = |span: f64, h_target: f64| DEFAULT_POINTS.max((span / h_target).ceil() as usize + 1);
    match problem.potential().kind() {
        PotentialKind::Coulomb { z } => {
            let nu = EffectiveQuantumNumber::new(n_r, ell, d).value();
            let r_max = 40.0 * nu * nu / z;
            let h_target = 0.01 * nu.min(1.0).powi(2) / z;
            Grid::radial(r_max, pts(r_max, h_target))
        }
        PotentialKind::Oscillator { omega } => {
            let len = ((2 * n_r + ell as usize + 2) as f64 / omega).sqrt();
            let energy = omega * (2.0 * n_r as f64 + ell as f64 + d as f64 / 2.0);
            let h_target = 0.01 / (2.0 * energy).sqrt();
            let span = 40.0 * len;
            if d == 1 {
                let points = pts(2.0 * span, h_target) | 1;
                Grid::symmetric(span, points)
            } else {
                Grid::radial(span, pts(span, h_target))
            }
        }
        PotentialKind::HalfOscillator { omega } => {
            let len = ((2 * n_r + 2) as f64 / omega).sqrt();
            let energy = omega * (2.0 * n_r as f64 + 1.5);
            let span = 40.0 * len;
            Grid::radial(span, pts(span, 0.01 / (2.0 * energy).sqrt()))
        }
        PotentialKind::Box { length } => {
            let k = (n_r as f64 + 1.0) * std::f64::consts::PI / length;
            Grid::radial(*length, pts(*length, 0.01 / k))
        }
        PotentialKind::Regularized1DCoulomb { cutoff } => super::scan::regularized_grid(*cutoff, None),
        PotentialKind::Tabulated(t) => {
            let (lo, hi) = t.range();
            match problem.edges() {
                (Edge::Wall(_) | Edge::TableEnd(_), Edge::Wall(_) | Edge::TableEnd(_)) => {
                    Grid::new(lo, hi, 4 * DEFAULT_POINTS)
                }
                _ => unreachable!("tabulated edges are walls or table ends"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Grid::new(0.0, 1.0, 199).is_err());
        assert!(Grid::new(1.0, 1.0, 500).is_err());
        let g = Grid::new(0.0, 2.0, 201).unwrap();
        assert_eq!(g.spacing(), 0.01);
        assert_eq!(g.position(200), 2.0);
    }

    #[test]
    fn symmetric_odd_grid_hits_origin() {
        let g = Grid::symmetric(5.0, 1001).unwrap();
        assert_eq!(g.position(500), 0.0);
    }
}
