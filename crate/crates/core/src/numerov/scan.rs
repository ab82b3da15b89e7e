use crate::analytic::EnergyLevel;
use crate::error::{Error, Result};
use crate::parallel::{self, Execution};
use crate::potentials::{PotentialModel, RadialProblem};

use super::grid::Grid;
use super::shoot::solve_level;

/// Ground state of `-1/(|x| + a)` at one cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanPoint {
    pub cutoff: f64,
    pub level: EnergyLevel,
    pub grid: Grid,
}

impl ScanPoint {
    pub fn binding(&self) -> f64 {
        -self.level.energy
    }
}

/// Uniform full-line grid for the regularized well: spacing at most `a/10`
/// (and fine against the decay length `1/κ`), span wide enough for the tail
/// to decay by `e^{-60}`. `kappa` is an estimate of `sqrt(2|E₀|)`.
pub fn regularized_grid(cutoff: f64, kappa: Option<f64>) -> Result<Grid> {
    let kappa = kappa.unwrap_or_else(|| kappa_guess(cutoff));
    let tail = 60.0 / kappa;
    let x_max = tail + 10.0 * cutoff;
    let h = (cutoff / 10.0).min(0.005 / kappa);
    let points = (((2.0 * x_max / h).ceil() as usize) + 1) | 1;
    Grid::symmetric(x_max, points.max(201))
}

// Rough |E₀| trend of the regularized well; only seeds the grid choice.
fn kappa_guess(cutoff: f64) -> f64 {
    let log = (1.0 / cutoff).ln();
    if log > 1.0 {
        2.0 * log
    } else {
        1.0 / (1.0 + cutoff.sqrt())
    }
}

fn check_resolution(cutoff: f64, grid: &Grid) -> Result<()> {
    let limit = cutoff / 10.0;
    if grid.spacing() > limit * (1.0 + 1e-12) {
        return Err(Error::GridResolution { spacing: grid.spacing(), limit });
    }
    Ok(())
}

fn ground_state(cutoff: f64, grid: &Grid, tol: f64) -> Result<EnergyLevel> {
    check_resolution(cutoff, grid)?;
    let problem = RadialProblem::one_dimensional(PotentialModel::regularized_1d_coulomb(cutoff)?)?;
    solve_level(&problem, 0, grid, tol)
}

fn check_descending(cutoffs: impl Iterator<Item = f64>) -> Result<()> {
    let values: Vec<f64> = cutoffs.collect();
    if values.iter().any(|&a| !(a > 0.0)) {
        return Err(Error::Domain("cutoffs must be positive".into()));
    }
    if values.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Domain("cutoffs must be strictly descending".into()));
    }
    Ok(())
}

/// Even ground state of `-1/(|x|+a)` for each `(a, grid)` pair.
pub fn scan_regularized_1d_on(
    runs: &[(f64, Grid)],
    tol: f64,
    execution: Execution,
) -> Result<Vec<ScanPoint>> {
    check_descending(runs.iter().map(|r| r.0))?;
    parallel::map(execution, runs, |(cutoff, grid)| {
        ground_state(*cutoff, grid, tol).map(|level| ScanPoint { cutoff: *cutoff, level, grid: *grid })
    })
    .into_iter()
    .collect()
}

/// Same scan with grids chosen per cutoff: solve on a guessed grid, then
/// re-solve once on a grid sized from the measured decay constant.
pub fn scan_regularized_1d(cutoffs: &[f64], tol: f64, execution: Execution) -> Result<Vec<ScanPoint>> {
    check_descending(cutoffs.iter().copied())?;
    parallel::map(execution, cutoffs, |&cutoff| {
        let first = regularized_grid(cutoff, None)?;
        let guess = ground_state(cutoff, &first, tol)?;
        let grid = regularized_grid(cutoff, Some((2.0 * guess.energy.abs()).sqrt()))?;
        let level = ground_state(cutoff, &grid, tol)?;
        Ok(ScanPoint { cutoff, level, grid })
    })
    .into_iter()
    .collect()
}
