use crate::analytic::{Engine, EnergyLevel};
use crate::error::{Error, Result};
use crate::potentials::{Centrifugal, RadialProblem};

use super::grid::{Grid, MIN_POINTS};

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `x`, from the signs of the LDLᵀ pivots.
pub fn sturm_count(diagonal: &[f64], off_diagonal: &[f64], x: f64) -> usize {
    const GUARD: f64 = 1e-300;
    let mut count = 0;
    let mut q: f64 = 1.0;
    for (i, &d) in diagonal.iter().enumerate() {
        let coupling = if i == 0 { 0.0 } else { off_diagonal[i - 1] * off_diagonal[i - 1] };
        let q_safe = if q.abs() < GUARD { GUARD.copysign(q) } else { q };
        q = d - x - if i == 0 { 0.0 } else { coupling / q_safe };
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` eigenvalues by Sturm-sequence bisection.
pub fn tridiagonal_eigenvalues(diagonal: &[f64], off_diagonal: &[f64], count: usize) -> Vec<f64> {
    let n = diagonal.len();
    let count = count.min(n);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let left = if i > 0 { off_diagonal[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off_diagonal[i].abs() } else { 0.0 };
        lo = lo.min(diagonal[i] - left - right);
        hi = hi.max(diagonal[i] + left + right);
    }
    let mut values = Vec::with_capacity(count);
    let mut floor = lo;
    for k in 0..count {
        let (mut a, mut b) = (floor, hi);
        for _ in 0..300 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diagonal, off_diagonal, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
        }
        let value = 0.5 * (a + b);
        values.push(value);
        floor = a;
    }
    values
}

fn lowest_levels(problem: &RadialProblem, grid: &Grid, count: usize) -> Result<Vec<f64>> {
    let interior = grid.points() - 2;
    if count > interior {
        return Err(Error::Domain(format!(
            "requested {count} levels but the grid has only {interior} interior points"
        )));
    }
    let (diagonal, off) = if problem.dimension() >= 2 && grid.r_min() == 0.0 {
        radial_matrix(problem, grid)?
    } else {
        line_matrix(problem, grid)?
    };
    Ok(tridiagonal_eigenvalues(&diagonal, &off, count))
}

/// Three-point Laplacian on the grid nodes with `u = 0` at both ends.
fn line_matrix(problem: &RadialProblem, grid: &Grid) -> Result<(Vec<f64>, Vec<f64>)> {
    let xs = grid.positions();
    let n = xs.len();
    let h = grid.spacing();
    let kinetic = 1.0 / (h * h);
    let diagonal = xs[1..n - 1]
        .iter()
        .map(|&x| problem.reduced_potential(x, Centrifugal::Exact).map(|v| kinetic + v))
        .collect::<Result<Vec<f64>>>()?;
    Ok((diagonal, vec![-0.5 * kinetic; n - 3]))
}

/// Flux form of the `D`-dimensional radial Laplacian on cell centres
/// `r_i = (i - 1/2) h`, symmetrized by `r^((D-1)/2)`. The face weight
/// `r^(D-1)` vanishes at the origin, so no boundary value is imposed there
/// and the `R^(1/2)` behaviour at `D = 2` costs no accuracy.
fn radial_matrix(problem: &RadialProblem, grid: &Grid) -> Result<(Vec<f64>, Vec<f64>)> {
    let h = grid.spacing();
    let cells = grid.points() - 2;
    let p = problem.dimension() as f64 - 1.0;
    let ell = problem.ell() as f64;
    let angular = ell * (ell + p - 1.0);
    let centre = |i: usize| (i as f64 + 0.5) * h;
    let face = |i: usize| ((i as f64 + 1.0) * h).powf(p);
    let mut diagonal = Vec::with_capacity(cells);
    for i in 0..cells {
        let r = centre(i);
        let inner = if i == 0 { 0.0 } else { face(i - 1) };
        let kinetic = (inner + face(i)) / (2.0 * h * h * r.powf(p));
        diagonal.push(kinetic + 0.5 * angular / (r * r) + problem.potential().value(r)?);
    }
    let off = (0..cells - 1)
        .map(|i| -face(i) / (2.0 * h * h * (centre(i) * centre(i + 1)).powf(0.5 * p)))
        .collect();
    Ok((diagonal, off))
}

/// Independent oracle: lowest `count` eigenvalues of a second-order
/// finite-difference Hamiltonian with Dirichlet ends. Radial problems on
/// `[0, r_max]` discretize the full `D`-dimensional operator in flux form,
/// which uses `ℓ(ℓ+D-2)` directly rather than the reduced centrifugal term.
///
/// The discretization error is O(h²). Each level's `tolerance` is
/// `|E(h) - E(2h)|`, three times the Richardson estimate of that error.
pub fn fd_oracle_levels(problem: &RadialProblem, count: usize, grid: &Grid) -> Result<Vec<EnergyLevel>> {
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    let fine = lowest_levels(problem, grid, count)?;
    let coarse_points = grid.points().div_ceil(2);
    let coarse = if coarse_points >= MIN_POINTS && coarse_points - 2 >= count {
        Some(lowest_levels(problem, &grid.with_points(coarse_points)?, count)?)
    } else {
        None
    };
    Ok(fine
        .iter()
        .enumerate()
        .map(|(k, &energy)| {
            let tolerance = match &coarse {
                Some(c) => (energy - c[k]).abs().max(1e-14 * energy.abs()),
                None => f64::INFINITY,
            };
            EnergyLevel {
                n_r: k,
                ell: problem.ell(),
                dimension: problem.dimension(),
                energy,
                nodes: k,
                engine: Engine::FiniteDifference,
                tolerance,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::PotentialModel;

    #[test]
    fn sturm_counts_on_a_known_matrix() {
        // Eigenvalues of tridiag(-1, 2, -1) of size 3: 2 - √2, 2, 2 + √2.
        let d = [2.0, 2.0, 2.0];
        let e = [-1.0, -1.0];
        assert_eq!(sturm_count(&d, &e, 0.5), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 2.5), 2);
        assert_eq!(sturm_count(&d, &e, 4.0), 3);
        let ev = tridiagonal_eigenvalues(&d, &e, 3);
        let exact = [2.0 - 2f64.sqrt(), 2.0, 2.0 + 2f64.sqrt()];
        for (a, b) in ev.iter().zip(exact) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn box_spectrum() {
        let p = RadialProblem::one_dimensional(PotentialModel::square_box(std::f64::consts::PI).unwrap()).unwrap();
        let grid = Grid::radial(std::f64::consts::PI, 4000).unwrap();
        let levels = fd_oracle_levels(&p, 3, &grid).unwrap();
        for (level, exact) in levels.iter().zip([0.5, 2.0, 4.5]) {
            assert!((level.energy - exact).abs() < 1e-3);
            assert!((level.energy - exact).abs() <= level.tolerance);
        }
    }

    #[test]
    fn full_line_oscillator() {
        let p = RadialProblem::one_dimensional(PotentialModel::oscillator(1.0).unwrap()).unwrap();
        let grid = Grid::symmetric(10.0, 4001).unwrap();
        let levels = fd_oracle_levels(&p, 2, &grid).unwrap();
        assert!((levels[0].energy - 0.5).abs() < 1e-3);
        assert!((levels[1].energy - 1.5).abs() < 1e-3);
    }

    #[test]
    fn hydrogen_ground_state() {
        let p = RadialProblem::new(PotentialModel::coulomb(1.0).unwrap(), 3, 0).unwrap();
        let grid = Grid::radial(40.0, 4000).unwrap();
        let levels = fd_oracle_levels(&p, 1, &grid).unwrap();
        assert!((levels[0].energy + 0.5).abs() < 5e-3, "{}", levels[0].energy);
    }

    #[test]
    fn count_larger_than_grid() {
        let p = RadialProblem::one_dimensional(PotentialModel::square_box(1.0).unwrap()).unwrap();
        let grid = Grid::radial(1.0, 200).unwrap();
        assert!(fd_oracle_levels(&p, 199, &grid).is_err());
        assert!(fd_oracle_levels(&p, 0, &grid).is_err());
    }
}
