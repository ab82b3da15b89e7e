//! Numerical eigensolver for the reduced radial equation
//! `-u''/2 + V_eff(x) u = E u` on a uniform grid.
//!
//! [`solve_level`] shoots with the Numerov recursion, brackets the level by
//! counting nodes and then matches log-derivatives at the outer classical
//! turning point. [`fd_oracle_levels`] is an independent second-order
//! finite-difference check that shares nothing with the shooting path except
//! the potential.

mod fd;
mod grid;
mod scan;
mod shoot;

pub use fd::{fd_oracle_levels, sturm_count, tridiagonal_eigenvalues};
pub use grid::{default_grid, Grid, DEFAULT_POINTS, MIN_POINTS};
pub use scan::{regularized_grid, scan_regularized_1d, scan_regularized_1d_on, ScanPoint};
pub use shoot::{
    shoot, solve_level, solve_level_with_wavefunction, solve_levels, ShootResult, Wavefunction,
};
