use std::io::Write;

use crate::analytic::{Engine, EnergyLevel};
use crate::error::{Error, Result};
use crate::nodes::count_nodes_xy;
use crate::parallel::{self, Execution};
use crate::potentials::{Centrifugal, Edge, RadialProblem};
use crate::roots;

use super::grid::{default_grid, Grid, MIN_POINTS};

/// Outcome of a shooting solve.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootResult {
    pub energy: f64,
    /// Interior sign changes of the final wavefunction.
    pub nodes: usize,
    /// Log-derivative mismatch at the matching point, multiplied by the grid
    /// step (dimensionless). For walled problems without a matching point,
    /// the relative size of `u` at the far wall.
    pub match_residual: f64,
    /// Width of the final energy bracket.
    pub bracket_width: f64,
    pub converged: bool,
}

/// Normalized reduced wavefunction `u(x)` on the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction {
    pub positions: Vec<f64>,
    pub values: Vec<f64>,
}

impl Wavefunction {
    /// `∫ u² dx` by the trapezoid rule.
    pub fn norm_squared(&self) -> f64 {
        trapezoid_norm(&self.positions, &self.values)
    }

    /// Two-column `R,u` CSV with a header row.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "R,u")?;
        for (x, u) in self.positions.iter().zip(&self.values) {
            writeln!(out, "{x:.15e},{u:.15e}")?;
        }
        Ok(())
    }
}

fn trapezoid_norm(xs: &[f64], us: &[f64]) -> f64 {
    xs.windows(2)
        .zip(us.windows(2))
        .map(|(x, u)| 0.5 * (x[1] - x[0]) * (u[0] * u[0] + u[1] * u[1]))
        .sum()
}

/// Decay action `∫ κ dx` beyond the classical region after which the
/// solution is treated as zero.
const CUT_ACTION: f64 = 60.0;
/// Minimum decay action between the last turning point and an open grid end.
const MIN_TAIL_ACTION: f64 = 10.0;
const SEED: f64 = 1e-20;
/// Points next to the origin filled from the Frobenius series. Numerov's
/// error for `u ~ R^s` with non-integer `s` falls off as this count to the
/// fourth power, independently of the spacing.
const SERIES_POINTS: usize = 200;
const MAX_BISECTIONS: usize = 400;
const MAX_EXPANSIONS: usize = 60;

#[derive(Debug, Clone, Copy)]
enum Start {
    /// Regular solution at `x = 0` from its Frobenius series.
    Series { first: usize, exponent: f64, laurent: [f64; 4] },
    /// Pure power law `x^s` on the first two interior points.
    PowerLaw { exponent: f64 },
    /// `u = 0` at the left end of the live region.
    Dirichlet,
}

#[derive(Debug, Clone, Copy)]
struct Span {
    start: usize,
    end: usize,
    /// Last index inside the classically allowed region.
    turning: usize,
    first_allowed: usize,
    tail_action: f64,
    head_action: f64,
}

struct Discretized {
    xs: Vec<f64>,
    v: Vec<f64>,
    h: f64,
    start: Start,
    left_open: bool,
    /// Right end is a wall: no matching, Dirichlet at the last point.
    right_wall: bool,
    right_open: bool,
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

impl Discretized {
    fn new(problem: &RadialProblem, grid: &Grid) -> Result<Self> {
        let (left, right) = problem.edges();
        let radial = problem.dimension() >= 2;
        let xs = grid.positions();
        let n = xs.len();
        let origin_start = match left {
            Edge::Origin => true,
            Edge::Wall(w) => w == 0.0,
            _ => false,
        };
        let start = if origin_start {
            if !near(grid.r_min(), 0.0) {
                return Err(Error::Domain(format!(
                    "grid must start at the origin for this problem, got r_min = {}",
                    grid.r_min()
                )));
            }
            let exponent = problem.origin_exponent();
            match problem.potential().origin_series() {
                Some(laurent) => Start::Series { first: SERIES_POINTS.min(n / 20).max(1), exponent, laurent },
                None => Start::PowerLaw { exponent },
            }
        } else {
            match left {
                Edge::Wall(w) if !near(grid.r_min(), w) => {
                    return Err(Error::Domain(format!(
                        "grid must start at the wall x = {w}, got {}",
                        grid.r_min()
                    )))
                }
                Edge::TableEnd(lo) if grid.r_min() < lo => {
                    return Err(Error::Domain(format!("grid starts before table range at {lo}")))
                }
                _ => {}
            }
            Start::Dirichlet
        };
        match right {
            Edge::Wall(w) if !near(grid.r_max(), w) => {
                return Err(Error::Domain(format!(
                    "grid must end at the wall x = {w}, got {}",
                    grid.r_max()
                )))
            }
            Edge::TableEnd(hi) if grid.r_max() > hi => {
                return Err(Error::Domain(format!("grid ends beyond table range at {hi}")))
            }
            _ => {}
        }
        let mut v = Vec::with_capacity(n);
        for (i, &x) in xs.iter().enumerate() {
            if i == 0 && origin_start && radial {
                v.push(f64::NAN);
                continue;
            }
            // Clamp the last point onto the table end against rounding.
            let x = match right {
                Edge::TableEnd(hi) | Edge::Wall(hi) if i + 1 == n => hi,
                _ => x,
            };
            v.push(problem.reduced_potential(x, Centrifugal::Exact)?);
        }
        Ok(Self {
            xs,
            v,
            h: grid.spacing(),
            start,
            left_open: matches!(left, Edge::Open),
            right_wall: matches!(right, Edge::Wall(_)),
            right_open: matches!(right, Edge::Open),
        })
    }

    fn len(&self) -> usize {
        self.xs.len()
    }

    fn min_potential(&self) -> f64 {
        self.v.iter().copied().filter(|v| v.is_finite()).fold(f64::INFINITY, f64::min)
    }

    fn f_values(&self, e: f64) -> Vec<f64> {
        self.v.iter().map(|&v| 2.0 * (v - e)).collect()
    }

    fn span(&self, f: &[f64]) -> Option<Span> {
        let n = self.len();
        let allowed = |i: usize| f[i] < 0.0;
        let first_allowed = (0..n).find(|&i| allowed(i))?;
        let turning = (0..n).rev().find(|&i| allowed(i))?;
        let mut end = n - 1;
        let mut tail_action = 0.0;
        if !self.right_wall {
            end = turning;
            while end + 1 < n {
                end += 1;
                tail_action += f[end].max(0.0).sqrt() * self.h;
                if tail_action >= CUT_ACTION {
                    break;
                }
            }
        }
        let mut start = 0;
        let mut head_action = f64::INFINITY;
        if self.left_open {
            start = first_allowed;
            head_action = 0.0;
            while start > 0 {
                start -= 1;
                head_action += f[start].max(0.0).sqrt() * self.h;
                if head_action >= CUT_ACTION {
                    break;
                }
            }
        }
        Some(Span { start, end, turning, first_allowed, tail_action, head_action })
    }

    fn series_value(&self, x: f64, e: f64, exponent: f64, c: [f64; 4]) -> f64 {
        let mut a = [0.0f64; 4];
        a[0] = 1.0;
        let mut sum = 1.0;
        let mut xk = 1.0;
        let mut small = 0;
        for k in 1..400usize {
            let kf = k as f64;
            let num = 2.0 * c[0] * a[0]
                + if k >= 2 { 2.0 * (c[1] - e) * a[1] } else { 0.0 }
                + if k >= 3 { 2.0 * c[2] * a[2] } else { 0.0 }
                + if k >= 4 { 2.0 * c[3] * a[3] } else { 0.0 };
            let ak = num / (kf * (2.0 * exponent + kf - 1.0));
            a = [ak, a[0], a[1], a[2]];
            xk *= x;
            let term = ak * xk;
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                small += 1;
                if small >= 4 {
                    break;
                }
            } else {
                small = 0;
            }
        }
        x.powf(exponent) * sum
    }

    /// Seeds `u` and returns the first index from which Numerov steps run.
    fn seed(&self, u: &mut [f64], e: f64, start: usize) -> usize {
        match self.start {
            Start::Series { first, exponent, laurent } => {
                u[0] = 0.0;
                for (ui, &x) in u.iter_mut().zip(&self.xs).take(first + 2).skip(1) {
                    *ui = self.series_value(x, e, exponent, laurent);
                }
                first
            }
            Start::PowerLaw { exponent } => {
                u[0] = 0.0;
                u[1] = self.xs[1].powf(exponent);
                u[2] = self.xs[2].powf(exponent);
                1
            }
            Start::Dirichlet => {
                u[start] = 0.0;
                u[start + 1] = SEED;
                start
            }
        }
    }

    /// Outward solution on `[span.start, to]`, zero elsewhere.
    fn outward(&self, f: &[f64], e: f64, span: &Span, to: usize) -> Vec<f64> {
        let n = self.len();
        let mut u = vec![0.0; n];
        let from = self.seed(&mut u, e, span.start);
        let h2 = self.h * self.h / 12.0;
        // Renormalized form y = (1 - h²f/12) u keeps the energy dependence
        // additive, so it is not lost to rounding of the weights.
        let q = |i: usize| h2 * f[i];
        let mut y_prev = (1.0 - q(from)) * u[from];
        let mut y = (1.0 - q(from + 1)) * u[from + 1];
        for i in (from + 1)..to {
            let y_next = 2.0 * y - y_prev + 12.0 * q(i) * u[i];
            u[i + 1] = y_next / (1.0 - q(i + 1));
            y_prev = y;
            y = y_next;
        }
        u
    }

    /// Inward solution from `span.end` down to `to`, zero elsewhere.
    fn inward(&self, f: &[f64], span: &Span, to: usize) -> Vec<f64> {
        let n = self.len();
        let mut u = vec![0.0; n];
        let end = span.end;
        u[end] = 0.0;
        u[end - 1] = SEED;
        let h2 = self.h * self.h / 12.0;
        let q = |i: usize| h2 * f[i];
        let mut y_next = 0.0;
        let mut y = (1.0 - q(end - 1)) * SEED;
        let mut i = end - 1;
        while i > to {
            let y_prev = 2.0 * y - y_next + 12.0 * q(i) * u[i];
            u[i - 1] = y_prev / (1.0 - q(i - 1));
            y_next = y;
            y = y_prev;
            i -= 1;
        }
        u
    }

    /// Sign changes of the outward solution over the live region; by Sturm
    /// oscillation this is the number of levels below `e`.
    fn node_count(&self, e: f64) -> usize {
        let f = self.f_values(e);
        let Some(span) = self.span(&f) else { return 0 };
        let u = self.outward(&f, e, &span, span.end);
        sign_changes(&u[span.start..=span.end])
    }

    fn matching_index(&self, e: f64) -> Option<usize> {
        if self.right_wall {
            return None;
        }
        let f = self.f_values(e);
        let span = self.span(&f)?;
        let m = span.turning;
        (m >= 2 && m + 2 <= span.end).then_some(m)
    }

    /// Scaled log-derivative mismatch at a fixed matching index.
    fn mismatch(&self, e: f64, m: usize) -> Result<f64> {
        let f = self.f_values(e);
        let span = self.span(&f).ok_or_else(|| {
            Error::Domain(format!("energy {e} lies below the potential everywhere"))
        })?;
        if span.end < m + 2 {
            return Err(Error::GridTooSmall { turning_point: self.xs[m], r_max: self.xs[span.end] });
        }
        let out = self.outward(&f, e, &span, m + 1);
        let inn = self.inward(&f, &span, m - 1);
        if out[m] == 0.0 || inn[m] == 0.0 {
            return Err(Error::Domain("wavefunction vanishes at the matching point".into()));
        }
        let scale = out[m] / inn[m];
        Ok(((out[m + 1] - out[m - 1]) - scale * (inn[m + 1] - inn[m - 1])) / (2.0 * out[m]))
    }

    /// Combined, normalized wavefunction at `e` and its residual.
    fn wavefunction(&self, e: f64, matching: Option<usize>) -> Result<(Vec<f64>, f64, Span)> {
        let f = self.f_values(e);
        let span = self.span(&f).ok_or_else(|| {
            Error::Domain(format!("energy {e} lies below the potential everywhere"))
        })?;
        let (mut u, residual) = match matching {
            Some(m) if span.end >= m + 2 => {
                let mut out = self.outward(&f, e, &span, m + 1);
                let inn = self.inward(&f, &span, m - 1);
                let scale = out[m] / inn[m];
                let residual =
                    ((out[m + 1] - out[m - 1]) - scale * (inn[m + 1] - inn[m - 1])) / (2.0 * out[m]);
                for i in (m + 1)..=span.end {
                    out[i] = scale * inn[i];
                }
                (out, residual)
            }
            _ => {
                let out = self.outward(&f, e, &span, span.end);
                let peak = out.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
                let residual = if peak > 0.0 { out[span.end] / peak } else { 0.0 };
                (out, residual)
            }
        };
        if self.right_wall {
            let last = u.len() - 1;
            u[last] = 0.0;
        }
        let norm = trapezoid_norm(&self.xs, &u).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NonConvergence {
                iterations: 0,
                context: format!("wavefunction at E = {e} cannot be normalized"),
            });
        }
        u.iter_mut().for_each(|x| *x /= norm);
        // Fix the overall sign so the first lobe is positive.
        if let Some(first) = u.iter().copied().find(|x| x.abs() > 1e-8) {
            if first < 0.0 {
                u.iter_mut().for_each(|x| *x = -*x);
            }
        }
        Ok((u, residual, span))
    }
}

fn sign_changes(u: &[f64]) -> usize {
    let mut count = 0;
    let mut last = 0.0f64;
    for &x in u {
        if x != 0.0 {
            if last != 0.0 && x.signum() != last.signum() {
                count += 1;
            }
            last = x;
        }
    }
    count
}

/// Shooting solve for the level with `n_r` nodes; returns diagnostics even
/// when the solve did not converge.
pub fn shoot(problem: &RadialProblem, n_r: usize, grid: &Grid, tol: f64) -> Result<ShootResult> {
    let (result, _) = shoot_inner(problem, n_r, grid, tol)?;
    Ok(result)
}

fn shoot_inner(
    problem: &RadialProblem,
    n_r: usize,
    grid: &Grid,
    tol: f64,
) -> Result<(ShootResult, Wavefunction)> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let disc = Discretized::new(problem, grid)?;
    let mut lo = disc.min_potential();
    if !lo.is_finite() {
        return Err(Error::Domain("potential is not finite anywhere on the grid".into()));
    }
    let asymptote = problem.potential().asymptote();
    let mut hi = match asymptote {
        Some(a) if a <= lo => {
            return Err(Error::NoBracket { n_r, lo, hi: a });
        }
        Some(a) => a,
        None => {
            let edge = disc.v[disc.len() - 2];
            if edge > lo { edge } else { lo + 1.0 }
        }
    };
    let mut expansions = 0;
    while disc.node_count(hi) <= n_r {
        if asymptote.is_some() || expansions == MAX_EXPANSIONS {
            return Err(Error::NoBracket { n_r, lo, hi });
        }
        hi = lo + 2.0 * (hi - lo);
        expansions += 1;
    }
    if disc.node_count(lo) > n_r {
        return Err(Error::NoBracket { n_r, lo, hi });
    }

    let scale = |a: f64, b: f64| a.abs().max(b.abs()).max(1e-300);
    let coarse = tol.max(1e-6 * scale(lo, hi));
    let fine_tol = |e: f64| (1e-2 * tol).min(1e-13 * e.abs().max(1e-3));
    let mut iterations = 0;
    let mut bisect_to = |lo: &mut f64, hi: &mut f64, width: f64| {
        while *hi - *lo > width && iterations < MAX_BISECTIONS {
            let mid = 0.5 * (*lo + *hi);
            if mid <= *lo || mid >= *hi {
                break;
            }
            if disc.node_count(mid) <= n_r {
                *lo = mid;
            } else {
                *hi = mid;
            }
            iterations += 1;
        }
    };
    bisect_to(&mut lo, &mut hi, coarse);

    let matching = disc.matching_index(0.5 * (lo + hi));
    let mut refined = None;
    if let Some(m) = matching {
        let g_lo = disc.mismatch(lo, m);
        let g_hi = disc.mismatch(hi, m);
        if let (Ok(g_lo), Ok(g_hi)) = (g_lo, g_hi) {
            if g_lo.signum() != g_hi.signum() {
                let xtol = fine_tol(0.5 * (lo + hi));
                if let Ok(e) =
                    roots::brent_known(|e| disc.mismatch(e, m), lo, g_lo, hi, g_hi, xtol, 200)
                {
                    if (lo..=hi).contains(&e) {
                        refined = Some((e, 2.0 * xtol));
                    }
                }
            }
        }
    }
    let (energy, width) = match refined {
        Some(r) => r,
        None => {
            let target = tol.min(fine_tol(0.5 * (lo + hi))).max(f64::EPSILON * scale(lo, hi));
            bisect_to(&mut lo, &mut hi, target);
            (0.5 * (lo + hi), hi - lo)
        }
    };

    let (values, residual, span) = disc.wavefunction(energy, matching)?;
    if disc.right_open && (span.turning + 3 >= disc.len() || span.tail_action < MIN_TAIL_ACTION) {
        return Err(Error::GridTooSmall {
            turning_point: disc.xs[span.turning],
            r_max: grid.r_max(),
        });
    }
    if disc.left_open && (span.first_allowed < 3 || span.head_action < MIN_TAIL_ACTION) {
        return Err(Error::GridTooSmall {
            turning_point: disc.xs[span.first_allowed],
            r_max: grid.r_min(),
        });
    }
    let nodes = count_nodes_xy(&disc.xs, &values)?.total;
    let converged = width < tol && nodes == n_r && residual.abs() < tol;
    let wf = Wavefunction { positions: disc.xs.clone(), values };
    Ok((
        ShootResult { energy, nodes, match_residual: residual, bracket_width: width, converged },
        wf,
    ))
}

/// Level with exactly `n_r` nodes.
pub fn solve_level(problem: &RadialProblem, n_r: usize, grid: &Grid, tol: f64) -> Result<EnergyLevel> {
    solve_level_with_wavefunction(problem, n_r, grid, tol).map(|(level, _)| level)
}

pub fn solve_level_with_wavefunction(
    problem: &RadialProblem,
    n_r: usize,
    grid: &Grid,
    tol: f64,
) -> Result<(EnergyLevel, Wavefunction)> {
    let (result, wf) = shoot_inner(problem, n_r, grid, tol)?;
    if !result.converged {
        return Err(Error::NonConvergence {
            iterations: MAX_BISECTIONS,
            context: format!(
                "numerov n_r={n_r} D={} ell={}: E={} nodes={} residual={:e} width={:e}",
                problem.dimension(),
                problem.ell(),
                result.energy,
                result.nodes,
                result.match_residual,
                result.bracket_width
            ),
        });
    }
    let level = EnergyLevel {
        n_r,
        ell: problem.ell(),
        dimension: problem.dimension(),
        energy: result.energy,
        nodes: result.nodes,
        engine: Engine::Numerov,
        tolerance: tol.max(discretization_estimate(problem, n_r, grid, tol, result.energy)),
    };
    Ok((level, wf))
}

/// `|E(h) - E(2h)|` from a re-solve on every other point; zero when the
/// coarse grid cannot hold the level.
fn discretization_estimate(problem: &RadialProblem, n_r: usize, grid: &Grid, tol: f64, energy: f64) -> f64 {
    let coarse_points = grid.points().div_ceil(2);
    if coarse_points < MIN_POINTS {
        return 0.0;
    }
    let Ok(coarse) = grid.with_points(coarse_points) else { return 0.0 };
    match shoot_inner(problem, n_r, &coarse, tol) {
        Ok((r, _)) if r.converged => (r.energy - energy).abs(),
        _ => 0.0,
    }
}

/// Solves several levels on their default grids; results follow the order
/// of `n_rs`.
pub fn solve_levels(
    problem: &RadialProblem,
    n_rs: &[usize],
    tol: f64,
    execution: Execution,
) -> Vec<Result<EnergyLevel>> {
    parallel::map(execution, n_rs, |&n_r| {
        let grid = default_grid(problem, n_r)?;
        solve_level(problem, n_r, &grid, tol)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::PotentialModel;

    fn coulomb(d: u32, ell: u32) -> RadialProblem {
        RadialProblem::new(PotentialModel::coulomb(1.0).unwrap(), d, ell).unwrap()
    }

    fn solve_default(p: &RadialProblem, n_r: usize) -> EnergyLevel {
        solve_level(p, n_r, &default_grid(p, n_r).unwrap(), 1e-10).unwrap()
    }

    #[test]
    fn hydrogen_ground_state() {
        let e = solve_default(&coulomb(3, 0), 0);
        assert!((e.energy + 0.5).abs() < 1e-6, "{}", e.energy);
        assert_eq!(e.nodes, 0);
    }

    #[test]
    fn two_dimensional_ground_state() {
        let e = solve_default(&coulomb(2, 0), 0);
        assert!((e.energy + 2.0).abs() < 1e-5, "{}", e.energy);
    }

    #[test]
    fn oscillator_p_wave() {
        let p = RadialProblem::new(PotentialModel::oscillator(1.0).unwrap(), 3, 1).unwrap();
        let e = solve_default(&p, 0);
        assert!((e.energy - 2.5).abs() < 1e-6, "{}", e.energy);
    }

    #[test]
    fn full_line_oscillator_ladder() {
        let p = RadialProblem::one_dimensional(PotentialModel::oscillator(1.0).unwrap()).unwrap();
        for n in 0..5 {
            let e = solve_default(&p, n);
            assert!((e.energy - (n as f64 + 0.5)).abs() < 1e-8, "n={n} E={}", e.energy);
            assert_eq!(e.nodes, n);
        }
    }

    #[test]
    fn box_and_half_oscillator() {
        let b = RadialProblem::one_dimensional(PotentialModel::square_box(std::f64::consts::PI).unwrap()).unwrap();
        for n in 0..4 {
            let e = solve_default(&b, n);
            let exact = 0.5 * ((n + 1) * (n + 1)) as f64;
            assert!((e.energy - exact).abs() < 1e-8 * exact, "n={n} E={}", e.energy);
        }
        let h = RadialProblem::one_dimensional(PotentialModel::half_oscillator(1.0).unwrap()).unwrap();
        for n in 0..4 {
            let e = solve_default(&h, n);
            assert!((e.energy - (2.0 * n as f64 + 1.5)).abs() < 1e-8, "n={n} E={}", e.energy);
        }
    }

    #[test]
    fn wavefunction_is_normalized() {
        let p = coulomb(3, 1);
        let grid = default_grid(&p, 2).unwrap();
        let (_, wf) = solve_level_with_wavefunction(&p, 2, &grid, 1e-10).unwrap();
        assert!((wf.norm_squared() - 1.0).abs() < 1e-8);
        let mut buf = Vec::new();
        wf.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("R,u\n"));
        assert_eq!(text.lines().count(), grid.points() + 1);
    }

    #[test]
    fn grid_too_small() {
        let p = coulomb(3, 0);
        let grid = Grid::radial(3.0, 2000).unwrap();
        assert!(matches!(solve_level(&p, 2, &grid, 1e-8), Err(Error::GridTooSmall { .. }) | Err(Error::NoBracket { .. })));
        let grid = Grid::radial(12.0, 2000).unwrap();
        assert!(matches!(solve_level(&p, 1, &grid, 1e-8), Err(Error::GridTooSmall { .. })));
    }

    #[test]
    fn no_bracket_above_continuum() {
        let p = coulomb(3, 0);
        let grid = Grid::radial(20.0, 2000).unwrap();
        assert!(matches!(solve_level(&p, 30, &grid, 1e-8), Err(Error::NoBracket { .. })));
    }

    #[test]
    fn grid_must_match_walls() {
        let b = RadialProblem::one_dimensional(PotentialModel::square_box(2.0).unwrap()).unwrap();
        assert!(solve_level(&b, 0, &Grid::radial(3.0, 1000).unwrap(), 1e-8).is_err());
        assert!(solve_level(&b, 0, &Grid::new(0.5, 2.0, 1000).unwrap(), 1e-8).is_err());
    }
}
