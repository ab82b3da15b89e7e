//! Bohr-Sommerfeld quantization `∮ p dx = (n + c) h`.
//!
//! The constant `c` is picked from the kinds of the two turning points:
//! every soft turning point contributes a quarter-period phase π/4, a hard
//! wall contributes none, so `c = 1 - (soft count)/4`.

mod quadrature;

use std::f64::consts::PI;

use crate::analytic::{Engine, EnergyLevel};
use crate::error::{Error, Result};
use crate::potentials::{Centrifugal, Edge, RadialProblem, Units};
use crate::roots;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TurningKind {
    Soft,
    HardWall,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningPoint {
    pub position: f64,
    pub kind: TurningKind,
}

/// Additive constant of the quantization condition and what fixed it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaslovConstant {
    pub c: f64,
    pub provenance: (TurningKind, TurningKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WkbOptions {
    pub centrifugal: Centrifugal,
    /// Replaces the automatically selected constant.
    pub c_override: Option<f64>,
}

/// A quantized level with the data that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct WkbSolution {
    pub level: EnergyLevel,
    pub maslov: MaslovConstant,
    /// Constant actually used; differs from `maslov.c` under an override.
    pub c_used: f64,
    pub turning_points: (TurningPoint, TurningPoint),
    pub action: f64,
}

const SCAN_SAMPLES: usize = 4001;
const POSITION_TOL: f64 = 1e-13;

pub fn select_maslov(left: TurningPoint, right: TurningPoint) -> MaslovConstant {
    let soft = [left.kind, right.kind].iter().filter(|k| **k == TurningKind::Soft).count();
    MaslovConstant { c: 1.0 - 0.25 * soft as f64, provenance: (left.kind, right.kind) }
}

struct Landscape<'a> {
    problem: &'a RadialProblem,
    mode: Centrifugal,
}

impl Landscape<'_> {
    fn v(&self, x: f64) -> Result<f64> {
        self.problem.reduced_potential(x, self.mode)
    }

    /// Finite coordinate bounding the open side(s) of the domain: grows until
    /// `V` is rising there and, when given, above `level`.
    fn open_extent(&self, level: Option<f64>) -> Result<f64> {
        let (left, _) = self.problem.edges();
        let left_open = left == Edge::Open;
        let beyond = |x: f64| -> Result<bool> {
            let v = self.v(x)?;
            Ok(v > self.v(0.5 * x)? && level.is_none_or(|e| v > e))
        };
        let mut x = 1.0f64;
        for _ in 0..1100 {
            if beyond(x)? && (!left_open || beyond(-x)?) {
                return Ok(x);
            }
            x *= 2.0;
        }
        Err(Error::Topology("potential never rises above the energy: state is unbound".into()))
    }

    /// Sample positions for the domain; log-spaced near a radial origin.
    fn samples(&self, level: Option<f64>) -> Result<Vec<f64>> {
        let (left, right) = self.problem.edges();
        let needs_extent = matches!(left, Edge::Open) || matches!(right, Edge::Open);
        let extent = if needs_extent { self.open_extent(level)? } else { 0.0 };
        let b = match right {
            Edge::Wall(w) | Edge::TableEnd(w) => w,
            Edge::Open => extent,
            Edge::Origin => unreachable!(),
        };
        let n = SCAN_SAMPLES;
        let uniform = |a: f64| (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect();
        Ok(match left {
            Edge::Wall(w) | Edge::TableEnd(w) => uniform(w),
            Edge::Open => uniform(-extent),
            Edge::Origin => {
                let lo = (b * 1e-12).ln();
                let hi = b.ln();
                (0..n).map(|i| (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp()).collect()
            }
        })
    }

    fn turning_points(&self, e: f64) -> Result<Option<(TurningPoint, TurningPoint)>> {
        let (left, right) = self.problem.edges();
        let xs = self.samples(Some(e))?;
        let g: Vec<f64> = xs.iter().map(|&x| self.v(x).map(|v| e - v)).collect::<Result<_>>()?;
        let allowed: Vec<bool> = g.iter().map(|&d| d > 0.0).collect();
        let Some(first) = allowed.iter().position(|&a| a) else { return Ok(None) };
        let last = allowed.iter().rposition(|&a| a).expect("first exists");
        if allowed[first..=last].iter().any(|&a| !a) {
            return Err(Error::Topology(format!(
                "several classically allowed intervals at E = {e}; multi-well potentials are not quantized"
            )));
        }
        let refine = |i: usize| -> Result<f64> {
            roots::brent(|x| self.v(x).map(|v| e - v), xs[i - 1], xs[i], POSITION_TOL * xs[i].abs().max(1.0), 200)
        };
        let left_tp = if first == 0 {
            match left {
                Edge::Wall(w) => TurningPoint { position: w, kind: TurningKind::HardWall },
                Edge::Origin => {
                    return Err(Error::Topology(
                        "classically allowed region reaches the radial origin; a Langer-corrected \
                         centrifugal term gives a soft inner turning point"
                            .into(),
                    ))
                }
                _ => {
                    return Err(Error::Topology(format!(
                        "classically allowed region reaches the left end of the domain at E = {e}"
                    )))
                }
            }
        } else {
            TurningPoint { position: refine(first)?, kind: TurningKind::Soft }
        };
        let right_tp = if last == xs.len() - 1 {
            match right {
                Edge::Wall(w) => TurningPoint { position: w, kind: TurningKind::HardWall },
                _ => {
                    return Err(Error::Topology(format!(
                        "classically allowed region reaches the right end of the domain at E = {e}"
                    )))
                }
            }
        } else {
            TurningPoint { position: refine(last + 1)?, kind: TurningKind::Soft }
        };
        Ok(Some((left_tp, right_tp)))
    }

    fn floor(&self) -> Result<f64> {
        let xs = self.samples(None)?;
        let mut lowest = f64::INFINITY;
        for x in xs {
            lowest = lowest.min(self.v(x)?);
        }
        Ok(lowest)
    }

    fn momentum(&self, x: f64, e: f64, scale: f64) -> Result<f64> {
        let d = e - self.v(x)?;
        if d < -1e-9 * scale {
            return Err(Error::Topology(format!(
                "negative kinetic energy {d} at x = {x} inside the allowed region"
            )));
        }
        Ok((2.0 * d.max(0.0)).sqrt())
    }

    fn action(&self, e: f64, tps: (TurningPoint, TurningPoint)) -> Result<f64> {
        let (l, r) = tps;
        let scale = e.abs().max(1.0);
        let mut failure = None;
        let mut p = |x: f64| match self.momentum(x, e, scale) {
            Ok(v) => v,
            Err(err) => {
                failure.get_or_insert(err);
                0.0
            }
        };
        const TOL: f64 = 1e-15;
        let half_pi = 0.5 * PI;
        let integral = match (l.kind, r.kind) {
            (TurningKind::Soft, TurningKind::Soft) => {
                let w = r.position - l.position;
                quadrature::adaptive(
                    |t| p(l.position + w * t.sin().powi(2)) * w * (2.0 * t).sin(),
                    0.0,
                    half_pi,
                    TOL,
                )
                .0
            }
            (TurningKind::HardWall, TurningKind::HardWall) => {
                quadrature::adaptive(&mut p, l.position, r.position, TOL).0
            }
            (TurningKind::HardWall, TurningKind::Soft) => {
                let m = 0.5 * (l.position + r.position);
                let w = r.position - m;
                let hard = quadrature::adaptive(&mut p, l.position, m, TOL).0;
                let soft = quadrature::adaptive(
                    |t| p(r.position - w * t.sin().powi(2)) * w * (2.0 * t).sin(),
                    0.0,
                    half_pi,
                    TOL,
                )
                .0;
                hard + soft
            }
            (TurningKind::Soft, TurningKind::HardWall) => {
                let m = 0.5 * (l.position + r.position);
                let w = m - l.position;
                let soft = quadrature::adaptive(
                    |t| p(l.position + w * t.sin().powi(2)) * w * (2.0 * t).sin(),
                    0.0,
                    half_pi,
                    TOL,
                )
                .0;
                let hard = quadrature::adaptive(&mut p, m, r.position, TOL).0;
                soft + hard
            }
        };
        match failure {
            Some(err) => Err(err),
            None => Ok(2.0 * integral),
        }
    }
}

fn no_region(e: f64) -> Error {
    Error::Topology(format!("no classically allowed region at E = {e}"))
}

/// Left and right turning points at energy `e`.
pub fn find_turning_points(problem: &RadialProblem, e: f64) -> Result<(TurningPoint, TurningPoint)> {
    find_turning_points_with(problem, e, Centrifugal::Exact)
}

pub fn find_turning_points_with(
    problem: &RadialProblem,
    e: f64,
    mode: Centrifugal,
) -> Result<(TurningPoint, TurningPoint)> {
    Landscape { problem, mode }.turning_points(e)?.ok_or_else(|| no_region(e))
}

/// `∮ p dx = 2 ∫ sqrt(2(E - V_eff)) dx` between the turning points.
pub fn action_integral(problem: &RadialProblem, e: f64) -> Result<f64> {
    action_integral_with(problem, e, Centrifugal::Exact)
}

pub fn action_integral_with(problem: &RadialProblem, e: f64, mode: Centrifugal) -> Result<f64> {
    let land = Landscape { problem, mode };
    let tps = land.turning_points(e)?.ok_or_else(|| no_region(e))?;
    land.action(e, tps)
}

/// Level `n` from the quantization condition, with `c` chosen from the
/// turning points unless overridden.
pub fn quantize_bs(problem: &RadialProblem, n: usize, c_override: Option<f64>) -> Result<EnergyLevel> {
    quantize(problem, n, &WkbOptions { c_override, ..WkbOptions::default() }).map(|s| s.level)
}

pub fn quantize(problem: &RadialProblem, n: usize, options: &WkbOptions) -> Result<WkbSolution> {
    let land = Landscape { problem, mode: options.centrifugal };
    let h = Units::PLANCK;
    let target_for = |kinds: MaslovConstant| (n as f64 + options.c_override.unwrap_or(kinds.c)) * h;

    let lo = land.floor()?;
    if !lo.is_finite() {
        return Err(Error::Topology("potential is unbounded below".into()));
    }
    let plateau = problem.potential().asymptote();
    if let Some(p) = plateau {
        if p <= lo {
            return Err(Error::Topology("no well below the asymptotic plateau".into()));
        }
    }
    let span = lo.abs().max(1.0);
    let mut hi = None;
    for k in 1..=200 {
        let e = match plateau {
            Some(p) => p - (p - lo) * 0.5f64.powi(k),
            None => lo + span * 2f64.powi(k - 1),
        };
        if let Some(tps) = land.turning_points(e)? {
            let phi = land.action(e, tps)?;
            let maslov = select_maslov(tps.0, tps.1);
            if phi > target_for(maslov) {
                hi = Some((e, maslov));
                break;
            }
        }
    }
    let Some((hi, maslov)) = hi else {
        return Err(Error::NoBracket { n_r: n, lo, hi: plateau.unwrap_or(f64::INFINITY) });
    };
    let target = target_for(maslov);
    let residual = |e: f64| -> Result<f64> {
        match land.turning_points(e)? {
            Some(tps) => Ok(land.action(e, tps)? - target),
            None => Ok(-target),
        }
    };
    let f_hi = residual(hi)?;
    let energy = roots::brent_known(
        residual,
        lo,
        -target,
        hi,
        f_hi,
        1e-15 * hi.abs().max(lo.abs()).max(1e-300),
        300,
    )?;
    let tps = land.turning_points(energy)?.ok_or_else(|| no_region(energy))?;
    let at_root = select_maslov(tps.0, tps.1);
    if at_root.provenance != maslov.provenance {
        return Err(Error::Topology("turning-point kinds change across the energy bracket".into()));
    }
    let action = land.action(energy, tps)?;
    if (action - target).abs() >= 1e-9 * target.max(1.0) {
        return Err(Error::NonConvergence {
            iterations: 300,
            context: format!("action {action} misses target {target}"),
        });
    }
    let c_used = options.c_override.unwrap_or(maslov.c);
    Ok(WkbSolution {
        level: EnergyLevel {
            n_r: n,
            ell: problem.ell(),
            dimension: problem.dimension(),
            energy,
            nodes: n,
            engine: Engine::Wkb,
            tolerance: 1e-12 * energy.abs().max(1e-12),
        },
        maslov,
        c_used,
        turning_points: tps,
        action,
    })
}
