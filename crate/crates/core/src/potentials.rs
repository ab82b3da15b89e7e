//! Potential models and the reduced one-dimensional radial problem.
//!
//! Everything is in Hartree atomic units (ħ = m = e = a₀ = 1). In `D`
//! dimensions the substitution `u(R) = R^{(D-1)/2} ψ(R)` turns the radial
//! equation into `-u''/2 + V_eff u = E u` with
//!
//! ```text
//! V_eff(R) = V(R) + λ(λ+1) / (2R²),   λ = ℓ + (D-3)/2.
//! ```

use std::f64::consts::PI;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

/// Hartree atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Units;

impl Units {
    pub const HBAR: f64 = 1.0;
    pub const MASS: f64 = 1.0;
    pub const BOHR_RADIUS: f64 = 1.0;
    /// Planck's constant `h = 2πħ`; the Bohr-Sommerfeld condition is written with `h`.
    pub const PLANCK: f64 = 2.0 * PI;
    pub const RYDBERG_PER_HARTREE: f64 = 2.0;
}

/// Display unit for energies. Internal values are always Hartree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnergyUnit {
    #[default]
    Hartree,
    Rydberg,
}

impl EnergyUnit {
    pub fn from_hartree(self, energy: f64) -> f64 {
        match self {
            EnergyUnit::Hartree => energy,
            EnergyUnit::Rydberg => energy * Units::RYDBERG_PER_HARTREE,
        }
    }

    pub fn to_hartree(self, energy: f64) -> f64 {
        match self {
            EnergyUnit::Hartree => energy,
            EnergyUnit::Rydberg => energy / Units::RYDBERG_PER_HARTREE,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            EnergyUnit::Hartree => "Ha",
            EnergyUnit::Rydberg => "Ry",
        }
    }
}

/// Piecewise-cubic Hermite interpolant with Fritsch-Carlson slopes, so the
/// interpolant never overshoots the samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

pub const MIN_TABULATED_SAMPLES: usize = 8;

impl Tabulated {
    pub fn new(samples: &[(f64, f64)]) -> Result<Self> {
        if samples.len() < MIN_TABULATED_SAMPLES {
            return Err(Error::Domain(format!(
                "tabulated potential needs at least {MIN_TABULATED_SAMPLES} samples, got {}",
                samples.len()
            )));
        }
        if samples.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(Error::Domain("tabulated samples must be finite".into()));
        }
        if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::Domain(
                "tabulated positions must be strictly increasing".into(),
            ));
        }
        let xs: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let ys: Vec<f64> = samples.iter().map(|s| s.1).collect();
        let slopes = pchip_slopes(&xs, &ys);
        Ok(Self { xs, ys, slopes })
    }

    /// Reads a two-column `position,value` CSV. A non-numeric first row is
    /// treated as a header.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut samples = Vec::new();
        for (row, record) in rdr.records().enumerate() {
            let record = record?;
            if record.len() < 2 {
                return Err(Error::Parse(format!("row {}: expected two columns", row + 1)));
            }
            let x = record[0].parse::<f64>();
            let y = record[1].parse::<f64>();
            match (x, y) {
                (Ok(x), Ok(y)) => samples.push((x, y)),
                _ if row == 0 => continue,
                _ => {
                    return Err(Error::Parse(format!(
                        "row {}: cannot parse '{}', '{}' as numbers",
                        row + 1,
                        &record[0],
                        &record[1]
                    )))
                }
            }
        }
        Self::new(&samples)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(file)
    }

    pub fn range(&self) -> (f64, f64) {
        (self.xs[0], self.xs[self.xs.len() - 1])
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.range();
        if !(lo..=hi).contains(&x) {
            return Err(Error::OutOfRange { position: x, lo, hi });
        }
        let k = self.xs.partition_point(|&xi| xi <= x).clamp(1, self.xs.len() - 1) - 1;
        let h = self.xs[k + 1] - self.xs[k];
        let t = (x - self.xs[k]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        Ok(h00 * self.ys[k]
            + h10 * h * self.slopes[k]
            + h01 * self.ys[k + 1]
            + h11 * h * self.slopes[k + 1])
    }
}

fn pchip_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|k| (ys[k + 1] - ys[k]) / h[k]).collect();
    let mut d = vec![0.0; n];
    for k in 1..n - 1 {
        if delta[k - 1] * delta[k] > 0.0 {
            let w1 = 2.0 * h[k] + h[k - 1];
            let w2 = h[k] + 2.0 * h[k - 1];
            d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    d[0] = pchip_end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = pchip_end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

// Non-centered three-point end slope, clipped to keep the end interval monotone.
fn pchip_end_slope(h0: f64, h1: f64, del0: f64, del1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if d.signum() != del0.signum() {
        0.0
    } else if del0.signum() != del1.signum() && d.abs() > 3.0 * del0.abs() {
        3.0 * del0
    } else {
        d
    }
}

/// Shape of `V(x)` independent of wall metadata.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialKind {
    /// `-Z/R` in every dimension.
    Coulomb { z: f64 },
    /// `ω² R² / 2`.
    Oscillator { omega: f64 },
    /// Zero on `[0, L]`, infinite outside.
    Box { length: f64 },
    /// `ω² x² / 2` for `x > 0`, infinite for `x <= 0`.
    HalfOscillator { omega: f64 },
    /// `-1/(|x| + a)` on the full line.
    Regularized1DCoulomb { cutoff: f64 },
    Tabulated(Tabulated),
}

/// A potential together with its declared hard walls.
///
/// Walls are metadata: they are never inferred from the steepness of `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialModel {
    kind: PotentialKind,
    wall_left: bool,
    wall_right: bool,
}

/// What bounds the domain on one side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edge {
    /// Declared infinite wall at the given coordinate.
    Wall(f64),
    /// Regular radial origin `R = 0` (no wall; the solution behaves as `R^{λ+1}`).
    Origin,
    /// Unbounded; the wavefunction decays.
    Open,
    /// End of a tabulated range with no wall declared.
    TableEnd(f64),
}

impl Edge {
    pub fn is_wall(self) -> bool {
        matches!(self, Edge::Wall(_))
    }
}

fn positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{name} must be a positive finite number, got {value}")))
    }
}

impl PotentialModel {
    pub fn coulomb(z: f64) -> Result<Self> {
        Ok(Self::free(PotentialKind::Coulomb { z: positive("Z", z)? }))
    }

    pub fn oscillator(omega: f64) -> Result<Self> {
        Ok(Self::free(PotentialKind::Oscillator { omega: positive("omega", omega)? }))
    }

    pub fn square_box(length: f64) -> Result<Self> {
        Ok(Self {
            kind: PotentialKind::Box { length: positive("L", length)? },
            wall_left: true,
            wall_right: true,
        })
    }

    pub fn half_oscillator(omega: f64) -> Result<Self> {
        Ok(Self {
            kind: PotentialKind::HalfOscillator { omega: positive("omega", omega)? },
            wall_left: true,
            wall_right: false,
        })
    }

    pub fn regularized_1d_coulomb(cutoff: f64) -> Result<Self> {
        Ok(Self::free(PotentialKind::Regularized1DCoulomb {
            cutoff: positive("a", cutoff)?,
        }))
    }

    /// Tabulated potential; walls, when declared, sit at the first/last sample.
    pub fn tabulated(table: Tabulated, wall_left: bool, wall_right: bool) -> Self {
        Self { kind: PotentialKind::Tabulated(table), wall_left, wall_right }
    }

    fn free(kind: PotentialKind) -> Self {
        Self { kind, wall_left: false, wall_right: false }
    }

    pub fn kind(&self) -> &PotentialKind {
        &self.kind
    }

    pub fn wall_left(&self) -> bool {
        self.wall_left
    }

    pub fn wall_right(&self) -> bool {
        self.wall_right
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            PotentialKind::Coulomb { .. } => "coulomb",
            PotentialKind::Oscillator { .. } => "oscillator",
            PotentialKind::Box { .. } => "box",
            PotentialKind::HalfOscillator { .. } => "half-oscillator",
            PotentialKind::Regularized1DCoulomb { .. } => "regularized-1d-coulomb",
            PotentialKind::Tabulated(_) => "tabulated",
        }
    }

    pub fn is_coulomb(&self) -> bool {
        matches!(self.kind, PotentialKind::Coulomb { .. })
    }

    /// Bare potential `V(x)`. Points behind a wall evaluate to `+∞`.
    pub fn value(&self, x: f64) -> Result<f64> {
        match &self.kind {
            PotentialKind::Coulomb { z } => {
                if x > 0.0 {
                    Ok(-z / x)
                } else {
                    Err(Error::Domain(format!("Coulomb potential needs R > 0, got {x}")))
                }
            }
            PotentialKind::Oscillator { omega } => Ok(0.5 * omega * omega * x * x),
            PotentialKind::Box { length } => {
                Ok(if (0.0..=*length).contains(&x) { 0.0 } else { f64::INFINITY })
            }
            PotentialKind::HalfOscillator { omega } => {
                Ok(if x >= 0.0 { 0.5 * omega * omega * x * x } else { f64::INFINITY })
            }
            PotentialKind::Regularized1DCoulomb { cutoff } => Ok(-1.0 / (x.abs() + cutoff)),
            PotentialKind::Tabulated(t) => t.eval(x),
        }
    }

    /// Laurent coefficients `(c₋₁, c₀, c₁, c₂)` of `V` just right of `x = 0`,
    /// for models whose domain starts at the origin. Used to seed the
    /// regular solution by its Frobenius series.
    pub fn origin_series(&self) -> Option<[f64; 4]> {
        match self.kind {
            PotentialKind::Coulomb { z } => Some([-z, 0.0, 0.0, 0.0]),
            PotentialKind::Oscillator { omega } | PotentialKind::HalfOscillator { omega } => {
                Some([0.0, 0.0, 0.0, 0.5 * omega * omega])
            }
            PotentialKind::Box { .. } => Some([0.0; 4]),
            _ => None,
        }
    }

    /// Limit of `V` at the open end(s) of the domain, if any. Bound states
    /// must lie below it.
    pub fn asymptote(&self) -> Option<f64> {
        match &self.kind {
            PotentialKind::Coulomb { .. } | PotentialKind::Regularized1DCoulomb { .. } => Some(0.0),
            PotentialKind::Oscillator { .. }
            | PotentialKind::Box { .. }
            | PotentialKind::HalfOscillator { .. } => None,
            PotentialKind::Tabulated(t) => {
                let (first, last) = (t.ys[0], t.ys[t.ys.len() - 1]);
                match (self.wall_left, self.wall_right) {
                    (true, true) => None,
                    (true, false) => Some(last),
                    (false, true) => Some(first),
                    (false, false) => Some(first.min(last)),
                }
            }
        }
    }

    /// Domain edges for a problem in `dimension` dimensions.
    pub fn edges(&self, dimension: u32) -> Result<(Edge, Edge)> {
        let radial = dimension >= 2;
        match &self.kind {
            PotentialKind::Coulomb { .. } if radial => Ok((Edge::Origin, Edge::Open)),
            PotentialKind::Coulomb { .. } => Err(Error::Unsupported(
                "the one-dimensional Coulomb problem collapses; use the regularized 1D model"
                    .into(),
            )),
            PotentialKind::Oscillator { .. } if radial => Ok((Edge::Origin, Edge::Open)),
            PotentialKind::Oscillator { .. } => Ok((Edge::Open, Edge::Open)),
            PotentialKind::Box { length } => Ok((Edge::Wall(0.0), Edge::Wall(*length))),
            PotentialKind::HalfOscillator { .. } => Ok((Edge::Wall(0.0), Edge::Open)),
            PotentialKind::Regularized1DCoulomb { .. } if !radial => Ok((Edge::Open, Edge::Open)),
            PotentialKind::Regularized1DCoulomb { .. } => Err(Error::Unsupported(
                "the regularized Coulomb model is defined on the full line (D = 1)".into(),
            )),
            PotentialKind::Tabulated(t) => {
                let (lo, hi) = t.range();
                if radial && lo <= 0.0 {
                    return Err(Error::Domain(format!(
                        "radial tabulated potential must start at R > 0, got {lo}"
                    )));
                }
                let left = if self.wall_left { Edge::Wall(lo) } else { Edge::TableEnd(lo) };
                let right = if self.wall_right { Edge::Wall(hi) } else { Edge::TableEnd(hi) };
                Ok((left, right))
            }
        }
    }
}

/// Centrifugal coefficient used in `V_eff`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Centrifugal {
    /// `λ(λ+1)`.
    #[default]
    Exact,
    /// Langer-modified `(λ + 1/2)²`.
    Langer,
}

/// A potential in `D` dimensions at fixed angular momentum.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProblem {
    potential: PotentialModel,
    dimension: u32,
    ell: u32,
}

impl RadialProblem {
    pub fn new(potential: PotentialModel, dimension: u32, ell: u32) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        if dimension == 1 && ell != 0 {
            return Err(Error::Domain(format!(
                "D = 1 has no angular sector; ell must be 0, got {ell}"
            )));
        }
        potential.edges(dimension)?;
        Ok(Self { potential, dimension, ell })
    }

    /// Full-line (or walled) one-dimensional problem.
    pub fn one_dimensional(potential: PotentialModel) -> Result<Self> {
        Self::new(potential, 1, 0)
    }

    pub fn potential(&self) -> &PotentialModel {
        &self.potential
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Effective angular momentum `λ = ℓ + (D-3)/2`.
    pub fn lambda(&self) -> f64 {
        self.ell as f64 + (self.dimension as f64 - 3.0) / 2.0
    }

    pub fn edges(&self) -> (Edge, Edge) {
        self.potential.edges(self.dimension).expect("validated at construction")
    }

    /// `λ(λ+1)`, evaluated as `ℓ(ℓ+D-2) + (D-1)(D-3)/4`.
    pub fn centrifugal_coefficient(&self) -> f64 {
        if self.dimension == 1 {
            return 0.0;
        }
        let l = self.ell as f64;
        let d = self.dimension as f64;
        let angular = l * (l + d - 2.0);
        let kinematic = (d - 1.0) * (d - 3.0) / 4.0;
        let coef = angular + kinematic;
        let lambda = self.lambda();
        debug_assert!(
            (coef - lambda * (lambda + 1.0)).abs() <= 1e-12 * coef.abs().max(1.0),
            "centrifugal identity violated"
        );
        coef
    }

    pub fn centrifugal(&self, mode: Centrifugal) -> f64 {
        match mode {
            Centrifugal::Exact => self.centrifugal_coefficient(),
            Centrifugal::Langer if self.dimension >= 2 => {
                let shifted = self.lambda() + 0.5;
                shifted * shifted
            }
            Centrifugal::Langer => 0.0,
        }
    }

    /// `V(R) + λ(λ+1)/(2R²)` for `R > 0`.
    pub fn effective_potential(&self, r: f64) -> Result<f64> {
        self.effective_potential_with(r, Centrifugal::Exact)
    }

    pub fn effective_potential_with(&self, r: f64, mode: Centrifugal) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!("effective potential needs R > 0, got {r}")));
        }
        self.reduced_potential(r, mode)
    }

    /// `V_eff` on the problem's own coordinate: full-line problems accept any
    /// `x`, radial problems need `R > 0`.
    pub fn reduced_potential(&self, x: f64, mode: Centrifugal) -> Result<f64> {
        let bare = self.potential.value(x)?;
        if self.dimension == 1 {
            return Ok(bare);
        }
        if !(x > 0.0) {
            return Err(Error::Domain(format!("radial coordinate must be positive, got {x}")));
        }
        Ok(bare + self.centrifugal(mode) / (2.0 * x * x))
    }

    /// Power `λ + 1` of the regular reduced solution `u ~ R^{λ+1}` at the origin.
    pub fn small_r_exponent(&self) -> Result<f64> {
        if self.dimension == 1 {
            return Err(Error::Unsupported(
                "D = 1 is a full-line problem with no radial origin".into(),
            ));
        }
        Ok(self.lambda() + 1.0)
    }

    /// Exponent of the regular solution at a left edge sitting at `x = 0`:
    /// `λ + 1` for radial problems, `1` at a one-dimensional wall.
    pub(crate) fn origin_exponent(&self) -> f64 {
        self.small_r_exponent().unwrap_or(1.0)
    }
}
