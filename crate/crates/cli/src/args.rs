use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "radspec", version, about = "Bound-state spectra of radial problems in D dimensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Energy levels from one engine.
    Spectrum(SpectrumArgs),
    /// Bohr-Sommerfeld levels with turning points and Maslov constant.
    Wkb(WkbArgs),
    /// Coulomb bound states as zeros of 1/Γ(ℓ + (D-1)/2 - Z/κ).
    Poles(PolesArgs),
    /// Angular node split of Y_ℓ^m, and radial nodes of a solved level.
    Nodes(NodesArgs),
    /// Ground state of -1/(|x|+a) on the full line for a list of cutoffs.
    Scan1d(ScanArgs),
    /// Per-level comparison of all applicable engines.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialName {
    Coulomb,
    Oscillator,
    Box,
    HalfOscillator,
    Regularized,
    Tabulated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Hartree,
    Rydberg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Analytic,
    Numerov,
    Fd,
    Wkb,
    Smatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompareMethod {
    All,
    Analytic,
    Numerov,
    Wkb,
    Smatrix,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Output {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Energy unit of the reported energies.
    #[arg(long, value_enum, default_value = "hartree")]
    pub unit: Unit,
    /// Tolerance: solver accuracy, and the PASS threshold of `compare`.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProblemArgs {
    #[arg(long, value_enum, default_value = "coulomb")]
    pub potential: PotentialName,
    /// Nuclear charge (Coulomb).
    #[arg(long = "Z", default_value_t = 1.0)]
    pub z: f64,
    /// Angular frequency (oscillators).
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Box length.
    #[arg(long = "L", default_value_t = std::f64::consts::PI)]
    pub length: f64,
    /// Cutoff of the regularized 1D Coulomb well.
    #[arg(long = "a", default_value_t = 0.01)]
    pub cutoff: f64,
    /// CSV of (x, V) samples for the tabulated potential.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub wall_left: bool,
    #[arg(long)]
    pub wall_right: bool,
    /// Dimension; defaults to 3 for Coulomb and oscillator, 1 otherwise.
    #[arg(long = "D")]
    pub dimension: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub ell: u32,
    /// Grid point count override.
    #[arg(long)]
    pub points: Option<usize>,
    /// Outer grid edge override (half-width for full-line problems).
    #[arg(long)]
    pub r_max: Option<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 1)]
    pub levels: usize,
    #[arg(long, value_enum, default_value = "numerov")]
    pub method: Method,
    /// Langer-modified centrifugal term for the wkb method.
    #[arg(long)]
    pub langer: bool,
    /// Override of the Maslov constant for the wkb method.
    #[arg(long = "c")]
    pub c_override: Option<f64>,
    /// Write the normalized numerov wavefunction (R,u) as CSV; several
    /// levels get `_n<n_r>` inserted before the extension.
    #[arg(long)]
    pub dump_wavefunction: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WkbArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 1)]
    pub levels: usize,
    #[arg(long)]
    pub langer: bool,
    #[arg(long = "c")]
    pub c_override: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PolesArgs {
    #[arg(long = "Z", default_value_t = 1.0)]
    pub z: f64,
    #[arg(long, default_value_t = 0)]
    pub ell: u32,
    #[arg(long = "D", default_value_t = 3)]
    pub dimension: u32,
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct NodesArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m: i64,
    /// Also solve this level and count the nodes of its wavefunction.
    #[arg(long)]
    pub n_r: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ScanArgs {
    /// Comma-separated cutoffs, strictly descending.
    #[arg(long = "a", value_delimiter = ',', default_value = "0.1,0.01,0.001,0.0001")]
    pub cutoffs: Vec<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CompareArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 1)]
    pub levels: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub method: Vec<CompareMethod>,
    #[arg(long)]
    pub langer: bool,
    #[command(flatten)]
    pub output: Output,
}
