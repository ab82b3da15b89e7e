use std::path::{Path, PathBuf};

use radspec::analytic::{self, EnergyLevel};
use radspec::nodes::{angular_node_counts, count_nodes_xy};
use radspec::numerov::{self, default_grid, Grid};
use radspec::potentials::{Centrifugal, EnergyUnit, PotentialKind, PotentialModel, RadialProblem, Tabulated};
use radspec::semiclassical::{self, TurningKind, WkbOptions};
use radspec::smatrix;
use radspec::{parallel, Execution};
use serde::Serialize;
use serde_json::Value;

use crate::args::*;
use crate::report::{Cell, Report};

#[derive(Debug)]
pub enum Failure {
    /// Invalid flags or parameter combinations: exit status 2.
    Usage(String),
    /// An engine did not deliver: exit status 1.
    Engine(String),
    /// `compare` ran but some level failed the tolerance: exit status 1.
    Mismatch(Box<Report>),
}

type Run<T> = Result<T, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn engine_failure<'a>(engine: &'a str, params: &'a str) -> impl Fn(radspec::Error) -> Failure + 'a {
    move |e| Failure::Engine(format!("{engine} failed for {params}: {e}"))
}

fn config_json(value: &impl Serialize) -> Value {
    serde_json::to_value(value).unwrap_or(Value::Null)
}

pub fn run(command: &Command) -> Run<(Report, Format)> {
    let config = config_json(command);
    match command {
        Command::Spectrum(a) => spectrum(a, config).map(|r| (r, a.output.format)),
        Command::Wkb(a) => wkb(a, config).map(|r| (r, a.output.format)),
        Command::Poles(a) => poles(a, config).map(|r| (r, a.output.format)),
        Command::Nodes(a) => nodes(a, config).map(|r| (r, a.output.format)),
        Command::Scan1d(a) => scan1d(a, config).map(|r| (r, a.output.format)),
        Command::Compare(a) => compare(a, config).map(|r| (r, a.output.format)),
    }
}

fn check_output(o: &Output) -> Run<()> {
    if !(o.tol > 0.0 && o.tol.is_finite()) {
        return Err(usage(format!("--tol must be positive, got {}", o.tol)));
    }
    Ok(())
}

fn unit(o: &Output) -> EnergyUnit {
    match o.unit {
        Unit::Hartree => EnergyUnit::Hartree,
        Unit::Rydberg => EnergyUnit::Rydberg,
    }
}

/// Bisection/shooting tolerance for an energy accuracy target.
fn solver_tol(tol: f64) -> f64 {
    (1e-2 * tol).clamp(1e-12, 1e-6)
}

struct Setup {
    problem: RadialProblem,
    z: Option<f64>,
    describe: String,
}

fn build_problem(a: &ProblemArgs) -> Run<Setup> {
    let model = match a.potential {
        PotentialName::Coulomb => PotentialModel::coulomb(a.z),
        PotentialName::Oscillator => PotentialModel::oscillator(a.omega),
        PotentialName::Box => PotentialModel::square_box(a.length),
        PotentialName::HalfOscillator => PotentialModel::half_oscillator(a.omega),
        PotentialName::Regularized => PotentialModel::regularized_1d_coulomb(a.cutoff),
        PotentialName::Tabulated => {
            let path = a.table.as_ref().ok_or_else(|| usage("--potential tabulated needs --table"))?;
            Tabulated::from_csv_path(path).map(|t| PotentialModel::tabulated(t, a.wall_left, a.wall_right))
        }
    }
    .map_err(usage)?;
    let dimension = a.dimension.unwrap_or(match a.potential {
        PotentialName::Coulomb | PotentialName::Oscillator => 3,
        _ => 1,
    });
    let z = matches!(a.potential, PotentialName::Coulomb).then_some(a.z);
    let describe = format!("{} D={dimension} ell={}", model.name(), a.ell);
    let problem = RadialProblem::new(model, dimension, a.ell).map_err(usage)?;
    Ok(Setup { problem, z, describe })
}

fn grid_for(setup: &Setup, a: &ProblemArgs, n_r: usize) -> Run<Grid> {
    let base = default_grid(&setup.problem, n_r).map_err(usage)?;
    if a.points.is_none() && a.r_max.is_none() {
        return Ok(base);
    }
    let r_max = a.r_max.unwrap_or(base.r_max());
    let r_min = if base.r_min() < 0.0 { -r_max } else { base.r_min() };
    Grid::new(r_min, r_max, a.points.unwrap_or(base.points())).map_err(usage)
}

fn analytic_level(setup: &Setup, n_r: usize) -> Option<radspec::Result<EnergyLevel>> {
    let p = &setup.problem;
    let (d, ell) = (p.dimension(), p.ell());
    let line_like = d == 1 || (d == 3 && ell == 0);
    match *p.potential().kind() {
        PotentialKind::Coulomb { z } => Some(analytic::coulomb_energy(z, n_r, ell, d)),
        PotentialKind::Oscillator { omega } => Some(analytic::oscillator_energy(omega, n_r, ell, d)),
        PotentialKind::Box { length } if line_like => Some(analytic::box_energy(length, n_r)),
        PotentialKind::HalfOscillator { omega } if line_like => Some(analytic::half_oscillator_energy(omega, n_r)),
        _ => None,
    }
}

fn with_suffix(path: &Path, n_r: usize) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_n{n_r}.{}", ext.to_string_lossy()),
        None => format!("{stem}_n{n_r}"),
    };
    path.with_file_name(name)
}

fn spectrum(a: &SpectrumArgs, config: Value) -> Run<Report> {
    check_output(&a.output)?;
    if a.levels == 0 {
        return Err(usage("--levels must be at least 1"));
    }
    let setup = build_problem(&a.problem)?;
    let p = &setup.problem;
    let u = unit(&a.output);
    let n_rs: Vec<usize> = (0..a.levels).collect();
    let levels: Vec<EnergyLevel> = match a.method {
        Method::Analytic => n_rs
            .iter()
            .map(|&n| match analytic_level(&setup, n) {
                Some(r) => r.map_err(usage),
                None => Err(usage(format!("no closed form for {}", setup.describe))),
            })
            .collect::<Run<_>>()?,
        Method::Numerov => {
            let grids = n_rs.iter().map(|&n| grid_for(&setup, &a.problem, n)).collect::<Run<Vec<_>>>()?;
            let tol = solver_tol(a.output.tol);
            let dump = a.dump_wavefunction.as_ref();
            let jobs: Vec<(usize, Grid)> = n_rs.iter().copied().zip(grids).collect();
            let solved = parallel::map(Execution::Parallel, &jobs, |(n, grid)| {
                numerov::solve_level_with_wavefunction(p, *n, grid, tol)
            });
            let mut out = Vec::new();
            for ((n, _), r) in jobs.iter().zip(solved) {
                let params = format!("{} n_r={n}", setup.describe);
                let (level, wf) = r.map_err(engine_failure("numerov", &params))?;
                if let Some(path) = dump {
                    let target = if a.levels == 1 { path.clone() } else { with_suffix(path, *n) };
                    let file = std::fs::File::create(&target)
                        .map_err(|e| Failure::Engine(format!("cannot write {}: {e}", target.display())))?;
                    wf.write_csv(std::io::BufWriter::new(file)).map_err(engine_failure("numerov", &params))?;
                }
                out.push(level);
            }
            out
        }
        Method::Fd => {
            let grid = grid_for(&setup, &a.problem, a.levels - 1)?;
            numerov::fd_oracle_levels(p, a.levels, &grid).map_err(engine_failure("fd-oracle", &setup.describe))?
        }
        Method::Wkb => {
            let opts = WkbOptions { centrifugal: centrifugal(a.langer), c_override: a.c_override };
            n_rs.iter()
                .map(|&n| {
                    semiclassical::quantize(p, n, &opts)
                        .map(|s| s.level)
                        .map_err(engine_failure("wkb", &format!("{} n={n}", setup.describe)))
                })
                .collect::<Run<_>>()?
        }
        Method::Smatrix => {
            let z = setup.z.ok_or_else(|| usage("the smatrix method applies to the Coulomb potential only"))?;
            smatrix::find_poles(z, p.ell(), p.dimension(), a.levels)
                .map_err(engine_failure("smatrix", &setup.describe))?
                .iter()
                .map(|pole| EnergyLevel {
                    n_r: pole.n_r,
                    ell: p.ell(),
                    dimension: p.dimension(),
                    energy: pole.energy(),
                    nodes: pole.n_r,
                    engine: radspec::Engine::SMatrix,
                    tolerance: 1e-12 * pole.energy().abs(),
                })
                .collect()
        }
    };
    let mut report = Report::new(config, vec!["engine", "D", "ell", "n_r", "energy", "tolerance"]);
    for l in &levels {
        report.push(vec![
            l.engine.as_str().into(),
            l.dimension.into(),
            l.ell.into(),
            l.n_r.into(),
            u.from_hartree(l.energy).into(),
            u.from_hartree(l.tolerance).abs().into(),
        ]);
    }
    report.metadata.insert("unit".into(), Value::from(u.symbol()));
    report.metadata.insert("problem".into(), Value::from(setup.describe.clone()));
    report.note(format!("{}; energies in {}", setup.describe, u.symbol()));
    Ok(report)
}

fn centrifugal(langer: bool) -> Centrifugal {
    if langer {
        Centrifugal::Langer
    } else {
        Centrifugal::Exact
    }
}

fn kind_name(k: TurningKind) -> &'static str {
    match k {
        TurningKind::Soft => "soft",
        TurningKind::HardWall => "hard_wall",
    }
}

fn wkb(a: &WkbArgs, config: Value) -> Run<Report> {
    check_output(&a.output)?;
    if a.levels == 0 {
        return Err(usage("--levels must be at least 1"));
    }
    let setup = build_problem(&a.problem)?;
    let u = unit(&a.output);
    let opts = WkbOptions { centrifugal: centrifugal(a.langer), c_override: a.c_override };
    let n_rs: Vec<usize> = (0..a.levels).collect();
    let solved = parallel::map(Execution::Parallel, &n_rs, |&n| semiclassical::quantize(&setup.problem, n, &opts));
    let mut report = Report::new(
        config,
        vec!["n", "energy", "c", "c_auto", "left", "left_kind", "right", "right_kind", "action"],
    );
    for (n, s) in n_rs.iter().zip(solved) {
        let s = s.map_err(engine_failure("wkb", &format!("{} n={n}", setup.describe)))?;
        let (l, r) = s.turning_points;
        report.push(vec![
            (*n).into(),
            u.from_hartree(s.level.energy).into(),
            s.c_used.into(),
            s.maslov.c.into(),
            l.position.into(),
            kind_name(l.kind).into(),
            r.position.into(),
            kind_name(r.kind).into(),
            s.action.into(),
        ]);
    }
    report.metadata.insert("unit".into(), Value::from(u.symbol()));
    report.metadata.insert("centrifugal".into(), Value::from(if a.langer { "langer" } else { "exact" }));
    report.note(format!("{}; energies in {}; action in units of h = 2π", setup.describe, u.symbol()));
    Ok(report)
}

fn poles(a: &PolesArgs, config: Value) -> Run<Report> {
    check_output(&a.output)?;
    let u = unit(&a.output);
    let found = smatrix::find_poles(a.z, a.ell, a.dimension, a.count).map_err(usage)?;
    let mut report = Report::new(config, vec!["n_r", "nu", "kappa", "energy", "residual"]);
    for p in &found {
        report.push(vec![
            p.n_r.into(),
            p.nu.into(),
            p.kappa.into(),
            u.from_hartree(p.energy()).into(),
            p.residual.into(),
        ]);
    }
    let nu_min = a.ell as f64 + (a.dimension as f64 - 1.0) / 2.0;
    let mut absent = Vec::new();
    let mut k = 1.0;
    while k < nu_min {
        if !smatrix::has_pole_at(a.z, a.ell, a.dimension, k).map_err(usage)? {
            absent.push(k);
        }
        k += 1.0;
    }
    for nu in &absent {
        report.note(format!(
            "no pole at nu={nu}: 1/Gamma(ell + (D-1)/2 - nu) is nonzero there; the series for ell={} in D={} starts at nu={nu_min}",
            a.ell, a.dimension
        ));
    }
    report.metadata.insert("first_nu".into(), Value::from(nu_min));
    report.metadata.insert("absent_integer_nu".into(), Value::from(absent));
    report.metadata.insert("unit".into(), Value::from(u.symbol()));
    Ok(report)
}

fn nodes(a: &NodesArgs, config: Value) -> Run<Report> {
    check_output(&a.output)?;
    let angular = angular_node_counts(a.problem.ell, a.m).map_err(usage)?;
    let mut report = Report::new(config, vec!["ell", "m", "theta_nodes", "phi_nodes", "angular_total", "n_r", "radial_nodes"]);
    let (n_r, radial) = match a.n_r {
        Some(n) => {
            let setup = build_problem(&a.problem)?;
            let grid = grid_for(&setup, &a.problem, n)?;
            let params = format!("{} n_r={n}", setup.describe);
            let (_, wf) = numerov::solve_level_with_wavefunction(&setup.problem, n, &grid, solver_tol(a.output.tol))
                .map_err(engine_failure("numerov", &params))?;
            let counted = count_nodes_xy(&wf.positions, &wf.values).map_err(engine_failure("nodes", &params))?;
            (Cell::from(n), Cell::from(counted.total))
        }
        None => (Cell::Missing, Cell::Missing),
    };
    report.push(vec![
        a.problem.ell.into(),
        Cell::Int(a.m),
        angular.theta.into(),
        angular.phi.into(),
        angular.total().into(),
        n_r,
        radial,
    ]);
    Ok(report)
}

fn scan1d(a: &ScanArgs, config: Value) -> Run<Report> {
    check_output(&a.output)?;
    let u = unit(&a.output);
    let points = numerov::scan_regularized_1d(&a.cutoffs, solver_tol(a.output.tol), Execution::Parallel)
        .map_err(|e| match e {
            radspec::Error::Domain(_) | radspec::Error::GridResolution { .. } => usage(e),
            other => Failure::Engine(format!("numerov failed for the regularized 1D scan: {other}")),
        })?;
    let mut report = Report::new(config, vec!["a", "energy", "binding", "spacing", "points"]);
    for p in &points {
        report.push(vec![
            p.cutoff.into(),
            u.from_hartree(p.level.energy).into(),
            u.from_hartree(p.binding()).into(),
            p.grid.spacing().into(),
            p.grid.points().into(),
        ]);
    }
    report.note("even-parity ground state of V = -1/(|x|+a); binding grows without bound as a shrinks");
    report.metadata.insert("unit".into(), Value::from(u.symbol()));
    Ok(report)
}

struct EngineColumn {
    name: &'static str,
    values: Vec<Option<f64>>,
    skipped: Option<String>,
}

fn compare(a: &CompareArgs, config: Value) -> Run<Report> {
    check_output(&a.output)?;
    if a.levels == 0 {
        return Err(usage("--levels must be at least 1"));
    }
    let setup = build_problem(&a.problem)?;
    let p = &setup.problem;
    let u = unit(&a.output);
    let wants = |m: CompareMethod| a.method.contains(&CompareMethod::All) || a.method.contains(&m);
    let n_rs: Vec<usize> = (0..a.levels).collect();
    let tol = solver_tol(a.output.tol);
    let mut columns = Vec::new();

    if wants(CompareMethod::Analytic) {
        let mut col = EngineColumn { name: "analytic", values: Vec::new(), skipped: None };
        if analytic_level(&setup, 0).is_some() {
            for &n in &n_rs {
                let level = analytic_level(&setup, n).expect("closed form exists");
                col.values.push(Some(level.map_err(usage)?.energy));
            }
        } else {
            col.skipped = Some(format!("no closed form for {}", setup.describe));
            col.values = vec![None; n_rs.len()];
        }
        columns.push(col);
    }
    if wants(CompareMethod::Numerov) {
        let grids = n_rs.iter().map(|&n| grid_for(&setup, &a.problem, n)).collect::<Run<Vec<_>>>()?;
        let jobs: Vec<(usize, Grid)> = n_rs.iter().copied().zip(grids).collect();
        let solved = parallel::map(Execution::Parallel, &jobs, |(n, g)| numerov::solve_level(p, *n, g, tol));
        let mut col = EngineColumn { name: "numerov", values: Vec::new(), skipped: None };
        for ((n, _), r) in jobs.iter().zip(solved) {
            let level = r.map_err(engine_failure("numerov", &format!("{} n_r={n}", setup.describe)))?;
            col.values.push(Some(level.energy));
        }
        columns.push(col);
    }
    if wants(CompareMethod::Wkb) {
        let opts = WkbOptions { centrifugal: centrifugal(a.langer), c_override: None };
        let solved = parallel::map(Execution::Parallel, &n_rs, |&n| semiclassical::quantize(p, n, &opts));
        let mut col = EngineColumn { name: "wkb", values: Vec::new(), skipped: None };
        for (n, r) in n_rs.iter().zip(solved) {
            match r {
                Ok(s) => col.values.push(Some(s.level.energy)),
                Err(radspec::Error::Topology(why)) => {
                    col.skipped = Some(why);
                    col.values = vec![None; n_rs.len()];
                    break;
                }
                Err(e) => return Err(engine_failure("wkb", &format!("{} n={n}", setup.describe))(e)),
            }
        }
        columns.push(col);
    }
    if wants(CompareMethod::Smatrix) {
        let mut col = EngineColumn { name: "smatrix", values: Vec::new(), skipped: None };
        match setup.z {
            Some(z) => {
                let found = smatrix::find_poles(z, p.ell(), p.dimension(), a.levels)
                    .map_err(engine_failure("smatrix", &setup.describe))?;
                col.values = found.iter().map(|pole| Some(pole.energy())).collect();
            }
            None => {
                col.skipped = Some("S-matrix poles apply to the Coulomb potential only".into());
                col.values = vec![None; n_rs.len()];
            }
        }
        columns.push(col);
    }

    let reference = columns
        .iter()
        .find(|c| c.name == "analytic" && c.skipped.is_none())
        .or_else(|| columns.iter().find(|c| c.name == "numerov"))
        .map(|c| c.name)
        .ok_or_else(|| usage("compare needs the analytic or numerov engine as reference"))?;

    let mut header = vec!["n_r"];
    for c in &columns {
        header.push(c.name);
    }
    for c in &columns {
        header.push(match c.name {
            "analytic" => "dev_analytic",
            "numerov" => "dev_numerov",
            "wkb" => "dev_wkb",
            _ => "dev_smatrix",
        });
    }
    header.extend(["max_dev", "status"]);
    let mut report = Report::new(config, header);
    let ref_col = columns.iter().find(|c| c.name == reference).expect("reference column");
    let mut all_pass = true;
    for (i, &n) in n_rs.iter().enumerate() {
        let r = ref_col.values[i].expect("reference value");
        let mut row: Vec<Cell> = vec![n.into()];
        row.extend(columns.iter().map(|c| Cell::from(c.values[i].map(|e| u.from_hartree(e)))));
        let devs: Vec<Option<f64>> =
            columns.iter().map(|c| c.values[i].map(|e| (e - r).abs() / r.abs().max(f64::MIN_POSITIVE))).collect();
        let max_dev = devs.iter().flatten().fold(0.0f64, |m, &d| m.max(d));
        let pass = max_dev <= a.output.tol;
        all_pass &= pass;
        row.extend(devs.into_iter().map(Cell::from));
        row.push(max_dev.into());
        row.push(if pass { "PASS" } else { "FAIL" }.into());
        report.push(row);
    }
    report.metadata.insert("reference".into(), Value::from(reference));
    report.metadata.insert("tolerance".into(), Value::from(a.output.tol));
    report.metadata.insert("unit".into(), Value::from(u.symbol()));
    let mut skipped = serde_json::Map::new();
    for c in &columns {
        if let Some(why) = &c.skipped {
            skipped.insert(c.name.into(), Value::from(why.clone()));
            report.note(format!("{} N/A: {why}", c.name));
        }
    }
    report.metadata.insert("not_applicable".into(), Value::Object(skipped));
    report.note(format!(
        "{}; deviations relative to {reference}; PASS if every deviation <= {:e}",
        setup.describe, a.output.tol
    ));
    if all_pass {
        Ok(report)
    } else {
        Err(Failure::Mismatch(Box::new(report)))
    }
}
