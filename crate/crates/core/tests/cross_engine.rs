use std::f64::consts::PI;

use proptest::prelude::*;
use radspec::analytic::{box_energy, coulomb_energy, half_oscillator_energy, oscillator_energy};
use radspec::numerov::{default_grid, fd_oracle_levels, scan_regularized_1d, solve_level, solve_levels};
use radspec::potentials::{PotentialModel, RadialProblem};
use radspec::semiclassical::quantize_bs;
use radspec::smatrix::find_poles;
use radspec::Execution;

fn numerov(p: &RadialProblem, n_r: usize) -> radspec::EnergyLevel {
    solve_level(p, n_r, &default_grid(p, n_r).unwrap(), 1e-10).unwrap()
}

#[test]
fn poles_reproduce_the_analytic_ladder() {
    for d in 2..=5 {
        for ell in 0..=3 {
            let poles = find_poles(1.0, ell, d, 5).unwrap();
            for (k, pole) in poles.iter().enumerate() {
                assert_eq!(pole.n_r, k);
                let exact = coulomb_energy(1.0, k, ell, d).unwrap().energy;
                assert!((pole.energy() - exact).abs() <= 1e-10 * exact.abs(), "D={d} ell={ell} k={k}");
                assert!((pole.kappa - 1.0 / pole.nu).abs() <= 1e-10 * pole.kappa);
            }
            for w in poles.windows(2) {
                assert!((w[1].nu - w[0].nu - 1.0).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn two_dimensional_poles_match_numerov() {
    let p = RadialProblem::new(PotentialModel::coulomb(1.0).unwrap(), 2, 0).unwrap();
    let poles = find_poles(1.0, 0, 2, 3).unwrap();
    let expected = [2.0, 2.0 / 3.0, 0.4];
    for (k, pole) in poles.iter().enumerate() {
        assert!((pole.kappa - expected[k]).abs() < 1e-10);
        let shot = numerov(&p, k).energy;
        assert!((shot - pole.energy()).abs() < 1e-5, "k={k}: {shot} vs {}", pole.energy());
    }
}

#[test]
fn numerov_matches_closed_forms() {
    let radial = |m: PotentialModel, d, ell| RadialProblem::new(m, d, ell).unwrap();
    for d in 2..=6 {
        for ell in 0..=2 {
            let c = radial(PotentialModel::coulomb(1.0).unwrap(), d, ell);
            let o = radial(PotentialModel::oscillator(1.0).unwrap(), d, ell);
            for n_r in 0..3 {
                let exact = coulomb_energy(1.0, n_r, ell, d).unwrap().energy;
                let e = numerov(&c, n_r);
                assert!((e.energy - exact).abs() <= 1e-6f64.max(10.0 * e.tolerance), "coulomb D={d} ell={ell}");
                let exact = oscillator_energy(1.0, n_r, ell, d).unwrap().energy;
                let e = numerov(&o, n_r);
                assert!((e.energy - exact).abs() <= 1e-6f64.max(10.0 * e.tolerance), "oscillator D={d} ell={ell}");
            }
        }
    }
}

#[test]
fn numerov_levels_increase_with_n_r() {
    let p = RadialProblem::new(PotentialModel::coulomb(1.0).unwrap(), 3, 1).unwrap();
    let levels: Vec<f64> = solve_levels(&p, &[0, 1, 2, 3, 4], 1e-10, Execution::Parallel)
        .into_iter()
        .map(|l| l.unwrap().energy)
        .collect();
    assert!(levels.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn sequential_and_parallel_agree() {
    let p = RadialProblem::new(PotentialModel::oscillator(1.0).unwrap(), 3, 0).unwrap();
    let n_rs: Vec<usize> = (0..6).collect();
    let a = solve_levels(&p, &n_rs, 1e-10, Execution::Sequential);
    let b = solve_levels(&p, &n_rs, 1e-10, Execution::Parallel);
    assert_eq!(a, b);
}

#[test]
fn wkb_and_numerov_agree_on_exact_models() {
    let line = |m: PotentialModel| RadialProblem::one_dimensional(m).unwrap();
    let models = [
        line(PotentialModel::oscillator(1.0).unwrap()),
        line(PotentialModel::half_oscillator(1.0).unwrap()),
        line(PotentialModel::square_box(PI).unwrap()),
    ];
    for p in &models {
        for n in 0..=10 {
            let wkb = quantize_bs(p, n, None).unwrap();
            let shot = numerov(p, n);
            assert_eq!(shot.nodes, n);
            let bound = wkb.tolerance.max(shot.tolerance);
            assert!(
                (wkb.energy - shot.energy).abs() <= bound,
                "{} n={n}: {} vs {} (bound {bound:e})",
                p.potential().name(),
                wkb.energy,
                shot.energy
            );
        }
    }
    assert_eq!(box_energy(PI, 0).unwrap().energy, 0.5);
    assert_eq!(half_oscillator_energy(1.0, 0).unwrap().energy, 1.5);
}

#[test]
fn shallow_regularized_well() {
    let scan = scan_regularized_1d(&[100.0], 1e-10, Execution::Sequential).unwrap();
    let b = scan[0].binding();
    assert!(b > 0.0 && b < 0.01, "{b}");
}

#[test]
fn regularized_well_matches_fd_oracle() {
    let scan = scan_regularized_1d(&[1e-2], 1e-10, Execution::Sequential).unwrap();
    let point = &scan[0];
    let p = RadialProblem::one_dimensional(PotentialModel::regularized_1d_coulomb(1e-2).unwrap()).unwrap();
    let fd = fd_oracle_levels(&p, 1, &point.grid).unwrap();
    let diff = (fd[0].energy - point.level.energy).abs();
    assert!(diff <= fd[0].tolerance + point.level.tolerance, "{diff:e}");
}

#[test]
fn collapse_sequence_strictly_deepens() {
    let scan = scan_regularized_1d(&[1e-1, 1e-2, 1e-3], 1e-10, Execution::Parallel).unwrap();
    assert!(scan.windows(2).all(|w| w[1].binding() > w[0].binding()));
    assert!(scan.iter().all(|p| p.level.nodes == 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn coulomb_scales_as_z_squared(z in 0.5f64..4.0, d in 2u32..6, ell in 0u32..3) {
        let p = RadialProblem::new(PotentialModel::coulomb(z).unwrap(), d, ell).unwrap();
        let e = numerov(&p, 0).energy;
        let exact = coulomb_energy(1.0, 0, ell, d).unwrap().energy * z * z;
        prop_assert!((e - exact).abs() <= 1e-6 * exact.abs());
    }
}
