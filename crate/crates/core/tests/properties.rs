//! Cross-module invariants checked with randomized inputs.

use darkex_core::bogolon::{bogolon_steady_state, coefficients, reconstruct_dark_amplitudes};
use darkex_core::lattice::{exciton_levels, SuperLatticeConfig};
use darkex_core::oracle::{build_sector, diagonalize, diagonalize_matrix, Boundary, CouplingMode};
use darkex_core::preset::reference_drive;
use darkex_core::{Complex64, PumpMode, Setup};
use proptest::prelude::*;

fn lattice(theta_deg: f64) -> SuperLatticeConfig {
    SuperLatticeConfig::new(1.5, 1000.0, 100.0, 2.5, theta_deg.to_radians(), 3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bogoliubov_reconstruction_matches_steady_state(
        occupation in 0.05f64..3.0,
        stretch in 1e-3f64..9.0,
        f in -1.0f64..1.0,
    ) {
        let setup = Setup::reference();
        let mut drive = reference_drive(&setup).unwrap();
        let pp = setup.pump_probe(drive.k_pump).unwrap();
        let v = pp.params.delta_tilde * occupation;
        drive.pump_mode = PumpMode::Prescribed { occupation };
        drive.gamma_a = 0.0;
        drive.probe_plus = Complex64::new(f, 0.0);
        drive.energy = pp.dark_level + 2.0 * v - v * (1.0 + stretch);
        let ss = pp.steady_state(&drive).unwrap();
        let c = coefficients(ss.dark_energy, ss.coupling, drive.energy).unwrap();
        let (cp, cm) = bogolon_steady_state(&c, drive.probe_plus).unwrap();
        let (bp, bm) = reconstruct_dark_amplitudes(&c, cp, cm);
        prop_assert!((bp - ss.dark_plus).norm() <= 1e-10 * ss.dark_plus.norm().max(1e-300));
        prop_assert!((bm - ss.dark_minus).norm() <= 1e-10 * ss.dark_minus.norm().max(1e-300));
    }

    #[test]
    fn damped_steady_state_solves_the_linear_system(
        offset in -4e-4f64..6e-4,
        gamma in 1e-9f64..1e-5,
        re_p in -1.0f64..1.0, im_p in -1.0f64..1.0,
        re_m in -1.0f64..1.0, im_m in -1.0f64..1.0,
    ) {
        let setup = Setup::reference();
        let mut drive = reference_drive(&setup).unwrap();
        let pp = setup.pump_probe(drive.k_pump).unwrap();
        drive.gamma_a = gamma;
        drive.energy = pp.dark_level + offset;
        drive.probe_plus = Complex64::new(re_p, im_p);
        drive.probe_minus = Complex64::new(re_m, im_m);
        let Ok(ss) = pp.steady_state(&drive) else { return Ok(()) };
        // Residual of the stationary equations, built from the energy offset
        // so that no 1.5 eV terms cancel.
        let frame = Complex64::new(2.0 * pp.params.delta_tilde * ss.occupation - offset, -gamma);
        let w = pp.params.delta_tilde * ss.pump_amplitude * ss.pump_amplitude;
        let r_plus = frame * ss.dark_plus + w * ss.dark_minus.conj() + drive.probe_plus;
        let r_minus = frame * ss.dark_minus + w * ss.dark_plus.conj() + drive.probe_minus;
        let scale = drive.probe_intensity().sqrt();
        prop_assert!(r_plus.norm() <= 1e-8 * scale, "{r_plus}");
        prop_assert!(r_minus.norm() <= 1e-8 * scale, "{r_minus}");
    }

    #[test]
    fn oracle_spectrum_is_invariant_under_cell_relabeling(shift in 1usize..5, theta in 0.0f64..90.0) {
        let cfg = lattice(theta);
        let n = 5;
        let h = build_sector(&cfg, n, 1, CouplingMode::FullDipole, Boundary::Periodic, 0.0).unwrap();
        let dim = h.dim();
        // Cyclic relabeling of cells permutes the single-excitation basis.
        let perm: Vec<usize> = (0..dim).map(|i| (i + 2 * shift) % dim).collect();
        let mut permuted = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                permuted[perm[i] * dim + perm[j]] = h.get(i, j);
            }
        }
        let a = diagonalize(&h).values;
        let b = diagonalize_matrix(&permuted, dim).values;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-12 * 1.5);
        }
    }

    #[test]
    fn oracle_trace_and_residuals(theta in 0.0f64..90.0, n_exc in 0usize..=2, v_dyn in 0.0f64..2e-3) {
        let cfg = lattice(theta);
        let h = build_sector(&cfg, 4, n_exc, CouplingMode::NearestNeighbor, Boundary::Open, v_dyn).unwrap();
        let eig = diagonalize(&h);
        let dim = h.dim();
        prop_assert!((eig.values.iter().sum::<f64>() - h.trace()).abs() <= 1e-10 * 1.5 * dim as f64);
        for k in 0..dim {
            prop_assert!(eig.residual(&h.matrix, k) <= 1e-10 * 1.5);
        }
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn halving_occupation_halves_splitting() {
    let setup = Setup::reference();
    let mut drive = reference_drive(&setup).unwrap();
    let pp = setup.pump_probe(drive.k_pump).unwrap();
    let split = |n: f64, drive: &mut darkex_core::DriveConfig| {
        drive.pump_mode = PumpMode::Prescribed { occupation: n };
        let (hi, lo) = pp.steady_state(drive).unwrap().resonances.unwrap();
        hi - lo
    };
    let full = split(1.0, &mut drive);
    let half = split(0.5, &mut drive);
    assert!((half / full - 0.5).abs() < 1e-6);
}

#[test]
fn open_chain_edge_effects_shrink_with_length() {
    // Compare the lowest single-excitation level of open and periodic chains.
    let cfg = lattice(20.0);
    let j = exciton_levels(&cfg).intercell.abs();
    let mut last = f64::INFINITY;
    for n in [3, 5, 9, 17] {
        let lowest = |b| {
            let h = build_sector(&cfg, n, 1, CouplingMode::NearestNeighbor, b, 0.0).unwrap();
            diagonalize(&h).values[0]
        };
        let gap = (lowest(Boundary::Open) - lowest(Boundary::Periodic)).abs() / j;
        assert!(gap < last, "n = {n}: {gap}");
        last = gap;
    }
    assert!(last < 0.1);
}
