use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use darkex_core::datasets::{dispersion, linspace};
use darkex_core::preset::reference_drive;
use darkex_core::{PumpMode, Setup};

fn probe_spectrum(c: &mut Criterion) {
    let setup = Setup::reference();
    let drive = reference_drive(&setup).unwrap();
    let pp = setup.pump_probe(drive.k_pump).unwrap();
    let energies: Vec<f64> = linspace(-1e-4, 4e-4, 10_000)
        .unwrap()
        .into_iter()
        .map(|x| pp.dark_level + x)
        .collect();
    c.bench_function("spectrum_prescribed_1e4", |b| {
        b.iter(|| pp.spectrum(black_box(&drive), black_box(&energies)).unwrap())
    });

    let mut scf = drive;
    scf.pump_mode = PumpMode::SelfConsistent;
    scf.pump = darkex_core::Complex64::new(1e-9, 0.0);
    scf.energy = pp.mode.lower_energy - 1e-6;
    c.bench_function("pump_occupation_self_consistent", |b| {
        b.iter(|| pp.pump_occupation(black_box(&scf)).unwrap())
    });
}

fn hopfield_sweep(c: &mut Criterion) {
    let setup = Setup::reference();
    let ks = linspace(0.0, 6e-5, 601).unwrap();
    c.bench_function("dispersion_601", |b| {
        b.iter(|| dispersion(black_box(&setup), black_box(&ks)).unwrap())
    });
    c.bench_function("dark_resonance_k", |b| {
        b.iter(|| black_box(&setup).dark_resonance_k().unwrap())
    });
}

fn evolve(c: &mut Criterion) {
    let setup = Setup::reference();
    let mut drive = reference_drive(&setup).unwrap();
    drive.gamma_a = 1e-6;
    let pp = setup.pump_probe(drive.k_pump).unwrap();
    let dt = 0.5 * pp.max_stable_step(&drive).unwrap();
    c.bench_function("time_evolve_1e4_steps", |b| {
        b.iter(|| pp.time_evolve(black_box(&drive), 1e4 * dt, dt, 11).unwrap())
    });
}

criterion_group!(benches, probe_spectrum, hopfield_sweep, evolve);
criterion_main!(benches);
