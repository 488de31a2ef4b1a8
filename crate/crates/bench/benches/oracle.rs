use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use darkex_core::oracle::{
    build_sector, diagonalize, validate_band, validate_blocking, Boundary, CouplingMode,
};
use darkex_core::Setup;

fn band(c: &mut Criterion) {
    let lattice = Setup::reference().lattice;
    let mut group = c.benchmark_group("validate_band");
    for n in [3, 5, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| validate_band(black_box(&lattice), n).unwrap())
        });
    }
    group.finish();
}

fn blocking(c: &mut Criterion) {
    let lattice = Setup::reference().lattice;
    let mut group = c.benchmark_group("validate_blocking");
    group.sample_size(10);
    for n in [3, 5, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| validate_blocking(black_box(&lattice), n, 1e-3).unwrap())
        });
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let lattice = Setup::reference().lattice;
    // 91-dimensional two-excitation sector of seven cells.
    let h = build_sector(&lattice, 7, 2, CouplingMode::FullDipole, Boundary::Periodic, 1e-3).unwrap();
    c.bench_function("jacobi_dim_91", |b| b.iter(|| diagonalize(black_box(&h))));
}

criterion_group!(benches, band, blocking, jacobi);
criterion_main!(benches);
