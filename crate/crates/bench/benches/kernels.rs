use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ptosc_core::spectral::{discretize_h, eigenvalues_tridiag, Grid1D};
use ptosc_core::{bch_series, gram_matrix, Complex, EigenState, PtSystem, QuadratureRule};

fn eigenfunctions(c: &mut Criterion) {
    let sys = PtSystem::new(0.2).unwrap();
    let st = EigenState::new(10).unwrap();
    let x = Complex::new(1.3, -0.4);
    c.bench_function("phi n=10", |b| b.iter(|| sys.phi(&st, black_box(x)).unwrap()));
    c.bench_function("phi_jet n=10", |b| b.iter(|| sys.phi_jet(&st, black_box(x)).unwrap()));
    c.bench_function("apply_h n=10", |b| {
        b.iter(|| sys.apply_h(|y| sys.phi_jet(&st, y), black_box(x)).unwrap())
    });
}

fn gram(c: &mut Criterion) {
    let sys = PtSystem::new(0.25).unwrap();
    let mut group = c.benchmark_group("gram_matrix");
    group.sample_size(20);
    for n_max in [6, 12] {
        let rule = QuadratureRule::for_states(n_max);
        group.bench_function(format!("n_max={n_max}"), |b| {
            b.iter(|| gram_matrix(&sys, black_box(n_max), &rule).unwrap())
        });
    }
    group.finish();
}

fn algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("bch_series");
    group.sample_size(10);
    for order in [6, 12] {
        group.bench_function(format!("order={order}"), |b| {
            b.iter(|| bch_series(black_box(order)).unwrap())
        });
    }
    group.finish();
}

fn spectrum(c: &mut Criterion) {
    let grid = Grid1D::new(10.0, 2001).unwrap();
    let m = discretize_h(&grid);
    let mut group = c.benchmark_group("eigenvalues_tridiag");
    group.sample_size(10);
    group.bench_function("N=2001 k=7", |b| {
        b.iter(|| eigenvalues_tridiag(black_box(&m), 7).unwrap())
    });
    group.finish();
}

criterion_group!(benches, eigenfunctions, gram, algebra, spectrum);
criterion_main!(benches);
