use criterion::{black_box, criterion_group, criterion_main, Criterion};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cvec::{
    build_ladder_set, concurrence_vector_mixed, concurrence_vector_pure, entropy_report,
    DensityMatrix, PureState,
};

fn random_state(rng: &mut ChaCha8Rng, da: usize, db: usize) -> PureState {
    let m = DMatrix::from_fn(da, db, |_, _| {
        Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
    });
    PureState::normalized(m).unwrap()
}

fn random_density(rng: &mut ChaCha8Rng, da: usize, db: usize) -> DensityMatrix {
    let d = da * db;
    let g = DMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
    });
    let m = &g * g.adjoint();
    let tr: f64 = (0..d).map(|i| m[(i, i)].re).sum();
    DensityMatrix::new(da, db, m / Complex64::new(tr, 0.0)).unwrap()
}

fn bench_pure(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (da, db) in [(3, 3), (4, 4), (6, 6)] {
        let ps = random_state(&mut rng, da, db);
        c.bench_function(&format!("pure_concurrence_{da}x{db}"), |b| {
            b.iter(|| concurrence_vector_pure(black_box(&ps)).unwrap().norm_sq())
        });
    }
}

fn bench_mixed(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (da, db) in [(2, 2), (3, 3)] {
        let rho = random_density(&mut rng, da, db);
        c.bench_function(&format!("mixed_concurrence_{da}x{db}"), |b| {
            b.iter(|| concurrence_vector_mixed(black_box(&rho)).unwrap().norm())
        });
    }
}

fn bench_entropy(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ps = random_state(&mut rng, 3, 3);
    c.bench_function("entropy_report_3x3", |b| {
        b.iter(|| entropy_report(black_box(&ps)).unwrap().von_neumann)
    });
}

fn bench_ladder_set(c: &mut Criterion) {
    for n in [3, 6, 8] {
        c.bench_function(&format!("build_ladder_set_{n}"), |b| {
            b.iter(|| build_ladder_set(black_box(n)).unwrap())
        });
    }
}

criterion_group!(benches, bench_pure, bench_mixed, bench_entropy, bench_ladder_set);
criterion_main!(benches);
