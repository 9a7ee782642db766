use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use squarewell::functionals::{energy_quadrature, wirtinger_margin, wirtinger_ratio};
use squarewell::minimize::{minimize_rayleigh, MinimizerConfig, Start};
use squarewell::spectral::{project_exp, sine_to_exp};
use squarewell::trials;
use squarewell::{PhysicalParams, SineSeries};

fn bench_minimize(c: &mut Criterion) {
    let params = PhysicalParams::natural();
    let config = MinimizerConfig::default();
    c.bench_function("minimize_default_k16", |b| {
        b.iter(|| minimize_rayleigh(black_box(Start::Random(params)), &config).unwrap())
    });
}

fn bench_sampling(c: &mut Criterion) {
    let params = PhysicalParams::natural();
    let series = trials::generate(0, 0, &params, 5)
        .unwrap()
        .series()
        .unwrap()
        .resized(16)
        .unwrap();
    c.bench_function("sample_n1001_k16", |b| {
        b.iter(|| black_box(&series).sample(1001).unwrap())
    });
}

fn bench_projection(c: &mut Criterion) {
    let params = PhysicalParams::natural();
    let psi = SineSeries::pure_mode(1, 1, params)
        .unwrap()
        .sample(1001)
        .unwrap();
    c.bench_function("project_exp_n1001_k16", |b| {
        b.iter(|| project_exp(black_box(&psi), 16).unwrap())
    });
    c.bench_function("energy_quadrature_n1001", |b| {
        b.iter(|| energy_quadrature(black_box(&psi)).unwrap())
    });
}

fn bench_wirtinger_trial(c: &mut Criterion) {
    let params = PhysicalParams::natural();
    c.bench_function("wirtinger_trial_n1001", |b| {
        let mut index = 0u64;
        b.iter(|| {
            let trial = trials::generate(0, index, &params, 1001).unwrap();
            index += 1;
            let ratio = wirtinger_ratio(trial.sampled()).unwrap();
            let margin = match trial.series() {
                Some(series) => wirtinger_margin(&sine_to_exp(series)),
                None => wirtinger_margin(&project_exp(trial.sampled(), 16).unwrap()),
            };
            black_box((ratio, margin))
        })
    });
}

criterion_group!(
    benches,
    bench_minimize,
    bench_sampling,
    bench_projection,
    bench_wirtinger_trial
);
criterion_main!(benches);
