use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use weakdiscord_core::{discord_bell_closed, discord_numeric, sqd_numeric, BellDiagonalState};

fn discord(c: &mut Criterion) {
    let s = BellDiagonalState::new(0.3, -0.5, 0.4).unwrap();
    let rho = s.to_density_matrix().unwrap();
    c.bench_function("discord_closed", |b| {
        b.iter(|| discord_bell_closed(black_box(&s)))
    });
    c.bench_function("discord_numeric", |b| {
        b.iter(|| discord_numeric(black_box(&rho)).unwrap())
    });
    c.bench_function("sqd_numeric_x1", |b| {
        b.iter(|| sqd_numeric(black_box(&rho), 1.0).unwrap())
    });
}

criterion_group!(benches, discord);
criterion_main!(benches);
