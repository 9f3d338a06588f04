use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dwbc_core::closedform::{gen_1, h_refined_1};
use dwbc_core::inhomog::zhat_poly;
use dwbc_core::numerics::{h2_hankel_all, moments_quadrature, z_hankel, WeightParams};
use dwbc_core::orthopoly::{check_difference_eq, z_ice};
use dwbc_core::{asm, oracle};

fn exact(c: &mut Criterion) {
    c.bench_function("asm count N=6", |b| b.iter(|| asm::count(black_box(6))));
    c.bench_function("h_refined_1 N=40", |b| b.iter(|| h_refined_1(black_box(40)).unwrap()));
    c.bench_function("gen_1 N=20", |b| b.iter(|| gen_1(black_box(20)).unwrap()));
    c.bench_function("z_ice N=8", |b| b.iter(|| z_ice(black_box(8)).unwrap()));
    c.bench_function("difference equation N=10", |b| b.iter(|| check_difference_eq(black_box(10)).unwrap()));
    let h: Vec<_> = (1..=5).map(|n| gen_1(n).unwrap()).collect();
    c.bench_function("zhat_poly N=5 k=3", |b| b.iter(|| zhat_poly(5, black_box(3), &h).unwrap()));
    let x = oracle::XPoint::from_int(2);
    oracle::correlators(6, &x).unwrap();
    c.bench_function("correlators N=6 cached census", |b| b.iter(|| oracle::correlators(6, black_box(&x)).unwrap()));
}

fn numeric(c: &mut Criterion) {
    let mut g = c.benchmark_group("numeric");
    g.sample_size(10);
    let p = WeightParams::ice(50);
    g.bench_function("moments 15 at 50 digits", |b| b.iter(|| moments_quadrature(black_box(15), &p).unwrap()));
    g.bench_function("z_hankel N=8", |b| b.iter(|| z_hankel(black_box(8), &p).unwrap()));
    g.bench_function("h2_hankel N=4", |b| b.iter(|| h2_hankel_all(black_box(4), &p).unwrap()));
    g.finish();
}

criterion_group!(benches, exact, numeric);
criterion_main!(benches);
