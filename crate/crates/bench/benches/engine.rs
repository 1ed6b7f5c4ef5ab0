use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gkzrank::ehrhart::EhrhartData;
use gkzrank::linalg::smith_normal_form;
use gkzrank::rank::{bound_sweep, RankEngine};
use gkzrank::semigroup::Parameter;
use gkzrank::IntMatrix;
use gkzrank_bench::{lawrence, pyramid, tetrahedron_vol9};

fn smith(c: &mut Criterion) {
    let m = IntMatrix::from_rows(&[vec![6, 4, 10, 3], vec![2, 8, 14, 9], vec![12, 0, 6, 15]]);
    c.bench_function("smith 3x4", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn ehrhart(c: &mut Criterion) {
    let hull = tetrahedron_vol9().hull_with_origin();
    c.bench_function("ehrhart vol 9", |b| b.iter(|| EhrhartData::compute(black_box(&hull)).unwrap()));
}

fn rank(c: &mut Criterion) {
    let cfg = pyramid();
    c.bench_function("engine setup", |b| b.iter(|| RankEngine::new(black_box(&cfg))));
    let engine = RankEngine::new(&cfg);
    let beta: Parameter = "1 2 0".parse().unwrap();
    c.bench_function("rank at jump", |b| b.iter(|| engine.rank(black_box(&beta))));
    let generic: Parameter = "1/7 2/11 3/13".parse().unwrap();
    c.bench_function("rank generic", |b| b.iter(|| engine.rank(black_box(&generic))));
}

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    let engine = RankEngine::new(&lawrence([1, 1, 2]));
    g.bench_function("lawrence w4", |b| b.iter(|| bound_sweep(&engine, black_box(4))));
    g.finish();
}

criterion_group!(benches, smith, ehrhart, rank, sweep);
criterion_main!(benches);
