use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use glsuper::acceptance;
use glsuper::par::Mode;
use glsuper::partitions;

const MODES: [(&str, Mode); 2] = [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)];

fn cauchy(c: &mut Criterion) {
    let mut g = c.benchmark_group("cauchy");
    for n in [4usize, 6] {
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| partitions::cauchy_check_with(black_box(n), mode))
            });
        }
    }
    g.finish();
}

fn vv_star(c: &mut Criterion) {
    let mut g = c.benchmark_group("vv_star_flag");
    for n in [5usize, 7] {
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| partitions::vv_star_flag_with(black_box(n), mode))
            });
        }
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("acceptance");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| b.iter(|| acceptance::run_all(mode)));
    }
    g.finish();
}

criterion_group!(benches, cauchy, vv_star, suite);
criterion_main!(benches);
