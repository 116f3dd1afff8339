//! Sequential vs. parallel timings for the chromatic search and the
//! coloring counter. `workers = Some(1)` takes the sequential code path;
//! `workers = None` uses the global rayon pool (a no-op split without the
//! `parallel` feature).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use chromatica::{
    chromatic_number, count_colorings_with, cyclic_polytope, random_complex, SearchConfig,
    SimplicialComplex,
};

fn cfg(workers: Option<usize>) -> SearchConfig {
    SearchConfig {
        workers,
        ..SearchConfig::default()
    }
}

fn inputs() -> Vec<(&'static str, SimplicialComplex, usize)> {
    vec![
        ("cp_9_4", cyclic_polytope(9, 4).unwrap(), 1),
        ("cp_10_5", cyclic_polytope(10, 5).unwrap(), 2),
        ("random_12", random_complex(12, 0.8, 11), 1),
    ]
}

fn bench_chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_number");
    for (name, k, s) in inputs() {
        for (mode, workers) in [("seq", Some(1)), ("par", None)] {
            group.bench_with_input(BenchmarkId::new(mode, name), &k, |b, k| {
                b.iter(|| chromatic_number(k, s, &cfg(workers)).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_colorings");
    let k = cyclic_polytope(9, 4).unwrap();
    for (mode, workers) in [("seq", Some(1)), ("par", None)] {
        group.bench_with_input(BenchmarkId::new(mode, "cp_9_4_r4_s2"), &k, |b, k| {
            b.iter(|| count_colorings_with(k, 4, 2, false, &cfg(workers)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_chromatic, bench_count);
criterion_main!(benches);
