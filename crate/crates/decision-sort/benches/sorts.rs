use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::rngs::StdRng;
use rand::SeedableRng;

use decision_sort::baselines::{instrumented_bubble, instrumented_quick};
use decision_sort::{decision_sort_unique, parallel_decision_sort, KeyDomain};

fn distinct_keys(n: usize, k: usize, seed: u64) -> Vec<i64> {
    let mut rng = StdRng::seed_from_u64(seed);
    rand::seq::index::sample(&mut rng, k, n)
        .into_iter()
        .map(|index| index as i64)
        .collect()
}

/// Sequential decision sort against the instrumented baselines and the
/// standard library sort, at k = 4n.
fn bench_sequential(c: &mut Criterion) {
    let mut group = c.benchmark_group("sequential");
    for n in [1_000usize, 100_000] {
        let k = 4 * n;
        let keys = distinct_keys(n, k, 7);
        let domain = KeyDomain::from_bounds(0, k as i64 - 1).unwrap();
        group.throughput(Throughput::Elements(n as u64));

        group.bench_with_input(BenchmarkId::new("decision", n), &keys, |b, keys| {
            b.iter(|| decision_sort_unique(keys, &domain).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("quick", n), &keys, |b, keys| {
            b.iter(|| instrumented_quick(keys))
        });
        group.bench_with_input(BenchmarkId::new("std_unstable", n), &keys, |b, keys| {
            b.iter(|| {
                let mut copy = keys.clone();
                copy.sort_unstable();
                copy
            })
        });
        if n <= 1_000 {
            group.bench_with_input(BenchmarkId::new("bubble", n), &keys, |b, keys| {
                b.iter(|| instrumented_bubble(keys))
            });
        }
    }
    group.finish();
}

/// Worker-count sweep of the parallel formulation against the sequential
/// sort on the same input. Built with `--no-default-features` the same
/// benchmark exercises the sequential fallback executor instead of rayon.
fn bench_parallel(c: &mut Criterion) {
    let mut group = c.benchmark_group("parallel");
    let n = 1_000_000usize;
    let k = 4 * n;
    let keys = distinct_keys(n, k, 7);
    let domain = KeyDomain::from_bounds(0, k as i64 - 1).unwrap();
    group.throughput(Throughput::Elements(n as u64));
    group.sample_size(20);

    group.bench_function("sequential", |b| {
        b.iter(|| decision_sort_unique(&keys, &domain).unwrap())
    });
    for workers in [1usize, 2, 4, 8] {
        group.bench_with_input(
            BenchmarkId::new("workers", workers),
            &workers,
            |b, &workers| b.iter(|| parallel_decision_sort(&keys, &domain, workers).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_sequential, bench_parallel);
criterion_main!(benches);
