use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use abc_core::enumerate::{canonical_code, enumerate_trees, FreeTreeGenerator};
use abc_core::verify::{find_minimal_abc_trees_with, SearchConfig};

fn generator(c: &mut Criterion) {
    let mut group = c.benchmark_group("free_tree_generator");
    for n in [12usize, 16, 18] {
        let count = enumerate_trees(n).unwrap().count() as u64;
        group.throughput(Throughput::Elements(count));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                let mut g = FreeTreeGenerator::new(n);
                let mut k = 0u64;
                while g.advance() {
                    k += 1;
                }
                black_box(k)
            })
        });
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let trees: Vec<_> = enumerate_trees(14).unwrap().collect();
    c.bench_function("canonical_code_n14_all", |b| {
        b.iter(|| trees.iter().map(canonical_code).count())
    });
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimizer_search");
    group.sample_size(10);
    for parallel in [false, true] {
        let cfg = SearchConfig {
            parallel,
            ..SearchConfig::default()
        };
        let label = if parallel { "parallel" } else { "sequential" };
        group.bench_function(BenchmarkId::new(label, 18), |b| {
            b.iter(|| find_minimal_abc_trees_with(black_box(18), &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, generator, canonical, search);
criterion_main!(benches);
