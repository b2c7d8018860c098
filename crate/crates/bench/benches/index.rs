use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use abc_core::abc::{abc_index, WeightTable};
use abc_core::enumerate::enumerate_trees;
use abc_core::greedy::build_greedy_tree;
use abc_core::DegreeSequence;

fn index(c: &mut Criterion) {
    let trees: Vec<_> = enumerate_trees(14).unwrap().collect();
    c.bench_function("abc_index_n14_all", |b| {
        b.iter(|| trees.iter().map(abc_index).sum::<f64>())
    });

    let parents: Vec<Vec<u8>> = trees
        .iter()
        .map(|t| t.to_parent_array().iter().map(|&p| p as u8).collect())
        .collect();
    let table = WeightTable::new(14);
    c.bench_function("weight_table_n14_all", |b| {
        let mut deg = Vec::new();
        b.iter(|| parents.iter().map(|p| table.index_of_parents(p, &mut deg)).sum::<f64>())
    });
}

fn greedy(c: &mut Criterion) {
    let mut values = vec![5, 5, 4, 4, 4, 3, 3, 3, 3];
    let leaves = 2 + values.iter().map(|d| d - 2).sum::<usize>();
    values.resize(values.len() + leaves, 1);
    let d = DegreeSequence::new(values).unwrap();
    c.bench_function("greedy_tree", |b| b.iter(|| build_greedy_tree(black_box(&d)).unwrap()));
}

criterion_group!(benches, index, greedy);
criterion_main!(benches);
