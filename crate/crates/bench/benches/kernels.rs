use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use primfact_core::brute_force::count_primitive;
use primfact_core::class_algebra::complete_h_on_jm;
use primfact_core::matrix_model::weingarten_gram;
use primfact_core::{Budget, CharacterTable, Permutation};

fn brute(c: &mut Criterion) {
    let pi: Permutation = "(1 2 3 4 5)".parse().unwrap();
    let budget = Budget::default();
    c.bench_function("brute count (12345), k=8", |b| {
        b.iter(|| count_primitive(black_box(&pi), 8, &budget).unwrap())
    });
}

fn jm(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("h_4 on JM elements, n=7", |b| {
        b.iter(|| complete_h_on_jm(black_box(4), 7, &budget).unwrap())
    });
}

fn characters(c: &mut Criterion) {
    c.bench_function("character table, n=8", |b| {
        b.iter(|| CharacterTable::new(black_box(8)))
    });
}

fn gram(c: &mut Criterion) {
    let mut group = c.benchmark_group("weingarten");
    group.sample_size(10);
    group.bench_function("gram n=5 N=5", |b| {
        b.iter(|| weingarten_gram(black_box(5), 5).unwrap())
    });
    group.finish();
}

criterion_group!(benches, brute, jm, characters, gram);
criterion_main!(benches);
