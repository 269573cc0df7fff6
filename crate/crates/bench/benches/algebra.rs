use std::hint::black_box;

use axial_bench::random_pairs;
use axial_core::eigen::{check_fusion, decompose};
use axial_core::quotient::{preset_6a2, preset_highwater};
use axial_core::{mul, Window};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for terms in [4, 16, 64] {
        let pairs = random_pairs(7, 64, 32, terms);
        group.bench_with_input(BenchmarkId::from_parameter(terms), &pairs, |b, pairs| {
            b.iter(|| {
                for (x, y) in pairs {
                    black_box(mul(x, y));
                }
            })
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let pairs = random_pairs(8, 64, 32, 32);
    c.bench_function("decompose", |b| {
        b.iter(|| {
            for (x, _) in &pairs {
                black_box(decompose(x));
            }
        })
    });
}

fn fusion(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_fusion");
    group.sample_size(10);
    for w in [6, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| black_box(check_fusion(w)))
        });
    }
    group.finish();
}

fn closures(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    group.sample_size(10);
    for w in [12, 24] {
        let window = Window::new(w).unwrap();
        group.bench_with_input(BenchmarkId::new("6a2", w), &window, |b, &window| {
            b.iter(|| black_box(preset_6a2(window).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("highwater", w), &window, |b, &window| {
            b.iter(|| black_box(preset_highwater(window).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, products, decomposition, fusion, closures);
criterion_main!(benches);
