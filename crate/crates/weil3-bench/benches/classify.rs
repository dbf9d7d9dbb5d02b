use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use weil3::classify::classify;
use weil3::irreducibility::is_irreducible;
use weil3::oracle::{numeric_weil_check, sturm_weil_check};
use weil3::weilcheck::{enumerate_box, theorem1_check, WeilCandidate};

fn bench_theorem1(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem1_check");
    for q in [2u64, 9, 27] {
        let w = WeilCandidate::new(q, 1, 1, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(q), &w, |b, w| {
            b.iter(|| theorem1_check(std::hint::black_box(w)))
        });
    }
    group.finish();
}

fn bench_oracles(c: &mut Criterion) {
    let w = WeilCandidate::new(9, 2, 3, 5).unwrap();
    c.bench_function("sturm_weil_check q=9", |b| {
        b.iter(|| sturm_weil_check(std::hint::black_box(&w)))
    });
    c.bench_function("numeric_weil_check q=9", |b| {
        b.iter(|| numeric_weil_check(std::hint::black_box(&w), 1e-9))
    });
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for (q, a1, a2, a3) in [(2u64, 1i128, 1i128, 1i128), (9, 3, 9, 27), (8, 6, 36, 104)] {
        let w = WeilCandidate::new(q, a1, a2, a3).unwrap();
        let id = format!("q={q} ({a1},{a2},{a3})");
        group.bench_with_input(BenchmarkId::from_parameter(id), &w, |b, w| {
            b.iter(|| classify(std::hint::black_box(w)))
        });
    }
    group.finish();
}

fn bench_irreducibility(c: &mut Criterion) {
    let w = WeilCandidate::new(27, 4, 11, -30).unwrap();
    c.bench_function("is_irreducible q=27", |b| {
        b.iter(|| is_irreducible(std::hint::black_box(&w)))
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_box");
    group.sample_size(10);
    for q in [2u64, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(q), &q, |b, &q| {
            b.iter(|| enumerate_box(std::hint::black_box(q)).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_theorem1,
    bench_oracles,
    bench_classify,
    bench_irreducibility,
    bench_enumerate
);
criterion_main!(benches);
