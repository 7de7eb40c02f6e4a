use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use binsum_core::sieve::SpfSieve;
use binsum_core::{certify, s_direct, s_lemma};

fn bench_sum_evaluators(c: &mut Criterion) {
    let mut group = c.benchmark_group("sum_evaluators");
    for &(n, r) in &[(100u64, 5u64), (500, 5), (2000, 5), (100, 100), (500, 200)] {
        group.bench_with_input(BenchmarkId::new("direct", format!("n{n}_r{r}")), &(n, r), |b, &(n, r)| {
            b.iter(|| s_direct(n, r).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("lemma", format!("n{n}_r{r}")), &(n, r), |b, &(n, r)| {
            b.iter(|| s_lemma(n, r).unwrap())
        });
    }
    group.finish();
}

fn bench_certify(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify");
    for &(n, r) in &[(300u64, 3u64), (50, 120), (40, 30)] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_r{r}")), &(n, r), |b, &(n, r)| {
            b.iter(|| certify(n, r).unwrap())
        });
    }
    group.finish();
}

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("spf_sieve_1e6", |b| b.iter(|| SpfSieve::new(1_000_000)));
}

criterion_group!(benches, bench_sum_evaluators, bench_certify, bench_sieve);
criterion_main!(benches);
