use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use primorial_gap::arith::{binomial, log_certified, primorial};
use primorial_gap::primes::count_primes_in_range;
use primorial_gap::{sieve_upto, PrimeEngine};
use std::hint::black_box;

fn sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("sieve_upto");
    for limit in [1_000_000u64, 10_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(limit), &limit, |b, &limit| {
            b.iter(|| sieve_upto(black_box(limit)).unwrap())
        });
    }
    group.finish();
}

fn prime_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("pi_fast");
    group.sample_size(10);
    for x in [1_000_000_000u64, 1_000_000_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(x), &x, |b, &x| {
            // A fresh engine per iteration so the memo does not answer.
            b.iter(|| PrimeEngine::default().pi_fast(black_box(x)).unwrap())
        });
    }
    group.finish();
    c.bench_function("range_count_1e7_window_at_7e12", |b| {
        b.iter(|| count_primes_in_range(black_box(7_420_728_134_810), black_box(7_420_738_134_810)))
    });
}

fn arithmetic(c: &mut Criterion) {
    let engine = PrimeEngine::default();
    engine.nth_prime(100_000).unwrap();
    c.bench_function("primorial_100000", |b| {
        b.iter(|| primorial(&engine, black_box(100_000)).unwrap())
    });
    let big = primorial(&engine, 10_000).unwrap();
    c.bench_function("log_certified_primorial_10000", |b| {
        b.iter(|| log_certified(black_box(&big)).unwrap())
    });
    c.bench_function("binomial_1794sq_1794", |b| {
        b.iter(|| binomial(black_box(1794 * 1794), 1794).unwrap())
    });
}

criterion_group!(benches, sieve, prime_counting, arithmetic);
criterion_main!(benches);
