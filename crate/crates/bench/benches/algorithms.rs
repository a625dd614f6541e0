use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use imagebin_bench::{ifa_pair, k_ambiguous, model_check_input};
use imagebin_core::ifa::{ifa_to_dfa, is_image_binary};
use imagebin_core::mod2::{lfsr_period, shift_register_rank_report, LfsrSpec};
use imagebin_core::{equivalent, kdis, minimize, model_check};
use std::hint::black_box;

fn equivalence(c: &mut Criterion) {
    let mut g = c.benchmark_group("equivalence");
    for n in [4, 8, 16] {
        let (a, b) = ifa_pair(1, n);
        g.bench_with_input(BenchmarkId::new("equivalent", n), &n, |bench, _| {
            bench.iter(|| equivalent(black_box(&a), black_box(&b)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("minimize", n), &n, |bench, _| {
            bench.iter(|| minimize(black_box(&a)))
        });
        g.bench_with_input(BenchmarkId::new("is_image_binary", n), &n, |bench, _| {
            bench.iter(|| is_image_binary(black_box(&a)))
        });
    }
    g.finish();
}

fn dfa_extraction(c: &mut Criterion) {
    let mut g = c.benchmark_group("ifa_to_dfa");
    for n in [4, 8] {
        let (a, _) = ifa_pair(7, n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| ifa_to_dfa(black_box(&a)).unwrap())
        });
    }
    g.finish();
}

fn shift_registers(c: &mut Criterion) {
    let spec = LfsrSpec::parse(5, "00101", "10000").unwrap();
    assert_eq!(lfsr_period(&spec), 31);
    c.bench_function("lfsr_report_d5", |bench| {
        bench.iter(|| shift_register_rank_report(black_box(&spec)).unwrap())
    });
}

fn disambiguation(c: &mut Criterion) {
    let mut g = c.benchmark_group("kdis");
    g.sample_size(20);
    for k in [1usize, 2, 3] {
        let a = k_ambiguous(3, k, 3);
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |bench, &k| {
            bench.iter(|| kdis(black_box(&a), k as u32).unwrap())
        });
    }
    g.finish();
}

fn model_checking(c: &mut Criterion) {
    let mut g = c.benchmark_group("model_check");
    g.sample_size(20);
    for k in [1usize, 2] {
        let (iba, m) = model_check_input(5, k, 3, 4);
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |bench, _| {
            bench.iter(|| model_check(black_box(&iba), black_box(&m)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    equivalence,
    dfa_extraction,
    shift_registers,
    disambiguation,
    model_checking
);
criterion_main!(benches);
