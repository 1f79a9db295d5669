//! Sequential versus rayon-backed runs of the data-parallel workloads.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orbitcount::bruteforce::brute_counts;
use orbitcount::counts::build_table;
use orbitcount::extremal::{case_report, check_e_logconcavity, ex_bruteforce_all};
use orbitcount::scan::table_log_concavity;
use orbitcount::Runner;

fn runners() -> Vec<(&'static str, Runner)> {
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    vec![
        ("sequential", Runner::sequential()),
        ("parallel", Runner::new(threads).unwrap()),
    ]
}

fn table(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_table_p2_n150");
    group.sample_size(10);
    for (name, runner) in runners() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| build_table(2, black_box(150), &runner).unwrap())
        });
    }
    group.finish();
}

fn table_scan(c: &mut Criterion) {
    let t = build_table(2, 150, &Runner::sequential()).unwrap();
    let mut group = c.benchmark_group("logconcavity_p2_n150");
    group.sample_size(10);
    for (name, runner) in runners() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| table_log_concavity(black_box(&t), &runner))
        });
    }
    group.finish();
}

fn extremal(c: &mut Criterion) {
    let mut group = c.benchmark_group("extremal");
    group.sample_size(10);
    for (name, runner) in runners() {
        group.bench_function(BenchmarkId::new("e_scan_n1000", name), |b| {
            b.iter(|| check_e_logconcavity(black_box(1000), &runner).unwrap())
        });
        group.bench_function(BenchmarkId::new("cases_n120", name), |b| {
            b.iter(|| case_report(black_box(120), &runner).unwrap())
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(10);
    for (name, runner) in runners() {
        group.bench_function(BenchmarkId::new("brute_p3_n5", name), |b| {
            b.iter(|| brute_counts(3, black_box(5), &runner).unwrap())
        });
        group.bench_function(BenchmarkId::new("ex_graphs_n6", name), |b| {
            b.iter(|| ex_bruteforce_all(black_box(6), &runner).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, table, table_scan, extremal, oracles);
criterion_main!(benches);
