//! Parallel vs sequential benchmarks for the verification sweeps and the
//! exact solver. Run with `--no-default-features` to see the pure
//! sequential build as well; here the comparison is rayon fan-out vs the
//! in-crate sequential twin.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cseq::families::{Family, FamilySpec};
use cseq::solver;
use cseq::verify::{self, Tier};

fn bench_verify_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_tier_a");
    for (scope, hi) in [("star-max", 600usize), ("complete-max", 400), ("gear-max", 600)] {
        let parsed = scope.parse().unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", scope), &hi, |b, &hi| {
            b.iter(|| {
                verify::run_verify(parsed, Tier::FormulaVsGeneric, Some((3, hi))).unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("sequential", scope), &hi, |b, &hi| {
            b.iter(|| {
                verify::run_verify_seq(parsed, Tier::FormulaVsGeneric, Some((3, hi))).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solver");
    group.sample_size(10);
    for (family, n) in [
        (Family::Path, 14usize),
        (Family::Cycle, 14),
        (Family::Star, 13),
    ] {
        let g = FamilySpec::new(family, n).unwrap().generate();
        let label = format!("{}:{n}", family.name());
        group.bench_function(BenchmarkId::new("subset_dp", &label), |b| {
            b.iter(|| solver::min_cost_exact(&g, solver::DEFAULT_DP_CAP).unwrap())
        });
    }
    group.finish();
}

fn bench_tier_b_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_tier_b");
    group.sample_size(10);
    let scope = "cycle-min".parse().unwrap();
    group.bench_function("parallel", |b| {
        b.iter(|| verify::run_verify(scope, Tier::FormulaVsSolver, Some((3, 14))).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| verify::run_verify_seq(scope, Tier::FormulaVsSolver, Some((3, 14))).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_verify_sweeps, bench_solver, bench_tier_b_batch);
criterion_main!(benches);
