use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lqsdepth::theorems::{run_sweep, RandomParams, SweepConfig};
use lqsdepth::{betti_numbers, parse_ideal, Execution, Limits};

fn limits(execution: Execution) -> Limits {
    Limits {
        execution,
        ..Limits::default()
    }
}

fn bench_sweep(c: &mut Criterion) {
    let config = SweepConfig {
        params: RandomParams::new(4, 4, 3).unwrap(),
        count: 16,
        seed: 7,
    };
    let mut group = c.benchmark_group("sweep_n4_m4_deg3_x16");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| run_sweep(black_box(&config), &limits(exec)).unwrap())
        });
    }
    group.finish();
}

fn bench_betti(c: &mut Criterion) {
    let ideal =
        parse_ideal("n=6; x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x1*x6, x1*x3*x5, x2*x4*x6").unwrap();
    let mut group = c.benchmark_group("betti_six_cycle_plus");
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| betti_numbers(black_box(&ideal), &limits(exec)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_betti);
criterion_main!(benches);
