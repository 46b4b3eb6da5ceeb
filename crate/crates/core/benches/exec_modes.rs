//! Sequential vs parallel execution for minor scans, combined matrices and
//! batch verification.
//!
//! Without the `parallel` feature both modes run sequentially.

use std::hint::black_box;

use assrkit_core::classify::{classify, ClassifyOptions};
use assrkit_core::combined::combined_with;
use assrkit_core::exact::{int, RMatrix};
use assrkit_core::gen::{fixture_matrix, sample_assr, scale_perturb, FixtureId};
use assrkit_core::theorems::{run_batch, CheckConfig};
use assrkit_core::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

/// Dense totally positive matrix `a_ij = binom(i + j - 2, i - 1)` (Pascal).
fn pascal(n: usize) -> RMatrix {
    let mut rows = vec![vec![1i64; n]; n];
    for i in 1..n {
        for j in 1..n {
            rows[i][j] = rows[i - 1][j] + rows[i][j - 1];
        }
    }
    RMatrix::from_fn(n, |i, j| int(rows[i - 1][j - 1]))
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    for n in [6usize, 8, 10] {
        let a = pascal(n);
        for (label, exec) in MODES {
            let opts = ClassifyOptions::default().with_exec(exec);
            group.bench_with_input(BenchmarkId::new(label, n), &a, |b, a| b.iter(|| classify(black_box(a), &opts)));
        }
    }
    group.finish();
}

fn bench_combined(c: &mut Criterion) {
    let mut group = c.benchmark_group("combined");
    for n in [6usize, 12, 20] {
        let a = pascal(n);
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, n), &a, |b, a| b.iter(|| combined_with(black_box(a), exec)));
        }
    }
    group.finish();
}

fn bench_batch(c: &mut Criterion) {
    let mut inputs: Vec<RMatrix> = (0..16).map(|s| scale_perturb(&fixture_matrix(FixtureId::A6), s)).collect();
    inputs.extend(sample_assr(4, 200, 1).expect("order in range").matrices.into_iter().take(16));
    let mut group = c.benchmark_group("verify_batch");
    group.sample_size(10);
    for (label, exec) in MODES {
        let config = CheckConfig { trials: 10, seed: 3, exec, ..CheckConfig::default() };
        group.bench_function(label, |b| b.iter(|| run_batch(black_box(&inputs), &config)));
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_combined, bench_batch);
criterion_main!(benches);
