use std::hint::black_box;
use std::thread::available_parallelism;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hermitian_mixed::census::{verify_main_theorem, CensusConfig};

fn census(c: &mut Criterion) {
    let workers = available_parallelism().map_or(4, |n| n.get()).max(2);
    let mut group = c.benchmark_group("census_n5");
    group.sample_size(10);
    for jobs in [1, workers] {
        // jobs = 1 takes the sequential path even with the parallel feature on
        let config = CensusConfig { n_max: 5, jobs, ..CensusConfig::default() };
        group.bench_with_input(BenchmarkId::from_parameter(format!("jobs={jobs}")), &config, |b, cfg| {
            b.iter(|| black_box(verify_main_theorem(cfg).unwrap().totals.scanned))
        });
    }
    group.finish();
}

criterion_group!(benches, census);
criterion_main!(benches);
