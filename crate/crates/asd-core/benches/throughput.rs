//! Parallel vs sequential throughput of the trial loop, plus the radius
//! search oracle. With default features the `parallel` entry point fans trials
//! out over rayon; `--no-default-features` makes both entries sequential.

use asd_core::{
    bec_radius_oracle, run_fer, run_fer_seq, CodeParams, ChannelSpec, DecoderLimits, FieldContext,
    Strategy, TrialConfig,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn fer_config(trials: u64) -> TrialConfig {
    TrialConfig {
        params: CodeParams::new(15, 11, FieldContext::gf16()).unwrap(),
        channel: ChannelSpec::Bec { eps: 0.1 },
        strategy: Strategy::Pmas { m_total: 16 },
        decoder: asd_core::DecoderTag::Oracle,
        trials,
        seed: 42,
        limits: DecoderLimits::default(),
    }
}

fn bench_fer(c: &mut Criterion) {
    let mut group = c.benchmark_group("fer_oracle_rs15_11");
    for trials in [2_000u64, 20_000] {
        let cfg = fer_config(trials);
        let expected = run_fer_seq(&cfg).unwrap();
        group.bench_with_input(BenchmarkId::new("seq", trials), &trials, |b, _| {
            assert_eq!(run_fer_seq(&cfg).unwrap(), expected);
            b.iter(|| run_fer_seq(black_box(&cfg)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("default", trials), &trials, |b, _| {
            assert_eq!(run_fer(&cfg).unwrap(), expected);
            b.iter(|| run_fer(black_box(&cfg)).unwrap())
        });
    }
    group.finish();
}

fn bench_radius_oracle(c: &mut Criterion) {
    let params = CodeParams::new(255, 167, FieldContext::gf256()).unwrap();
    c.bench_function("bec_radius_oracle_rs255", |b| {
        b.iter(|| bec_radius_oracle(black_box(&params)))
    });
}

criterion_group!(benches, bench_fer, bench_radius_oracle);
criterion_main!(benches);
