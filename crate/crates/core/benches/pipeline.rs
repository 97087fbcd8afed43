use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use klcells::classify::{build_artifacts, classify, load_group, PipelineConfig};
use klcells::klbase::{compute_h_table, compute_kl, HScope};
use klcells::Parallelism;

const GROUPS: [&str; 2] = ["B3", "H3"];

fn modes() -> [(&'static str, Parallelism); 2] {
    [
        ("sequential", Parallelism::sequential()),
        ("parallel", Parallelism::default()),
    ]
}

fn h_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("h_table");
    group.sample_size(10);
    for sym in GROUPS {
        let g = load_group(sym.parse().unwrap(), &PipelineConfig::default()).unwrap();
        let kl = compute_kl(&g);
        for (mode, par) in modes() {
            group.bench_with_input(BenchmarkId::new(mode, sym), &par, |b, &par| {
                b.iter(|| compute_h_table(&g, &kl, HScope::AllPairs, par, usize::MAX).unwrap())
            });
        }
    }
    group.finish();
}

fn full_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    for sym in GROUPS {
        for (mode, par) in modes() {
            let cfg = PipelineConfig {
                par,
                ..PipelineConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(mode, sym), &cfg, |b, cfg| {
                b.iter(|| {
                    let g = load_group(sym.parse().unwrap(), cfg).unwrap();
                    let art = build_artifacts(g, cfg, &mut Vec::new()).unwrap();
                    black_box(classify(&art, cfg.par).unwrap())
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, h_table, full_pipeline);
criterion_main!(benches);
