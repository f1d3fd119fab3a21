//! Parallel against sequential. Ids carry the mode, so run once with default
//! features and once with `--no-default-features` and compare baselines.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dicrit::colouring::is_k_dicritical;
use dicrit::families::{dicritical_short_paths, spindle, wheel_of_digons};
use dicrit::lab::{enumerate, verify, EnumerationSpec, Suite, SuiteKind, SuiteParams};
use dicrit::subdivision::contains_subdivision;
use dicrit::{par, Budget};

fn mode() -> &'static str {
    if par::is_parallel() {
        "parallel"
    } else {
        "sequential"
    }
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [5, 6] {
        let spec = EnumerationSpec::new(n);
        g.bench_with_input(BenchmarkId::new(mode(), n), &spec, |b, spec| {
            b.iter(|| enumerate(spec, &Budget::new(7), |_| {}).unwrap())
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let cases = [
        (SuiteKind::SpindleOutDegree, Some(6)),
        (SuiteKind::ComponentBound, None),
        (SuiteKind::LongPath, None),
    ];
    for (kind, max_n) in cases {
        let params = SuiteParams {
            max_n,
            ..SuiteParams::default()
        };
        let suite = Suite::new(kind);
        g.bench_function(BenchmarkId::new(mode(), suite), |b| {
            b.iter(|| assert!(verify(suite, &params).passed()))
        });
    }
    g.finish();
}

fn dicriticality(c: &mut Criterion) {
    let mut g = c.benchmark_group("dicritical");
    g.sample_size(10);
    let d = dicritical_short_paths(3, 11).unwrap();
    g.bench_function(BenchmarkId::new(mode(), "D_(3,11)"), |b| {
        b.iter(|| is_k_dicritical(&d, 3, &Budget::default()).unwrap())
    });
    g.finish();
}

fn containment(c: &mut Criterion) {
    let mut g = c.benchmark_group("contains");
    let host = wheel_of_digons(10).unwrap();
    let pattern = spindle(3, 3).unwrap();
    g.bench_function(BenchmarkId::new(mode(), "D_10 / C(3,3)"), |b| {
        b.iter(|| contains_subdivision(&host, &pattern, None, &Budget::default()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, enumeration, suites, dicriticality, containment);
criterion_main!(benches);
