use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use penthex_bench::{code, DECIDE_CASES};
use penthex_core::oracle::default_budget;
use penthex_core::{Oracle, Solver, SolverConfig};

fn decide(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    group.sample_size(10);
    for &(text, expected) in DECIDE_CASES {
        let code = code(text);
        group.bench_with_input(BenchmarkId::from_parameter(text), &code, |b, code| {
            b.iter(|| {
                let ans = Solver::new().decide(code, &SolverConfig::default()).unwrap();
                assert_eq!(ans.exists, expected);
            })
        });
    }
    group.finish();
}

fn witness(c: &mut Criterion) {
    let cfg = SolverConfig { conjecture_mode: true, want_witness: true, ..SolverConfig::default() };
    let code = code("2323232323");
    c.bench_function("witness/2323232323", |b| b.iter(|| Solver::new().decide(&code, &cfg).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for &(text, expected) in DECIDE_CASES {
        let code = code(text);
        group.bench_with_input(BenchmarkId::from_parameter(text), &code, |b, code| {
            b.iter(|| assert_eq!(Oracle::new().exists(code, default_budget(code)), expected))
        });
    }
    group.finish();
}

criterion_group!(benches, decide, witness, oracle);
criterion_main!(benches);
