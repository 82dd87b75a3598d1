use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hermsig::oracle::{run_suite, SuiteKind};
use hermsig::realform::gl_split_to_fundamental;
use hermsig::{builtin_group, Exec, GroupLabel, SignatureEngine};

fn self_dual(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let m = n / 2;
    let mut heads: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..m {
        heads = heads
            .into_iter()
            .flat_map(|h| {
                let top = h.last().copied().unwrap_or(bound);
                (0..=top).map(move |x| {
                    let mut v = h.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    heads
        .into_iter()
        .map(|h| {
            let mut l = h.clone();
            if n % 2 == 1 {
                l.push(0);
            }
            l.extend(h.iter().rev().map(|x| -x));
            l
        })
        .collect()
}

fn gl_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("gl_sweep");
    group.sample_size(10);
    for n in [5usize, 6, 7] {
        let rf = builtin_group(&GroupLabel::GL(n)).unwrap();
        let engine = SignatureEngine::new(&rf).unwrap().with_exec(Exec::Sequential);
        let lams = self_dual(n, 5);
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), n), &lams, |b, lams| {
                b.iter(|| {
                    exec.map(lams, |l| engine.compute(&gl_split_to_fundamental(n, l).unwrap()).unwrap().sig)
                })
            });
        }
    }
    group.finish();
}

fn oracle_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("split_oracle_c2");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| run_suite(SuiteKind::SplitC2, 200, exec, None).unwrap().passed())
        });
    }
    group.finish();
}

criterion_group!(benches, gl_sweep, oracle_suite);
criterion_main!(benches);
