use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lieforge::catalog;
use lieforge::par;
use lieforge::superalg::{is_simple, SimplicityOptions};

fn engines(c: &mut Criterion) {
    let cases = [("axioms", "h_I:n=3,N=1:1:1"), ("axioms", "psl:n=5"), ("simple", "psl:n=4,w=0:0:1:1")];
    let mut group = c.benchmark_group("engine");
    group.sample_size(10);
    for (what, r) in cases {
        let g = catalog::build(r).unwrap().algebra;
        for (label, seq) in [("parallel", false), ("sequential", true)] {
            group.bench_with_input(BenchmarkId::new(format!("{what}/{label}"), r), &g, |b, g| {
                par::set_sequential(seq);
                match what {
                    "axioms" => b.iter(|| g.check_axioms()),
                    _ => b.iter(|| is_simple(g, &SimplicityOptions::default())),
                }
            });
        }
    }
    par::set_sequential(false);
    group.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
