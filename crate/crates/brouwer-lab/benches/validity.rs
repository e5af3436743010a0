use std::hint::black_box;

use brouwer_lab::gen::all_upset_algebras;
use brouwer_lab::{is_valid_with, upset_algebra, FinitePreorder, Formula, Mode};
use criterion::{criterion_group, criterion_main, Criterion};

fn bench(c: &mut Criterion) {
    // the largest upset algebra of a 5-point antichain has 32 elements
    let big = upset_algebra(&FinitePreorder::generated(5, &[])).unwrap();
    let f: Formula = "(A -> (B -> C)) -> ((A -> B) -> (A -> C)) | ~D".parse().unwrap();
    let small = all_upset_algebras(4);
    let jankov = Formula::jankov();
    let mut g = c.benchmark_group("validity");
    g.sample_size(10);
    for (name, mode) in [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)] {
        g.bench_function(format!("four_vars_32/{name}"), |b| b.iter(|| is_valid_with(black_box(&big), &f, mode).unwrap()));
        g.bench_function(format!("jankov_sweep/{name}"), |b| {
            b.iter(|| small.iter().filter(|a| is_valid_with(black_box(a), &jankov, mode).unwrap().holds()).count())
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
