use criterion::{criterion_group, criterion_main, Criterion};
use pvs_core::search::{search, RealTransform, SearchParams};
use std::hint::black_box;

fn golden_search(c: &mut Criterion) {
    let g = RealTransform::golden();
    for n in [4, 6] {
        let params = SearchParams::new(n, 10.0, 0.5);
        c.bench_function(&format!("search/golden/N={n}"), |b| {
            b.iter(|| search(black_box(&g), &params, 1))
        });
    }
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = golden_search
}
criterion_main!(benches);
