use criterion::{criterion_group, criterion_main, Criterion};
use pvs_core::lie::{closure, family_pair, Family};
use pvs_core::pvs::{cubic_form, pfaffians, quadratic_form, span_point};
use pvs_core::rat::int;
use pvs_core::wpoint::w_literal;
use std::hint::black_box;

fn pipeline(c: &mut Criterion) {
    let w = w_literal();
    let x = pvs_bench::orbit_points(7, 1).remove(0);
    c.bench_function("pfaffians/w", |b| b.iter(|| pfaffians(black_box(&w))));
    c.bench_function("quadratic/orbit", |b| b.iter(|| quadratic_form(black_box(&x))));
    c.bench_function("cubic/w", |b| b.iter(|| cubic_form(black_box(&w))));
    c.bench_function("cubic/orbit", |b| b.iter(|| cubic_form(black_box(&x))));
    c.bench_function("span/orbit", |b| b.iter(|| span_point(black_box(&x))));
}

fn lie(c: &mut Criterion) {
    let gens: Vec<_> = [Family::U1, Family::V1, Family::V2]
        .into_iter()
        .map(|f| family_pair(f, &vec![int(1); f.arity()]).unwrap())
        .collect();
    c.bench_function("closure/sl2xsl3", |b| b.iter(|| closure(black_box(&gens))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = pipeline, lie
}
criterion_main!(benches);
