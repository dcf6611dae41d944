use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cycle_spectra::spectrum::{
    circumference_of_embedding, enumerate_spectrum, exists_cycle_in_range, girth, UNLIMITED,
};
use cycle_spectra_bench::fixture;

fn interval(c: &mut Criterion) {
    let g = fixture("g10_2").graph();
    c.bench_function("interval_g10_2_4_9", |b| {
        b.iter(|| exists_cycle_in_range(black_box(&g), 4, 9, UNLIMITED).unwrap())
    });
    let t = fixture("triexpand_dodecahedron").graph();
    c.bench_function("interval_triexpand_4_9", |b| {
        b.iter(|| exists_cycle_in_range(black_box(&t), 4, 9, UNLIMITED).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    for name in ["fanring4", "dodecahedron", "random36"] {
        let g = fixture(name).graph();
        c.bench_function(&format!("spectrum_{name}"), |b| b.iter(|| enumerate_spectrum(black_box(&g), UNLIMITED)));
    }
}

fn longest_and_shortest(c: &mut Criterion) {
    let g = fixture("g10_2");
    c.bench_function("circumference_g10_2", |b| {
        b.iter(|| circumference_of_embedding(black_box(&g), UNLIMITED).unwrap())
    });
    let graph = g.graph();
    c.bench_function("girth_g10_2", |b| b.iter(|| girth(black_box(&graph)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = interval, enumeration, longest_and_shortest
}
criterion_main!(benches);
