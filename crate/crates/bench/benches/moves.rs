use criterion::{black_box, criterion_group, criterion_main, Criterion};

use legtwist_bench::twist;
use legtwist_core::moves::random_move_walk;
use legtwist_core::twist::{classes_at_max_tb, mountain_range};

fn walks(c: &mut Criterion) {
    let f = twist(-6, "Z+ S- S+ Z-");
    c.bench_function("random_move_walk/100", |b| {
        b.iter(|| random_move_walk(black_box(&f), 100, 1))
    });
}

fn atlas(c: &mut Criterion) {
    c.bench_function("classes_at_max_tb/m-100", |b| {
        b.iter(|| classes_at_max_tb(black_box(-100)))
    });
    c.bench_function("mountain_range/m-20", |b| {
        b.iter(|| mountain_range(black_box(-20), 4))
    });
}

criterion_group!(benches, walks, atlas);
criterion_main!(benches);
