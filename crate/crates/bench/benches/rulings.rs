use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use legtwist_bench::even_front;
use legtwist_core::rulings::{brute_force_rulings, count_rulings, ruling_signature};

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_rulings");
    for n in [2usize, 4, 6, 8] {
        let f = even_front(n);
        g.bench_with_input(BenchmarkId::new("dp", n), &f, |b, f| {
            b.iter(|| count_rulings(black_box(f), 1))
        });
        if n <= 6 {
            g.bench_with_input(BenchmarkId::new("brute_force", n), &f, |b, f| {
                b.iter(|| brute_force_rulings(black_box(f), 1))
            });
        }
    }
    g.finish();
}

fn signature(c: &mut Criterion) {
    let f = even_front(6);
    c.bench_function("ruling_signature/n6", |b| {
        b.iter(|| ruling_signature(black_box(&f)))
    });
}

criterion_group!(benches, counting, signature);
criterion_main!(benches);
