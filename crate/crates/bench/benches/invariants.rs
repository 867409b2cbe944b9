use braidknot::diagram::closure;
use braidknot::invariants::{alexander, homfly, kauffman_bracket};
use braidknot::search::{census, enumerate_words, EnumerationSpec, DEFAULT_ENUM_CAP};
use braidknot_bench::{alternating_word, torus_word};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn bracket(c: &mut Criterion) {
    let mut g = c.benchmark_group("kauffman_bracket");
    for (p, q) in [(3, 4), (3, 7), (4, 5), (5, 6)] {
        let d = closure(&torus_word(p, q));
        g.bench_with_input(BenchmarkId::new("torus", format!("{p},{q}")), &d, |b, d| {
            b.iter(|| kauffman_bracket(black_box(d)))
        });
    }
    g.finish();
}

fn skein(c: &mut Criterion) {
    let mut g = c.benchmark_group("homfly");
    for (p, q) in [(3, 4), (4, 5), (5, 6)] {
        let w = torus_word(p, q);
        g.bench_with_input(BenchmarkId::new("torus", format!("{p},{q}")), &w, |b, w| {
            b.iter(|| homfly(black_box(w)))
        });
    }
    let w = alternating_word(4, 4);
    g.bench_function("alternating 4x4", |b| b.iter(|| homfly(black_box(&w))));
    g.finish();
}

fn burau(c: &mut Criterion) {
    let w = torus_word(5, 6);
    c.bench_function("alexander T(5,6)", |b| b.iter(|| alexander(black_box(&w))));
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    for (n, len) in [(3, 8), (4, 6)] {
        g.bench_function(format!("B{n} len<={len}"), |b| {
            b.iter(|| enumerate_words(EnumerationSpec::new(n, len, true)).count())
        });
    }
    g.bench_function("census g=1 n=3", |b| {
        b.iter(|| census(1, 3, DEFAULT_ENUM_CAP).unwrap())
    });
    g.finish();
}

criterion_group!(benches, bracket, skein, burau, enumeration);
criterion_main!(benches);
