use criterion::{criterion_group, criterion_main, Criterion};
use virasoro::whittaker::{Parallelism, WhittakerEngine};

fn bench_descendants(c: &mut Criterion) {
    let mut group = c.benchmark_group("whittaker_descendants");
    group.sample_size(10);
    group.bench_function("k6_sequential", |b| {
        b.iter(|| {
            let mut eng = WhittakerEngine::new(Parallelism::Sequential);
            eng.descendant(6).unwrap();
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("k6_rayon", |b| {
        b.iter(|| {
            let mut eng = WhittakerEngine::new(Parallelism::Rayon);
            eng.descendant(6).unwrap();
        })
    });
    group.finish();
}

criterion_group!(benches, bench_descendants);
criterion_main!(benches);
