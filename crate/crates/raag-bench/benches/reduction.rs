use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use raag_bench::{p4, seeded_word};

fn reduction(c: &mut Criterion) {
    let graph = p4();
    let mut group = c.benchmark_group("reduce");
    for len in [64usize, 256, 1024] {
        let word = seeded_word(&graph, len as u64, len);
        group.bench_function(format!("random/{len}"), |b| {
            b.iter(|| black_box(&word).reduce())
        });
    }
    // Worst case for the cancellation phase: w * w^-1 collapses entirely.
    let word = seeded_word(&graph, 99, 512);
    let palindrome = word.concat(&word.inverse()).unwrap();
    group.bench_function("collapsing/1024", |b| {
        b.iter(|| black_box(&palindrome).reduce())
    });
    group.finish();
}

criterion_group!(benches, reduction);
criterion_main!(benches);
