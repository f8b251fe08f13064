use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polyspec::{base_spectrum, iterate_spectrum_with, Execution, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

// Path backbone plus random chords, so the spectrum is mostly simple.
fn random_graph(n: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    while edges.len() < n - 1 + extra {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        let (u, v) = (u.min(v), u.max(v));
        if v > u + 1 && !edges.contains(&(u, v)) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(edges).expect("valid graph")
}

fn spectrum_transform(c: &mut Criterion) {
    let mut group = c.benchmark_group("iterate_spectrum");
    group.sample_size(20);
    for &(vertices, n, g) in &[(60usize, 9u32, 1u32), (120, 9, 1), (60, 5, 2), (120, 16, 1)] {
        let graph = random_graph(vertices, vertices / 2, 0xbe7c_0000 + vertices as u64);
        let (spectrum, ctx) = base_spectrum(&graph).expect("base spectrum");
        let label = format!("N{vertices}_n{n}_g{g}");
        for (name, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(name, &label), &exec, |b, &exec| {
                b.iter(|| {
                    iterate_spectrum_with(black_box(&spectrum), &ctx, n, g, exec)
                        .expect("transform")
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, spectrum_transform);
criterion_main!(benches);
