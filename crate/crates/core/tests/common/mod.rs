#![allow(dead_code)]

use polyspec::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;

pub fn complete(m: usize) -> Graph {
    Graph::from_edges((0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)))).unwrap()
}

pub fn path(m: usize) -> Graph {
    Graph::from_edges((0..m - 1).map(|i| (i, i + 1))).unwrap()
}

pub fn cycle(m: usize) -> Graph {
    Graph::from_edges((0..m).map(|i| (i, (i + 1) % m))).unwrap()
}

/// Star with `leaves` leaves around hub 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges((1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(outer.chain(spokes).chain(inner)).unwrap()
}

/// Connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.random_range(0..k)];
        edges.push((parent, order[k]));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(edges).unwrap()
}

/// The fixed named graphs plus five seeded random connected graphs with at
/// most 12 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("K2".to_string(), complete(2)),
        ("K3".to_string(), complete(3)),
        ("K4".to_string(), complete(4)),
        ("P4".to_string(), path(4)),
        ("C4".to_string(), cycle(4)),
        ("C5".to_string(), cycle(5)),
        ("S5".to_string(), star(4)),
        ("Petersen".to_string(), petersen()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for k in 0..5 {
        let n = rng.random_range(5..=12);
        let p = rng.random_range(0.1..0.5);
        out.push((format!("random{k}(N={n})"), random_connected(&mut rng, n, p)));
    }
    out
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
