//! Simple connected graphs, the n-polygon operator and growth counts.
//!
//! The n-polygon operator keeps every edge `{i, j}` of the input and adds a
//! fresh path `i - p_0 - ... - p_{n-2} - j` beside it, so each edge becomes an
//! (n+1)-cycle. Path vertices are labelled deterministically: for the edge at
//! index `e` in the lexicographically sorted edge list, `p_k` receives id
//! `N + e·(n-1) + k`, and `p_0` is adjacent to the smaller endpoint.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default ceiling on the vertex count of explicitly built graphs.
pub const DEFAULT_EXPLICIT_CAP: u64 = 100_000;

/// A simple, connected, undirected graph on vertices `0..N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted, each pair stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    bipartite: bool,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops, empty input and disconnected
    /// results are rejected. The vertex count is one more than the largest
    /// id, so gaps in the numbering show up as isolated vertices and fail
    /// the connectivity check.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Self::from_sorted_set(set)
    }

    fn from_sorted_set(set: BTreeSet<(usize, usize)>) -> Result<Self> {
        let Some(vertex_count) = set.iter().map(|&(_, v)| v + 1).max() else {
            return Err(Error::EmptyGraph);
        };
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let (components, bipartite) = two_color(&adjacency);
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
            bipartite,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    /// Always true: disconnected inputs never make it into a `Graph`.
    pub fn is_connected(&self) -> bool {
        true
    }

    /// Applies the normalized Laplacian `I - D^{-1/2} A D^{-1/2}` to `x`
    /// without materializing the matrix.
    pub fn normalized_laplacian_apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.vertex_count, "vector length must equal N");
        let inv_sqrt: Vec<f64> = self
            .adjacency
            .iter()
            .map(|nb| 1.0 / (nb.len() as f64).sqrt())
            .collect();
        (0..self.vertex_count)
            .map(|i| {
                let walk: f64 = self.adjacency[i]
                    .iter()
                    .map(|&j| inv_sqrt[j] * x[j])
                    .sum();
                x[i] - inv_sqrt[i] * walk
            })
            .collect()
    }

    /// Writes the edge list in the same text format [`parse_edge_list`] reads.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.edges.len() * 8);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Breadth-first 2-coloring. Returns (component count, bipartite).
fn two_color(adjacency: &[Vec<usize>]) -> (usize, bool) {
    let mut color: Vec<Option<bool>> = vec![None; adjacency.len()];
    let mut components = 0;
    let mut bipartite = true;
    let mut queue = VecDeque::new();
    for start in 0..adjacency.len() {
        if color[start].is_some() {
            continue;
        }
        components += 1;
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in &adjacency[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
    }
    (components, bipartite)
}

/// Parses the whitespace-separated edge-list format: one `u v` pair per
/// line, blank lines ignored, `#` starting a comment line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut set = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let mut next_id = |what: &str| -> Result<usize> {
            let tok = fields.next().ok_or_else(|| Error::Parse {
                line,
                message: format!("missing {what} vertex"),
            })?;
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("invalid vertex id {tok:?}"),
            })
        };
        let u = next_id("first")?;
        let v = next_id("second")?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line,
                message: "expected exactly two vertex ids".into(),
            });
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        set.insert((u.min(v), u.max(v)));
    }
    Graph::from_sorted_set(set)
}

/// One application of the n-polygon operator.
pub fn polygon_transform(graph: &Graph, n: u32) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let n = n as usize;
    let base = graph.vertex_count;
    let path_len = n - 1;
    let mut edges = BTreeSet::new();
    for (e, &(i, j)) in graph.edges.iter().enumerate() {
        edges.insert((i, j));
        let first = base + e * path_len;
        let mut prev = i;
        for k in 0..path_len {
            let p = first + k;
            edges.insert((prev.min(p), prev.max(p)));
            prev = p;
        }
        edges.insert((prev.min(j), prev.max(j)));
    }
    Graph::from_sorted_set(edges)
}

/// `g`-fold application of [`polygon_transform`], refusing to build graphs
/// whose predicted vertex count exceeds `cap`.
pub fn iterate_transform(graph: &Graph, n: u32, g: u32, cap: u64) -> Result<Graph> {
    let counts = predict_counts(
        &BigUint::from(graph.vertex_count),
        &BigUint::from(graph.edge_count()),
        n,
        g,
    )?;
    if counts.vertices > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            predicted: counts.vertices,
            cap,
        });
    }
    let mut current = graph.clone();
    for _ in 0..g {
        current = polygon_transform(&current, n)?;
    }
    Ok(current)
}

/// Vertex and edge counts of the `g`-th iterate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthCounts {
    pub n: u32,
    pub generation: u32,
    pub vertices: BigUint,
    pub edges: BigUint,
}

impl GrowthCounts {
    pub fn vertices_u64(&self) -> Option<u64> {
        self.vertices.to_u64()
    }
}

/// Closed-form growth: `E_g = (n+1)^g E_0` and
/// `N_g = N_0 + (n-1)((n+1)^g - 1)/n · E_0`, in exact integers.
pub fn predict_counts(n0: &BigUint, e0: &BigUint, n: u32, g: u32) -> Result<GrowthCounts> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let np1 = BigUint::from(n + 1).pow(g);
    let numerator = &np1 - BigUint::one();
    let (quotient, remainder) = numerator.div_rem(&BigUint::from(n));
    if !remainder.is_zero() {
        return Err(Error::Arithmetic(format!(
            "(n+1)^g - 1 is not divisible by n (n = {n}, g = {g})"
        )));
    }
    Ok(GrowthCounts {
        n,
        generation: g,
        vertices: n0 + BigUint::from(n - 1) * quotient * e0,
        edges: np1 * e0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(m: usize) -> Graph {
        Graph::from_edges((0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)))).unwrap()
    }

    fn cycle(m: usize) -> Graph {
        Graph::from_edges((0..m).map(|i| (i, (i + 1) % m))).unwrap()
    }

    #[test]
    fn parses_small_graphs() {
        let k2 = parse_edge_list("0 1").unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count(), k2.is_bipartite()), (2, 1, true));
        let k3 = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count(), k3.is_bipartite()), (3, 3, false));
        let c4 = parse_edge_list("0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count(), c4.is_bipartite()), (4, 4, true));
    }

    #[test]
    fn parser_skips_comments_and_dedups() {
        let g = parse_edge_list("# triangle\n\n0 1\n1 0\n  1 2 \n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn parser_rejects_bad_input() {
        assert!(matches!(
            parse_edge_list("0 1\n2 2"),
            Err(Error::SelfLoop { line: 2, vertex: 2 })
        ));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(Error::EmptyGraph)));
        assert!(matches!(
            parse_edge_list("0 1\n2 3"),
            Err(Error::Disconnected { components: 2 })
        ));
        // vertex 1 missing from the numbering
        assert!(matches!(
            parse_edge_list("0 2"),
            Err(Error::Disconnected { components: 2 })
        ));
        assert!(matches!(parse_edge_list("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn polygon_of_an_edge_is_a_triangle() {
        let t = polygon_transform(&complete(2), 2).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
        assert!(!t.is_bipartite());
    }

    #[test]
    fn polygon_of_triangle() {
        let t = polygon_transform(&complete(3), 2).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (6, 9));
        let mut degrees = t.degrees();
        degrees.sort();
        assert_eq!(degrees, vec![2, 2, 2, 4, 4, 4]);

        // n = 3 turns every edge into a 4-cycle, but the original triangle
        // edges are kept, so the odd cycle survives.
        let t3 = polygon_transform(&complete(3), 3).unwrap();
        assert_eq!((t3.vertex_count(), t3.edge_count()), (9, 12));
        assert!(!t3.is_bipartite());
    }

    #[test]
    fn new_vertex_labels_follow_sorted_edges() {
        // edges of K_3 sorted: (0,1), (0,2), (1,2); n = 3 gives two path
        // vertices per edge starting at id 3.
        let t = polygon_transform(&complete(3), 3).unwrap();
        assert!(t.neighbors(0).contains(&3));
        assert!(t.neighbors(3).contains(&4));
        assert!(t.neighbors(4).contains(&1));
        assert!(t.neighbors(0).contains(&5));
        assert!(t.neighbors(6).contains(&2));
        assert!(t.neighbors(1).contains(&7));
        assert!(t.neighbors(8).contains(&2));
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(
            polygon_transform(&complete(3), 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn iterate_matches_counts() {
        let k3 = complete(3);
        assert_eq!(iterate_transform(&k3, 2, 0, 100).unwrap(), k3);
        let g1 = iterate_transform(&k3, 2, 1, 100).unwrap();
        assert_eq!((g1.vertex_count(), g1.edge_count()), (6, 9));
        let g2 = iterate_transform(&k3, 2, 2, 100).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (15, 27));
        match iterate_transform(&k3, 2, 2, 14) {
            Err(Error::CapExceeded { predicted, cap }) => {
                assert_eq!(predicted, BigUint::from(15u32));
                assert_eq!(cap, 14);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn predicted_counts() {
        let c = predict_counts(&3u32.into(), &3u32.into(), 2, 1).unwrap();
        assert_eq!((c.vertices, c.edges), (6u32.into(), 9u32.into()));
        let c = predict_counts(&7u32.into(), &11u32.into(), 5, 0).unwrap();
        assert_eq!((c.vertices, c.edges), (7u32.into(), 11u32.into()));

        // oracle: step the one-generation recurrence ten times
        let (mut nv, mut ne) = (BigUint::from(3u32), BigUint::from(3u32));
        for _ in 0..10 {
            nv += &ne; // (n - 1) E with n = 2
            ne *= 3u32;
        }
        assert_eq!(nv, BigUint::from(88575u32));
        assert_eq!(ne, BigUint::from(177147u32));
        let c = predict_counts(&3u32.into(), &3u32.into(), 2, 10).unwrap();
        assert_eq!((c.vertices, c.edges), (nv, ne));
    }

    #[test]
    fn huge_generation_counts_stay_exact() {
        let c = predict_counts(&10u32.into(), &15u32.into(), 7, 200).unwrap();
        assert_eq!(c.edges, BigUint::from(8u32).pow(200) * 15u32);
    }

    #[test]
    fn laplacian_apply_annihilates_sqrt_degree() {
        let g = cycle(5);
        let t = polygon_transform(&g, 3).unwrap();
        let x: Vec<f64> = t.degrees().iter().map(|&d| (d as f64).sqrt()).collect();
        let y = t.normalized_laplacian_apply(&x);
        assert!(y.iter().all(|v| v.abs() < 1e-12));
    }
}
