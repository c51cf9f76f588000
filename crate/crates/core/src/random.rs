//! Seeded random connected graphs for sweeps and property tests.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::graph::Graph;

/// Random spanning tree on `n` vertices plus each remaining pair with probability `p`.
pub fn connected_graph_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    let mut present = vec![false; n * n];
    for i in 1..n {
        let a = order[i];
        let b = order[rng.gen_range(0..i)];
        edges.push((a.min(b), a.max(b)));
        present[a * n + b] = true;
        present[b * n + a] = true;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !present[a * n + b] && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges).expect("spanning tree keeps the graph connected")
}

pub fn connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    connected_graph_with(&mut StdRng::seed_from_u64(seed), n, p)
}
