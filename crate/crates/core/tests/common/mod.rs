//! Seeded random signed graphs shared by the integration targets.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sigraph::graph::{Sign, SignedGraph, Vertex};

pub fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    Sign::from_negative(rng.gen_bool(0.5))
}

/// Erdős–Rényi graph with uniformly random signs.
pub fn random_signed_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(density) {
                edges.push((u, v, random_sign(rng)));
            }
        }
    }
    SignedGraph::new(n, edges).expect("simple graph")
}

/// Random recursive tree: vertex `v` hangs off a uniform earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> SignedGraph {
    let edges: Vec<(Vertex, Vertex, Sign)> =
        (1..n).map(|v| (rng.gen_range(0..v), v, random_sign(rng))).collect();
    SignedGraph::new(n, edges).expect("tree edges")
}

/// A random signed cycle of length `girth` with `extra` tree vertices hung
/// off it, then shuffled.
pub fn random_unicyclic<R: Rng>(rng: &mut R, girth: usize, extra: usize) -> SignedGraph {
    let n = girth + extra;
    let mut edges: Vec<(Vertex, Vertex, Sign)> =
        (0..girth).map(|i| (i, (i + 1) % girth, random_sign(rng))).collect();
    for v in girth..n {
        edges.push((rng.gen_range(0..v), v, random_sign(rng)));
    }
    let g = SignedGraph::new(n, edges).expect("unicyclic edges");
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("permutation")
}
