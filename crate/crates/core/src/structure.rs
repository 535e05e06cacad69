//! Combinatorial invariants: connectivity, girth, shortest cycles, balance,
//! pendant vertices and distance layers around a vertex set.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("vertex set does not belong to this graph")]
    ForeignVertexSet,
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
}

/// A cycle given as its cyclic vertex order, with the product of its edge signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
    pub length: usize,
    pub sign: Sign,
}

impl CycleWitness {
    /// Validates that `vertices` is a cycle of `g` and computes its sign.
    pub fn new(g: &SignedGraph, vertices: Vec<Vertex>) -> Result<Self, StructureError> {
        let len = vertices.len();
        if len < 3 {
            return Err(StructureError::InvalidCycle(format!("length {len} < 3")));
        }
        VertexSet::new(g.n(), vertices.iter().copied())
            .map_err(|e| StructureError::InvalidCycle(e.to_string()))?;
        let mut sign = Sign::Plus;
        for i in 0..len {
            let (a, b) = (vertices[i], vertices[(i + 1) % len]);
            match g.sign(a, b) {
                Some(s) => sign = sign * s,
                None => {
                    return Err(StructureError::InvalidCycle(format!("{a} and {b} not adjacent")))
                }
            }
        }
        Ok(CycleWitness { vertices, length: len, sign })
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::new(n, self.vertices.iter().copied()).expect("cycle vertices are distinct")
    }
}

/// Vertices grouped by distance to a fixed vertex set: `layers[0]` is `N_1`,
/// `layers[1]` is `N_2`, and so on. Unreachable vertices are in no layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    pub layers: Vec<Vec<Vertex>>,
}

impl LayerPartition {
    /// `N_j` for `j >= 1`; empty beyond the last layer.
    pub fn layer(&self, j: usize) -> &[Vertex] {
        if j == 0 {
            return &[];
        }
        self.layers.get(j - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }
}

/// Hop distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &SignedGraph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn is_connected(g: &SignedGraph) -> Result<bool, StructureError> {
    if g.n() == 0 {
        return Err(StructureError::EmptyGraph);
    }
    Ok(distances_from(g, 0).iter().all(Option::is_some))
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &SignedGraph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp: Vec<Vertex> = distances_from(g, s)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v))
            .collect();
        comp.sort_unstable();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

/// Length of a shortest cycle of the underlying graph; signs are ignored.
pub fn girth(g: &SignedGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[x] + 1 >= b {
                    break 'bfs;
                }
            }
            for y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// A shortest cycle, chosen as the lexicographically least vertex sequence
/// among those starting at their smallest vertex.
pub fn shortest_cycle(g: &SignedGraph) -> Option<CycleWitness> {
    let target = girth(g)?;
    let n = g.n();
    for start in 0..n {
        // distances to `start` inside the subgraph of vertices >= start
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::from([start]);
        dist[start] = 0;
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if y >= start && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![start];
        let mut used = vec![false; n];
        used[start] = true;
        if extend_cycle(g, start, target, &dist, &mut path, &mut used) {
            return Some(CycleWitness::new(g, path).expect("search yields a valid cycle"));
        }
    }
    None
}

fn extend_cycle(
    g: &SignedGraph,
    start: Vertex,
    target: usize,
    dist: &[usize],
    path: &mut Vec<Vertex>,
    used: &mut [bool],
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == target {
        return g.adjacent(last, start);
    }
    let remaining = target - path.len();
    for y in g.neighbors(last) {
        if y <= start || used[y] || dist[y] > remaining {
            continue;
        }
        path.push(y);
        used[y] = true;
        if extend_cycle(g, start, target, dist, path, used) {
            return true;
        }
        path.pop();
        used[y] = false;
    }
    false
}

/// Outcome of the balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// `potential[u] * potential[v]` equals the sign of every edge `uv`.
    Balanced { potential: Vec<Sign> },
    /// A cycle with negative sign.
    Unbalanced(CycleWitness),
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced { .. })
    }
}

/// Spanning-forest potential assignment; the first conflicting non-tree edge
/// closes a negative cycle with the tree paths to its endpoints.
pub fn balance(g: &SignedGraph) -> Balance {
    let n = g.n();
    let mut potential: Vec<Option<Sign>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Plus);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let px = potential[x].unwrap();
            for y in g.neighbors(x) {
                let s = g.sign(x, y).unwrap();
                match potential[y] {
                    None => {
                        potential[y] = Some(px * s);
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(py) if py != px * s => {
                        let cycle = tree_cycle(x, y, &parent, &depth);
                        return Balance::Unbalanced(
                            CycleWitness::new(g, cycle).expect("tree path plus edge is a cycle"),
                        );
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Balance::Balanced {
        potential: potential.into_iter().map(Option::unwrap).collect(),
    }
}

fn tree_cycle(mut a: Vertex, mut b: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

pub fn is_balanced(g: &SignedGraph) -> bool {
    balance(g).is_balanced()
}

pub fn pendant_vertices(g: &SignedGraph) -> VertexSet {
    let deg = g.degrees();
    VertexSet::new(g.n(), (0..g.n()).filter(|&v| deg[v] == 1)).expect("distinct vertices")
}

/// Breadth-first layers `N_1, N_2, ...` by distance to `h`.
pub fn neighborhood_layers(
    g: &SignedGraph,
    h: &VertexSet,
) -> Result<LayerPartition, StructureError> {
    if h.is_empty() {
        return Err(StructureError::EmptyVertexSet);
    }
    if h.universe() != g.n() {
        return Err(StructureError::ForeignVertexSet);
    }
    let mut seen = h.mask();
    let mut frontier: Vec<Vertex> = h.members().to_vec();
    let mut layers = Vec::new();
    loop {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        layers.push(next.clone());
        frontier = next;
    }
    Ok(LayerPartition { layers })
}

/// A path between two cycle vertices whose interior avoids the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExternalPath {
    pub length: usize,
    pub endpoints: (Vertex, Vertex),
}

/// For each pair of distinct cycle vertices joined by a path whose interior
/// avoids the cycle, the shortest such path (chords count as length 1).
/// Sorted by endpoints.
pub fn internally_disjoint_paths(g: &SignedGraph, cycle: &CycleWitness) -> Vec<ExternalPath> {
    let n = g.n();
    let mut on_cycle = vec![false; n];
    for &v in &cycle.vertices {
        on_cycle[v] = true;
    }
    let len = cycle.vertices.len();
    let consecutive = |a: Vertex, b: Vertex| {
        (0..len).any(|i| {
            let (x, y) = (cycle.vertices[i], cycle.vertices[(i + 1) % len]);
            (x == a && y == b) || (x == b && y == a)
        })
    };

    let mut cycle_sorted = cycle.vertices.clone();
    cycle_sorted.sort_unstable();
    let mut out = Vec::new();
    for &y in &cycle_sorted {
        let mut best = vec![usize::MAX; n];
        for z in g.neighbors(y) {
            if on_cycle[z] && z > y && !consecutive(y, z) {
                best[z] = 1;
            }
        }
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for x in g.neighbors(y).filter(|&x| !on_cycle[x]) {
            dist[x] = 1;
            queue.push_back(x);
        }
        while let Some(x) = queue.pop_front() {
            for z in g.neighbors(x) {
                if on_cycle[z] {
                    if z > y {
                        best[z] = best[z].min(dist[x] + 1);
                    }
                } else if dist[z] == usize::MAX {
                    dist[z] = dist[x] + 1;
                    queue.push_back(z);
                }
            }
        }
        for &z in &cycle_sorted {
            if best[z] != usize::MAX {
                out.push(ExternalPath { length: best[z], endpoints: (y, z) });
            }
        }
    }
    out.sort_by_key(|p| p.endpoints);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::switch;

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&SignedGraph::empty(1)).unwrap());
        assert!(!is_connected(&SignedGraph::empty(2)).unwrap());
        assert!(is_connected(&cycle(5)).unwrap());
        assert_eq!(is_connected(&SignedGraph::empty(0)), Err(StructureError::EmptyGraph));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&path(6)), None);
        assert_eq!(girth(&cycle(5)), Some(5));
        let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(girth(&k4), Some(3));
        // two disjoint cycles
        assert_eq!(girth(&cycle(7).disjoint_union(&cycle(4))), Some(4));
    }

    #[test]
    fn shortest_cycle_is_deterministic() {
        let c4 = cycle(4).with_sign(2, 3, Sign::Minus).unwrap();
        let w = shortest_cycle(&c4).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert_eq!(w.length, 4);
        assert_eq!(w.sign, Sign::Minus);
        assert!(shortest_cycle(&path(7)).is_none());

        // relabelled 5-cycle 0-3-1-4-2-0: start at 0 toward the smaller neighbour 2
        let g = SignedGraph::unsigned(5, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)]).unwrap();
        assert_eq!(shortest_cycle(&g).unwrap().vertices, vec![0, 2, 4, 1, 3]);
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&cycle(6)));
        let c3 = cycle(3).with_sign(0, 1, Sign::Minus).unwrap();
        match balance(&c3) {
            Balance::Unbalanced(w) => {
                assert_eq!(w.sign, Sign::Minus);
                assert_eq!(w.length, 3);
            }
            other => panic!("expected unbalanced, got {other:?}"),
        }
        let c4 = cycle(4)
            .with_sign(0, 1, Sign::Minus)
            .unwrap()
            .with_sign(2, 3, Sign::Minus)
            .unwrap();
        assert!(is_balanced(&c4));
        assert!(is_balanced(&path(5).with_sign(1, 2, Sign::Minus).unwrap()));
    }

    #[test]
    fn balanced_potential_switches_to_all_positive() {
        let g = cycle(6)
            .with_sign(0, 1, Sign::Minus)
            .unwrap()
            .with_sign(3, 4, Sign::Minus)
            .unwrap();
        let Balance::Balanced { potential } = balance(&g) else { panic!("balanced") };
        let u = VertexSet::new(6, (0..6).filter(|&v| potential[v] == Sign::Minus)).unwrap();
        assert!(switch(&g, &u).unwrap().is_all_positive());
    }

    #[test]
    fn pendants() {
        let star = SignedGraph::unsigned(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(pendant_vertices(&star).members(), &[1, 2, 3, 4]);
        assert!(pendant_vertices(&cycle(6)).is_empty());
        assert_eq!(pendant_vertices(&path(3)).members(), &[0, 2]);
    }

    #[test]
    fn layers() {
        let c5 = cycle(5);
        let all = neighborhood_layers(&c5, &VertexSet::all(5)).unwrap();
        assert_eq!(all.depth(), 0);

        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.push((0, 5));
        let g = SignedGraph::unsigned(6, edges).unwrap();
        let l = neighborhood_layers(&g, &VertexSet::new(6, 0..5).unwrap()).unwrap();
        assert_eq!(l.layer(1), &[5]);
        assert!(l.layer(2).is_empty());

        let l = neighborhood_layers(&path(5), &VertexSet::new(5, [2]).unwrap()).unwrap();
        assert_eq!(l.layer(1), &[1, 3]);
        assert_eq!(l.layer(2), &[0, 4]);

        assert_eq!(
            neighborhood_layers(&c5, &VertexSet::empty(5)),
            Err(StructureError::EmptyVertexSet)
        );
    }

    #[test]
    fn external_paths() {
        let c6 = cycle(6);
        let w = shortest_cycle(&c6).unwrap();
        assert!(internally_disjoint_paths(&c6, &w).is_empty());

        // C_4 plus vertex 4 adjacent to 0 and 2
        let mut edges: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        edges.extend([(0, 4), (2, 4)]);
        let g = SignedGraph::unsigned(5, edges).unwrap();
        let w = CycleWitness::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            internally_disjoint_paths(&g, &w),
            vec![ExternalPath { length: 2, endpoints: (0, 2) }]
        );
    }

    #[test]
    fn cycle_witness_validation() {
        let c5 = cycle(5);
        assert!(CycleWitness::new(&c5, vec![0, 1, 2]).is_err());
        assert!(CycleWitness::new(&c5, vec![0, 1]).is_err());
        assert!(CycleWitness::new(&c5, vec![0, 1, 2, 3, 4]).is_ok());
    }
}
