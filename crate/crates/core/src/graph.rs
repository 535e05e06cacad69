//! Signed graph data model, switching and induced subgraphs.
//!
//! A [`SignedGraph`] is a simple undirected graph on vertices `0..n` whose
//! edges each carry a sign `+1` or `-1`. The all-positive signing stands in
//! for an ordinary graph.

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

/// Edge sign, stored as `+1` / `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(i8)]
pub enum Sign {
    Minus = -1,
    Plus = 1,
}

impl Sign {
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_negative(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self != rhs)
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        Sign::from_negative(!self.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(Vertex),
    #[error("edge {u}-{v} not present")]
    MissingEdge { u: Vertex, v: Vertex },
}

/// A simple signed graph. Edges are kept sorted by `(u, v)` with `u < v`;
/// a dense sign matrix mirrors them for constant-time lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<i8>,
}

impl SignedGraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            adj: vec![0; n * n],
        }
    }

    /// Builds a graph from `(u, v, sign)` triples in any order and orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Sign)>,
    {
        let mut g = SignedGraph::empty(n);
        for (a, b, sign) in edges {
            g.insert_edge(a, b, sign)?;
        }
        g.edges.sort();
        Ok(g)
    }

    /// All-positive graph from unordered vertex pairs.
    pub fn unsigned<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        SignedGraph::new(n, pairs.into_iter().map(|(u, v)| (u, v, Sign::Plus)))
    }

    fn insert_edge(&mut self, a: Vertex, b: Vertex, sign: Sign) -> Result<(), GraphError> {
        for x in [a, b] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if self.adj[u * self.n + v] != 0 {
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj[u * self.n + v] = sign.value();
        self.adj[v * self.n + u] = sign.value();
        self.edges.push(Edge { u, v, sign });
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Signed adjacency entry: `+1`, `-1` or `0`.
    #[inline]
    pub fn entry(&self, u: Vertex, v: Vertex) -> i8 {
        self.adj[u * self.n + v]
    }

    pub fn sign(&self, u: Vertex, v: Vertex) -> Option<Sign> {
        match self.entry(u, v) {
            0 => None,
            x if x > 0 => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        }
    }

    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.entry(u, v) != 0
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Dense signed adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i8>> {
        self.adj.chunks(self.n.max(1)).take(self.n).map(<[i8]>::to_vec).collect()
    }

    /// Same graph with every sign set to `+1`.
    pub fn underlying(&self) -> SignedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.sign = Sign::Plus;
        }
        for x in &mut g.adj {
            *x = x.abs();
        }
        g
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Plus)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// Returns a copy with the sign of edge `{u, v}` replaced.
    pub fn with_sign(&self, u: Vertex, v: Vertex, sign: Sign) -> Result<SignedGraph, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n: self.n });
        }
        if !self.adjacent(u, v) {
            return Err(GraphError::MissingEdge { u: u.min(v), v: u.max(v) });
        }
        let mut g = self.clone();
        let (a, b) = (u.min(v), u.max(v));
        let idx = g.edges.iter().position(|e| e.u == a && e.v == b).expect("edge present");
        g.edges[idx].sign = sign;
        g.adj[a * g.n + b] = sign.value();
        g.adj[b * g.n + a] = sign.value();
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.sign))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.sign)));
        SignedGraph::new(self.n + other.n, edges).expect("disjoint union of valid graphs")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<SignedGraph, GraphError> {
        let set = VertexSet::new(self.n, perm.iter().copied())?;
        if set.len() != self.n {
            return Err(GraphError::VertexOutOfRange { vertex: self.n, n: self.n });
        }
        SignedGraph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)),
        )
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, ")")
    }
}

/// A duplicate-free subset of the vertices of a graph on `n` vertices,
/// stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new<I>(n: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in members {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen[v] = true;
            out.push(v);
        }
        out.sort_unstable();
        Ok(VertexSet { n, members: out })
    }

    pub fn empty(n: usize) -> Self {
        VertexSet { n, members: Vec::new() }
    }

    pub fn all(n: usize) -> Self {
        VertexSet { n, members: (0..n).collect() }
    }

    /// Builds a set from a membership mask of length `n`.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet {
            n: mask.len(),
            members: (0..mask.len()).filter(|&v| mask[v]).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn complement(&self) -> VertexSet {
        let mask = self.mask();
        VertexSet::from_mask(&mask.iter().map(|b| !b).collect::<Vec<_>>())
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let a = self.mask();
        let b = other.mask();
        let n = self.n.max(other.n);
        let mask: Vec<bool> = (0..n)
            .map(|v| a.get(v).copied().unwrap_or(false) ^ b.get(v).copied().unwrap_or(false))
            .collect();
        VertexSet::from_mask(&mask)
    }

    fn check_for(&self, g: &SignedGraph) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= g.n() => Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }
}

/// Negates every edge with exactly one endpoint in `u_set`.
pub fn switch(g: &SignedGraph, u_set: &VertexSet) -> Result<SignedGraph, GraphError> {
    u_set.check_for(g)?;
    let mut side = vec![false; g.n()];
    for &v in u_set.members() {
        side[v] = true;
    }
    SignedGraph::new(
        g.n(),
        g.edges().iter().map(|e| {
            let sign = if side[e.u] != side[e.v] { -e.sign } else { e.sign };
            (e.u, e.v, sign)
        }),
    )
}

/// Subgraph induced on `s`, relabelled `0..|s|` in increasing vertex order.
pub fn induced_subgraph(g: &SignedGraph, s: &VertexSet) -> Result<SignedGraph, GraphError> {
    s.check_for(g)?;
    let members = s.members();
    let mut edges = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            if let Some(sign) = g.sign(a, b) {
                edges.push((i, j, sign));
            }
        }
    }
    SignedGraph::new(members.len(), edges)
}

/// `g` with the vertices in `removed` deleted.
pub fn delete_vertices(g: &SignedGraph, removed: &[Vertex]) -> Result<SignedGraph, GraphError> {
    let mut keep = vec![true; g.n()];
    for &v in removed {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        keep[v] = false;
    }
    induced_subgraph(g, &VertexSet::from_mask(&keep))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_one_negative() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, Sign::Minus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)]).unwrap()
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(
            SignedGraph::unsigned(2, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            SignedGraph::unsigned(2, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
        assert!(matches!(
            SignedGraph::unsigned(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let a = SignedGraph::unsigned(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let b = SignedGraph::unsigned(4, [(3, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges()[0], Edge { u: 0, v: 1, sign: Sign::Plus });
    }

    #[test]
    fn switch_identities() {
        let g = triangle_one_negative();
        assert_eq!(switch(&g, &VertexSet::empty(3)).unwrap(), g);
        assert_eq!(switch(&g, &VertexSet::all(3)).unwrap(), g);
    }

    #[test]
    fn switch_single_vertex_of_triangle() {
        let g = triangle_one_negative();
        let h = switch(&g, &VertexSet::new(3, [0]).unwrap()).unwrap();
        assert_eq!(h.sign(0, 1), Some(Sign::Plus));
        assert_eq!(h.sign(0, 2), Some(Sign::Minus));
        assert_eq!(h.sign(1, 2), Some(Sign::Plus));
    }

    #[test]
    fn switch_rejects_out_of_range() {
        let g = triangle_one_negative();
        assert!(VertexSet::new(3, [3]).is_err());
        let big = VertexSet::new(5, [4]).unwrap();
        assert!(switch(&g, &big).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c4 = SignedGraph::unsigned(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(induced_subgraph(&c4, &VertexSet::all(4)).unwrap(), c4);
        let p3 = induced_subgraph(&c4, &VertexSet::new(4, [1, 2, 3]).unwrap()).unwrap();
        assert_eq!(p3, SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap());
        let empty = induced_subgraph(&c4, &VertexSet::empty(4)).unwrap();
        assert_eq!(empty.n(), 0);
        assert_eq!(empty.m(), 0);
    }

    #[test]
    fn vertex_set_rejects_duplicates() {
        assert_eq!(
            VertexSet::new(4, [1, 1]).unwrap_err(),
            GraphError::DuplicateVertex(1)
        );
    }

    #[test]
    fn with_sign_and_union() {
        let g = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        let h = g.with_sign(1, 0, Sign::Minus).unwrap();
        assert_eq!(h.entry(0, 1), -1);
        assert!(g.with_sign(0, 0, Sign::Minus).is_err());
        let u = g.disjoint_union(&h);
        assert_eq!(u.n(), 4);
        assert_eq!(u.sign(2, 3), Some(Sign::Minus));
    }
}
