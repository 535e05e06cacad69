//! Connected graphs up to isomorphism and signings up to switching.
//!
//! Isomorphism classes are keyed by a canonical code: the least adjacency
//! bit string over all vertex orders compatible with an isomorphism-invariant
//! colour refinement (degrees, then iterated neighbour colour multisets).
//! Switching classes are fixed by a depth-first spanning tree whose edges
//! are kept positive; the remaining `m - n + 1` edges carry the class.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph, Vertex};
use crate::structure::is_connected;

/// Largest order supported by [`canonical_code`] and the enumerators.
pub const MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} outside supported range 1..={max}")]
    UnsupportedOrder { n: usize, max: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("signed graph does not share the underlying graph of this enumeration")]
    UnderlyingMismatch,
}

/// Isomorphism-invariant key of an underlying graph. Bits follow the upper
/// triangle column by column, `(0,1), (0,2), (1,2), (0,3), ...`, first pair
/// most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u64,
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.n * self.n.saturating_sub(1) / 2;
        if width == 0 {
            return write!(f, "{}:", self.n);
        }
        write!(f, "{}:{:0width$b}", self.n, self.bits, width = width)
    }
}

#[inline]
fn pair_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    b * (b - 1) / 2 + a
}

/// Stable colour classes: ranks of (colour, sorted neighbour colours)
/// signatures, iterated to a fixed point.
fn refine_colours(g: &SignedGraph) -> Vec<usize> {
    let n = g.n();
    let deg = g.degrees();
    let mut colour = rank(&deg.iter().map(|&d| vec![d]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).map(|w| colour[w]).collect();
                s.sort_unstable();
                s.insert(0, colour[v]);
                s
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

struct Search<'a> {
    g: &'a SignedGraph,
    total_bits: usize,
    /// cell index owning each position
    position_cell: Vec<usize>,
    cells: Vec<Vec<Vertex>>,
    order: Vec<Vertex>,
    used: Vec<bool>,
    best: Option<(u64, Vec<Vertex>)>,
}

impl Search<'_> {
    fn prefix(&self, code: u64, len: usize) -> u64 {
        if len == 0 {
            0
        } else {
            code >> (self.total_bits - len)
        }
    }

    fn run(&mut self, pos: usize, code: u64) {
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = self.position_cell[pos];
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for (a, &w) in self.order.iter().enumerate() {
                if self.g.adjacent(v, w) {
                    next |= 1u64 << (self.total_bits - 1 - pair_index(a, pos));
                }
            }
            let len = pos * (pos + 1) / 2;
            if let Some((b, _)) = &self.best {
                if self.prefix(next, len) > self.prefix(*b, len) {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, next);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical code and a canonical order: `order[i]` is the vertex placed at
/// position `i`.
fn canonical_form(g: &SignedGraph) -> (CanonicalCode, Vec<Vertex>) {
    let n = g.n();
    let colour = refine_colours(g);
    let ncells = colour.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); ncells];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    let position_cell: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, vs)| std::iter::repeat_n(c, vs.len()))
        .collect();
    let mut search = Search {
        g,
        total_bits: n * n.saturating_sub(1) / 2,
        position_cell,
        cells,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0);
    let (bits, order) = search.best.unwrap_or((0, Vec::new()));
    (CanonicalCode { n, bits }, order)
}

pub fn canonical_code(g: &SignedGraph) -> Result<CanonicalCode, EnumError> {
    check_order(g.n())?;
    Ok(canonical_form(g).0)
}

/// The all-positive graph realizing `code`, vertices in canonical positions.
pub fn graph_from_code(code: CanonicalCode) -> SignedGraph {
    let n = code.n;
    let total = n * n.saturating_sub(1) / 2;
    let edges = (1..n)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .filter(|&(a, b)| code.bits >> (total - 1 - pair_index(a, b)) & 1 == 1);
    SignedGraph::unsigned(n, edges).expect("code describes a simple graph")
}

/// Underlying graph of `g` relabelled into canonical positions.
pub fn canonical_graph(g: &SignedGraph) -> Result<SignedGraph, EnumError> {
    check_order(g.n())?;
    Ok(graph_from_code(canonical_form(g).0))
}

fn check_order(n: usize) -> Result<(), EnumError> {
    if n > MAX_ORDER {
        return Err(EnumError::UnsupportedOrder { n, max: MAX_ORDER });
    }
    Ok(())
}

/// One all-positive representative per isomorphism class of connected graphs
/// on `n` vertices, in canonical position, sorted by code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<SignedGraph>, EnumError> {
    Ok(enumerate_connected_codes(n)?.into_iter().map(graph_from_code).collect())
}

/// Codes of the connected graphs on `n` vertices, ascending. Every connected
/// graph on `n >= 2` vertices has a vertex whose removal keeps it connected,
/// so extending each smaller class by one vertex reaches all of them.
pub fn enumerate_connected_codes(n: usize) -> Result<Vec<CanonicalCode>, EnumError> {
    if n == 0 {
        return Err(EnumError::UnsupportedOrder { n, max: MAX_ORDER });
    }
    check_order(n)?;
    let mut level = vec![CanonicalCode { n: 1, bits: 0 }];
    for order in 2..=n {
        let mut next: BTreeMap<CanonicalCode, ()> = BTreeMap::new();
        let new_vertex = order - 1;
        for code in &level {
            let base = graph_from_code(*code);
            let base_edges: Vec<(Vertex, Vertex)> = base.edges().iter().map(|e| (e.u, e.v)).collect();
            for mask in 1u32..(1 << new_vertex) {
                let edges = base_edges.iter().copied().chain(
                    (0..new_vertex).filter(|&w| mask >> w & 1 == 1).map(|w| (w, new_vertex)),
                );
                let g = SignedGraph::unsigned(order, edges).expect("valid extension");
                next.insert(canonical_form(&g).0, ());
            }
        }
        level = next.into_keys().collect();
    }
    Ok(level)
}

/// Signings of a connected graph, one per switching class. Edges of a
/// depth-first spanning tree rooted at 0 stay positive; bit `i` of a class
/// index negates the `i`-th remaining edge (sorted by endpoints).
#[derive(Debug, Clone)]
pub struct SwitchingClasses {
    base: SignedGraph,
    tree: Vec<(Vertex, Vertex)>,
    free: Vec<(Vertex, Vertex)>,
}

impl SwitchingClasses {
    pub fn new(g: &SignedGraph) -> Result<Self, EnumError> {
        if !is_connected(g).map_err(|_| EnumError::Disconnected)? {
            return Err(EnumError::Disconnected);
        }
        let base = g.underlying();
        let n = base.n();
        let mut visited = vec![false; n];
        let mut in_tree = vec![false; n * n];
        let mut tree = Vec::with_capacity(n.saturating_sub(1));
        let mut stack: Vec<(Vertex, Vec<Vertex>)> = vec![(0, base.neighbors(0).collect())];
        visited[0] = true;
        while let Some((v, pending)) = stack.last_mut() {
            let v = *v;
            match pending.iter().position(|&w| !visited[w]) {
                Some(i) => {
                    let w = pending[i];
                    pending.drain(..=i);
                    visited[w] = true;
                    in_tree[v * n + w] = true;
                    in_tree[w * n + v] = true;
                    tree.push((v.min(w), v.max(w)));
                    stack.push((w, base.neighbors(w).collect()));
                }
                None => {
                    stack.pop();
                }
            }
        }
        let free = base
            .edges()
            .iter()
            .filter(|e| !in_tree[e.u * n + e.v])
            .map(|e| (e.u, e.v))
            .collect();
        Ok(SwitchingClasses { base, tree, free })
    }

    pub fn base(&self) -> &SignedGraph {
        &self.base
    }

    pub fn tree_edges(&self) -> &[(Vertex, Vertex)] {
        &self.tree
    }

    pub fn free_edges(&self) -> &[(Vertex, Vertex)] {
        &self.free
    }

    /// `2^(m - n + 1)`.
    pub fn count(&self) -> u64 {
        1u64 << self.free.len()
    }

    pub fn signing(&self, index: u64) -> SignedGraph {
        let negative: Vec<(Vertex, Vertex)> = self
            .free
            .iter()
            .enumerate()
            .filter(|(i, _)| index >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SignedGraph::new(
            self.base.n(),
            self.base.edges().iter().map(|e| {
                (e.u, e.v, Sign::from_negative(negative.contains(&(e.u, e.v))))
            }),
        )
        .expect("same edge set as base")
    }

    pub fn iter(&self) -> impl Iterator<Item = SignedGraph> + '_ {
        (0..self.count()).map(move |i| self.signing(i))
    }

    /// Index of the class containing the signing `g` of the same underlying
    /// graph.
    pub fn class_index(&self, g: &SignedGraph) -> Result<u64, EnumError> {
        if g.underlying() != self.base {
            return Err(EnumError::UnderlyingMismatch);
        }
        let n = g.n();
        let mut potential = vec![Sign::Plus; n];
        let mut assigned = vec![false; n];
        assigned[0] = true;
        // tree edges were recorded in discovery order, so parents come first
        for &(a, b) in &self.tree {
            let (parent, child) = if assigned[a] { (a, b) } else { (b, a) };
            potential[child] = potential[parent] * g.sign(a, b).unwrap();
            assigned[child] = true;
        }
        let mut index = 0u64;
        for (i, &(u, v)) in self.free.iter().enumerate() {
            if (potential[u] * potential[v] * g.sign(u, v).unwrap()).is_negative() {
                index |= 1 << i;
            }
        }
        Ok(index)
    }
}

/// All switching classes of signings of the connected graph `g`.
pub fn enumerate_switching_classes(g: &SignedGraph) -> Result<Vec<SignedGraph>, EnumError> {
    Ok(SwitchingClasses::new(g)?.iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete_multipartite, make_cycle, make_path};
    use crate::graph::{switch, VertexSet};

    /// Minimum code over every vertex permutation, with no refinement.
    fn brute_force_code(g: &SignedGraph) -> u64 {
        let n = g.n();
        let total = n * n.saturating_sub(1) / 2;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        loop {
            let mut bits = 0u64;
            for b in 1..n {
                for a in 0..b {
                    if g.adjacent(perm[a], perm[b]) {
                        bits |= 1 << (total - 1 - pair_index(a, b));
                    }
                }
            }
            best = best.min(bits);
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                return if n == 0 { 0 } else { best };
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }

    fn all_connected_graphs(n: usize) -> Vec<SignedGraph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                SignedGraph::unsigned(
                    n,
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
                )
                .unwrap()
            })
            .filter(|g| is_connected(g).unwrap())
            .collect()
    }

    #[test]
    fn refined_code_agrees_with_brute_force_classes() {
        for (n, want) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)] {
            let mut refined = std::collections::HashMap::new();
            let mut brute = std::collections::HashMap::new();
            for g in all_connected_graphs(n) {
                let r = canonical_code(&g).unwrap();
                let b = brute_force_code(&g);
                // the two keys must induce the same partition
                assert_eq!(*refined.entry(r).or_insert(b), b);
                assert_eq!(*brute.entry(b).or_insert(r), r);
            }
            assert_eq!(refined.len(), want, "n={n}");
            let enumerated: Vec<CanonicalCode> = enumerate_connected_codes(n).unwrap();
            let mut keys: Vec<CanonicalCode> = refined.into_keys().collect();
            keys.sort();
            assert_eq!(enumerated, keys);
        }
    }

    #[test]
    fn n6_classes_match_brute_force() {
        let codes: std::collections::BTreeSet<u64> =
            enumerate_connected_graphs(6).unwrap().iter().map(brute_force_code).collect();
        assert_eq!(codes.len(), 112);
    }

    #[test]
    fn order_seven_count() {
        assert_eq!(enumerate_connected_codes(7).unwrap().len(), 853);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected_graphs(2).unwrap().len(), 1);
        let three = enumerate_connected_graphs(3).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(three.iter().map(SignedGraph::m).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(enumerate_connected_graphs(5).unwrap().len(), 21);
        assert!(enumerate_connected_graphs(9).is_err());
        assert!(enumerate_connected_graphs(0).is_err());
    }

    #[test]
    fn codes_distinguish_and_identify() {
        let p3 = make_path(3).unwrap();
        let p3b = SignedGraph::unsigned(3, [(0, 2), (2, 1)]).unwrap();
        let k3 = make_cycle(3, true).unwrap();
        assert_eq!(canonical_code(&p3).unwrap(), canonical_code(&p3b).unwrap());
        assert_ne!(canonical_code(&p3).unwrap(), canonical_code(&k3).unwrap());
        let g = make_complete_multipartite(&[2, 3]).unwrap();
        let h = g.relabel(&[4, 2, 0, 3, 1]).unwrap();
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        assert_eq!(graph_from_code(canonical_code(&h).unwrap()), canonical_graph(&g).unwrap());
    }

    #[test]
    fn signs_do_not_affect_code() {
        let c = make_cycle(5, false).unwrap();
        assert_eq!(canonical_code(&c).unwrap(), canonical_code(&c.underlying()).unwrap());
    }

    #[test]
    fn switching_class_counts() {
        assert_eq!(enumerate_switching_classes(&make_path(5).unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_switching_classes(&make_cycle(5, true).unwrap()).unwrap().len(), 2);
        let k4 = make_complete_multipartite(&[1, 1, 1, 1]).unwrap();
        assert_eq!(enumerate_switching_classes(&k4).unwrap().len(), 8);
        assert_eq!(
            SwitchingClasses::new(&SignedGraph::empty(2)).unwrap_err(),
            EnumError::Disconnected
        );
    }

    #[test]
    fn class_index_inverts_signing() {
        let k4 = make_complete_multipartite(&[1, 1, 1, 1]).unwrap();
        let classes = SwitchingClasses::new(&k4).unwrap();
        for i in 0..classes.count() {
            let s = classes.signing(i);
            assert_eq!(classes.class_index(&s).unwrap(), i);
            let switched = switch(&s, &VertexSet::new(4, [1, 3]).unwrap()).unwrap();
            assert_eq!(classes.class_index(&switched).unwrap(), i);
        }
        let other = make_cycle(4, true).unwrap();
        assert!(classes.class_index(&other).is_err());
    }
}
