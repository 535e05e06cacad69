//! Constructors and recognizers for cycles, paths, stars, balanced complete
//! multipartite graphs, canonical unicyclic graphs, cycles with a pendant
//! star, and theta graphs.
//!
//! Constructors use a fixed vertex layout so fixtures are reproducible:
//! cycle vertices come first in cyclic order, attached vertices follow.

use std::fmt;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph, Vertex};
use crate::structure::{is_balanced, is_connected};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("inconsistent star decomposition: {0}")]
    InconsistentDecomposition(String),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}

/// Cycle on `0..n` in order. The unbalanced signing negates edge `0-1` only.
pub fn make_cycle(n: usize, balanced: bool) -> Result<SignedGraph, FamilyError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges = (0..n).map(|i| {
        let sign = Sign::from_negative(!balanced && i == 0);
        (i, (i + 1) % n, sign)
    });
    Ok(SignedGraph::new(n, edges).expect("cycle edges are valid"))
}

pub fn make_path(n: usize) -> Result<SignedGraph, FamilyError> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid"))
}

/// Star `S_{leaves+1}` with centre 0.
pub fn make_star(leaves: usize) -> Result<SignedGraph, FamilyError> {
    if leaves < 1 {
        return Err(invalid("star needs at least one leaf"));
    }
    Ok(SignedGraph::unsigned(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star"))
}

/// All-positive complete multipartite graph; parts occupy consecutive
/// vertex ranges in the given order.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<SignedGraph, FamilyError> {
    if parts.len() < 2 {
        return Err(invalid("complete multipartite graph needs at least 2 parts"));
    }
    if parts.contains(&0) {
        return Err(invalid("part sizes must be >= 1"));
    }
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let part_of = &part_of;
    Ok(SignedGraph::unsigned(n, edges.filter(|&(u, v)| part_of[u] != part_of[v]))
        .expect("valid multipartite edges"))
}

/// All-positive cycle `0..girth` with `leaves` pendant vertices attached to
/// each listed cycle position.
pub fn make_canonical_unicyclic(
    girth: usize,
    stars: &[(usize, usize)],
) -> Result<SignedGraph, FamilyError> {
    make_signed_canonical_unicyclic(girth, true, stars)
}

pub fn make_signed_canonical_unicyclic(
    girth: usize,
    balanced: bool,
    stars: &[(usize, usize)],
) -> Result<SignedGraph, FamilyError> {
    let cycle = make_cycle(girth, balanced)?;
    let mut used = vec![false; girth];
    for &(pos, leaves) in stars {
        if pos >= girth {
            return Err(invalid(format!("star position {pos} outside cycle of length {girth}")));
        }
        if used[pos] {
            return Err(invalid(format!("duplicate star position {pos}")));
        }
        if leaves < 1 {
            return Err(invalid("each star needs at least one leaf"));
        }
        used[pos] = true;
    }
    let total: usize = stars.iter().map(|s| s.1).sum();
    let mut edges: Vec<(Vertex, Vertex, Sign)> =
        cycle.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
    let mut next = girth;
    for &(pos, leaves) in stars {
        for _ in 0..leaves {
            edges.push((pos, next, Sign::Plus));
            next += 1;
        }
    }
    Ok(SignedGraph::new(girth + total, edges).expect("valid unicyclic edges"))
}

/// Cycle `0..girth`, star centre `girth` joined to cycle vertex 0, leaves
/// `girth+1..=girth+t`.
pub fn make_cycle_with_pendant_star(
    girth: usize,
    balanced: bool,
    t: usize,
) -> Result<SignedGraph, FamilyError> {
    if t < 1 {
        return Err(invalid("pendant star needs t >= 1 leaves"));
    }
    let cycle = make_cycle(girth, balanced)?;
    let centre = girth;
    let edges = cycle
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.sign))
        .chain(std::iter::once((0, centre, Sign::Plus)))
        .chain((1..=t).map(|i| (centre, centre + i, Sign::Plus)));
    Ok(SignedGraph::new(girth + 1 + t, edges).expect("valid edges"))
}

/// Signs of the two independent cycles of a theta graph: the cycle through
/// the `k` and `l` paths and the one through the `l` and `m` paths. The
/// third cycle's sign is their product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaSigns {
    pub kl: Sign,
    pub lm: Sign,
}

impl ThetaSigns {
    pub const BALANCED: ThetaSigns = ThetaSigns { kl: Sign::Plus, lm: Sign::Plus };

    pub fn new(kl: Sign, lm: Sign) -> Self {
        ThetaSigns { kl, lm }
    }

    pub fn km(&self) -> Sign {
        self.kl * self.lm
    }

    pub fn is_balanced(&self) -> bool {
        self.kl == Sign::Plus && self.lm == Sign::Plus
    }
}

fn check_theta(orders: [usize; 3]) -> Result<(), FamilyError> {
    if orders.iter().any(|&x| x < 2) {
        return Err(invalid("theta paths need at least 2 vertices"));
    }
    if orders.iter().filter(|&&x| x == 2).count() > 1 {
        return Err(invalid("at most one theta path may be a single edge"));
    }
    Ok(())
}

/// Theta graph: hubs 0 and 1 joined by paths with `k`, `l`, `m` vertices
/// (hubs included), internal vertices numbered path by path. Signs are
/// realized by negating the first edge of the `k` path and/or the `m` path.
pub fn make_theta(k: usize, l: usize, m: usize, signs: ThetaSigns) -> Result<SignedGraph, FamilyError> {
    check_theta([k, l, m])?;
    let n = k + l + m - 4;
    let mut edges = Vec::with_capacity(n + 1);
    let mut next = 2;
    for (order, negate_first) in [(k, signs.kl.is_negative()), (l, false), (m, signs.lm.is_negative())] {
        let mut verts = vec![0];
        verts.extend(next..next + order - 2);
        verts.push(1);
        next += order - 2;
        for (i, w) in verts.windows(2).enumerate() {
            edges.push((w[0], w[1], Sign::from_negative(negate_first && i == 0)));
        }
    }
    Ok(SignedGraph::new(n, edges).expect("valid theta edges"))
}

/// Cyclic gap structure of a canonical unicyclic graph: `t` starred cycle
/// vertices, `gaps[i]` unstarred cycle vertices after the `i`-th starred
/// one, and its leaf count. Normalized to the least rotation/reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarDecomposition {
    pub t: usize,
    pub gaps: Vec<usize>,
    pub leaf_counts: Vec<usize>,
}

impl StarDecomposition {
    /// Normalizes a cyclic sequence of (leaf count, following gap) pairs.
    pub fn from_cyclic(leaf_counts: &[usize], gaps: &[usize]) -> Result<Self, FamilyError> {
        let t = gaps.len();
        if t == 0 || leaf_counts.len() != t {
            return Err(FamilyError::InconsistentDecomposition(
                "need t >= 1 stars and one gap per star".into(),
            ));
        }
        if leaf_counts.contains(&0) {
            return Err(FamilyError::InconsistentDecomposition("leaf counts must be >= 1".into()));
        }
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for start in 0..t {
            let fwd: (Vec<usize>, Vec<usize>) = (
                (0..t).map(|i| gaps[(start + i) % t]).collect(),
                (0..t).map(|i| leaf_counts[(start + i) % t]).collect(),
            );
            // walking backwards from star `start`: the gap after star j is gaps[j-1]
            let bwd: (Vec<usize>, Vec<usize>) = (
                (0..t).map(|i| gaps[(start + 2 * t - 1 - i) % t]).collect(),
                (0..t).map(|i| leaf_counts[(start + t - i) % t]).collect(),
            );
            for cand in [fwd, bwd] {
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let (gaps, leaf_counts) = best.unwrap();
        Ok(StarDecomposition { t, gaps, leaf_counts })
    }

    pub fn girth(&self) -> usize {
        self.t + self.gaps.iter().sum::<usize>()
    }

    /// `t + Σ ⌊n_i / 2⌋`: pendant reduction removes one starred vertex per
    /// star and leaves paths of the gap orders.
    pub fn predicted_positive_inertia(&self) -> usize {
        self.t + self.gaps.iter().map(|g| g / 2).sum::<usize>()
    }
}

impl fmt::Display for StarDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={},gaps={:?},leaves={:?}", self.t, self.gaps, self.leaf_counts)
    }
}

/// Parity pattern of the gap orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityKind {
    SingleStar,
    AllGapsOdd,
    ExactlyOneEvenGap,
    Neither,
}

impl ParityKind {
    pub fn name(&self) -> &'static str {
        match self {
            ParityKind::SingleStar => "t=1",
            ParityKind::AllGapsOdd => "all-gaps-odd",
            ParityKind::ExactlyOneEvenGap => "exactly-one-even-gap",
            ParityKind::Neither => "neither",
        }
    }
}

impl serde::Serialize for ParityKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for ParityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityCondition {
    pub kind: ParityKind,
    pub girth_mod_4: usize,
}

/// Labels the gap parity structure; makes no claim about `p+`.
pub fn parity_condition(sd: &StarDecomposition, girth: usize) -> Result<ParityCondition, FamilyError> {
    if sd.t == 0 || sd.gaps.len() != sd.t || sd.leaf_counts.len() != sd.t {
        return Err(FamilyError::InconsistentDecomposition("length mismatch".into()));
    }
    if sd.girth() != girth {
        return Err(FamilyError::InconsistentDecomposition(format!(
            "t + sum of gaps = {} but girth = {girth}",
            sd.girth()
        )));
    }
    let kind = if sd.t == 1 {
        ParityKind::SingleStar
    } else {
        match sd.gaps.iter().filter(|g| *g % 2 == 0).count() {
            0 => ParityKind::AllGapsOdd,
            1 => ParityKind::ExactlyOneEvenGap,
            _ => ParityKind::Neither,
        }
    };
    Ok(ParityCondition { kind, girth_mod_4: girth % 4 })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    Cycle { n: usize, balanced: bool },
    Path { n: usize },
    Star { leaves: usize },
    /// Part sizes ascending.
    BalancedCompleteMultipartite { parts: Vec<usize> },
    CanonicalUnicyclic { girth: usize, balanced: bool, decomposition: StarDecomposition },
    CycleWithPendantStar { girth: usize, balanced: bool, t: usize },
    /// Normalized so that `l <= k <= m`.
    Theta { k: usize, l: usize, m: usize, signs: ThetaSigns },
    Other,
}

impl FamilyLabel {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilyLabel::Cycle { .. } => "Cycle",
            FamilyLabel::Path { .. } => "Path",
            FamilyLabel::Star { .. } => "Star",
            FamilyLabel::BalancedCompleteMultipartite { .. } => "BalancedCompleteMultipartite",
            FamilyLabel::CanonicalUnicyclic { .. } => "CanonicalUnicyclic",
            FamilyLabel::CycleWithPendantStar { .. } => "CycleWithPendantStar",
            FamilyLabel::Theta { .. } => "Theta",
            FamilyLabel::Other => "Other",
        }
    }

    /// Theta label for paths of the given orders and path sign products,
    /// normalized to `l <= k <= m` with positive cycle signs preferred.
    pub fn theta(orders: [usize; 3], path_signs: [Sign; 3]) -> FamilyLabel {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut best: Option<(usize, usize, usize, ThetaSigns)> = None;
        for [a, b, c] in PERMS {
            let (k, l, m) = (orders[a], orders[b], orders[c]);
            if !(l <= k && k <= m) {
                continue;
            }
            let signs = ThetaSigns::new(path_signs[a] * path_signs[b], path_signs[b] * path_signs[c]);
            let key = (signs.kl.is_negative(), signs.lm.is_negative());
            let better = match &best {
                None => true,
                Some((_, _, _, s)) => key < (s.kl.is_negative(), s.lm.is_negative()),
            };
            if better {
                best = Some((k, l, m, signs));
            }
        }
        let (k, l, m, signs) = best.expect("some ordering satisfies l <= k <= m");
        FamilyLabel::Theta { k, l, m, signs }
    }

    /// Normalized label of `make_theta(k, l, m, signs)`.
    pub fn theta_from_params(k: usize, l: usize, m: usize, signs: ThetaSigns) -> FamilyLabel {
        FamilyLabel::theta([k, l, m], [signs.kl, Sign::Plus, signs.lm])
    }
}

fn balance_word(balanced: bool) -> &'static str {
    if balanced {
        "balanced"
    } else {
        "unbalanced"
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::Cycle { n, balanced } => write!(f, "Cycle({n},{})", balance_word(*balanced)),
            FamilyLabel::Path { n } => write!(f, "Path({n})"),
            FamilyLabel::Star { leaves } => write!(f, "Star({leaves})"),
            FamilyLabel::BalancedCompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "BalancedCompleteMultipartite[{}]", parts.join(","))
            }
            FamilyLabel::CanonicalUnicyclic { girth, balanced, decomposition } => write!(
                f,
                "CanonicalUnicyclic(g={girth},{},{decomposition})",
                balance_word(*balanced)
            ),
            FamilyLabel::CycleWithPendantStar { girth, balanced, t } => {
                write!(f, "CycleWithPendantStar(g={girth},{},t={t})", balance_word(*balanced))
            }
            FamilyLabel::Theta { k, l, m, signs } => {
                if signs.is_balanced() {
                    write!(f, "Theta({k},{l},{m})")
                } else {
                    write!(f, "Theta({k},{l},{m};{},{})", signs.kl, signs.lm)
                }
            }
            FamilyLabel::Other => write!(f, "Other"),
        }
    }
}

/// Ascending part sizes if the underlying graph is complete multipartite
/// with at least two parts (non-adjacency is an equivalence relation).
pub fn complete_multipartite_parts(g: &SignedGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut reps: Vec<Vertex> = Vec::new();
    let mut part = vec![0usize; n];
    for (v, slot) in part.iter_mut().enumerate() {
        match reps.iter().position(|&r| !g.adjacent(v, r)) {
            Some(p) => *slot = p,
            None => {
                *slot = reps.len();
                reps.push(v);
            }
        }
    }
    if reps.len() < 2 {
        return None;
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) != (part[u] != part[v]) {
                return None;
            }
        }
    }
    let mut sizes = vec![0; reps.len()];
    for &p in &part {
        sizes[p] += 1;
    }
    sizes.sort_unstable();
    Some(sizes)
}

pub fn balanced_complete_multipartite_parts(g: &SignedGraph) -> Option<Vec<usize>> {
    complete_multipartite_parts(g).filter(|_| is_balanced(g))
}

/// Cycle of a connected unicyclic graph in cyclic order, starting at its
/// smallest vertex toward the smaller of its two cycle neighbours.
pub fn unicyclic_cycle(g: &SignedGraph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 3 || g.m() != n || !is_connected(g).ok()? {
        return None;
    }
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(x) = stack.pop() {
        removed[x] = true;
        for y in g.neighbors(x) {
            if !removed[y] {
                deg[y] -= 1;
                if deg[y] == 1 {
                    stack.push(y);
                }
            }
        }
    }
    let start = (0..n).find(|&v| !removed[v])?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).find(|&y| !removed[y])?;
    while cur != start {
        cycle.push(cur);
        let next = g.neighbors(cur).find(|&y| !removed[y] && y != prev)?;
        prev = cur;
        cur = next;
    }
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    Some(cycle)
}

/// Present iff `g` is a cycle with `t >= 1` of its vertices carrying pendant
/// leaves and nothing else attached.
pub fn star_decomposition(g: &SignedGraph) -> Option<StarDecomposition> {
    let cycle = unicyclic_cycle(g)?;
    let n = g.n();
    let mut on_cycle = vec![false; n];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    let mut leaves = vec![0usize; n];
    for v in (0..n).filter(|&v| !on_cycle[v]) {
        let mut nbrs = g.neighbors(v);
        let (Some(c), None) = (nbrs.next(), nbrs.next()) else {
            return None;
        };
        if !on_cycle[c] {
            return None;
        }
        leaves[c] += 1;
    }
    let starred: Vec<usize> = (0..cycle.len()).filter(|&i| leaves[cycle[i]] > 0).collect();
    if starred.is_empty() {
        return None;
    }
    let len = cycle.len();
    let t = starred.len();
    let gaps: Vec<usize> = (0..t)
        .map(|i| {
            let (a, b) = (starred[i], starred[(i + 1) % t]);
            (b + len - a - 1) % len
        })
        .collect();
    let counts: Vec<usize> = starred.iter().map(|&i| leaves[cycle[i]]).collect();
    StarDecomposition::from_cyclic(&counts, &gaps).ok()
}

fn cycle_with_pendant_star(g: &SignedGraph, cycle: &[Vertex]) -> Option<FamilyLabel> {
    let n = g.n();
    let mut on_cycle = vec![false; n];
    for &v in cycle {
        on_cycle[v] = true;
    }
    let off: Vec<Vertex> = (0..n).filter(|&v| !on_cycle[v]).collect();
    let attached: Vec<Vertex> = off
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).any(|w| on_cycle[w]))
        .collect();
    let [centre] = attached.as_slice() else {
        return None;
    };
    if g.neighbors(*centre).filter(|&w| on_cycle[w]).count() != 1 {
        return None;
    }
    let t = off.len() - 1;
    if t < 1 {
        return None;
    }
    let leaves_ok = off
        .iter()
        .filter(|&&v| v != *centre)
        .all(|&v| g.degree(v) == 1 && g.adjacent(v, *centre));
    leaves_ok.then(|| FamilyLabel::CycleWithPendantStar {
        girth: cycle.len(),
        balanced: is_balanced(g),
        t,
    })
}

fn theta_label(g: &SignedGraph) -> Option<FamilyLabel> {
    let n = g.n();
    if g.m() != n + 1 {
        return None;
    }
    let deg = g.degrees();
    let hubs: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 3).collect();
    if hubs.len() != 2 || (0..n).any(|v| deg[v] != 2 && deg[v] != 3) {
        return None;
    }
    let (h0, h1) = (hubs[0], hubs[1]);
    let mut orders = [0; 3];
    let mut signs = [Sign::Plus; 3];
    for (i, first) in g.neighbors(h0).enumerate() {
        let mut prev = h0;
        let mut cur = first;
        let mut order = 2;
        let mut sign = g.sign(h0, first).unwrap();
        while cur != h1 {
            if cur == h0 {
                return None;
            }
            let next = g.neighbors(cur).find(|&y| y != prev)?;
            sign = sign * g.sign(cur, next).unwrap();
            prev = cur;
            cur = next;
            order += 1;
        }
        orders[i] = order;
        signs[i] = sign;
    }
    Some(FamilyLabel::theta(orders, signs))
}

/// Most specific family label of a connected graph.
pub fn recognize(g: &SignedGraph) -> Result<FamilyLabel, FamilyError> {
    if !is_connected(g).map_err(|_| FamilyError::Disconnected)? {
        return Err(FamilyError::Disconnected);
    }
    let n = g.n();
    let deg = g.degrees();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    if g.m() + 1 == n {
        if max_deg <= 2 {
            return Ok(FamilyLabel::Path { n });
        }
        if max_deg == n - 1 {
            return Ok(FamilyLabel::Star { leaves: n - 1 });
        }
        return Ok(FamilyLabel::Other);
    }
    if g.m() == n && deg.iter().all(|&d| d == 2) {
        return Ok(FamilyLabel::Cycle { n, balanced: is_balanced(g) });
    }
    if let Some(parts) = balanced_complete_multipartite_parts(g) {
        return Ok(FamilyLabel::BalancedCompleteMultipartite { parts });
    }
    if let Some(cycle) = unicyclic_cycle(g) {
        let balanced = is_balanced(g);
        if let Some(decomposition) = star_decomposition(g) {
            return Ok(FamilyLabel::CanonicalUnicyclic { girth: cycle.len(), balanced, decomposition });
        }
        if let Some(label) = cycle_with_pendant_star(g, &cycle) {
            return Ok(label);
        }
        return Ok(FamilyLabel::Other);
    }
    if let Some(label) = theta_label(g) {
        return Ok(label);
    }
    Ok(FamilyLabel::Other)
}
