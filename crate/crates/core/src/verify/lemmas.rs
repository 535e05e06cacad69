//! Per-graph consistency checks of the supporting lemmas.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::families::{balanced_complete_multipartite_parts, FamilyLabel};
use crate::graph::{delete_vertices, induced_subgraph, switch, SignedGraph, VertexSet};
use crate::inertia::{exact_inertia, InertiaTriple};
use crate::structure::{internally_disjoint_paths, neighborhood_layers, pendant_vertices, shortest_cycle};

pub const PENDANT_IDENTITY: &str = "pendant-identity";
pub const INTERLACING: &str = "interlacing";
pub const P_PLUS_ONE_MULTIPARTITE: &str = "p-plus-one-multipartite";
pub const UNBALANCED_CYCLE_FLOOR: &str = "unbalanced-cycle-floor";
pub const PATH_LENGTH: &str = "path-length";
pub const NEIGHBOURHOOD_LAYERS: &str = "neighbourhood-layers";
pub const SWITCHING_INVARIANCE: &str = "switching-invariance";

pub const ALL: [&str; 7] = [
    PENDANT_IDENTITY,
    INTERLACING,
    P_PLUS_ONE_MULTIPARTITE,
    UNBALANCED_CYCLE_FLOOR,
    PATH_LENGTH,
    NEIGHBOURHOOD_LAYERS,
    SWITCHING_INVARIANCE,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl LemmaOutcome {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        LemmaOutcome { name, passed, detail }
    }
}

/// `p+ = 1` exactly for balanced complete multipartite graphs.
pub fn p_plus_one_multipartite(g: &SignedGraph, inertia: InertiaTriple) -> LemmaOutcome {
    let multipartite = balanced_complete_multipartite_parts(g).is_some();
    LemmaOutcome::new(
        P_PLUS_ONE_MULTIPARTITE,
        (inertia.p_plus == 1) == multipartite,
        format!("p+={} balanced-complete-multipartite={multipartite}", inertia.p_plus),
    )
}

/// Evaluates every applicable check on a connected graph with known exact
/// inertia and family label. Random probes draw from `rng`.
pub fn lemma_checks<R: Rng>(
    g: &SignedGraph,
    inertia: InertiaTriple,
    family: &FamilyLabel,
    rng: &mut R,
) -> Vec<LemmaOutcome> {
    let n = g.n();
    let mut out = Vec::new();

    if let Some(&x) = pendant_vertices(g).members().first() {
        let y = g.neighbors(x).next().expect("pendant vertex has a neighbour");
        let rest = exact_inertia(&delete_vertices(g, &[x, y]).expect("in range"));
        out.push(LemmaOutcome::new(
            PENDANT_IDENTITY,
            rest.p_plus + 1 == inertia.p_plus,
            format!("pendant {x}-{y}: p+(G-x-y)+1={} p+(G)={}", rest.p_plus + 1, inertia.p_plus),
        ));
    }

    if n >= 2 {
        let size = rng.gen_range(1..n);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(rng);
        let keep = VertexSet::new(n, verts[..size].iter().copied()).expect("distinct");
        let h = exact_inertia(&induced_subgraph(g, &keep).expect("same universe"));
        out.push(LemmaOutcome::new(
            INTERLACING,
            h.p_plus <= inertia.p_plus && h.n_minus <= inertia.n_minus,
            format!("subset {:?}: H={h} G={inertia}", keep.members()),
        ));
    }

    out.push(p_plus_one_multipartite(g, inertia));

    if let FamilyLabel::Cycle { balanced: false, .. } = family {
        out.push(LemmaOutcome::new(
            UNBALANCED_CYCLE_FLOOR,
            inertia.p_plus >= 2,
            format!("p+={}", inertia.p_plus),
        ));
    }

    if let Some(cycle) = shortest_cycle(g) {
        let half = cycle.length.div_ceil(2);
        let paths = internally_disjoint_paths(g, &cycle);
        if !paths.is_empty() {
            let shortest = paths.iter().min().expect("nonempty");
            out.push(LemmaOutcome::new(
                PATH_LENGTH,
                shortest.length >= half,
                format!(
                    "shortest external path {}-{} has length {}, ⌈g/2⌉={half}",
                    shortest.endpoints.0, shortest.endpoints.1, shortest.length
                ),
            ));
        }

        let set = cycle.vertex_set(n);
        let on_cycle = exact_inertia(&induced_subgraph(g, &set).expect("same universe"));
        if on_cycle.p_plus == inertia.p_plus {
            let depth = neighborhood_layers(g, &set).expect("nonempty cycle").depth();
            out.push(LemmaOutcome::new(
                NEIGHBOURHOOD_LAYERS,
                depth <= 1,
                format!("p+(C)=p+(G)={} and {depth} layer(s) around C", inertia.p_plus),
            ));
        }
    }

    let u = VertexSet::new(n, (0..n).filter(|_| rng.gen_bool(0.5))).expect("distinct");
    let switched = exact_inertia(&switch(g, &u).expect("same universe"));
    out.push(LemmaOutcome::new(
        SWITCHING_INVARIANCE,
        switched == inertia,
        format!("U={:?}: {switched} vs {inertia}", u.members()),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete_multipartite, make_cycle, make_star, recognize};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn run(g: &SignedGraph) -> Vec<LemmaOutcome> {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        lemma_checks(g, exact_inertia(g), &recognize(g).unwrap(), &mut rng)
    }

    fn outcome<'a>(all: &'a [LemmaOutcome], name: &str) -> Option<&'a LemmaOutcome> {
        all.iter().find(|o| o.name == name)
    }

    #[test]
    fn star_pendant_identity() {
        let out = run(&make_star(3).unwrap());
        let p = outcome(&out, PENDANT_IDENTITY).unwrap();
        assert!(p.passed, "{}", p.detail);
        assert!(outcome(&out, PATH_LENGTH).is_none());
    }

    #[test]
    fn unbalanced_hexagon_floor() {
        let out = run(&make_cycle(6, false).unwrap());
        assert!(outcome(&out, UNBALANCED_CYCLE_FLOOR).unwrap().passed);
        assert!(outcome(&out, PENDANT_IDENTITY).is_none());
        assert!(out.iter().all(|o| o.passed), "{out:?}");
    }

    #[test]
    fn square_is_multipartite() {
        let k22 = make_complete_multipartite(&[2, 2]).unwrap();
        let out = run(&k22);
        let o = outcome(&out, P_PLUS_ONE_MULTIPARTITE).unwrap();
        assert!(o.passed);
        assert!(o.detail.contains("p+=1"));
    }

    #[test]
    fn negated_edge_breaks_multipartite_equivalence_consistently() {
        let k4 = make_complete_multipartite(&[1, 1, 1, 1]).unwrap();
        let k4 = k4.with_sign(0, 1, crate::graph::Sign::Minus).unwrap();
        let out = run(&k4);
        assert!(out.iter().all(|o| o.passed), "{out:?}");
        assert!(exact_inertia(&k4).p_plus >= 2);
    }
}
