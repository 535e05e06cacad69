use proptest::prelude::*;

use sigraph::enumerate::{canonical_code, enumerate_connected_graphs, SwitchingClasses};
use sigraph::families::{
    balanced_complete_multipartite_parts, make_cycle_with_pendant_star, make_signed_canonical_unicyclic, make_theta, recognize,
    star_decomposition, FamilyLabel, ThetaSigns,
};
use sigraph::graph::{delete_vertices, induced_subgraph, switch, Sign, SignedGraph, VertexSet};
use sigraph::inertia::{exact_inertia, float_spectrum, reduced_inertia, InertiaTriple};
use sigraph::sgf::{parse_sgf, write_sgf};
use sigraph::structure::{balance, girth, is_balanced, is_connected, pendant_vertices, Balance};

fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(prop_oneof![Just(None), Just(Some(Sign::Plus)), Just(Some(Sign::Minus))], pairs)
            .prop_map(move |slots| {
                let all = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                let edges = all.zip(slots).filter_map(|((u, v), s)| s.map(|s| (u, v, s)));
                SignedGraph::new(n, edges).unwrap()
            })
    })
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (SignedGraph, VertexSet)> {
    signed_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(g, mask)| (g, VertexSet::from_mask(&mask)))
    })
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn switching_is_an_involution_and_composes((g, u) in graph_and_subset(9), mask in proptest::collection::vec(any::<bool>(), 9)) {
        let once = switch(&g, &u).unwrap();
        prop_assert_eq!(&switch(&once, &u).unwrap(), &g);
        let w = VertexSet::from_mask(&mask[..g.n()]);
        let twice = switch(&once, &w).unwrap();
        prop_assert_eq!(twice, switch(&g, &u.symmetric_difference(&w)).unwrap());
    }

    #[test]
    fn sgf_round_trip(g in signed_graph(10)) {
        prop_assert_eq!(parse_sgf(&write_sgf(&g)).unwrap(), g);
    }

    #[test]
    fn switching_preserves_invariants((g, u) in graph_and_subset(9)) {
        let s = switch(&g, &u).unwrap();
        prop_assert_eq!(exact_inertia(&s), exact_inertia(&g));
        prop_assert_eq!(girth(&s), girth(&g));
        prop_assert_eq!(is_balanced(&s), is_balanced(&g));
    }

    #[test]
    fn induced_subgraphs_interlace((g, keep) in graph_and_subset(9)) {
        let h = exact_inertia(&induced_subgraph(&g, &keep).unwrap());
        let full = exact_inertia(&g);
        prop_assert!(h.p_plus <= full.p_plus);
        prop_assert!(h.n_minus <= full.n_minus);
    }

    #[test]
    fn pendant_deletion_drops_both_counts(g in signed_graph(10)) {
        let pendants = pendant_vertices(&g);
        prop_assume!(!pendants.is_empty());
        let x = pendants.members()[0];
        let y = g.neighbors(x).next().unwrap();
        let rest = exact_inertia(&delete_vertices(&g, &[x, y]).unwrap());
        prop_assert_eq!(exact_inertia(&g), rest + InertiaTriple::new(1, 1, 0));
        prop_assert_eq!(reduced_inertia(&g), exact_inertia(&g));
    }

    #[test]
    fn inertia_adds_over_disjoint_unions(a in signed_graph(6), b in signed_graph(6)) {
        prop_assert_eq!(exact_inertia(&a.disjoint_union(&b)), exact_inertia(&a) + exact_inertia(&b));
    }

    #[test]
    fn spectrum_traces(g in signed_graph(10)) {
        let s = float_spectrum(&g).unwrap();
        prop_assert!(s.trace().abs() < 1e-9);
        let squares: f64 = s.values().iter().map(|x| x * x).sum();
        prop_assert!((squares - 2.0 * g.m() as f64).abs() < 1e-8);
        prop_assert_eq!(exact_inertia(&g).order(), g.n());
    }

    #[test]
    fn engines_agree(g in signed_graph(10)) {
        prop_assert_eq!(float_spectrum(&g).unwrap().inertia(), exact_inertia(&g));
    }

    #[test]
    fn relabelling_preserves_invariants(g in signed_graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_code(&h).unwrap(), canonical_code(&g).unwrap());
        prop_assert_eq!(exact_inertia(&h), exact_inertia(&g));
        prop_assert_eq!(girth(&h), girth(&g));
    }

    #[test]
    fn balanced_potential_or_negative_cycle(g in signed_graph(9)) {
        match balance(&g) {
            Balance::Balanced { potential } => {
                let u = VertexSet::new(g.n(), (0..g.n()).filter(|&v| potential[v] == Sign::Minus)).unwrap();
                prop_assert!(switch(&g, &u).unwrap().is_all_positive());
            }
            Balance::Unbalanced(cycle) => prop_assert_eq!(cycle.sign, Sign::Minus),
        }
    }

    #[test]
    fn theta_girth_and_label(k in 2usize..8, l in 3usize..8, m in 3usize..8, kl in sign(), lm in sign()) {
        let signs = ThetaSigns::new(kl, lm);
        let g = make_theta(k, l, m, signs).unwrap();
        prop_assert_eq!(girth(&g), Some((k + l).min(k + m).min(l + m) - 2));
        let label = recognize(&g).unwrap();
        if let Some(parts) = balanced_complete_multipartite_parts(&g) {
            // K_{1,1,2} is also Theta(2,3,3); multipartite takes precedence
            prop_assert_eq!(label, FamilyLabel::BalancedCompleteMultipartite { parts });
        } else {
            prop_assert_eq!(label, FamilyLabel::theta_from_params(k, l, m, signs));
        }
    }

    #[test]
    fn cycle_with_pendant_star_round_trip(girth_len in 3usize..12, balanced in any::<bool>(), t in 1usize..5) {
        let g = make_cycle_with_pendant_star(girth_len, balanced, t).unwrap();
        prop_assert_eq!(
            recognize(&g).unwrap(),
            FamilyLabel::CycleWithPendantStar { girth: girth_len, balanced, t }
        );
        prop_assert_eq!(exact_inertia(&g).p_plus, exact_inertia(&sigraph::families::make_cycle(girth_len, balanced).unwrap()).p_plus + 1);
    }

    #[test]
    fn canonical_unicyclic_law(
        girth_len in 3usize..11,
        balanced in any::<bool>(),
        layout in proptest::collection::btree_map(0usize..10, 1usize..4, 1..4),
    ) {
        let stars: Vec<(usize, usize)> = layout.into_iter().filter(|(p, _)| *p < girth_len).collect();
        prop_assume!(!stars.is_empty());
        let g = make_signed_canonical_unicyclic(girth_len, balanced, &stars).unwrap();
        let sd = star_decomposition(&g).unwrap();
        prop_assert_eq!(sd.t, stars.len());
        prop_assert_eq!(sd.girth(), girth_len);
        prop_assert_eq!(sd.predicted_positive_inertia(), exact_inertia(&g).p_plus);
    }

    #[test]
    fn signings_reduce_to_their_class(g in signed_graph(7)) {
        prop_assume!(g.n() > 0 && is_connected(&g).unwrap());
        let classes = SwitchingClasses::new(&g).unwrap();
        let rep = classes.signing(classes.class_index(&g).unwrap());
        prop_assert_eq!(exact_inertia(&rep), exact_inertia(&g));
        prop_assert_eq!(is_balanced(&rep), is_balanced(&g));
        // the representative is a switching of g: products around every
        // cycle agree, so switching by the balance potential of g * rep does
        let product = SignedGraph::new(
            g.n(),
            g.edges().iter().map(|e| (e.u, e.v, e.sign * rep.sign(e.u, e.v).unwrap())),
        ).unwrap();
        prop_assert!(is_balanced(&product));
    }
}

/// Representatives of distinct classes are never related by a diagonal
/// `±1` congruence.
#[test]
fn switching_classes_are_pairwise_inequivalent() {
    for n in 2..=5 {
        for base in enumerate_connected_graphs(n).unwrap() {
            let reps: Vec<SignedGraph> = SwitchingClasses::new(&base).unwrap().iter().collect();
            for (i, a) in reps.iter().enumerate() {
                let orbit: Vec<SignedGraph> = (0u32..1 << n)
                    .map(|mask| {
                        let u = VertexSet::new(n, (0..n).filter(|&v| mask >> v & 1 == 1)).unwrap();
                        switch(a, &u).unwrap()
                    })
                    .collect();
                for b in &reps[i + 1..] {
                    assert!(!orbit.contains(b), "{a:?} ~ {b:?}");
                }
            }
        }
    }
}
