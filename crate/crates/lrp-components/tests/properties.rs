use lattice_geometry::{block_decompose, LatticeBox, SiteSet};
use lrp_components::*;
use lrp_sampler::{LrpParams, SampledGraph};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = SampledGraph> {
    (2usize..8).prop_flat_map(|side| {
        let n = side * side;
        proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |raw| {
            let b = LatticeBox::new(2, side).unwrap();
            let edges: std::collections::BTreeSet<_> = raw
                .into_iter()
                .filter(|(i, j)| i != j)
                .map(|(i, j)| (i.min(j), i.max(j)))
                .collect();
            SampledGraph::from_edges(b, LrpParams::new(2, 2.0, 1.0, 0.5).unwrap(), 0, edges)
                .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ranking_invariants(g in arb_graph()) {
        let r = connected_components(&g);
        prop_assert_eq!(r.sizes.iter().sum::<usize>(), g.n());
        prop_assert!(r.sizes.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(r.c1.len(), r.sizes[0]);
        prop_assert_eq!(r.c2.len(), r.sizes.get(1).copied().unwrap_or(0));
        prop_assert!(r.c1.is_disjoint(&r.c2));
        // equal-size ties resolve to the smaller minimal index
        if r.sizes.len() > 1 && r.sizes[0] == r.sizes[1] {
            prop_assert!(r.c1.min_index() < r.c2.min_index());
        }
        for k in 0..r.sizes.len() {
            let comp = SiteSet::from_indices(g.lattice().region().clone(), r.labels.members(k as u32));
            prop_assert!(is_component(&comp, &g).unwrap());
            let bg = block_graph(&comp, &g).unwrap();
            prop_assert!(bg.is_connected());
            prop_assert_eq!(bg.len(), block_decompose(&comp).len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn streamed_summary_matches_ranking(g in arb_graph()) {
        let direct = component_summary(&g);
        let streamed = summarize_edges(g.n(), g.lattice().origin_index(), g.edges().iter().copied());
        prop_assert_eq!(direct, streamed);
    }
}
