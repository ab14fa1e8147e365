mod common;

use berge_core::format::{parse_hypergraph, write_hypergraph};
use berge_core::oracle::find_berge_cycle;
use berge_core::sample::{sample_planted, ExtraTarget};
use berge_core::{BergeCycle, Hypergraph, VertexSet};
use common::independent_validate;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (4usize..=8, 2usize..=4, 1usize..=10, any::<u64>()).prop_map(|(n, r, m, seed)| {
        let r = r.min(n - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_hypergraph(&mut rng, n, r, m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_format_round_trips(h in hypergraph()) {
        let text = write_hypergraph(&h);
        prop_assert_eq!(parse_hypergraph(&text).unwrap(), h);
    }

    #[test]
    fn incidence_graph_matches_edges(h in hypergraph()) {
        let b = h.incidence_graph();
        prop_assert_eq!(b.edge_count(), h.num_edges() * h.r());
        for v in 0..h.n() {
            prop_assert_eq!(b.left_degree(v), h.degree(v).unwrap());
            for &e in b.left_neighbors(v) {
                prop_assert!(h.edge(e).contains(v));
            }
        }
        for e in 0..h.num_edges() {
            prop_assert_eq!(b.right_neighbors(e), h.edge(e));
        }
    }

    #[test]
    fn oracle_witnesses_validate_and_print_round_trip(h in hypergraph(), l in 2usize..=8) {
        prop_assume!(l <= h.n());
        if let Some(c) = find_berge_cycle(&h, l).unwrap() {
            prop_assert_eq!(c.len(), l);
            prop_assert!(independent_validate(&h, &c));
            prop_assert_eq!(c.to_string().parse::<BergeCycle>().unwrap(), c);
        }
    }

    #[test]
    fn relabelling_preserves_cycle_lengths(h in hypergraph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut map: Vec<usize> = (0..h.n()).collect();
        map.shuffle(&mut rng);
        let g = h.relabel(&map);
        for l in 2..=h.n() {
            prop_assert_eq!(find_berge_cycle(&h, l).unwrap().is_some(), find_berge_cycle(&g, l).unwrap().is_some());
        }
    }

    #[test]
    fn reoriented_frames_map_back_to_source(n in 6usize..=14, seed in any::<u64>(), start in 0usize..14, reflect: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = 3.min(n - 2);
        let s = sample_planted(n, r, ExtraTarget::Total(2), &mut rng).unwrap();
        let g = s.frame.reoriented(start % n, reflect);
        prop_assert!(independent_validate(&s.hypergraph, &g.to_source(&g.as_cycle())));
        let back = s.frame.translate_from(&g, &g.as_cycle());
        prop_assert!(independent_validate(s.frame.base(), &back));
        prop_assert_eq!(back.vertex_set(), (0..n).collect::<VertexSet>());
    }
}
