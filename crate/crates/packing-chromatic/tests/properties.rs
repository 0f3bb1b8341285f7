//! Cross-cutting invariants checked on random inputs: distance machinery
//! against naive oracles, packing monotonicity, solver soundness, and
//! format round trips.

mod common;

use std::collections::HashSet;

use packing_chromatic::certify::{check_midpoint_property, singleton_color_threshold};
use packing_chromatic::families::{build_g0, build_gk, build_h};
use packing_chromatic::graph::{check_map_isomorphism, Graph, VertexId, VertexMap, UNREACHABLE};
use packing_chromatic::io::{decode_graph6, encode_graph6, encode_graph6_long, read_dimacs, write_dimacs};
use packing_chromatic::packing::{
    decide_packing_colorable, greedy_upper_bound, max_i_packing, validate_packing_coloring,
    PackingColoring, SolveStatus, SolverConfig,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, proptest::collection::vec((0u32..16, 0u32..16), 0..40)).prop_map(
        move |(n, raw)| {
            let mut edges: Vec<(VertexId, VertexId)> = raw
                .into_iter()
                .map(|(u, v)| (u % n as u32, v % n as u32))
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::build(n, &edges).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_symmetric_and_counts_agree(g in arb_graph(10)) {
        let mut degree_sum = 0;
        for u in g.vertices() {
            degree_sum += g.degree(u);
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
            }
        }
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn distance_matrix_invariants(g in arb_graph(9)) {
        let dm = g.all_pairs_distances().unwrap();
        for u in g.vertices() {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in g.vertices() {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in g.vertices() {
                    if dm.get(u, v) != UNREACHABLE && dm.get(v, w) != UNREACHABLE {
                        prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_matches_matrix_power_oracle(g in arb_graph(8)) {
        let oracle = common::matrix_power_distances(g.vertex_count(), &g.edges());
        for u in g.vertices() {
            let row = g.bfs_distances(u).unwrap();
            for v in g.vertices() {
                let expected = oracle[u as usize][v as usize];
                if expected >= common::INF {
                    prop_assert_eq!(row[v as usize], UNREACHABLE);
                } else {
                    prop_assert_eq!(u64::from(row[v as usize]), expected);
                }
            }
        }
    }

    #[test]
    fn power_graph_is_monotone_and_saturates(g in arb_graph(9)) {
        let mut previous = g.power_graph(1).unwrap();
        for i in 2..=g.vertex_count() as u32 + 1 {
            let current = g.power_graph(i).unwrap();
            for (u, v) in previous.edges() {
                prop_assert!(current.has_edge(u, v));
            }
            previous = current;
        }
        if g.is_connected() && g.vertex_count() > 1 {
            let diam = g.diameter().unwrap();
            let complete = g.power_graph(diam).unwrap();
            let n = g.vertex_count();
            prop_assert_eq!(complete.edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn induced_subgraphs_never_shrink_distances(g in arb_graph(9), keep in proptest::collection::vec(any::<bool>(), 9)) {
        let subset: Vec<VertexId> = g
            .vertices()
            .filter(|&v| keep.get(v as usize).copied().unwrap_or(false))
            .collect();
        let (sub, map) = g.induced_subgraph(&subset).unwrap();
        let dm_sub = sub.all_pairs_distances().unwrap();
        let dm_g = g.all_pairs_distances().unwrap();
        for a in sub.vertices() {
            for b in sub.vertices() {
                let inner = dm_sub.get(a, b);
                let outer = dm_g.get(map.apply(a), map.apply(b));
                if inner != UNREACHABLE && outer != UNREACHABLE {
                    prop_assert!(inner >= outer);
                }
            }
        }
    }

    #[test]
    fn identity_map_is_an_isomorphism(g in arb_graph(10)) {
        let id = VertexMap::identity(g.vertex_count());
        prop_assert!(check_map_isomorphism(&g, &g, &id).unwrap());
    }

    #[test]
    fn graph6_round_trip_is_vertex_order_identical(g in arb_graph(12)) {
        let line = encode_graph6(&g).unwrap();
        prop_assert_eq!(&decode_graph6(&line).unwrap(), &g);
        let long = encode_graph6_long(&g).unwrap();
        prop_assert_eq!(&decode_graph6(&long).unwrap(), &g);
    }

    #[test]
    fn graph6_decoder_rejects_garbage_without_panicking(line in "[ -~]{0,40}") {
        // any outcome is fine; the parser must never panic or loop
        let _ = decode_graph6(&line);
    }

    #[test]
    fn dimacs_parser_rejects_garbage_without_panicking(text in "[ -~\n]{0,80}") {
        let _ = read_dimacs(&text);
    }

    #[test]
    fn dimacs_reparse_is_identity(g in arb_graph(12)) {
        let text = write_dimacs(&g);
        prop_assert_eq!(text.lines().count(), g.edge_count() + 1);
        prop_assert_eq!(&read_dimacs(&text).unwrap(), &g);
    }

    #[test]
    fn pulled_back_colorings_stay_valid(g in arb_graph(8), keep in proptest::collection::vec(any::<bool>(), 8)) {
        prop_assume!(g.is_connected());
        let (_, coloring) = greedy_upper_bound(&g).unwrap();
        let subset: Vec<VertexId> = g
            .vertices()
            .filter(|&v| keep.get(v as usize).copied().unwrap_or(false))
            .collect();
        let (sub, map) = g.induced_subgraph(&subset).unwrap();
        let pulled: Vec<u16> = sub.vertices().map(|v| coloring.color(map.apply(v))).collect();
        let check = validate_packing_coloring(&sub, &PackingColoring::new(pulled)).unwrap();
        prop_assert!(check.valid);
    }
}

#[test]
fn diameter_is_max_of_bfs_rows() {
    let mut rng = common::seeded_rng(0xd1a5);
    for _ in 0..60 {
        let g = common::random_connected_graph(&mut rng, 10);
        let by_rows = g
            .vertices()
            .map(|u| {
                g.bfs_distances(u)
                    .unwrap()
                    .into_iter()
                    .filter(|&d| d != UNREACHABLE)
                    .max()
                    .unwrap()
            })
            .max()
            .unwrap();
        assert_eq!(g.diameter().unwrap(), by_rows);
    }
}

#[test]
fn pruned_diameter_equals_sweep_everywhere() {
    let mut rng = common::seeded_rng(0x1f0b);
    for _ in 0..80 {
        let g = common::random_connected_graph(&mut rng, 14);
        assert_eq!(g.diameter_ifub(), g.diameter().unwrap(), "on {:?}", g.edges());
    }
    for k in 1..=4 {
        let g = build_gk(k).unwrap();
        assert_eq!(g.graph().diameter_ifub(), g.graph().diameter().unwrap());
    }
}

#[test]
fn alpha_is_monotone_and_collapses_at_diameter() {
    let mut rng = common::seeded_rng(0xa1fa);
    for _ in 0..30 {
        let g = common::random_connected_graph(&mut rng, 9);
        let diam = g.diameter().unwrap();
        let mut previous = usize::MAX;
        for i in 1..=diam + 2 {
            let alpha = max_i_packing(&g, i, false).unwrap().size;
            assert!(alpha <= previous, "alpha must not grow with i");
            if i >= diam.max(1) {
                assert_eq!(alpha, 1);
            }
            previous = alpha;
        }
        // a 1-packing is an independent set
        let mis = common::naive_mis(g.vertex_count(), &g.edges());
        assert_eq!(max_i_packing(&g, 1, false).unwrap().size, mis);
    }
}

#[test]
fn sat_answers_are_monotone_in_palette_size() {
    let mut rng = common::seeded_rng(0x5a75);
    let cfg = SolverConfig::default();
    for _ in 0..40 {
        let g = common::random_connected_graph(&mut rng, 7);
        let mut seen_sat = false;
        for k in 1..=g.vertex_count() as u16 {
            let status = decide_packing_colorable(&g, k, &cfg).unwrap().status;
            match status {
                SolveStatus::Sat => seen_sat = true,
                SolveStatus::Unsat => {
                    assert!(!seen_sat, "UNSAT above a SAT palette on {:?}", g.edges())
                }
                SolveStatus::Timeout => panic!("timeout on a tiny graph"),
            }
        }
        assert!(seen_sat);
    }
}

#[test]
fn solver_witnesses_respect_the_singleton_threshold() {
    let mut rng = common::seeded_rng(0x517e);
    let cfg = SolverConfig::default();
    for _ in 0..40 {
        let g = common::random_connected_graph(&mut rng, 8);
        let threshold = singleton_color_threshold(&g).unwrap().max(1) as u16;
        for k in 1..=g.vertex_count() as u16 {
            let run = decide_packing_colorable(&g, k, &cfg).unwrap();
            if let Some(witness) = run.witness {
                let mut counts = std::collections::HashMap::new();
                for v in g.vertices() {
                    *counts.entry(witness.color(v)).or_insert(0u32) += 1;
                }
                for (&color, &count) in &counts {
                    assert!(color < threshold || count <= 1);
                }
                break;
            }
        }
    }
}

#[test]
fn registry_maps_all_verify() {
    let h = build_h();
    let g0 = build_g0();
    let g3 = build_gk(3).unwrap();
    for copy in &g0.registry().h_copies {
        assert!(check_map_isomorphism(h.graph(), g0.graph(), &copy.map).unwrap());
    }
    for copy in &g3.registry().h_copies {
        assert!(check_map_isomorphism(h.graph(), g3.graph(), &copy.map).unwrap());
    }
    for copy in &g3.registry().g0_copies {
        assert!(check_map_isomorphism(g0.graph(), g3.graph(), &copy.map).unwrap());
    }
    // registered vertex sets are pairwise disjoint within each list
    let mut seen: HashSet<VertexId> = HashSet::new();
    for copy in &g3.registry().g0_copies {
        for &v in &copy.vertices {
            assert!(seen.insert(v));
        }
    }
}

#[test]
fn chi_rho_of_the_gadget_cross_checked() {
    // the solver's exact value against plain depth-first enumeration
    let h = build_h();
    let naive = common::naive_chi_rho(h.graph().vertex_count(), &h.graph().edges());
    let solver = match packing_chromatic::packing::packing_chromatic_number(
        h.graph(),
        &SolverConfig::default(),
    )
    .unwrap()
    {
        packing_chromatic::packing::ChiRhoOutcome::Exact { value, .. } => value,
        other => panic!("unexpected outcome {other:?}"),
    };
    assert_eq!(solver, naive);
    assert!(solver >= 7);
}

#[test]
fn gadget_power_at_diameter_is_complete() {
    let h = build_h();
    let p4 = h.graph().power_graph(4).unwrap();
    assert_eq!(p4.edge_count(), 15 * 14 / 2);
}

#[test]
fn midpoint_guard_discovers_its_threshold() {
    // the scan must stop passing exactly below its own worst sum
    let g0 = build_g0();
    let report = check_midpoint_property(g0.graph(), 6, 2).unwrap();
    assert!(report.holds);
    let threshold = report.worst_sum;
    assert!(check_midpoint_property(g0.graph(), threshold, 2).unwrap().holds);
    let below = check_midpoint_property(g0.graph(), threshold - 1, 2).unwrap();
    assert!(!below.holds);
    assert!(below.counterexample.is_some());
}
