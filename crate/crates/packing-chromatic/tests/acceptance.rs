//! Acceptance suite: every release gate as one test each, printing a
//! PASS/FAIL line per criterion (`cargo test --test acceptance -- --nocapture`
//! shows them all).

mod common;

use std::time::{Duration, Instant};

use packing_chromatic::certify::{
    certify_chi_rho_lower, verify_lemma, Certificate, Claim, GraphId, LemmaDetails, TrustLevel,
};
use packing_chromatic::families::{build_g0, build_gk, build_h};
use packing_chromatic::graph::VertexId;
use packing_chromatic::io::{decode_graph6, encode_graph6, read_dimacs, write_dimacs};
use packing_chromatic::packing::{
    decide_packing_colorable, greedy_upper_bound, max_i_packing, packing_chromatic_number,
    validate_packing_coloring, ChiRhoOutcome, PackingColoring, SolveStatus, SolverConfig,
};
use packing_chromatic::report::ReportStatus;

fn criterion(number: u8, detail: &str, pass: bool) {
    println!(
        "acceptance {number}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {number} failed: {detail}");
}

#[test]
fn acceptance_1_gadget_shape() {
    let started = Instant::now();
    let h = build_h();
    let diameter = h.graph().diameter().unwrap();
    let profile = h.graph().degree_profile();
    let elapsed = started.elapsed();
    let pass = h.graph().vertex_count() == 15
        && h.graph().edge_count() == 20
        && diameter == 4
        && profile.entries() == vec![(2, 5), (3, 10)]
        && elapsed < Duration::from_millis(100);
    criterion(
        1,
        &format!(
            "H has 15 vertices, 20 edges, diameter {diameter}, degree profile {:?}, built+measured in {elapsed:?}",
            profile.entries()
        ),
        pass,
    );
}

#[test]
fn acceptance_2_six_colors_refuted_exhaustively() {
    let h = build_h();
    let started = Instant::now();
    let default_run = decide_packing_colorable(h.graph(), 6, &SolverConfig::default()).unwrap();
    let default_elapsed = started.elapsed();

    let no_capacity = SolverConfig {
        use_packing_size_bounds: false,
        ..SolverConfig::default()
    };
    let cross_run = decide_packing_colorable(h.graph(), 6, &no_capacity).unwrap();

    let pass = default_run.status == SolveStatus::Unsat
        && cross_run.status == SolveStatus::Unsat
        && default_elapsed <= Duration::from_secs(60);
    criterion(
        2,
        &format!(
            "decide(H, 6) UNSAT after {} nodes in {default_elapsed:?} (default pruning) and {} nodes (capacity rule off)",
            default_run.nodes, cross_run.nodes
        ),
        pass,
    );
}

#[test]
fn acceptance_3_maximum_packings_of_h() {
    let h = build_h();
    let started = Instant::now();
    let two = max_i_packing(h.graph(), 2, true).unwrap();
    let alpha1 = max_i_packing(h.graph(), 1, false).unwrap().size;
    let alpha3 = max_i_packing(h.graph(), 3, false).unwrap().size;
    let elapsed = started.elapsed();

    let mut expected: Vec<VertexId> = ["y1", "y7", "w", "z3", "z5"]
        .iter()
        .map(|n| h.vertex_named(n).unwrap())
        .collect();
    expected.sort_unstable();

    let unique = two.all_maximum.as_deref() == Some(std::slice::from_ref(&expected));
    let ceilings_ok = alpha1 <= 7 && two.size <= 5 && alpha3 <= 2;
    let pass = two.size == 5
        && two.witness == expected
        && unique
        && alpha1 == 7
        && alpha3 == 2
        && ceilings_ok
        && elapsed < Duration::from_secs(1);
    criterion(
        3,
        &format!(
            "alpha_2(H) = {} with unique maximum {:?} (= {{y1, y7, w, z3, z5}}), alpha_1 = {alpha1}, alpha_3 = {alpha3}, in {elapsed:?}",
            two.size, two.witness
        ),
        pass,
    );
}

#[test]
fn acceptance_4_diameter_and_midpoint_scan() {
    let started = Instant::now();
    let lemma2 = verify_lemma(2).unwrap();
    let lemma4 = verify_lemma(4).unwrap();
    let elapsed = started.elapsed();

    let diameter = match &lemma2.details {
        LemmaDetails::Diameter { computed, .. } => *computed,
        _ => u32::MAX,
    };
    let (pairs, rows_ok) = match &lemma4.details {
        LemmaDetails::Midpoint {
            pairs_checked,
            rows,
            ..
        } => (*pairs_checked, rows.len() == 8 && rows.iter().all(|r| r.matched)),
        _ => (0, false),
    };
    let pass = lemma2.pass
        && diameter <= 6
        && lemma4.pass
        && pairs == 35 * 35
        && rows_ok
        && elapsed < Duration::from_secs(1);
    criterion(
        4,
        &format!(
            "diam(G0) = {diameter} <= 6; midpoint property over {pairs} ordered pairs with all 8 table rows reproduced, in {elapsed:?}"
        ),
        pass,
    );
}

#[test]
fn acceptance_5_base_certificates_round_trip() {
    let c0 = certify_chi_rho_lower(0, 8, false).unwrap();
    let c1 = certify_chi_rho_lower(1, 8, false).unwrap();
    let conclusion_ok = c0.conclusion
        == Claim::ChiRhoLower {
            graph: GraphId::G(0),
            bound: 9,
        }
        && c1.conclusion
            == Claim::ChiRhoLower {
                graph: GraphId::G(1),
                bound: 11,
            };
    let trust_ok = c0.trust_level == TrustLevel::FullyMachineChecked
        && c1.trust_level == TrustLevel::FullyMachineChecked;

    let mut round_trips = true;
    for cert in [&c0, &c1] {
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        round_trips &= back == *cert && back.revalidate().is_ok();
    }
    criterion(
        5,
        &format!(
            "{} and {} both fully machine-checked; JSON round-trips re-validate",
            c0.conclusion, c1.conclusion
        ),
        conclusion_ok && trust_ok && round_trips,
    );
}

#[test]
fn acceptance_6_family_bounds_through_k8() {
    let started = Instant::now();
    let mut detail = String::new();
    let mut pass = true;
    for k in 1..=8u32 {
        let g = build_gk(k).unwrap();
        let copies = 1usize << k;
        let profile = g.graph().degree_profile();
        let diameter = g.graph().diameter().unwrap();
        let cert = certify_chi_rho_lower(k, 8, false).unwrap();
        let ok = g.graph().vertex_count() == 40 * copies - 5
            && g.graph().edge_count() == 60 * copies - 10
            && profile.max_degree() == 3
            && profile.count(2) == 5
            && diameter <= 2 * k + 6
            && cert.trust_level == TrustLevel::FullyMachineChecked
            && cert.conclusion
                == Claim::ChiRhoLower {
                    graph: GraphId::G(k),
                    bound: 2 * k + 9,
                };
        pass &= ok;
        detail.push_str(&format!("k={k}: diam {diameter} <= {}; ", 2 * k + 6));
    }
    let elapsed = started.elapsed();
    pass &= elapsed <= Duration::from_secs(600);
    criterion(
        6,
        &format!("{detail}all certified to 2k+9, suite in {elapsed:?}"),
        pass,
    );
}

#[test]
fn acceptance_7_oracle_equivalence() {
    // chi_rho against depth-first enumeration on 200 seeded graphs
    let mut rng = common::seeded_rng(0x5eed_0007);
    let cfg = SolverConfig::default();
    let mut chi_checked = 0;
    for _ in 0..200 {
        let g = common::random_connected_graph(&mut rng, 9);
        let expected = common::naive_chi_rho(g.vertex_count(), &g.edges());
        let got = match packing_chromatic_number(&g, &cfg).unwrap() {
            ChiRhoOutcome::Exact { value, .. } => value,
            other => panic!("timeout on a tiny graph: {other:?}"),
        };
        assert_eq!(
            got,
            expected,
            "chi_rho mismatch on n={} edges={:?}",
            g.vertex_count(),
            g.edges()
        );
        chi_checked += 1;
    }

    // maximum i-packings against subset-enumeration MIS of the power graph
    let mut packing_checked = 0;
    for _ in 0..100 {
        let g = common::random_graph(&mut rng, 12);
        for i in 1..=3u32 {
            let power = g.power_graph(i).unwrap();
            let expected = common::naive_mis(power.vertex_count(), &power.edges());
            let got = max_i_packing(&g, i, false).unwrap().size;
            assert_eq!(got, expected, "alpha_{i} mismatch on {:?}", g.edges());
        }
        packing_checked += 1;
    }
    criterion(
        7,
        &format!(
            "{chi_checked} random graphs (n <= 9) agree with brute-force chi_rho; {packing_checked} graphs (n <= 12) agree with brute-force max packings for i in 1..=3"
        ),
        chi_checked >= 200 && packing_checked >= 100,
    );
}

#[test]
fn acceptance_8_witness_properties_and_round_trips() {
    let mut rng = common::seeded_rng(0x5eed_0008);
    let cfg = SolverConfig::default();

    // every SAT witness validates and respects the singleton rule
    let mut witnesses_checked = 0;
    for _ in 0..60 {
        let g = common::random_connected_graph(&mut rng, 8);
        let outcome = packing_chromatic_number(&g, &cfg).unwrap();
        let ChiRhoOutcome::Exact { witness, .. } = outcome else {
            panic!("timeout on a tiny graph");
        };
        let check = validate_packing_coloring(&g, &witness).unwrap();
        assert!(check.valid);
        let diam = g.diameter().unwrap() as u16;
        let mut used = std::collections::HashMap::new();
        for v in g.vertices() {
            *used.entry(witness.color(v)).or_insert(0u32) += 1;
        }
        for (&color, &count) in &used {
            assert!(
                color < diam.max(1) || count <= 1,
                "color {color} used {count} times with diameter {diam}"
            );
        }
        witnesses_checked += 1;
    }

    // restriction of a valid G0 coloring to either copy of H validates
    let g0 = build_g0();
    let h = build_h();
    let (_, coloring) = greedy_upper_bound(g0.graph()).unwrap();
    let mut restriction_ok = true;
    for copy in &g0.registry().h_copies {
        let pulled: Vec<u16> = (0..15)
            .map(|v| coloring.color(copy.map.apply(v)))
            .collect();
        restriction_ok &= validate_packing_coloring(h.graph(), &PackingColoring::new(pulled))
            .unwrap()
            .valid;
    }

    // format round trips for H, G0, G1
    let g1 = build_gk(1).unwrap();
    let mut formats_ok = true;
    for g in [h.graph(), g0.graph(), g1.graph()] {
        let line = encode_graph6(g).unwrap();
        formats_ok &= &decode_graph6(&line).unwrap() == g;
        formats_ok &= &read_dimacs(&write_dimacs(g)).unwrap() == g;
    }

    criterion(
        8,
        &format!(
            "{witnesses_checked} solver witnesses validate and respect the singleton rule; G0 colorings restrict to valid H colorings; graph6/DIMACS round-trip H, G0, G1"
        ),
        witnesses_checked >= 60 && restriction_ok && formats_ok,
    );
}

/// Stretch coverage beyond the gated range: run explicitly with
/// `cargo test --test acceptance -- --ignored --nocapture`.
#[test]
#[ignore = "minutes-scale: diameters of G9 and G10 via the pruned search"]
fn stretch_diameters_k9_k10() {
    for k in [9u32, 10] {
        let g = build_gk(k).unwrap();
        let started = Instant::now();
        let d = g.graph().diameter().unwrap();
        println!(
            "stretch: diam(G{k}) = {d} (bound {}) on {} vertices in {:?}",
            2 * k + 6,
            g.graph().vertex_count(),
            started.elapsed()
        );
        assert!(d <= 2 * k + 6);
        let cert = certify_chi_rho_lower(k, 10, false).unwrap();
        assert_eq!(
            cert.conclusion,
            Claim::ChiRhoLower {
                graph: GraphId::G(k),
                bound: 2 * k + 9
            }
        );
    }
}

#[test]
fn time_limits_report_timeout_not_unsat() {
    let g0 = build_g0();
    let tight = SolverConfig {
        time_limit: Some(Duration::from_millis(5)),
        ..SolverConfig::default()
    };
    let run = decide_packing_colorable(g0.graph(), 8, &tight).unwrap();
    assert_eq!(run.status, SolveStatus::Timeout);
    assert!(run.witness.is_none());
}

#[test]
fn acceptance_9_unclaimed_exact_values_policy() {
    // Exact chi_rho(G0) and chi_rho(G1) are not gated: nothing in the
    // certificates depends on them, and the decision run below may stop at
    // its budget. A limit hit must surface as TIMEOUT (exit code 3) and
    // never as UNSAT.
    let g0 = build_g0();
    let budgeted = SolverConfig {
        node_limit: Some(200_000),
        ..SolverConfig::default()
    };
    let run = decide_packing_colorable(g0.graph(), 8, &budgeted).unwrap();
    let status_ok = match run.status {
        SolveStatus::Timeout => ReportStatus::Timeout.exit_code() == 3,
        // exhausting the space within budget is also acceptable; it simply
        // answers the stretch question outright
        SolveStatus::Unsat | SolveStatus::Sat => true,
    };
    criterion(
        9,
        &format!(
            "decide(G0, 8) under a 200k-node budget reports {:?} after {} nodes (timeout maps to exit 3; exact chi_rho(G0)/chi_rho(G1) stay unclaimed)",
            run.status, run.nodes
        ),
        status_ok,
    );
}
