//! Exhaustive packing-coloring decisions on the gadget H: refute 6 colors,
//! find the exact packing chromatic number, and cross-validate the pruning
//! configurations against each other.
//!
//! ```bash
//! cargo run --release --example refute_small_palettes
//! ```

use packing_chromatic::families::build_h;
use packing_chromatic::packing::{
    decide_packing_colorable, greedy_upper_bound, packing_chromatic_number, ChiRhoOutcome,
    SolverConfig,
};

fn main() {
    let h = build_h();

    let default = SolverConfig::default();
    let run = decide_packing_colorable(h.graph(), 6, &default).unwrap();
    println!(
        "decide(H, 6) = {:?} after {} nodes in {:?}",
        run.status, run.nodes, run.elapsed
    );

    let no_capacity = SolverConfig {
        use_packing_size_bounds: false,
        ..SolverConfig::default()
    };
    let cross = decide_packing_colorable(h.graph(), 6, &no_capacity).unwrap();
    println!(
        "decide(H, 6) without the capacity rule = {:?} after {} nodes",
        cross.status, cross.nodes
    );

    let no_singleton = SolverConfig {
        use_singleton_rule: false,
        ..SolverConfig::default()
    };
    let cross = decide_packing_colorable(h.graph(), 6, &no_singleton).unwrap();
    println!(
        "decide(H, 6) without the singleton rule = {:?} after {} nodes",
        cross.status, cross.nodes
    );

    match packing_chromatic_number(h.graph(), &default).unwrap() {
        ChiRhoOutcome::Exact {
            value,
            witness,
            counting_start,
            total_nodes,
        } => {
            println!(
                "chi_rho(H) = {value} (counting bound started at {counting_start}; {total_nodes} nodes total)"
            );
            let colored: Vec<String> = h
                .graph()
                .vertices()
                .map(|v| format!("{}={}", h.label_string(v), witness.color(v)))
                .collect();
            println!("witness: {}", colored.join(" "));
        }
        other => println!("unexpected outcome: {other:?}"),
    }

    let (upper, _) = greedy_upper_bound(h.graph()).unwrap();
    println!("greedy envelope: chi_rho(H) <= {upper}");
}
