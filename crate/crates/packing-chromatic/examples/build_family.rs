//! Construct the family members and inspect their structure.
//!
//! ```bash
//! cargo run --example build_family
//! ```

use packing_chromatic::families::{build_g0, build_gk, build_h, build_perfect_tree};

fn main() {
    let h = build_h();
    println!(
        "H:  {} vertices, {} edges, degree profile {:?}",
        h.graph().vertex_count(),
        h.graph().edge_count(),
        h.graph().degree_profile().entries()
    );
    let degree2: Vec<String> = h
        .graph()
        .vertices()
        .filter(|&v| h.graph().degree(v) == 2)
        .map(|v| h.label_string(v))
        .collect();
    println!("    degree-2 vertices: {degree2:?}");

    let g0 = build_g0();
    println!(
        "G0: {} vertices, {} edges, {} embedded H-copies",
        g0.graph().vertex_count(),
        g0.graph().edge_count(),
        g0.registry().h_copies.len()
    );
    let a = g0.vertex_named("a").unwrap();
    let neighbors: Vec<String> = g0
        .graph()
        .neighbors(a)
        .iter()
        .map(|&v| g0.label_string(v))
        .collect();
    println!("    connector a joins {neighbors:?}");

    let tree = build_perfect_tree(3);
    println!(
        "perfect binary tree, depth 3: {} vertices, root {}, leftmost leaf {}",
        tree.graph().vertex_count(),
        tree.label_string(0),
        tree.label_string(7),
    );

    for k in 1..=3 {
        let g = build_gk(k).unwrap();
        println!(
            "G{k}: {} vertices, {} edges ({} copies of G0, five gluing trees)",
            g.graph().vertex_count(),
            g.graph().edge_count(),
            g.registry().g0_copies.len()
        );
    }

    let g2 = build_gk(2).unwrap();
    let sample = g2.vertex_named("s'(01)").unwrap();
    println!(
        "vertex {} of G2 sits in copy 01 with neighbors {:?}",
        g2.label_string(sample),
        g2.graph()
            .neighbors(sample)
            .iter()
            .map(|&v| g2.label_string(v))
            .collect::<Vec<_>>()
    );
}
