//! Split a Gk into its two embedded copies of the previous level plus the
//! five tree roots, re-checking every embedding along the way. This is the
//! decomposition the lower-bound certificates ride on.
//!
//! ```bash
//! cargo run --release --example recursive_structure
//! ```

use packing_chromatic::families::{build_gk, decompose_halves};

fn main() {
    let g3 = build_gk(3).unwrap();
    println!(
        "G3: {} vertices, {} edges",
        g3.graph().vertex_count(),
        g3.graph().edge_count()
    );

    let halves = decompose_halves(&g3).unwrap();
    println!(
        "halves: {} + {} vertices, plus {} tree roots",
        halves.half0.len(),
        halves.half1.len(),
        halves.roots.len()
    );
    println!(
        "each half induces a verified copy of {} ({} vertices)",
        halves.previous.family(),
        halves.previous.graph().vertex_count()
    );

    let root_names: Vec<String> = halves
        .roots
        .iter()
        .map(|&r| g3.label_string(r))
        .collect();
    println!("roots: {root_names:?} (the only degree-2 vertices)");
    for &r in &halves.roots {
        assert_eq!(g3.graph().degree(r), 2);
    }

    // the relabelling in action: half 0 appends a 0 to every copy path, so
    // the s'-vertex of copy 01 of G2 lands on copy 010 of G3
    let in_previous = halves.previous.vertex_named("s'(01)").unwrap();
    let image = halves.maps[0].apply(in_previous);
    println!(
        "half 0 maps {} of {} onto {} of G3",
        halves.previous.label_string(in_previous),
        halves.previous.family(),
        g3.label_string(image)
    );

    // registries nest all the way down: every G0 copy and every gadget copy
    // inside it is recorded with its own verified map
    println!(
        "registry: {} G0 copies, {} gadget copies",
        g3.registry().g0_copies.len(),
        g3.registry().h_copies.len()
    );
}
