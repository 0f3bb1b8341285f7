//! Exact diameters across the family, checked against the 2k+6 envelope.
//!
//! Small graphs get a full BFS sweep; larger ones the eccentricity-pruned
//! search, which returns the same exact value.
//!
//! ```bash
//! cargo run --release --example exact_diameters
//! ```

use std::time::Instant;

use packing_chromatic::families::{build_g0, build_gk, build_h};

fn main() {
    let h = build_h();
    println!("diam(H)  = {}", h.graph().diameter().unwrap());
    let g0 = build_g0();
    println!("diam(G0) = {} (bound 6)", g0.graph().diameter().unwrap());

    for k in 1..=7 {
        let g = build_gk(k).unwrap();
        let t = Instant::now();
        let d = g.graph().diameter().unwrap();
        println!(
            "diam(G{k}) = {d:2} (bound {:2}) on {:5} vertices in {:?}",
            2 * k + 6,
            g.graph().vertex_count(),
            t.elapsed()
        );
        assert!(d <= 2 * k + 6);
    }

    // the pruned search agrees with the sweep wherever both run
    let g3 = build_gk(3).unwrap();
    assert_eq!(g3.graph().diameter_ifub(), g3.graph().diameter().unwrap());
    println!("pruned eccentricity search agrees with the full sweep on G3");
}
