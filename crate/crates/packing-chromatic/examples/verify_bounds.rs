//! Re-check the five structural facts behind the family's bounds, then the
//! per-instance theorem bounds for a small k.
//!
//! ```bash
//! cargo run --release --example verify_bounds
//! ```

use packing_chromatic::certify::{verify_lemma, verify_theorem, DEFAULT_K_MAX_DIAM};

fn main() {
    for id in 1..=5 {
        let report = verify_lemma(id).unwrap();
        println!(
            "fact {id}: {} — {}",
            if report.pass { "ok" } else { "FAILED" },
            report.summary
        );
    }

    let theorem = verify_theorem(4, DEFAULT_K_MAX_DIAM, false).unwrap();
    println!(
        "k = {}: {} vertices, {} edges, diameter {:?} <= {}, chi_rho >= {} ({} certificate steps) => {}",
        theorem.k,
        theorem.vertex_count,
        theorem.edge_count,
        theorem.diameter,
        theorem.diameter_bound,
        theorem.chi_rho_lower,
        theorem.certificate.steps.len(),
        if theorem.pass { "verified" } else { "FAILED" }
    );
}
