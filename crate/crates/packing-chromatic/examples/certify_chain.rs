//! Build the certificate chain for chi_rho(G3) >= 15, print every step,
//! round-trip it through JSON, and re-validate from scratch.
//!
//! ```bash
//! cargo run --release --example certify_chain
//! ```

use packing_chromatic::certify::{certify_chi_rho_lower, Certificate, DEFAULT_K_MAX_DIAM};

fn main() {
    let certificate = certify_chi_rho_lower(3, DEFAULT_K_MAX_DIAM, false).unwrap();
    println!(
        "conclusion: {} [{:?}]",
        certificate.conclusion, certificate.trust_level
    );
    for step in &certificate.steps {
        println!(
            "  step {:2}  {:<18}  {}  (premises {:?})",
            step.id,
            step.rule.name(),
            step.claim,
            step.premises
        );
    }

    let text = certificate.to_json();
    println!("serialized certificate: {} bytes of JSON", text.len());

    let reloaded = Certificate::from_json(&text).unwrap();
    reloaded.revalidate().unwrap();
    println!("reloaded certificate re-validated: every solver run, diameter, and copy map checked again");
}
