//! graph6 and DIMACS round trips, with the label sidecar kept aligned by
//! vertex-order-preserving export.
//!
//! ```bash
//! cargo run --example formats
//! ```

use packing_chromatic::families::{build_g0, build_h};
use packing_chromatic::io::{
    decode_graph6, encode_graph6, encode_graph6_long, read_dimacs, write_dimacs,
};

fn main() {
    let h = build_h();
    let line = encode_graph6(h.graph()).unwrap();
    println!("H as graph6: {line}");
    assert_eq!(&decode_graph6(&line).unwrap(), h.graph());

    // the long-form header encodes the same graph; decoders accept both
    let long = encode_graph6_long(h.graph()).unwrap();
    println!("H with a long size header: {long}");
    assert_eq!(&decode_graph6(&long).unwrap(), h.graph());

    let g0 = build_g0();
    let dimacs = write_dimacs(g0.graph());
    println!(
        "G0 as DIMACS: {} lines, header {:?}",
        dimacs.lines().count(),
        dimacs.lines().next().unwrap()
    );
    assert_eq!(&read_dimacs(&dimacs).unwrap(), g0.graph());

    // vertex order survives the round trip, so labels still line up
    let back = decode_graph6(&encode_graph6(g0.graph()).unwrap()).unwrap();
    let a = g0.vertex_named("a").unwrap();
    assert_eq!(back.neighbors(a), g0.graph().neighbors(a));
    println!(
        "vertex order preserved: label {:?} still has degree {}",
        g0.label_string(a),
        back.degree(a)
    );

    // malformed input is rejected with a byte offset
    let err = decode_graph6("B").unwrap_err();
    println!("truncated line rejected: {err}");
}
