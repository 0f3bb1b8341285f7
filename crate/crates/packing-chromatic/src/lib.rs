//! Exact packing-coloring toolkit for a recursive family of subcubic
//! graphs with unbounded packing chromatic number.
//!
//! The family starts from a 15-vertex gadget `H`, joins two copies into the
//! 35-vertex assembly `G0`, and glues `2^k` copies of `G0` onto five perfect
//! binary trees to form `Gk` (`40 * 2^k - 5` vertices, maximum degree 3).
//! The library computes exact distances and diameters, decides
//! k-packing-colorability by exhaustive search, computes maximum i-packings
//! and the packing chromatic number of small graphs, and produces
//! re-checkable certificates for the bounds `diam(Gk) <= 2k + 6` and
//! `chi_rho(Gk) >= 2k + 9`.
//!
//! Every capability has a runnable example under `examples/`; the
//! `packing-chromatic` binary exposes the same operations as subcommands.

pub mod certify;
pub mod cli;
pub mod families;
pub mod graph;
pub mod io;
pub mod packing;
pub mod report;

pub use certify::{
    certify_chi_rho_lower, certify_counting_lower, check_midpoint_property, disjoint_copies_bound,
    singleton_color_threshold, verify_lemma, verify_theorem, Certificate, Claim, GraphId,
    TrustLevel,
};
pub use families::{
    build_g0, build_gk, build_h, build_perfect_tree, decompose_halves, FamilyId, Label,
    LabeledFamilyGraph,
};
pub use graph::{check_map_isomorphism, DistanceMatrix, Graph, VertexId, VertexMap, UNREACHABLE};
pub use io::{decode_graph6, encode_graph6, read_dimacs, write_dimacs};
pub use packing::{
    counting_lower_bound, decide_packing_colorable, greedy_upper_bound, max_i_packing,
    packing_chromatic_number, validate_packing_coloring, ChiRhoOutcome, PackingColoring,
    SolveResult, SolveStatus, SolverConfig,
};
pub use report::Report;
