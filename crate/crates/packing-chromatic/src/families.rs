//! Builders for the graph family under study: the 15-vertex gadget `H`, the
//! two-gadget assembly `G0`, perfect binary trees, and the recursive graphs
//! `Gk` obtained by gluing `2^k` copies of `G0` onto five trees.
//!
//! Every built graph carries a label per vertex (`y3`, `a'`, `A(0110)`,
//! ...) and a registry of embedded copies
//! with explicit vertex maps, so downstream bound certificates can re-check
//! each claimed substructure instead of trusting the builder.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{check_map_isomorphism, Graph, VertexId, VertexMap};

/// Construction ceiling for [`build_gk`]; `Gk` has `40 * 2^k - 5` vertices,
/// so the default keeps allocations in the low gigabyte range.
pub const DEFAULT_BUILD_CEILING: u32 = 16;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("the recursive family starts at k = 1, got k = {k}")]
    KTooSmall { k: u32 },
    #[error("k = {k} exceeds the build ceiling {ceiling} (40 * 2^k - 5 vertices); raise it explicitly to proceed")]
    CeilingExceeded { k: u32, ceiling: u32 },
    #[error("operation requires a Gk graph, got {family}")]
    WrongFamily { family: String },
    #[error("half {half} does not induce a copy of the previous level: {reason}")]
    HalfMismatch { half: u8, reason: String },
}

/// Binary string `β1…βm`, used both for copy paths and tree labels.
/// Fixed-width lexicographic order coincides with the numeric order of the
/// string read most-significant-bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct BitString(String);

impl BitString {
    pub fn empty() -> Self {
        BitString(String::new())
    }

    /// The `index`-th string of the given width, in lexicographic order.
    pub fn from_index(index: usize, width: usize) -> Self {
        let mut s = String::with_capacity(width);
        for pos in (0..width).rev() {
            s.push(if index >> pos & 1 == 1 { '1' } else { '0' });
        }
        BitString(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn lex_rank(&self) -> usize {
        self.0
            .bytes()
            .fold(0usize, |acc, b| acc << 1 | usize::from(b == b'1'))
    }

    /// Child labels prepend a bit on the left: `0ℓ` and `1ℓ`.
    pub fn with_prepended(&self, bit: u8) -> Self {
        let mut s = String::with_capacity(self.0.len() + 1);
        s.push(if bit == 1 { '1' } else { '0' });
        s.push_str(&self.0);
        BitString(s)
    }

    pub fn with_appended(&self, bit: u8) -> Self {
        let mut s = self.0.clone();
        s.push(if bit == 1 { '1' } else { '0' });
        BitString(s)
    }

    pub fn last_bit(&self) -> Option<u8> {
        self.0.bytes().last().map(|b| u8::from(b == b'1'))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Vertex names of the gadget `H`, in canonical id order
/// `y1..y7, z1..z7, w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HName {
    Y(u8),
    Z(u8),
    W,
}

impl fmt::Display for HName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HName::Y(i) => write!(f, "y{i}"),
            HName::Z(i) => write!(f, "z{i}"),
            HName::W => write!(f, "w"),
        }
    }
}

pub const H_NAMES: [HName; 15] = [
    HName::Y(1),
    HName::Y(2),
    HName::Y(3),
    HName::Y(4),
    HName::Y(5),
    HName::Y(6),
    HName::Y(7),
    HName::Z(1),
    HName::Z(2),
    HName::Z(3),
    HName::Z(4),
    HName::Z(5),
    HName::Z(6),
    HName::Z(7),
    HName::W,
];

/// Edge list of `H` over the canonical ids.
const H_EDGES: [(VertexId, VertexId); 20] = [
    (0, 1),   // y1-y2
    (0, 4),   // y1-y5
    (1, 2),   // y2-y3
    (1, 3),   // y2-y4
    (2, 6),   // y3-y7
    (2, 7),   // y3-z1
    (3, 5),   // y4-y6
    (3, 14),  // y4-w
    (4, 5),   // y5-y6
    (4, 13),  // y5-z7
    (5, 6),   // y6-y7
    (7, 8),   // z1-z2
    (7, 11),  // z1-z5
    (8, 9),   // z2-z3
    (8, 10),  // z2-z4
    (9, 13),  // z3-z7
    (10, 12), // z4-z6
    (10, 14), // z4-w
    (11, 12), // z5-z6
    (12, 13), // z6-z7
];

/// The two embedded copies of `H` inside `G0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HCopy {
    Prime,
    DoublePrime,
}

// Letter names of the two H-copies of G0, indexed by H vertex order. The
// primed copy sits rotated inside G0, hence the non-identity pattern.
const PRIME_LETTERS: [char; 15] = [
    'a', 'm', 'r', 'u', 's', 'k', 'c', 'p', 'n', 'b', 'v', 'd', 'l', 't', 'x',
];
const DPRIME_LETTERS: [char; 15] = [
    'a', 'k', 'r', 'u', 's', 'm', 'd', 'p', 'l', 'b', 'v', 'c', 'n', 't', 'x',
];

/// The five gluing points `a, b, c, d, x` and their trees `A, B, C, D, X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Attach {
    A,
    B,
    C,
    D,
    X,
}

pub const ATTACHES: [Attach; 5] = [Attach::A, Attach::B, Attach::C, Attach::D, Attach::X];

impl Attach {
    pub fn index(self) -> usize {
        match self {
            Attach::A => 0,
            Attach::B => 1,
            Attach::C => 2,
            Attach::D => 3,
            Attach::X => 4,
        }
    }

    pub fn lower(self) -> char {
        match self {
            Attach::A => 'a',
            Attach::B => 'b',
            Attach::C => 'c',
            Attach::D => 'd',
            Attach::X => 'x',
        }
    }

    pub fn upper(self) -> char {
        match self {
            Attach::A => 'A',
            Attach::B => 'B',
            Attach::C => 'C',
            Attach::D => 'D',
            Attach::X => 'X',
        }
    }
}

// Where each connector attaches, as H-order indices (copy 1, copy 2). The
// c/d connectors cross sides; the asymmetry is intended and load-bearing
// (the midpoint-table checks pin it down).
const ATTACH_TARGETS: [(VertexId, VertexId); 5] = [
    (0, 0),   // a: y1-image in both copies
    (9, 9),   // b: z3-image in both copies
    (6, 11),  // c: y7-image of copy 1, z5-image of copy 2
    (11, 6),  // d: z5-image of copy 1, y7-image of copy 2
    (14, 14), // x: w-image in both copies
];

/// Vertex label: the customary name plus, inside `Gk`, the copy path.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    /// Vertex of the gadget `H` itself.
    H(HName),
    /// Non-connector vertex of a `G0` copy; `copy` is empty inside `G0`.
    G0Vertex {
        copy: BitString,
        side: HCopy,
        letter: char,
    },
    /// Connector `a,b,c,d,x` of a `G0` copy. For k >= 1 this vertex is
    /// simultaneously the leaf of the matching gluing tree.
    Connector { copy: BitString, name: Attach },
    /// Internal vertex of a gluing tree; empty suffix names the root.
    Tree { tree: Attach, suffix: BitString },
    /// Vertex of a standalone perfect binary tree.
    T { suffix: BitString },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::H(name) => write!(f, "{name}"),
            Label::G0Vertex { copy, side, letter } => {
                let tick = match side {
                    HCopy::Prime => "'",
                    HCopy::DoublePrime => "''",
                };
                if copy.is_empty() {
                    write!(f, "{letter}{tick}")
                } else {
                    write!(f, "{letter}{tick}({copy})")
                }
            }
            Label::Connector { copy, name } => {
                if copy.is_empty() {
                    write!(f, "{}", name.lower())
                } else {
                    write!(f, "{}({copy})", name.lower())
                }
            }
            Label::Tree { tree, suffix } => write!(f, "{}({suffix})", tree.upper()),
            Label::T { suffix } => write!(f, "T({suffix})"),
        }
    }
}

/// Which member of the family a labelled graph is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyId {
    H,
    G0,
    Tree { depth: u32 },
    Gk { k: u32 },
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::H => write!(f, "H"),
            FamilyId::G0 => write!(f, "G0"),
            FamilyId::Tree { depth } => write!(f, "tree(depth={depth})"),
            FamilyId::Gk { k } => write!(f, "G{k}"),
        }
    }
}

/// An embedded copy of a reference graph: its image vertex set and the map
/// from the reference ids into the host.
#[derive(Clone, Debug)]
pub struct EmbeddedCopy {
    pub vertices: Vec<VertexId>,
    pub map: VertexMap,
}

/// A `G0` copy inside `Gk`, keyed by its binary copy path.
#[derive(Clone, Debug)]
pub struct G0Copy {
    pub path: BitString,
    pub vertices: Vec<VertexId>,
    pub map: VertexMap,
}

/// The two-halves layout of a `Gk`: everything below bit 0 vs bit 1, plus
/// the five tree roots left over.
#[derive(Clone, Debug)]
pub struct HalvesLayout {
    pub half0: Vec<VertexId>,
    pub half1: Vec<VertexId>,
    pub roots: [VertexId; 5],
}

/// Registry of substructures a builder promises to have embedded.
#[derive(Clone, Debug, Default)]
pub struct CopyRegistry {
    pub h_copies: Vec<EmbeddedCopy>,
    pub g0_copies: Vec<G0Copy>,
    pub halves: Option<HalvesLayout>,
}

/// A built family graph: the plain graph, one label per vertex, and the
/// copy registry. Immutable after construction.
#[derive(Clone, Debug)]
pub struct LabeledFamilyGraph {
    graph: Graph,
    family: FamilyId,
    labels: Vec<Label>,
    index: HashMap<String, VertexId>,
    registry: CopyRegistry,
}

impl LabeledFamilyGraph {
    fn new(graph: Graph, family: FamilyId, labels: Vec<Label>, registry: CopyRegistry) -> Self {
        debug_assert_eq!(graph.vertex_count(), labels.len());
        let mut index = HashMap::with_capacity(labels.len());
        for (v, label) in labels.iter().enumerate() {
            let prev = index.insert(label.to_string(), v as VertexId);
            debug_assert!(prev.is_none(), "duplicate label {label}");
        }
        LabeledFamilyGraph {
            graph,
            family,
            labels,
            index,
            registry,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &Label {
        &self.labels[v as usize]
    }

    pub fn label_string(&self, v: VertexId) -> String {
        self.labels[v as usize].to_string()
    }

    pub fn label_strings(&self) -> Vec<String> {
        self.labels.iter().map(Label::to_string).collect()
    }

    /// Looks a vertex up by its display name, e.g. `"s'"` or `"A(01)"`.
    pub fn vertex_named(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn registry(&self) -> &CopyRegistry {
        &self.registry
    }
}

/// Builds the 15-vertex gadget `H`.
pub fn build_h() -> LabeledFamilyGraph {
    let graph = Graph::build(15, &H_EDGES).expect("H edge list is fixed and valid");
    let labels = H_NAMES.iter().map(|&n| Label::H(n)).collect();
    let registry = CopyRegistry {
        h_copies: vec![EmbeddedCopy {
            vertices: (0..15).collect(),
            map: VertexMap::identity(15),
        }],
        ..CopyRegistry::default()
    };
    LabeledFamilyGraph::new(graph, FamilyId::H, labels, registry)
}

/// Builds `G0`: two copies of `H` joined through the five connectors
/// `a, b, c, d, x`. Ids 0..15 are the primed copy in `H` order, 15..30 the
/// double-primed copy, 30..35 the connectors.
pub fn build_g0() -> LabeledFamilyGraph {
    let mut edges = Vec::with_capacity(50);
    for &(u, v) in &H_EDGES {
        edges.push((u, v));
        edges.push((u + 15, v + 15));
    }
    for (t, &(in_copy1, in_copy2)) in ATTACH_TARGETS.iter().enumerate() {
        let connector = 30 + t as VertexId;
        edges.push((connector, in_copy1));
        edges.push((connector, in_copy2 + 15));
    }
    let graph = Graph::build(35, &edges).expect("G0 edge list is fixed and valid");

    let mut labels = Vec::with_capacity(35);
    for letter in PRIME_LETTERS {
        labels.push(Label::G0Vertex {
            copy: BitString::empty(),
            side: HCopy::Prime,
            letter,
        });
    }
    for letter in DPRIME_LETTERS {
        labels.push(Label::G0Vertex {
            copy: BitString::empty(),
            side: HCopy::DoublePrime,
            letter,
        });
    }
    for name in ATTACHES {
        labels.push(Label::Connector {
            copy: BitString::empty(),
            name,
        });
    }

    let registry = CopyRegistry {
        h_copies: vec![
            EmbeddedCopy {
                vertices: (0..15).collect(),
                map: VertexMap::new((0..15).collect()),
            },
            EmbeddedCopy {
                vertices: (15..30).collect(),
                map: VertexMap::new((15..30).collect()),
            },
        ],
        g0_copies: vec![G0Copy {
            path: BitString::empty(),
            vertices: (0..35).collect(),
            map: VertexMap::identity(35),
        }],
        halves: None,
    };
    LabeledFamilyGraph::new(graph, FamilyId::G0, labels, registry)
}

/// Builds a perfect binary tree of the given depth with the level-order id
/// layout and the `T(β1…βm)` labelling (bits prepend on the left going down).
pub fn build_perfect_tree(depth: u32) -> LabeledFamilyGraph {
    let n = (1usize << (depth + 1)) - 1;
    let mut labels = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for d in 0..=depth {
        let level_start = (1usize << d) - 1;
        for rank in 0..1usize << d {
            let suffix = BitString::from_index(rank, d as usize);
            labels.push(Label::T {
                suffix: suffix.clone(),
            });
            if d < depth {
                let id = (level_start + rank) as VertexId;
                let child_start = (1usize << (d + 1)) - 1;
                // left child 0ℓ keeps the rank, right child 1ℓ adds 2^d
                edges.push((id, (child_start + rank) as VertexId));
                edges.push((id, (child_start + (1 << d) + rank) as VertexId));
            }
        }
    }
    let graph = Graph::build(n, &edges).expect("tree edge list is valid");
    LabeledFamilyGraph::new(
        graph,
        FamilyId::Tree { depth },
        labels,
        CopyRegistry::default(),
    )
}

/// Builds `Gk` for `k >= 1` under the default ceiling.
pub fn build_gk(k: u32) -> Result<LabeledFamilyGraph, FamilyError> {
    build_gk_with_ceiling(k, DEFAULT_BUILD_CEILING)
}

/// Builds `Gk`: `2^k` copies of `G0` whose connectors are identified with
/// the leaves of five perfect binary trees `A, B, C, D, X` of depth `k`.
///
/// Id layout is copy-major: copy `c` (paths in lexicographic order) occupies
/// `35c..35c+35` with the internal `G0` order; the internal tree vertices
/// follow in level order (all five roots first).
pub fn build_gk_with_ceiling(k: u32, ceiling: u32) -> Result<LabeledFamilyGraph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::KTooSmall { k });
    }
    if k > ceiling {
        return Err(FamilyError::CeilingExceeded { k, ceiling });
    }
    let copies = 1usize << k;
    let tree_base = (35 * copies) as VertexId;
    let n = 40 * copies - 5;

    // internal tree vertex id for (tree, suffix), suffix length < k
    let internal_id = |tree: Attach, suffix: &BitString| -> VertexId {
        let d = suffix.len();
        tree_base
            + (5 * ((1usize << d) - 1) + tree.index() * (1 << d) + suffix.lex_rank()) as VertexId
    };
    // the leaf for (tree, path) is the matching connector of copy `path`
    let leaf_id = |tree: Attach, path: &BitString| -> VertexId {
        (35 * path.lex_rank() + 30 + tree.index()) as VertexId
    };

    let g0 = build_g0();
    let g0_edges = g0.graph().edges();

    let mut labels = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(60 * copies - 10);
    let mut registry = CopyRegistry::default();

    for c in 0..copies {
        let path = BitString::from_index(c, k as usize);
        let base = (35 * c) as VertexId;
        for &(u, v) in &g0_edges {
            edges.push((base + u, base + v));
        }
        for v in 0..35u32 {
            labels.push(match g0.label(v) {
                Label::G0Vertex { side, letter, .. } => Label::G0Vertex {
                    copy: path.clone(),
                    side: *side,
                    letter: *letter,
                },
                Label::Connector { name, .. } => Label::Connector {
                    copy: path.clone(),
                    name: *name,
                },
                other => unreachable!("unexpected G0 label {other}"),
            });
        }
        registry.g0_copies.push(G0Copy {
            path: path.clone(),
            vertices: (base..base + 35).collect(),
            map: VertexMap::new((base..base + 35).collect()),
        });
        registry.h_copies.push(EmbeddedCopy {
            vertices: (base..base + 15).collect(),
            map: VertexMap::new((base..base + 15).collect()),
        });
        registry.h_copies.push(EmbeddedCopy {
            vertices: (base + 15..base + 30).collect(),
            map: VertexMap::new((base + 15..base + 30).collect()),
        });
    }

    for d in 0..k as usize {
        for tree in ATTACHES {
            for rank in 0..1usize << d {
                let suffix = BitString::from_index(rank, d);
                let parent = internal_id(tree, &suffix);
                for bit in [0u8, 1u8] {
                    let child = suffix.with_prepended(bit);
                    let child_id = if d + 1 < k as usize {
                        internal_id(tree, &child)
                    } else {
                        leaf_id(tree, &child)
                    };
                    edges.push((parent, child_id));
                }
            }
        }
    }
    // level-order labels for internal tree vertices
    for d in 0..k as usize {
        for tree in ATTACHES {
            for rank in 0..1usize << d {
                labels.push(Label::Tree {
                    tree,
                    suffix: BitString::from_index(rank, d),
                });
            }
        }
    }

    let roots = [
        internal_id(Attach::A, &BitString::empty()),
        internal_id(Attach::B, &BitString::empty()),
        internal_id(Attach::C, &BitString::empty()),
        internal_id(Attach::D, &BitString::empty()),
        internal_id(Attach::X, &BitString::empty()),
    ];
    let mut half0 = Vec::new();
    let mut half1 = Vec::new();
    for (v, label) in labels.iter().enumerate() {
        let last = match label {
            Label::G0Vertex { copy, .. } | Label::Connector { copy, .. } => copy.last_bit(),
            Label::Tree { suffix, .. } => suffix.last_bit(),
            other => unreachable!("unexpected Gk label {other}"),
        };
        match last {
            Some(0) => half0.push(v as VertexId),
            Some(1) => half1.push(v as VertexId),
            Some(_) => unreachable!(),
            None => debug_assert!(roots.contains(&(v as VertexId))),
        }
    }
    registry.halves = Some(HalvesLayout {
        half0,
        half1,
        roots,
    });

    let graph = Graph::build(n, &edges).expect("Gk edge list is valid by construction");
    assert_eq!(graph.vertex_count(), 40 * copies - 5);
    assert_eq!(graph.edge_count(), 60 * copies - 10);
    Ok(LabeledFamilyGraph::new(
        graph,
        FamilyId::Gk { k },
        labels,
        registry,
    ))
}

/// Result of splitting a `Gk` into its two embedded copies of the previous
/// level plus the five tree roots.
#[derive(Debug)]
pub struct Halves {
    /// The previous level (`G0` when k = 1, `G(k-1)` otherwise), rebuilt.
    pub previous: LabeledFamilyGraph,
    pub half0: Vec<VertexId>,
    pub half1: Vec<VertexId>,
    pub roots: [VertexId; 5],
    /// Validated embeddings of `previous` onto half 0 and half 1.
    pub maps: [VertexMap; 2],
}

/// Splits a `Gk` into its two halves and re-checks that each half induces a
/// genuine copy of the previous level under the strip-last-bit relabelling.
pub fn decompose_halves(g: &LabeledFamilyGraph) -> Result<Halves, FamilyError> {
    let k = match g.family() {
        FamilyId::Gk { k } => k,
        other => {
            return Err(FamilyError::WrongFamily {
                family: other.to_string(),
            })
        }
    };
    let previous = if k == 1 {
        build_g0()
    } else {
        build_gk(k - 1)?
    };
    let layout = g
        .registry()
        .halves
        .as_ref()
        .expect("Gk builder always populates the halves layout");

    let mut maps = Vec::with_capacity(2);
    for bit in [0u8, 1u8] {
        let mut mapping = Vec::with_capacity(previous.graph().vertex_count());
        for pv in previous.graph().vertices() {
            let lifted = match previous.label(pv) {
                Label::G0Vertex { copy, side, letter } => Label::G0Vertex {
                    copy: copy.with_appended(bit),
                    side: *side,
                    letter: *letter,
                },
                Label::Connector { copy, name } => Label::Connector {
                    copy: copy.with_appended(bit),
                    name: *name,
                },
                Label::Tree { tree, suffix } => Label::Tree {
                    tree: *tree,
                    suffix: suffix.with_appended(bit),
                },
                other => {
                    return Err(FamilyError::HalfMismatch {
                        half: bit,
                        reason: format!("previous level carries unexpected label {other}"),
                    })
                }
            };
            let target = g.vertex_named(&lifted.to_string()).ok_or_else(|| {
                FamilyError::HalfMismatch {
                    half: bit,
                    reason: format!("no vertex labelled {lifted}"),
                }
            })?;
            mapping.push(target);
        }
        let map = VertexMap::new(mapping);
        match check_map_isomorphism(previous.graph(), g.graph(), &map) {
            Ok(true) => {}
            Ok(false) => {
                return Err(FamilyError::HalfMismatch {
                    half: bit,
                    reason: "induced edge check failed".into(),
                })
            }
            Err(e) => {
                return Err(FamilyError::HalfMismatch {
                    half: bit,
                    reason: e.to_string(),
                })
            }
        }
        // the map image must be exactly the registered half
        let mut image: Vec<VertexId> = map.image().to_vec();
        image.sort_unstable();
        let registered = if bit == 0 { &layout.half0 } else { &layout.half1 };
        if &image != registered {
            return Err(FamilyError::HalfMismatch {
                half: bit,
                reason: "map image differs from the registered half".into(),
            });
        }
        maps.push(map);
    }

    let map1 = maps.pop().unwrap();
    let map0 = maps.pop().unwrap();
    Ok(Halves {
        previous,
        half0: layout.half0.clone(),
        half1: layout.half1.clone(),
        roots: layout.roots,
        maps: [map0, map1],
    })
}
