//! Exact packing-coloring machinery: validity checking, maximum i-packings
//! by branch and bound over distance powers, an exhaustive decision solver
//! for k-packing-colorability, and the elementary counting bound.
//!
//! A coloring `c` is a packing coloring when `c(u) = c(v) = i` forces
//! `d(u, v) > i`. UNSAT answers are only ever reported after the search
//! space is exhausted; hitting a time or node limit is a first-class
//! `Timeout` status, never converted to UNSAT.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, GraphError, VertexId};

#[derive(Debug, Error)]
pub enum PackingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("assignment is partial: {reason}")]
    PartialAssignment { reason: String },
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("solver limits must be positive when set")]
    InvalidConfig,
}

/// Total vertex -> color map with colors >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingColoring {
    colors: Vec<u16>,
}

impl PackingColoring {
    pub fn new(colors: Vec<u16>) -> Self {
        PackingColoring { colors }
    }

    pub fn color(&self, v: VertexId) -> u16 {
        self.colors[v as usize]
    }

    pub fn colors(&self) -> &[u16] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color in use.
    pub fn palette_size(&self) -> u16 {
        self.colors.iter().copied().max().unwrap_or(0)
    }
}

/// A violating same-color pair at distance <= color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub color: u16,
    pub distance: u32,
}

#[derive(Debug, Clone)]
pub struct Validation {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks the defining property pair by pair, reporting every violation.
/// A partial assignment (wrong length or a zero color) is an error, distinct
/// from an invalid coloring.
pub fn validate_packing_coloring(
    g: &Graph,
    c: &PackingColoring,
) -> Result<Validation, PackingError> {
    let dm = g.all_pairs_distances()?;
    validate_with_matrix(&dm, c)
}

pub fn validate_with_matrix(
    dm: &DistanceMatrix,
    c: &PackingColoring,
) -> Result<Validation, PackingError> {
    let n = dm.vertex_count();
    if c.len() != n {
        return Err(PackingError::PartialAssignment {
            reason: format!("{} colors for {} vertices", c.len(), n),
        });
    }
    if let Some(v) = c.colors().iter().position(|&x| x == 0) {
        return Err(PackingError::PartialAssignment {
            reason: format!("vertex {v} is uncolored"),
        });
    }
    let mut violations = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            let color = c.color(u);
            if color == c.color(v) {
                let d = dm.get(u, v);
                if u64::from(d) <= u64::from(color) {
                    violations.push(Violation {
                        u,
                        v,
                        color,
                        distance: d,
                    });
                }
            }
        }
    }
    Ok(Validation {
        valid: violations.is_empty(),
        violations,
    })
}

// ---------------------------------------------------------------------------
// maximum i-packings
// ---------------------------------------------------------------------------

/// Word-packed vertex set used by the branch-and-bound search.
#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn subtract(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    fn intersection_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

/// Exact maximum independent set with include/exclude branching. Vertices of
/// candidate degree <= 1 are taken greedily (always part of some maximum
/// set), the rest branch on the highest-degree candidate.
fn max_independent_set(closed: &[Bits], n: usize) -> (usize, Vec<VertexId>) {
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let cand = Bits::full(n);
    mis_branch(closed, cand, &mut current, &mut best);
    best.sort_unstable();
    (best.len(), best.iter().map(|&v| v as VertexId).collect())
}

fn mis_branch(closed: &[Bits], mut cand: Bits, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let picked_at = current.len();
    loop {
        let mut low = None;
        for v in cand.iter() {
            // candidate degree counts v itself via the closed neighborhood
            if cand.intersection_count(&closed[v]) <= 2 {
                low = Some(v);
                break;
            }
        }
        match low {
            Some(v) => {
                current.push(v);
                cand.subtract(&closed[v]);
            }
            None => break,
        }
    }
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(picked_at);
        return;
    }
    if current.len() + cand.count() <= best.len() {
        current.truncate(picked_at);
        return;
    }
    let pivot = cand
        .iter()
        .max_by_key(|&v| (cand.intersection_count(&closed[v]), std::cmp::Reverse(v)))
        .unwrap();
    // include
    let mut with_pivot = cand.clone();
    with_pivot.subtract(&closed[pivot]);
    current.push(pivot);
    mis_branch(closed, with_pivot, current, best);
    current.pop();
    // exclude
    cand.remove(pivot);
    mis_branch(closed, cand, current, best);
    current.truncate(picked_at);
}

/// All independent sets of exactly the maximum size, in lexicographic
/// vertex-id order.
fn enumerate_maximum_sets(closed: &[Bits], n: usize, alpha: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    enum_branch(closed, n, alpha, 0, &Bits::full(n), &mut current, &mut out);
    out
}

fn enum_branch(
    closed: &[Bits],
    n: usize,
    alpha: usize,
    from: usize,
    cand: &Bits,
    current: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if current.len() == alpha {
        out.push(current.clone());
        return;
    }
    let mut rest = cand.clone();
    for v in from..n {
        if !rest.contains(v) {
            continue;
        }
        if current.len() + rest.count() < alpha {
            return;
        }
        let mut next = rest.clone();
        next.subtract(&closed[v]);
        for w in 0..=v {
            next.remove(w);
        }
        current.push(v as VertexId);
        enum_branch(closed, n, alpha, v + 1, &next, current, out);
        current.pop();
        rest.remove(v);
    }
}

#[derive(Debug, Clone)]
pub struct MaxPacking {
    /// alpha_i: size of a maximum i-packing.
    pub size: usize,
    /// One maximum witness, ascending ids.
    pub witness: Vec<VertexId>,
    /// Every maximum i-packing in lexicographic order, when requested.
    pub all_maximum: Option<Vec<Vec<VertexId>>>,
}

/// Exact maximum i-packing: a maximum independent set of the i-th distance
/// power of `g`.
pub fn max_i_packing(g: &Graph, i: u32, enumerate: bool) -> Result<MaxPacking, PackingError> {
    let power = g.power_graph(i)?;
    let n = power.vertex_count();
    let mut closed: Vec<Bits> = Vec::with_capacity(n);
    for v in power.vertices() {
        let mut b = Bits::empty(n);
        b.insert(v as usize);
        for &u in power.neighbors(v) {
            b.insert(u as usize);
        }
        closed.push(b);
    }
    let (size, witness) = if n == 0 {
        (0, Vec::new())
    } else {
        max_independent_set(&closed, n)
    };
    let all_maximum = enumerate.then(|| enumerate_maximum_sets(&closed, n, size));
    Ok(MaxPacking {
        size,
        witness,
        all_maximum,
    })
}

// ---------------------------------------------------------------------------
// the exhaustive decision solver
// ---------------------------------------------------------------------------

/// Static vertex branching order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchOrdering {
    /// Descending degree in the square of the graph, ties by id. Low colors
    /// are the scarce resource, so contested vertices go first.
    PowerDegreeDesc,
    /// Plain id order.
    InputOrder,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    pub ordering: BranchOrdering,
    /// P1: reject colors conflicting with an assigned vertex at distance
    /// <= color. Off means colorings are only validated at the leaves,
    /// which is feasible on tiny graphs only.
    pub use_conflict_check: bool,
    /// P2: each color >= diam(g) is used at most once, and only the lowest
    /// unused such color may open a new singleton class.
    pub use_singleton_rule: bool,
    /// P3: prune when the unassigned vertices outnumber the remaining
    /// per-color capacities (alpha_i for low colors, 1 for singletons).
    pub use_packing_size_bounds: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            time_limit: Some(Duration::from_secs(300)),
            node_limit: None,
            ordering: BranchOrdering::PowerDegreeDesc,
            use_conflict_check: true,
            use_singleton_rule: true,
            use_packing_size_bounds: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Sat,
    Unsat,
    Timeout,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Present exactly when SAT; always passes validation.
    pub witness: Option<PackingColoring>,
    pub nodes: u64,
    pub elapsed: Duration,
}

struct SearchState<'a> {
    dm: &'a DistanceMatrix,
    order: Vec<VertexId>,
    k: u16,
    singleton_from: u16,
    caps: Vec<usize>,
    cfg: &'a SolverConfig,
    assignment: Vec<u16>,
    classes: Vec<Vec<VertexId>>,
    used: Vec<usize>,
    residual: i64,
    nodes: u64,
    deadline: Option<Instant>,
    solution: Option<Vec<u16>>,
}

enum SearchOutcome {
    Found,
    Exhausted,
    LimitHit,
}

impl SearchState<'_> {
    fn search(&mut self, depth: usize) -> SearchOutcome {
        self.nodes += 1;
        if let Some(limit) = self.cfg.node_limit {
            if self.nodes > limit {
                return SearchOutcome::LimitHit;
            }
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return SearchOutcome::LimitHit;
                }
            }
        }
        let n = self.order.len();
        if depth == n {
            if !self.cfg.use_conflict_check {
                let coloring = PackingColoring::new(self.assignment.clone());
                let check = validate_with_matrix(self.dm, &coloring)
                    .expect("assignment is total at the leaves");
                if !check.valid {
                    return SearchOutcome::Exhausted;
                }
            }
            self.solution = Some(self.assignment.clone());
            return SearchOutcome::Found;
        }
        if self.cfg.use_packing_size_bounds {
            let remaining = (n - depth) as i64;
            if remaining > self.residual {
                return SearchOutcome::Exhausted;
            }
        }
        let v = self.order[depth];
        let lowest_free_singleton = if self.cfg.use_singleton_rule {
            (self.singleton_from.max(1)..=self.k).find(|&i| self.used[i as usize] == 0)
        } else {
            None
        };
        for color in 1..=self.k {
            if self.cfg.use_singleton_rule && color >= self.singleton_from {
                if self.used[color as usize] > 0 {
                    continue;
                }
                // unused singleton colors are interchangeable
                if Some(color) != lowest_free_singleton {
                    continue;
                }
            }
            if self.cfg.use_conflict_check {
                let conflict = self.classes[color as usize]
                    .iter()
                    .any(|&u| u64::from(self.dm.get(u, v)) <= u64::from(color));
                if conflict {
                    continue;
                }
            }
            self.assignment[v as usize] = color;
            self.classes[color as usize].push(v);
            self.used[color as usize] += 1;
            let counted = self.cfg.use_packing_size_bounds
                && self.used[color as usize] <= self.caps[color as usize];
            if counted {
                self.residual -= 1;
            }

            let outcome = self.search(depth + 1);

            if counted {
                self.residual += 1;
            }
            self.used[color as usize] -= 1;
            self.classes[color as usize].pop();
            self.assignment[v as usize] = 0;

            match outcome {
                SearchOutcome::Exhausted => {}
                found_or_limit => return found_or_limit,
            }
        }
        SearchOutcome::Exhausted
    }
}

/// Decides whether `g` admits a packing coloring with colors `1..=k` by
/// exhaustive backtracking. UNSAT is reported only after the full search
/// space is covered; exceeding a limit yields `Timeout`.
pub fn decide_packing_colorable(
    g: &Graph,
    k: u16,
    cfg: &SolverConfig,
) -> Result<SolveResult, PackingError> {
    if k < 1 {
        return Err(PackingError::EmptyPalette);
    }
    if cfg.time_limit.is_some_and(|t| t.is_zero()) || cfg.node_limit == Some(0) {
        return Err(PackingError::InvalidConfig);
    }
    let dm = g.all_pairs_distances()?;
    if dm.is_disconnected() {
        return Err(PackingError::Graph(GraphError::Disconnected));
    }
    let start = Instant::now();

    let n = g.vertex_count();
    let mut order: Vec<VertexId> = g.vertices().collect();
    if cfg.ordering == BranchOrdering::PowerDegreeDesc {
        let square_degree: Vec<usize> = (0..n)
            .map(|v| {
                dm.row(v as VertexId)
                    .iter()
                    .filter(|&&d| d > 0 && d <= 2)
                    .count()
            })
            .collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(square_degree[v as usize]), v));
    }

    let diam = dm.diameter() as u16;
    let singleton_from = diam.max(1);
    let mut caps = vec![0usize; k as usize + 1];
    if cfg.use_packing_size_bounds {
        for i in 1..=k {
            caps[i as usize] = if i >= singleton_from {
                1
            } else {
                max_i_packing(g, u32::from(i), false)?.size
            };
        }
    }
    let residual: i64 = caps.iter().map(|&c| c as i64).sum();

    let mut state = SearchState {
        dm: &dm,
        order,
        k,
        singleton_from,
        caps,
        cfg,
        assignment: vec![0; n],
        classes: vec![Vec::new(); k as usize + 1],
        used: vec![0; k as usize + 1],
        residual,
        nodes: 0,
        deadline: cfg.time_limit.map(|t| start + t),
        solution: None,
    };
    let outcome = state.search(0);
    let elapsed = start.elapsed();
    let result = match outcome {
        SearchOutcome::Found => {
            let witness = PackingColoring::new(state.solution.expect("Found always snapshots"));
            let check = validate_with_matrix(&dm, &witness)?;
            assert!(
                check.valid,
                "solver produced an invalid witness: {:?}",
                check.violations
            );
            SolveResult {
                status: SolveStatus::Sat,
                witness: Some(witness),
                nodes: state.nodes,
                elapsed,
            }
        }
        SearchOutcome::Exhausted => SolveResult {
            status: SolveStatus::Unsat,
            witness: None,
            nodes: state.nodes,
            elapsed,
        },
        SearchOutcome::LimitHit => SolveResult {
            status: SolveStatus::Timeout,
            witness: None,
            nodes: state.nodes,
            elapsed,
        },
    };
    Ok(result)
}

// ---------------------------------------------------------------------------
// packing chromatic number and elementary bounds
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountingVerdict {
    /// True when the capacity sum cannot cover the vertex set, proving
    /// chi_rho(g) > k.
    pub refuted: bool,
    pub total_capacity: u64,
    pub vertex_count: usize,
    /// Per-color capacity used in the sum: alpha_i below the diameter,
    /// 1 from the diameter up.
    pub capacities: Vec<(u16, usize)>,
}

/// The counting template: sum per-color capacities over `1..=k` and compare
/// with |V|. Refutation proves the palette is too small; the inconclusive
/// case says nothing.
pub fn counting_lower_bound(g: &Graph, k: u16) -> Result<CountingVerdict, PackingError> {
    if k < 1 {
        return Err(PackingError::EmptyPalette);
    }
    let diam = g.diameter()?;
    let singleton_from = diam.max(1) as u16;
    let mut capacities = Vec::with_capacity(k as usize);
    let mut total = 0u64;
    for i in 1..=k {
        let cap = if i >= singleton_from {
            1
        } else {
            max_i_packing(g, u32::from(i), false)?.size
        };
        capacities.push((i, cap));
        total += cap as u64;
    }
    Ok(CountingVerdict {
        refuted: total < g.vertex_count() as u64,
        total_capacity: total,
        vertex_count: g.vertex_count(),
        capacities,
    })
}

#[derive(Debug, Clone)]
pub enum ChiRhoOutcome {
    Exact {
        value: u16,
        witness: PackingColoring,
        /// Smallest palette the counting bound could not refute.
        counting_start: u16,
        total_nodes: u64,
    },
    /// The solver hit a limit at palette `at`; bounds carry what is known.
    Timeout {
        lower: u16,
        upper: u16,
        upper_witness: PackingColoring,
        total_nodes: u64,
    },
}

/// Exact packing chromatic number by increasing the palette from the
/// counting lower bound until the solver answers SAT.
pub fn packing_chromatic_number(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<ChiRhoOutcome, PackingError> {
    let mut k = 1u16;
    let counting_start = loop {
        let verdict = counting_lower_bound(g, k)?;
        if !verdict.refuted {
            break k;
        }
        k += 1;
    };
    let mut total_nodes = 0u64;
    loop {
        let result = decide_packing_colorable(g, k, cfg)?;
        total_nodes += result.nodes;
        match result.status {
            SolveStatus::Sat => {
                return Ok(ChiRhoOutcome::Exact {
                    value: k,
                    witness: result.witness.expect("SAT carries a witness"),
                    counting_start,
                    total_nodes,
                });
            }
            SolveStatus::Unsat => k += 1,
            SolveStatus::Timeout => {
                let (upper, upper_witness) = greedy_upper_bound(g)?;
                return Ok(ChiRhoOutcome::Timeout {
                    lower: k,
                    upper,
                    upper_witness,
                    total_nodes,
                });
            }
        }
    }
}

/// Greedy smallest-feasible-color coloring in id order; a cheap upper
/// envelope, never a bound the certificates rely on.
pub fn greedy_upper_bound(g: &Graph) -> Result<(u16, PackingColoring), PackingError> {
    let dm = g.all_pairs_distances()?;
    let n = g.vertex_count();
    let mut colors = vec![0u16; n];
    let mut classes: Vec<Vec<VertexId>> = vec![Vec::new()];
    let mut best = 0u16;
    for v in g.vertices() {
        let mut color = 1u16;
        loop {
            if classes.len() <= color as usize {
                classes.push(Vec::new());
            }
            let ok = classes[color as usize]
                .iter()
                .all(|&u| u64::from(dm.get(u, v)) > u64::from(color));
            if ok {
                colors[v as usize] = color;
                classes[color as usize].push(v);
                best = best.max(color);
                break;
            }
            color += 1;
        }
    }
    let coloring = PackingColoring::new(colors);
    let check = validate_with_matrix(&dm, &coloring)?;
    debug_assert!(check.valid);
    Ok((best, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_g0, build_h};

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn triangle() -> Graph {
        Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn validation_boundary_cases() {
        let p = path(3);
        let ok = validate_packing_coloring(&p, &PackingColoring::new(vec![1, 2, 1])).unwrap();
        assert!(ok.valid);

        let bad = validate_packing_coloring(&p, &PackingColoring::new(vec![2, 1, 2])).unwrap();
        assert!(!bad.valid);
        assert_eq!(
            bad.violations,
            vec![Violation {
                u: 0,
                v: 2,
                color: 2,
                distance: 2
            }]
        );

        let h = build_h();
        let all_ones =
            validate_packing_coloring(h.graph(), &PackingColoring::new(vec![1; 15])).unwrap();
        assert!(!all_ones.valid);
        assert!(all_ones.violations.len() >= h.graph().edge_count());
    }

    #[test]
    fn validation_partial_is_distinct_from_invalid() {
        let p = path(3);
        assert!(matches!(
            validate_packing_coloring(&p, &PackingColoring::new(vec![1, 2])),
            Err(PackingError::PartialAssignment { .. })
        ));
        assert!(matches!(
            validate_packing_coloring(&p, &PackingColoring::new(vec![1, 0, 1])),
            Err(PackingError::PartialAssignment { .. })
        ));
    }

    #[test]
    fn h_two_packing_is_unique() {
        let h = build_h();
        let result = max_i_packing(h.graph(), 2, true).unwrap();
        assert_eq!(result.size, 5);
        let expect: Vec<VertexId> = ["y1", "y7", "z3", "z5", "w"]
            .iter()
            .map(|name| h.vertex_named(name).unwrap())
            .collect();
        let mut expect = expect;
        expect.sort_unstable();
        assert_eq!(result.witness, expect);
        assert_eq!(result.all_maximum.unwrap(), vec![expect]);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        // P4 has three maximum independent sets
        let p4 = path(4);
        let result = max_i_packing(&p4, 1, true).unwrap();
        assert_eq!(result.size, 2);
        assert_eq!(
            result.all_maximum.unwrap(),
            vec![vec![0, 2], vec![0, 3], vec![1, 3]]
        );
    }

    #[test]
    fn h_alpha_values() {
        let h = build_h();
        assert_eq!(max_i_packing(h.graph(), 1, false).unwrap().size, 7);
        assert_eq!(max_i_packing(h.graph(), 3, false).unwrap().size, 2);
        for i in 4..=6 {
            assert_eq!(max_i_packing(h.graph(), i, false).unwrap().size, 1);
        }
        assert!(max_i_packing(h.graph(), 0, false).is_err());
    }

    #[test]
    fn y_side_alpha_one() {
        let h = build_h();
        let ys: Vec<VertexId> = (1..=7)
            .map(|i| h.vertex_named(&format!("y{i}")).unwrap())
            .collect();
        let (y, _) = h.graph().induced_subgraph(&ys).unwrap();
        assert_eq!(max_i_packing(&y, 1, false).unwrap().size, 3);
        assert_eq!(max_i_packing(&y, 2, false).unwrap().size, 2);
        assert_eq!(max_i_packing(&y, 3, false).unwrap().size, 1);
    }

    #[test]
    fn decide_trivial_and_path4() {
        let single = Graph::build(1, &[]).unwrap();
        let res = decide_packing_colorable(&single, 1, &SolverConfig::default()).unwrap();
        assert_eq!(res.status, SolveStatus::Sat);
        assert_eq!(res.witness.unwrap().colors(), &[1]);

        // brute force over all 2^4 assignments with colors {1,2} refutes
        let p4 = path(4);
        let res = decide_packing_colorable(&p4, 2, &SolverConfig::default()).unwrap();
        assert_eq!(res.status, SolveStatus::Unsat);
        let res = decide_packing_colorable(&p4, 3, &SolverConfig::default()).unwrap();
        assert_eq!(res.status, SolveStatus::Sat);
    }

    #[test]
    fn decide_h_six_unsat() {
        let h = build_h();
        let res = decide_packing_colorable(h.graph(), 6, &SolverConfig::default()).unwrap();
        assert_eq!(res.status, SolveStatus::Unsat);
        assert!(res.witness.is_none());
        assert!(res.nodes > 0);
    }

    #[test]
    fn decide_configs_agree_on_small_graphs() {
        // every pruning combination must give the same answer
        let graphs = [path(4), path(5), triangle()];
        for g in &graphs {
            for k in 1..=4u16 {
                let mut answers = Vec::new();
                for conflict in [true, false] {
                    for singleton in [true, false] {
                        for capacity in [true, false] {
                            let cfg = SolverConfig {
                                use_conflict_check: conflict,
                                use_singleton_rule: singleton,
                                use_packing_size_bounds: capacity,
                                ..SolverConfig::default()
                            };
                            let res = decide_packing_colorable(g, k, &cfg).unwrap();
                            answers.push(res.status);
                        }
                    }
                }
                assert!(
                    answers.windows(2).all(|w| w[0] == w[1]),
                    "pruning configs disagree on k={k}: {answers:?}"
                );
            }
        }
    }

    #[test]
    fn decide_timeout_statuses() {
        let h = build_h();
        let cfg = SolverConfig {
            node_limit: Some(3),
            ..SolverConfig::default()
        };
        let res = decide_packing_colorable(h.graph(), 6, &cfg).unwrap();
        assert_eq!(res.status, SolveStatus::Timeout);
        assert!(res.witness.is_none());

        let bad = SolverConfig {
            node_limit: Some(0),
            ..SolverConfig::default()
        };
        assert!(matches!(
            decide_packing_colorable(h.graph(), 6, &bad),
            Err(PackingError::InvalidConfig)
        ));
    }

    #[test]
    fn counting_bound_cases() {
        let h = build_h();
        let v3 = counting_lower_bound(h.graph(), 3).unwrap();
        assert!(v3.refuted);
        assert_eq!(v3.total_capacity, 14); // 7 + 5 + 2 < 15

        let v6 = counting_lower_bound(h.graph(), 6).unwrap();
        assert!(!v6.refuted);
        assert_eq!(v6.total_capacity, 17); // 7 + 5 + 2 + 1 + 1 + 1

        let t2 = counting_lower_bound(&triangle(), 2).unwrap();
        assert!(t2.refuted);
        assert_eq!(t2.total_capacity, 2);
    }

    #[test]
    fn chi_rho_small_graphs() {
        let res = packing_chromatic_number(&triangle(), &SolverConfig::default()).unwrap();
        match res {
            ChiRhoOutcome::Exact { value, witness, .. } => {
                assert_eq!(value, 3);
                assert_eq!(witness.palette_size(), 3);
            }
            other => panic!("unexpected outcome {other:?}"),
        }

        // brute force over all assignments with <= 3 colors gives 3
        let res = packing_chromatic_number(&path(4), &SolverConfig::default()).unwrap();
        match res {
            ChiRhoOutcome::Exact { value, .. } => assert_eq!(value, 3),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn greedy_envelope() {
        let single = Graph::build(1, &[]).unwrap();
        assert_eq!(greedy_upper_bound(&single).unwrap().0, 1);
        assert_eq!(greedy_upper_bound(&triangle()).unwrap().0, 3);

        let h = build_h();
        let (k, witness) = greedy_upper_bound(h.graph()).unwrap();
        assert!(k >= 7);
        assert!(validate_packing_coloring(h.graph(), &witness)
            .unwrap()
            .valid);
    }

    #[test]
    fn greedy_handles_unreachable_pairs() {
        // vertices in different components may share any color
        let two = Graph::build(2, &[]).unwrap();
        let (k, coloring) = greedy_upper_bound(&two).unwrap();
        assert_eq!(k, 1);
        assert_eq!(coloring.colors(), &[1, 1]);
    }

    #[test]
    fn restriction_of_valid_g0_coloring_to_h_copies() {
        let g0 = build_g0();
        let (_, coloring) = greedy_upper_bound(g0.graph()).unwrap();
        let h = build_h();
        for copy in &g0.registry().h_copies {
            let pulled: Vec<u16> = (0..15)
                .map(|v| coloring.color(copy.map.apply(v)))
                .collect();
            let check =
                validate_packing_coloring(h.graph(), &PackingColoring::new(pulled)).unwrap();
            assert!(check.valid);
        }
    }
}
