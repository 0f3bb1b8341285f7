//! Immutable simple undirected graphs with exact distance machinery.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted so that
//! every traversal, export and solver trace is reproducible byte for byte.

use std::collections::VecDeque;

use thiserror::Error;

/// Vertex id inside a [`Graph`].
pub type VertexId = u32;

/// Sentinel distance for unreachable pairs; strictly larger than any
/// attainable shortest-path length.
pub const UNREACHABLE: u32 = u32::MAX;

/// Default ceiling on `n` for materializing a full all-pairs matrix.
/// Larger graphs fall back to per-source rows and bound-pruned diameter
/// computation.
pub const APSP_DEFAULT_LIMIT: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: VertexId, n: usize },
    #[error("self-loop on vertex {v} rejected")]
    SelfLoop { v: VertexId },
    #[error("duplicate edge {{{u}, {v}}} rejected")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("packing radius must be >= 1, got {i}")]
    InvalidRadius { i: u32 },
    #[error("vertex map is not total: vertex {v} of the source graph has no image")]
    MapNotTotal { v: VertexId },
    #[error("full distance matrix refused for n = {n} (limit {limit}); use per-source rows or `diameter`")]
    TooLargeForMatrix { n: usize, limit: usize },
}

/// Simple undirected graph: no self-loops, no parallel edges, symmetric
/// adjacency. Immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from an unordered edge list. Edge input order is
    /// irrelevant; duplicates, self-loops and out-of-range ids are each
    /// rejected with a distinct error.
    pub fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|w| w[0] == w[1]) {
                let u = u as VertexId;
                let v = pair[0];
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.n as VertexId
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Exact shortest-path distances from `source`; unreachable vertices get
    /// [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: VertexId) -> Result<Vec<u32>, GraphError> {
        if source as usize >= self.n {
            return Err(GraphError::VertexOutOfRange {
                v: source,
                n: self.n,
            });
        }
        Ok(self.bfs_row(source))
    }

    fn bfs_row(&self, source: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source as usize] = 0;
        let mut queue = VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in self.neighbors(u) {
                if dist[v as usize] == UNREACHABLE {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS that also records one parent per reached vertex, for path
    /// reconstruction.
    fn bfs_with_parents(&self, source: VertexId) -> (Vec<u32>, Vec<VertexId>) {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut parent = vec![source; self.n];
        dist[source as usize] = 0;
        let mut queue = VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in self.neighbors(u) {
                if dist[v as usize] == UNREACHABLE {
                    dist[v as usize] = du + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_row(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Full all-pairs matrix via BFS from every vertex. Refused above
    /// [`APSP_DEFAULT_LIMIT`] vertices; large instances should use
    /// [`Graph::diameter`] or per-source [`Graph::bfs_distances`] instead.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix, GraphError> {
        self.all_pairs_distances_with_limit(APSP_DEFAULT_LIMIT)
    }

    pub fn all_pairs_distances_with_limit(
        &self,
        limit: usize,
    ) -> Result<DistanceMatrix, GraphError> {
        if self.n > limit {
            return Err(GraphError::TooLargeForMatrix { n: self.n, limit });
        }
        let mut dist = Vec::with_capacity(self.n * self.n);
        let mut diameter = 0u32;
        let mut disconnected = false;
        for source in self.vertices() {
            let row = self.bfs_row(source);
            for &d in &row {
                if d == UNREACHABLE {
                    disconnected = true;
                } else if d > diameter {
                    diameter = d;
                }
            }
            dist.extend_from_slice(&row);
        }
        if self.n == 0 {
            disconnected = false;
        }
        Ok(DistanceMatrix {
            n: self.n,
            dist,
            diameter,
            disconnected,
        })
    }

    /// Exact diameter of a connected graph. Small graphs get a full BFS
    /// sweep; larger ones the fringe/bound-pruned eccentricity search, which
    /// returns the same value.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Disconnected);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.n <= APSP_DEFAULT_LIMIT {
            Ok(self.diameter_sweep())
        } else {
            Ok(self.diameter_ifub())
        }
    }

    fn diameter_sweep(&self) -> u32 {
        let mut best = 0;
        for source in self.vertices() {
            let ecc = self
                .bfs_row(source)
                .into_iter()
                .filter(|&d| d != UNREACHABLE)
                .max()
                .unwrap_or(0);
            best = best.max(ecc);
        }
        best
    }

    /// Eccentricity-bounded exact diameter (iFUB). Starts from the midpoint
    /// of a double-sweep path and processes BFS fringes top-down; vertices at
    /// depth `< i` cannot have eccentricity above `2(i-1)`, so the scan stops
    /// as soon as the running lower bound beats that ceiling.
    pub fn diameter_ifub(&self) -> u32 {
        if self.n <= 1 {
            return 0;
        }
        let start = self
            .vertices()
            .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let d0 = self.bfs_row(start);
        let a = farthest(&d0);
        let (da, parents) = self.bfs_with_parents(a);
        let b = farthest(&da);
        let mut lb = da[b as usize];
        // midpoint of the a-b path
        let mut mid = b;
        for _ in 0..(da[b as usize] / 2) {
            mid = parents[mid as usize];
        }
        let du = self.bfs_row(mid);
        let ecc_u = *du.iter().max().unwrap();
        lb = lb.max(ecc_u);
        let mut fringe: Vec<Vec<VertexId>> = vec![Vec::new(); ecc_u as usize + 1];
        for v in self.vertices() {
            fringe[du[v as usize] as usize].push(v);
        }
        let mut i = ecc_u;
        while i > 0 && lb < 2 * i {
            for &v in &fringe[i as usize] {
                let ecc = *self.bfs_row(v).iter().max().unwrap();
                lb = lb.max(ecc);
            }
            if lb > 2 * (i - 1) {
                return lb;
            }
            i -= 1;
        }
        lb
    }

    /// `i`-th distance power: same vertices, an edge wherever
    /// `0 < d(u, v) <= i`. Distances are taken per component, so the input
    /// need not be connected.
    pub fn power_graph(&self, i: u32) -> Result<Graph, GraphError> {
        if i < 1 {
            return Err(GraphError::InvalidRadius { i });
        }
        if i == 1 {
            return Ok(self.clone());
        }
        let mut edges = Vec::new();
        for source in self.vertices() {
            // BFS truncated at depth i
            let mut dist = vec![UNREACHABLE; self.n];
            dist[source as usize] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                if du == i {
                    continue;
                }
                for &v in self.neighbors(u) {
                    if dist[v as usize] == UNREACHABLE {
                        dist[v as usize] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            for v in self.vertices() {
                if v > source && dist[v as usize] != UNREACHABLE {
                    edges.push((source, v));
                }
            }
        }
        Graph::build(self.n, &edges)
    }

    /// Subgraph induced by `s`, plus the embedding of its fresh ids back into
    /// `self`. Vertices of the subgraph take ids in ascending order of the
    /// originals.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<(Graph, VertexMap), GraphError> {
        let mut sorted: Vec<VertexId> = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v as usize >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut back = vec![VertexId::MAX; self.n];
        for (new, &old) in sorted.iter().enumerate() {
            back[old as usize] = new as VertexId;
        }
        let mut edges = Vec::new();
        for &old in &sorted {
            for &w in self.neighbors(old) {
                if old < w && back[w as usize] != VertexId::MAX {
                    edges.push((back[old as usize], back[w as usize]));
                }
            }
        }
        let sub = Graph::build(sorted.len(), &edges)?;
        Ok((sub, VertexMap::new(sorted)))
    }

    /// Count of vertices per degree value.
    pub fn degree_profile(&self) -> DegreeProfile {
        let max_degree = (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0);
        let mut counts = vec![0usize; max_degree + 1];
        for v in 0..self.n {
            counts[self.adj[v].len()] += 1;
        }
        DegreeProfile { counts, max_degree }
    }
}

fn farthest(dist: &[u32]) -> VertexId {
    let mut best = 0;
    let mut arg = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d != UNREACHABLE && d > best {
            best = d;
            arg = v;
        }
    }
    arg as VertexId
}

/// All-pairs shortest-path table with its maximum finite entry.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: u32,
    disconnected: bool,
}

impl DistanceMatrix {
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u as usize * self.n + v as usize]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.dist[u as usize * self.n..(u as usize + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn is_disconnected(&self) -> bool {
        self.disconnected
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Injective map from vertex ids of a source graph into a target graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    mapping: Vec<VertexId>,
}

impl VertexMap {
    pub fn new(mapping: Vec<VertexId>) -> Self {
        VertexMap { mapping }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            mapping: (0..n as VertexId).collect(),
        }
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.mapping[v as usize]
    }

    pub fn domain_size(&self) -> usize {
        self.mapping.len()
    }

    pub fn image(&self) -> &[VertexId] {
        &self.mapping
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.mapping.len());
        self.mapping.iter().all(|&v| seen.insert(v))
    }
}

/// Checks that `f` embeds `src` into `dst` as an induced subgraph: `f` is
/// injective, every `src` edge maps to a `dst` edge, and the image induces no
/// extra edges. No isomorphism search happens here; the map is given.
pub fn check_map_isomorphism(src: &Graph, dst: &Graph, f: &VertexMap) -> Result<bool, GraphError> {
    if f.domain_size() != src.vertex_count() {
        let v = f.domain_size().min(src.vertex_count()) as VertexId;
        return Err(GraphError::MapNotTotal { v });
    }
    for v in src.vertices() {
        if f.apply(v) as usize >= dst.vertex_count() {
            return Ok(false);
        }
    }
    if !f.is_injective() {
        return Ok(false);
    }
    for (u, v) in src.edges() {
        if !dst.has_edge(f.apply(u), f.apply(v)) {
            return Ok(false);
        }
    }
    // induced: the image may not carry edges beyond the mapped ones
    let mut in_image = vec![false; dst.vertex_count()];
    for v in src.vertices() {
        in_image[f.apply(v) as usize] = true;
    }
    let image_edges = dst
        .edges()
        .iter()
        .filter(|&&(u, v)| in_image[u as usize] && in_image[v as usize])
        .count();
    Ok(image_edges == src.edge_count())
}

/// Vertex count per degree, plus the maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    counts: Vec<usize>,
    max_degree: usize,
}

impl DegreeProfile {
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(degree).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `(degree, count)` pairs for degrees that occur, ascending.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(d, &c)| (d, c))
            .collect()
    }
}
