//! Independent reference implementations used to cross-check the library.
//! Everything here is deliberately naive — plain Floyd-Warshall, subset
//! enumeration, depth-first color enumeration — and shares no code with the
//! implementation paths it checks.

#![allow(dead_code)]

use packing_chromatic::graph::{Graph, VertexId};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const INF: u64 = u64::MAX / 4;

/// Floyd-Warshall over an edge list; no BFS involved.
pub fn fw_distances(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<u64>> {
    let mut dist = vec![vec![INF; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        dist[u as usize][v as usize] = 1;
        dist[v as usize][u as usize] = 1;
    }
    for mid in 0..n {
        for a in 0..n {
            for b in 0..n {
                let through = dist[a][mid] + dist[mid][b];
                if through < dist[a][b] {
                    dist[a][b] = through;
                }
            }
        }
    }
    dist
}

/// Distances by boolean matrix powering: dist(u, v) is the first power of
/// the adjacency matrix whose reachability closure connects them.
pub fn matrix_power_distances(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<u64>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u as usize][v as usize] = true;
        adj[v as usize][u as usize] = true;
    }
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    let mut dist = vec![vec![INF; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    for step in 1..=n as u64 {
        let mut next = reach.clone();
        for a in 0..n {
            for mid in 0..n {
                if reach[a][mid] {
                    for b in 0..n {
                        if adj[mid][b] {
                            next[a][b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if next[a][b] && dist[a][b] == INF {
                    dist[a][b] = step;
                }
            }
        }
        reach = next;
    }
    dist
}

/// Maximum independent set by subset enumeration (n <= 25 or so).
pub fn naive_mis(n: usize, edges: &[(VertexId, VertexId)]) -> usize {
    assert!(n <= 25, "subset enumeration oracle is for tiny graphs");
    let mut adj_mask = vec![0u32; n];
    for &(u, v) in edges {
        adj_mask[u as usize] |= 1 << v;
        adj_mask[v as usize] |= 1 << u;
    }
    let mut best = 0;
    for subset in 0u32..1 << n {
        if subset.count_ones() as usize <= best {
            continue;
        }
        let independent = (0..n)
            .filter(|&v| subset >> v & 1 == 1)
            .all(|v| adj_mask[v] & subset == 0);
        if independent {
            best = subset.count_ones() as usize;
        }
    }
    best
}

/// Depth-first enumeration of all colorings with colors `1..=k` in plain id
/// order, abandoning a branch as soon as the defining property breaks.
pub fn naive_decide(dist: &[Vec<u64>], k: u16) -> bool {
    let n = dist.len();
    let mut colors = vec![0u16; n];
    fn rec(dist: &[Vec<u64>], colors: &mut Vec<u16>, v: usize, k: u16) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 1..=k {
            let ok = (0..v).all(|u| colors[u] != c || dist[u][v] > u64::from(c));
            if ok {
                colors[v] = c;
                if rec(dist, colors, v + 1, k) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    rec(dist, &mut colors, 0, k)
}

/// Exact packing chromatic number by increasing k over [`naive_decide`].
pub fn naive_chi_rho(n: usize, edges: &[(VertexId, VertexId)]) -> u16 {
    let dist = fw_distances(n, edges);
    for k in 1..=n as u16 {
        if naive_decide(&dist, k) {
            return k;
        }
    }
    unreachable!("distinct colors 1..=n always work");
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph on `2..=max_n` vertices.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(2..=max_n);
        let p = rng.random_range(0.15..0.7);
        let mut edges = Vec::new();
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random graph, possibly disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.05..0.6);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}
