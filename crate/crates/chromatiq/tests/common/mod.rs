//! Oracles shared by the integration suites, written deliberately naive —
//! straight-line restatements of the definitions, no shortcuts shared
//! with the library — so that agreement with the library is evidence
//! rather than an echo.
//!
//! Everything here assumes the qubit-disjointness conflict rule: two
//! gates can share a layer exactly when their wire sets are disjoint.

#![allow(dead_code)] // each test binary uses its own subset

use chromatiq::{Circuit, ConflictGraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Wire sets of a circuit's gates, in order.
pub fn supports_of(circuit: &Circuit) -> Vec<HashSet<u32>> {
    circuit
        .gates()
        .iter()
        .map(|g| g.support().iter().map(|q| q.0).collect())
        .collect()
}

/// Depth of one gate order under the consecutive-block rule: a gate joins
/// the current block unless it shares a wire with something already in
/// it, in which case a fresh block starts.
pub fn block_depth_of_order(supports: &[HashSet<u32>], order: &[usize]) -> usize {
    let mut blocks = 0usize;
    let mut current: Vec<usize> = Vec::new();
    for &g in order {
        let conflicts = current
            .iter()
            .any(|&h| !supports[h].is_disjoint(&supports[g]));
        if conflicts {
            current.clear();
        }
        if current.is_empty() {
            blocks += 1;
        }
        current.push(g);
    }
    blocks
}

fn for_each_permutation(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Minimum consecutive-block depth over all gate orders, by trying every
/// single one of them. Factorial — keep circuits at 8 gates or fewer.
pub fn naive_min_depth(circuit: &Circuit) -> usize {
    let supports = supports_of(circuit);
    let n = supports.len();
    if n == 0 {
        return 0;
    }
    assert!(n <= 9, "factorial oracle called on {n} gates");
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    for_each_permutation(&mut order, 0, &mut |o| {
        best = best.min(block_depth_of_order(&supports, o));
    });
    best
}

/// Chromatic number by exhaustive assignment: for each candidate count k
/// (ascending), search all proper colorings that introduce colors in
/// first-use order. The first feasible k is χ.
pub fn naive_chromatic_number(vertices: usize, edges: &[(u32, u32)]) -> u32 {
    if vertices == 0 {
        return 0;
    }
    let mut adj = vec![vec![false; vertices]; vertices];
    for &(a, b) in edges {
        adj[a as usize][b as usize] = true;
        adj[b as usize][a as usize] = true;
    }

    fn feasible(v: usize, k: u32, used: u32, colors: &mut [u32], adj: &[Vec<bool>]) -> bool {
        if v == colors.len() {
            return true;
        }
        let ceiling = (used + 1).min(k);
        for c in 1..=ceiling {
            if (0..v).all(|u| !adj[u][v] || colors[u] != c) {
                colors[v] = c;
                if feasible(v + 1, k, used.max(c), colors, adj) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }

    for k in 1..=vertices as u32 {
        let mut colors = vec![0u32; vertices];
        if feasible(0, k, 0, &mut colors, &adj) {
            return k;
        }
    }
    unreachable!("|V| colors always suffice for a simple graph")
}

/// Chromatic number of a [`ConflictGraph`], through the same oracle.
pub fn naive_chromatic_of(graph: &ConflictGraph) -> u32 {
    naive_chromatic_number(graph.vertex_count(), &graph.edges())
}

/// Seeded Erdős–Rényi-style simple graph: each of the C(n,2) possible
/// edges appears independently with probability `density`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: u32, density: f64) -> ConflictGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.random_bool(density) {
                edges.push((a, b));
            }
        }
    }
    ConflictGraph::from_edges(n, &edges).expect("generated edges are simple")
}

/// One Mycielski step: each vertex `v` gains a shadow `n + v` adjacent to
/// `v`'s neighbours, and an apex `2n` joins every shadow. The step keeps
/// the graph triangle-free while raising the chromatic number by exactly
/// one, so iterating from a 5-cycle yields hard instances whose clique
/// number stays 2 — the worst case for clique-based pruning.
pub fn mycielski_step(vertices: u32, edges: &[(u32, u32)]) -> (u32, Vec<(u32, u32)>) {
    let n = vertices;
    let mut out = Vec::with_capacity(edges.len() * 3 + n as usize);
    for &(a, b) in edges {
        out.push((a, b));
        out.push((a, n + b));
        out.push((b, n + a));
    }
    for v in 0..n {
        out.push((n + v, 2 * n));
    }
    (2 * n + 1, out)
}
