//! Conflict graphs: one vertex per gate, one edge per non-parallelizable
//! pair.
//!
//! [`construct_graph`] builds the graph for a circuit under a
//! [`ConflictPolicy`]; the graph then feeds the coloring solvers and the
//! reduction pipeline. Graphs are simple and undirected, support O(1) edge
//! queries (binary search over sorted adjacency) and neighbor iteration,
//! and can be exported as Graphviz DOT or JSON.

use crate::circuit::{validate_permutation, Circuit, ConflictPolicy};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use std::fmt::Write as _;

/// A simple undirected graph whose vertices stand for gates.
///
/// Equality compares vertex count and edge sets under identical vertex
/// labeling (no isomorphism search); the vertex→gate-id map is metadata and
/// does not participate.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    /// Sorted adjacency per vertex.
    adj: Vec<Vec<u32>>,
    /// vertex index → gate id in the source circuit (identity for graphs
    /// not built from a circuit).
    vertex_gates: Vec<u32>,
    edge_count: usize,
}

impl PartialEq for ConflictGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for ConflictGraph {}

impl ConflictGraph {
    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// duplicate edges, and out-of-range endpoints.
    pub fn from_edges(vertex_count: u32, edges: &[(u32, u32)]) -> Result<ConflictGraph> {
        let n = vertex_count as usize;
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::EdgeOutOfRange {
                    a,
                    b,
                    vertex_count,
                });
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (a, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    a: a as u32,
                    b: w[0],
                });
            }
        }
        let edge_count = edges.len();
        Ok(ConflictGraph {
            adj,
            vertex_gates: (0..vertex_count).collect(),
            edge_count,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// True iff vertices `a` and `b` are adjacent. O(log degree).
    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// The sorted neighbors of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// The gate id backing vertex `v` (identity when the graph was not
    /// built from a circuit).
    pub fn gate_id(&self, v: u32) -> u32 {
        self.vertex_gates[v as usize]
    }

    /// All edges as `(min, max)` pairs, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, list) in self.adj.iter().enumerate() {
            let a = a as u32;
            for &b in list {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Builds the conflict graph of a circuit: vertex `i` is the gate at
/// position `i`, and an edge joins every pair the policy declares
/// non-parallelizable. O(gates²) policy evaluations.
pub fn construct_graph<P: ConflictPolicy>(circuit: &Circuit, policy: &P) -> ConflictGraph {
    let gates = circuit.gates();
    let n = gates.len();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut edge_count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !policy.parallelizable(&gates[i], &gates[j]) {
                adj[i].push(j as u32);
                adj[j].push(i as u32);
                edge_count += 1;
            }
        }
    }
    // The double loop emits neighbors in ascending order already, but keep
    // the invariant explicit.
    for list in &mut adj {
        list.sort_unstable();
    }
    ConflictGraph {
        adj,
        vertex_gates: gates.iter().map(|g| g.id()).collect(),
        edge_count,
    }
}

/// Checks the stated property that any permutation of a circuit yields the
/// same conflict graph up to the induced vertex relabeling.
///
/// `perm` maps new positions to old positions (as in [`Circuit::permuted`]).
/// Returns true iff `construct_graph(permuted)` equals the relabeling of
/// `construct_graph(circuit)`.
pub fn permutation_invariance_check<P: ConflictPolicy>(
    circuit: &Circuit,
    perm: &[usize],
    policy: &P,
) -> Result<bool> {
    validate_permutation(perm, circuit.len())?;
    let original = construct_graph(circuit, policy);
    let permuted = construct_graph(&circuit.permuted(perm)?, policy);
    if original.vertex_count() != permuted.vertex_count()
        || original.edge_count() != permuted.edge_count()
    {
        return Ok(false);
    }
    // New vertex k corresponds to old vertex perm[k].
    for k in 0..perm.len() {
        for l in k + 1..perm.len() {
            if permuted.has_edge(k as u32, l as u32)
                != original.has_edge(perm[k] as u32, perm[l] as u32)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Fixed fill palette for DOT export; colors cycle past the end.
const DOT_PALETTE: [&str; 12] = [
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3",
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
];

/// Renders the graph as Graphviz DOT. With a coloring, vertices are filled
/// by palette index (the coloring must be proper for the graph and cover
/// exactly its vertex set).
pub fn export_dot(graph: &ConflictGraph, coloring: Option<&Coloring>) -> Result<String> {
    if let Some(c) = coloring {
        c.check_proper_for(graph)?;
    }
    let mut out = String::from("graph conflicts {\n");
    for v in 0..graph.vertex_count() as u32 {
        match coloring {
            Some(c) => {
                let color = c.color(v);
                let fill = DOT_PALETTE[((color - 1) as usize) % DOT_PALETTE.len()];
                let _ = writeln!(
                    out,
                    "  v{v} [label=\"g{} c{color}\", style=filled, fillcolor=\"{fill}\"];",
                    graph.gate_id(v)
                );
            }
            None => {
                let _ = writeln!(out, "  v{v} [label=\"g{}\"];", graph.gate_id(v));
            }
        }
    }
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Gate, QubitDisjoint};

    fn cx(id: u32, i: u32, j: u32, k: u32) -> Gate {
        Gate::toffoli(id, i, j, k).unwrap()
    }

    fn v2() -> Circuit {
        Circuit::new(
            9,
            vec![cx(0, 1, 3, 4), cx(1, 2, 3, 5), cx(2, 1, 6, 7), cx(3, 2, 6, 8)],
        )
        .unwrap()
    }

    #[test]
    fn v2_graph_is_the_four_cycle() {
        let g = construct_graph(&v2(), &QubitDisjoint);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn single_gate_graph() {
        let c = Circuit::new(9, vec![cx(0, 1, 3, 4)]).unwrap();
        let g = construct_graph(&c, &QubitDisjoint);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn shared_qubit_gates_form_a_clique() {
        // k gates all touching qubit 0 -> complete graph K_k.
        let k = 5;
        let gates = (0..k)
            .map(|i| cx(i, 0, 2 * i + 1, 2 * i + 2))
            .collect::<Vec<_>>();
        let c = Circuit::new(2 * k + 1, gates).unwrap();
        let g = construct_graph(&c, &QubitDisjoint);
        assert_eq!(g.edge_count(), (k as usize) * (k as usize - 1) / 2);
    }

    #[test]
    fn permutation_invariance_on_v2() {
        // Identity.
        assert!(permutation_invariance_check(&v2(), &[0, 1, 2, 3], &QubitDisjoint).unwrap());
        // v2 -> v2' reordering.
        assert!(permutation_invariance_check(&v2(), &[0, 3, 1, 2], &QubitDisjoint).unwrap());
        // Bad permutation is rejected.
        assert!(permutation_invariance_check(&v2(), &[0, 0, 1, 2], &QubitDisjoint).is_err());
    }

    #[test]
    fn from_edges_validates() {
        assert!(ConflictGraph::from_edges(3, &[(0, 1), (1, 2)]).is_ok());
        assert!(matches!(
            ConflictGraph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            ConflictGraph::from_edges(3, &[(0, 3)]),
            Err(Error::EdgeOutOfRange { .. })
        ));
        assert!(matches!(
            ConflictGraph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn graph_equality_is_label_sensitive() {
        let a = ConflictGraph::from_edges(3, &[(0, 1)]).unwrap();
        let b = ConflictGraph::from_edges(3, &[(1, 2)]).unwrap();
        let c = ConflictGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_ne!(a, b); // isomorphic but differently labeled
        assert_eq!(a, c);
    }

    #[test]
    fn dot_export_shapes() {
        let single = ConflictGraph::from_edges(1, &[]).unwrap();
        let dot = export_dot(&single, None).unwrap();
        assert!(dot.contains("v0"));
        assert!(!dot.contains("--"));

        let empty = ConflictGraph::from_edges(0, &[]).unwrap();
        assert_eq!(export_dot(&empty, None).unwrap(), "graph conflicts {\n}\n");

        let cycle = construct_graph(&v2(), &QubitDisjoint);
        let dot = export_dot(&cycle, None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
