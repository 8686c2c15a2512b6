//! The three coloring solvers side by side.
//!
//! Greedy is fast and order-sensitive, DSatur is the robust default, and
//! the branch-and-bound solver is exact but budgeted. Each run reports
//! the clique lower bound next to the achieved color count — when the
//! two meet, the heuristic result is provably optimal too.
//!
//! Run with: `cargo run --example coloring_solvers`

use chromatiq::{greedy_clique, solve_coloring, ConflictGraph, SolverChoice};

fn main() -> chromatiq::Result<()> {
    let cases: Vec<(&str, ConflictGraph)> = vec![
        (
            "5-cycle (odd, so 3-chromatic)",
            ConflictGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?,
        ),
        (
            "Petersen graph",
            ConflictGraph::from_edges(
                10,
                &[
                    // outer 5-cycle, spokes, inner pentagram
                    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
                ],
            )?,
        ),
        (
            "wheel on 7 spokes (hub forces a 4th color)",
            ConflictGraph::from_edges(
                8,
                &[
                    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6),
                    (0, 7), (1, 7), (2, 7), (3, 7), (4, 7), (5, 7), (6, 7),
                ],
            )?,
        ),
    ];

    let solvers = [
        SolverChoice::Greedy,
        SolverChoice::Dsatur,
        SolverChoice::Exact {
            node_budget: 100_000,
        },
    ];

    for (name, graph) in &cases {
        let clique = greedy_clique(graph);
        println!(
            "{name}: {} vertices, {} edges, clique floor {}",
            graph.vertex_count(),
            graph.edge_count(),
            clique.len()
        );
        for solver in solvers {
            let colored = solve_coloring(graph, solver)?;
            let verdict = if colored.color_count() as usize == clique.len() {
                " (matches the clique floor: optimal)"
            } else if matches!(solver, SolverChoice::Exact { .. }) {
                " (exact: this is the chromatic number)"
            } else {
                ""
            };
            println!(
                "  {:<7} {} colors{verdict}",
                solver.name(),
                colored.color_count()
            );
        }
        println!();
    }
    Ok(())
}
