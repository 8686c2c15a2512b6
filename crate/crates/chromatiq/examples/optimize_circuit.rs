//! The end-to-end pipeline on the four-gate motivating circuit.
//!
//! Four Toffolis, written in an order that needs three layers, get
//! rescheduled into two. The example walks the reduction by hand —
//! conflict graph, coloring, realization — and then shows the one-call
//! [`chromatiq::optimize`] that bundles the same steps behind a report.
//!
//! Run with: `cargo run --example optimize_circuit`

use chromatiq::{
    compute_depth, construct_graph, optimize, solve_coloring, to_circuit, Circuit, Gate,
    OptimizeOptions, QubitDisjoint, SolverChoice,
};

fn main() -> chromatiq::Result<()> {
    // Toffolis on nine wires; supports overlap pairwise in a 4-cycle:
    // gates 0,1 share wire 3; 0,2 share 1; 1,3 share 2; 2,3 share 6.
    let circuit = Circuit::new(
        9,
        vec![
            Gate::toffoli(0, 1, 3, 4)?,
            Gate::toffoli(1, 2, 3, 5)?,
            Gate::toffoli(2, 1, 6, 7)?,
            Gate::toffoli(3, 2, 6, 8)?,
        ],
    )?;

    let (depth, layers) = compute_depth(&circuit, &QubitDisjoint);
    println!("as written: depth {depth}");
    for (i, layer) in layers.layers().iter().enumerate() {
        println!("  layer {}: gates {:?}", i + 1, layer);
    }

    // Step 1 — the conflict graph: one vertex per gate, one edge per
    // shared wire.
    let graph = construct_graph(&circuit, &QubitDisjoint);
    println!("\nconflict graph: {} edges {:?}", graph.edge_count(), graph.edges());

    // Step 2 — color it. A 4-cycle is 2-chromatic, and two colors mean
    // two layers.
    let colored = solve_coloring(&graph, SolverChoice::Dsatur)?;
    println!(
        "DSatur coloring: {:?} using {} colors",
        colored.coloring().as_slice(),
        colored.color_count()
    );

    // Step 3 — realize the coloring as a gate order (sort by color).
    let rescheduled = to_circuit(&colored, &circuit)?;
    let (new_depth, new_layers) = compute_depth(&rescheduled, &QubitDisjoint);
    println!("rescheduled: depth {new_depth}");
    for (i, layer) in new_layers.layers().iter().enumerate() {
        println!("  layer {}: gates {:?}", i + 1, layer);
    }

    // The same pipeline as one call, with a machine-readable report. The
    // commutation of every gate pair is checked first; `optimize` refuses
    // circuits it cannot verify unless explicitly overridden.
    let (best, report) = optimize(&circuit, &QubitDisjoint, OptimizeOptions::default())?;
    assert_eq!(compute_depth(&best, &QubitDisjoint).0, 2);
    println!("\noptimize report:");
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
