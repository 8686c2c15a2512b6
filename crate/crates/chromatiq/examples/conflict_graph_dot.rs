//! Exporting conflict graphs for visual inspection.
//!
//! Builds a small commuting circuit, derives its conflict graph, and
//! prints two Graphviz DOT renderings: the bare graph, and the graph
//! with vertices filled by their DSatur color (each fill class is one
//! layer of the optimized schedule). Pipe either into `dot -Tsvg` to
//! draw it.
//!
//! Run with: `cargo run --example conflict_graph_dot`

use chromatiq::{
    color_dsatur, construct_graph, export_dot, Angle, Circuit, Gate, QubitDisjoint, TieBreak,
};

fn main() -> chromatiq::Result<()> {
    // A mix of phase gates on overlapping wire sets. All diagonal gates
    // commute, so the circuit is freely reorderable and the conflict
    // graph captures exactly the wire-sharing structure.
    let eighth = Angle { num: 1, den_pow2: 3 };
    let circuit = Circuit::new(
        6,
        vec![
            Gate::cphase(0, 0, 1, eighth)?,
            Gate::cphase(1, 1, 2, eighth)?,
            Gate::cphase(2, 2, 3, eighth)?,
            Gate::cphase(3, 3, 4, eighth)?,
            Gate::cphase(4, 4, 5, eighth)?,
            Gate::ccphase(5, 0, 2, 4, eighth)?,
        ],
    )?;

    let graph = construct_graph(&circuit, &QubitDisjoint);
    println!("// plain conflict graph ({} edges)", graph.edge_count());
    println!("{}", export_dot(&graph, None)?);

    let colored = color_dsatur(&graph, TieBreak::default());
    println!(
        "// colored: {} layers, vertex v gets its gate's schedule slot",
        colored.color_count()
    );
    print!("{}", export_dot(colored.graph(), Some(colored.coloring()))?);
    Ok(())
}
