//! Trading qubits for depth in phase-rotation adders.
//!
//! The in-place adder's rotations commute, but every gate touches the
//! target register, so width caps how much a schedule can parallelize.
//! Fanning out the busiest control qubits onto fresh wires (a CNOT
//! cascade copies a computational-basis control) thins the conflict
//! graph and buys depth back. This example sweeps an extra-qubit budget,
//! prints the resulting depth/width curve, and reports the points that
//! minimize the two composite cost metrics S = depth·qubits and
//! T = depth²·qubits.
//!
//! Run with: `cargo run --example qft_adder_tradeoff`

use chromatiq::{
    base_depth, build_tradeoff_curve, generate_adder, AdderVariant, FanoutAccounting,
    SolverChoice,
};

fn main() -> chromatiq::Result<()> {
    let n = 16;
    let variant = AdderVariant::Add;
    let instance = generate_adder(n, variant)?;
    let base = base_depth(&instance, SolverChoice::Dsatur)?;
    println!(
        "{}-bit {} adder: {} rotations on {} qubits, base depth {base}",
        n,
        variant.name(),
        instance.circuit().len(),
        instance.circuit().qubit_count(),
    );

    let curve = build_tradeoff_curve(
        n,
        variant,
        3 * n, // extra-qubit budget to sweep up to
        SolverChoice::Dsatur,
        FanoutAccounting::IncludeOverhead,
    )?;

    println!("\n{:>7} {:>6} {:>9} {:>6} {:>8} {:>10}", "budget", "qubits", "rotation", "fan", "depth", "S");
    for p in &curve.points {
        println!(
            "{:>7} {:>6} {:>9} {:>6} {:>8} {:>10}",
            p.budget, p.qubit_count, p.rotation_depth, p.fanout_overhead, p.depth, p.s
        );
    }

    let s = &curve.s_optimal;
    let t = &curve.t_optimal;
    println!(
        "\nS-optimal: {} extra qubits → depth {} on {} qubits (S = {})",
        s.budget, s.depth, s.qubit_count, s.s
    );
    println!(
        "T-optimal: {} extra qubits → depth {} on {} qubits (T = {})",
        t.budget, t.depth, t.qubit_count, t.t
    );
    if t.qubit_count > s.qubit_count {
        println!(
            "T weights depth quadratically, so it spends {} more qubits than S",
            t.qubit_count - s.qubit_count
        );
    } else {
        println!("both metrics settle on the same point at this width");
    }
    Ok(())
}
