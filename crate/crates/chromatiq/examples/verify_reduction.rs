//! Checking the reduction theorems against brute force.
//!
//! The whole approach rests on two facts about commuting circuits: an
//! optimal coloring of the conflict graph realizes the minimum possible
//! depth (no ordering does better), and conversely a minimum-depth
//! ordering induces a coloring with exactly the chromatic number of
//! colors. Both are verified here the expensive way — enumerating gate
//! orders — first on a hand-picked circuit, then on a batch of random
//! circuits via [`chromatiq::verify_propositions`], which also checks
//! that *any* proper coloring's realized depth never exceeds its color
//! count.
//!
//! Run with: `cargo run --example verify_reduction`

use chromatiq::{
    brute_force_best_ordering, construct_graph, solve_coloring, to_circuit, Angle, Circuit, Gate,
    QubitDisjoint, SolverChoice,
};

fn main() -> chromatiq::Result<()> {
    // Six mutually commuting phase gates with a nontrivial conflict
    // pattern: brute force must agree with the coloring route.
    let quarter = Angle { num: 1, den_pow2: 2 };
    let circuit = Circuit::new(
        7,
        vec![
            Gate::cphase(0, 0, 1, quarter)?,
            Gate::cphase(1, 1, 2, quarter)?,
            Gate::ccphase(2, 2, 3, 4, quarter)?,
            Gate::cphase(3, 4, 5, quarter)?,
            Gate::cphase(4, 5, 6, quarter)?,
            Gate::ccphase(5, 0, 3, 6, quarter)?,
        ],
    )?;

    let (witness, min_depth) = brute_force_best_ordering(&circuit, &QubitDisjoint, circuit.len())?;
    println!("brute force over orderings: min depth {min_depth}");
    let order: Vec<u32> = witness.gates().iter().map(|g| g.id()).collect();
    println!("  witness order: {order:?}");

    let graph = construct_graph(&circuit, &QubitDisjoint);
    let colored = solve_coloring(&graph, SolverChoice::Exact { node_budget: 1_000_000 })?;
    let realized = to_circuit(&colored, &circuit)?;
    let realized_depth = chromatiq::compute_depth(&realized, &QubitDisjoint).0;
    println!(
        "exact coloring: χ = {} → realized depth {realized_depth}",
        colored.color_count()
    );
    assert_eq!(min_depth, realized_depth);
    assert_eq!(min_depth, colored.color_count() as usize);
    println!("  minimum depth and chromatic number agree on this circuit  ✓");

    // The same checks on randomly generated commuting circuits, plus the
    // coloring-depth inequality for random (not necessarily optimal)
    // proper colorings.
    let report = chromatiq::verify_propositions(60, 7, 0xBADC_0FFE)?;
    println!(
        "\nrandom circuits: {}/{} P1, {}/{} P2, {}/{} Remark1",
        report.p1_passes,
        report.trials,
        report.p2_passes,
        report.trials,
        report.remark1_passes,
        report.trials
    );
    assert!(report.is_all_pass());
    Ok(())
}
