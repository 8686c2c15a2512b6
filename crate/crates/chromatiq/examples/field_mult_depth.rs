//! Toffoli-depth optimization of binary-field multiplication.
//!
//! An n-bit carry-free multiplier needs n² Toffolis across two
//! accumulation phases. Scheduled naively the phases take 4n−4 layers;
//! coloring each phase's conflict graph compresses them to the proven
//! floor of 2n−1 (DSatur lands exactly on the floor for every n ≥ 6
//! tried here — nearly a 2× speedup that grows with n).
//!
//! Run with: `cargo run --example field_mult_depth`

use chromatiq::{generate_mult, optimize_mult, toffoli_depth_lower_bound, SolverChoice};

const SEED: u64 = 11;

fn main() -> chromatiq::Result<()> {
    println!("{:>4} {:>8} {:>10} {:>10} {:>7}", "n", "gates", "baseline", "achieved", "floor");
    for n in [4, 6, 8, 12, 16, 24, 32] {
        let instance = generate_mult(n)?;
        let gates = instance.circuit().len();
        let result = optimize_mult(n, SolverChoice::Dsatur, SEED)?;
        let floor = toffoli_depth_lower_bound(n)
            .map(|f| f.to_string())
            .unwrap_or_else(|_| "n/a".into());
        println!(
            "{n:>4} {gates:>8} {:>10} {:>10} {:>7}",
            result.report.baseline, result.report.total, floor
        );
    }

    // The per-phase story for one width: the low phase carries
    // n(n+1)/2 gates and colors to n layers, the high phase n(n−1)/2
    // gates to n−1 layers; the phase boundary keeps them sequential.
    let n = 16;
    let result = optimize_mult(n, SolverChoice::Dsatur, SEED)?;
    println!(
        "\nn = {n}: phase depths {} + {} = {} (bound {:?}, baseline {})",
        result.report.phase1_depth,
        result.report.phase3_depth,
        result.report.total,
        result.report.bound,
        result.report.baseline
    );
    println!("\nfull report:\n{}", serde_json::to_string_pretty(&result.report).unwrap());
    Ok(())
}
