//! Toffoli-depth optimization for binary-field multiplication.
//!
//! Multiplying two `n`-bit polynomials over GF(2) takes one Toffoli per
//! partial product `a_i·b_j` — `n²` in all, each AND-accumulating into an
//! output bit. The Toffolis within each of the two accumulation phases
//! pairwise commute (they only ever flip output wires conditioned on input
//! wires), so their order is free and the depth question is exactly
//! conflict-graph coloring. Textbook schedules run the partial products in
//! `4n−4` Toffoli layers; coloring the two phases separately reaches
//! `2n−1`, which is optimal because each phase contains a clique of
//! mutually colliding gates of the matching size.
//!
//! Layout on `3n` qubits: `a_i` on wire `i`, `b_j` on wire `n+j`, output
//! bit `c_k` on wire `2n+k`. The phase split follows the standard
//! schoolbook structure: products with `i+j ≥ n` (reduced modulo the field
//! polynomial, hitting `c_{i+j−n}`) form one block, products with
//! `i+j < n` (hitting `c_{i+j}`) the other; the linear reduction between
//! them is CNOT-only and does not contribute Toffoli depth.

use crate::circuit::{compute_depth, Circuit, Gate, QubitDisjoint};
use crate::coloring::color_dsatur_best_of;
use crate::error::{Error, Result};
use crate::graph::construct_graph;
use crate::reduction::{solve_coloring, to_circuit, SolverChoice};
use serde::Serialize;

/// Restart count for the small-`n` DSatur sweep (see [`optimize_mult`]).
const SMALL_N_RESTARTS: u32 = 32;
/// Below this operand size, DSatur benefits from randomized restarts.
const SMALL_N_CUTOFF: u32 = 20;

/// The `n²` partial-product Toffolis of an `n`-bit binary-field
/// multiplier, split into its two commuting accumulation phases.
#[derive(Debug, Clone)]
pub struct MultInstance {
    n: u32,
    phase1: Circuit,
    phase3: Circuit,
}

impl MultInstance {
    /// Operand width in bits.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The high phase: partial products `a_i·b_j` with `i+j ≥ n`,
    /// accumulating into `c_{i+j−n}`. Contains `n(n−1)/2` gates.
    pub fn phase1(&self) -> &Circuit {
        &self.phase1
    }

    /// The low phase: partial products with `i+j < n`, accumulating into
    /// `c_{i+j}`. Contains `n(n+1)/2` gates.
    pub fn phase3(&self) -> &Circuit {
        &self.phase3
    }

    /// Both phases concatenated (high phase first) on the shared `3n`
    /// wires. The phase boundary sits at gate index `n(n−1)/2`.
    pub fn circuit(&self) -> Circuit {
        let mut gates = self.phase1.gates().to_vec();
        gates.extend_from_slice(self.phase3.gates());
        Circuit::new(self.phase1.qubit_count(), gates)
            .expect("phases share wires and use disjoint ids")
    }

    /// Gate index of the phase boundary in [`MultInstance::circuit`].
    pub fn boundary(&self) -> usize {
        self.phase1.len()
    }
}

/// Generates the multiplier instance for `n ≥ 2` bit operands.
///
/// Gates are emitted row-major in `(i, j)` within each phase, high phase
/// first, with ids equal to their position in the concatenated circuit.
pub fn generate_mult(n: u32) -> Result<MultInstance> {
    if n < 2 {
        return Err(Error::BadParameter(format!(
            "multiplication needs n >= 2 bit operands, got {n}"
        )));
    }
    let qubits = 3 * n;
    let mut id = 0u32;
    let mut toffoli = |i: u32, j: u32, k: u32| {
        let gate = Gate::toffoli(id, i, n + j, 2 * n + k).expect("wires in range");
        id += 1;
        gate
    };
    let mut high = Vec::with_capacity((n * (n - 1) / 2) as usize);
    for i in 0..n {
        for j in 0..n {
            if i + j >= n {
                high.push(toffoli(i, j, i + j - n));
            }
        }
    }
    let mut low = Vec::with_capacity((n * (n + 1) / 2) as usize);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                low.push(toffoli(i, j, i + j));
            }
        }
    }
    Ok(MultInstance {
        n,
        phase1: Circuit::new(qubits, high)?,
        phase3: Circuit::new(qubits, low)?,
    })
}

/// The proven Toffoli-depth floor `2n−1` for the two-phase multiplier.
///
/// Each phase contains a clique — the `n` low-phase gates with `i+j =
/// n−1` share output `c_{n−1}`, and the `n−1` high-phase gates with
/// `i+j = n` share `c_0` — forcing at least `n + (n−1)` layers. The
/// clique argument needs `n ≥ 6` to also rule out cross-phase overlap
/// savings; smaller widths fail with [`Error::BoundNotApplicable`].
pub fn toffoli_depth_lower_bound(n: u32) -> Result<usize> {
    if n < 6 {
        return Err(Error::BoundNotApplicable(n));
    }
    Ok(2 * n as usize - 1)
}

/// Summary of a multiplication optimization. Field order is alphabetical
/// so serialized keys come out sorted.
#[derive(Debug, Clone, Serialize)]
pub struct MultReport {
    /// Toffoli depth of the textbook schedule, `4n−4`.
    pub baseline: usize,
    /// The `2n−1` floor when applicable (`n ≥ 6`), else `None`.
    pub bound: Option<usize>,
    /// Operand width.
    pub n: u32,
    /// Layers used by the high phase.
    pub phase1_depth: usize,
    /// Layers used by the low phase.
    pub phase3_depth: usize,
    /// `phase1_depth + phase3_depth`.
    pub total: usize,
}

/// An optimized multiplier: reordered phase circuits plus the report.
#[derive(Debug, Clone)]
pub struct MultOptimization {
    /// High phase, reordered.
    pub phase1: Circuit,
    /// Low phase, reordered.
    pub phase3: Circuit,
    /// Depth accounting.
    pub report: MultReport,
}

/// Colors the two phases independently and reorders each by color.
///
/// The phases must stay separate — the CNOT-only reduction between them
/// pins every high-phase gate before every low-phase one — which is why
/// the floor is `2n−1` and not the full graph's chromatic number. With the
/// DSatur solver and `n < 20`, the coloring is the best of a deterministic
/// run plus 32 seeded restarts (small instances are where ties hurt;
/// at `n ≥ 20` the deterministic run already meets the floor). Neither
/// phase is ever returned deeper than its generated order.
pub fn optimize_mult(n: u32, solver: SolverChoice, seed: u64) -> Result<MultOptimization> {
    let instance = generate_mult(n)?;
    let policy = QubitDisjoint;
    let optimize_phase = |phase: &Circuit| -> Result<(Circuit, usize)> {
        let graph = construct_graph(phase, &policy);
        let colored = match solver {
            SolverChoice::Dsatur if n < SMALL_N_CUTOFF => {
                color_dsatur_best_of(&graph, seed, SMALL_N_RESTARTS)
            }
            _ => solve_coloring(&graph, solver)?,
        };
        let candidate = to_circuit(&colored, phase)?;
        let (candidate_depth, _) = compute_depth(&candidate, &policy);
        let (input_depth, _) = compute_depth(phase, &policy);
        if candidate_depth <= input_depth {
            Ok((candidate, candidate_depth))
        } else {
            Ok((phase.clone(), input_depth))
        }
    };
    let (phase1, phase1_depth) = optimize_phase(instance.phase1())?;
    let (phase3, phase3_depth) = optimize_phase(instance.phase3())?;
    let report = MultReport {
        baseline: 4 * n as usize - 4,
        bound: toffoli_depth_lower_bound(n).ok(),
        n,
        phase1_depth,
        phase3_depth,
        total: phase1_depth + phase3_depth,
    };
    Ok(MultOptimization {
        phase1,
        phase3,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::find_unverified_pair;

    #[test]
    fn gate_counts_match_the_phase_formulas() {
        for n in [2u32, 4, 8, 13] {
            let inst = generate_mult(n).unwrap();
            assert_eq!(inst.phase1().len(), (n * (n - 1) / 2) as usize);
            assert_eq!(inst.phase3().len(), (n * (n + 1) / 2) as usize);
            assert_eq!(inst.circuit().len(), (n * n) as usize);
            assert_eq!(inst.boundary(), inst.phase1().len());
            assert_eq!(inst.circuit().qubit_count(), 3 * n);
        }
    }

    #[test]
    fn n4_terms_land_on_the_right_wires() {
        let inst = generate_mult(4).unwrap();
        // High phase, row-major: (1,3) (2,2) (2,3) (3,1) (3,2) (3,3).
        let high: Vec<(u32, u32, u32)> = inst
            .phase1()
            .gates()
            .iter()
            .map(|g| (g.controls()[0].0, g.controls()[1].0, g.targets()[0].0))
            .collect();
        assert_eq!(
            high,
            vec![
                (1, 7, 8),
                (2, 6, 8),
                (2, 7, 9),
                (3, 5, 8),
                (3, 6, 9),
                (3, 7, 10),
            ]
        );
        // Low phase starts (0,0) (0,1) (0,2) (0,3) (1,0) ...
        let low_head: Vec<(u32, u32, u32)> = inst.phase3().gates()[..5]
            .iter()
            .map(|g| (g.controls()[0].0, g.controls()[1].0, g.targets()[0].0))
            .collect();
        assert_eq!(
            low_head,
            vec![(0, 4, 8), (0, 5, 9), (0, 6, 10), (0, 7, 11), (1, 4, 9)]
        );
        // Ids follow concatenated positions.
        let ids: Vec<u32> = inst.circuit().gates().iter().map(|g| g.id()).collect();
        assert_eq!(ids, (0..16).collect::<Vec<u32>>());
    }

    #[test]
    fn all_partial_products_commute() {
        let inst = generate_mult(5).unwrap();
        assert!(find_unverified_pair(&inst.circuit()).is_none());
    }

    #[test]
    fn small_operands_are_rejected() {
        assert!(matches!(generate_mult(1), Err(Error::BadParameter(_))));
        assert!(matches!(generate_mult(0), Err(Error::BadParameter(_))));
    }

    #[test]
    fn bound_needs_six_bits() {
        assert!(matches!(
            toffoli_depth_lower_bound(5),
            Err(Error::BoundNotApplicable(5))
        ));
        assert_eq!(toffoli_depth_lower_bound(6).unwrap(), 11);
        assert_eq!(toffoli_depth_lower_bound(32).unwrap(), 63);
    }

    #[test]
    fn optimized_depth_beats_the_baseline() {
        let opt = optimize_mult(8, SolverChoice::Dsatur, 7).unwrap();
        assert_eq!(opt.report.baseline, 28);
        assert_eq!(opt.report.bound, Some(15));
        assert!(opt.report.total < opt.report.baseline);
        assert!(opt.report.total >= 15);
        assert_eq!(
            opt.report.total,
            opt.report.phase1_depth + opt.report.phase3_depth
        );
        // The reordered phases keep their gate sets.
        assert_eq!(opt.phase1.len(), 28);
        assert_eq!(opt.phase3.len(), 36);
    }

    #[test]
    fn report_serializes_with_sorted_keys_and_nullable_bound() {
        let opt = optimize_mult(4, SolverChoice::Dsatur, 7).unwrap();
        let json = serde_json::to_string(&opt.report).unwrap();
        assert!(json.starts_with("{\"baseline\":12,\"bound\":null,\"n\":4,"));
        let keys: Vec<&str> = json
            .match_indices('\"')
            .step_by(2)
            .map(|(i, _)| &json[i + 1..json[i + 1..].find('\"').unwrap() + i + 1])
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }
}
