//! Depth optimization for commuting quantum circuits via graph coloring.
//!
//! When every pair of gates in a circuit commutes, the only obstruction to
//! running two gates in the same time step is a shared qubit. Minimizing
//! circuit depth is then exactly minimum vertex coloring of the *conflict
//! graph* — one vertex per gate, one edge per pair of gates that touch a
//! common qubit. This crate implements that reduction in both directions,
//! three coloring solvers, brute-force oracles that certify the reduction
//! on small instances, and two worked applications: Toffoli-depth
//! optimization of binary-field multiplication and depth/width tradeoffs
//! for in-place adders built from controlled phase rotations.
//!
//! Start with [`Circuit`] and [`optimize`], or run the `chromatiq` binary.

pub mod circuit;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod format;
pub mod graph;
pub mod mult;
pub mod qft;
pub mod reduction;

pub use circuit::{
    commutes_structurally, compute_depth, compute_depth_asap, find_unverified_pair,
    validate_commuting, validate_permutation, Angle, Circuit, ConflictPolicy, Gate, GateKind,
    Layering, QubitDisjoint, QubitId,
};
pub use coloring::{
    color_dsatur, color_dsatur_best_of, color_exact, color_greedy, greedy_clique, ColoredGraph,
    Coloring, TieBreak,
};
pub use error::{Error, Result};
pub use format::{
    read_json, to_canonical_string, write_json, write_text, CircuitDoc, ColoringDoc, GateDoc,
    GraphDoc, KindDoc,
};
pub use graph::{construct_graph, export_dot, permutation_invariance_check, ConflictGraph};
pub use mult::{
    generate_mult, optimize_mult, toffoli_depth_lower_bound, MultInstance, MultOptimization,
    MultReport,
};
pub use qft::{
    base_depth, build_tradeoff_curve, cost_metrics, generate_adder,
    parallelize_with_extra_qubits, AdderInstance, AdderVariant, FanoutAccounting,
    ParallelizedDesign, TradeoffCurve, TradeoffPoint,
};
pub use reduction::{
    brute_force_best_ordering, brute_force_min_depth, construct_circuit, optimize,
    solve_coloring, to_circuit, to_colored_graph, verify_propositions, OptimizationReport,
    OptimizeOptions, SolverChoice, VerifyReport, DEFAULT_BRUTE_FORCE_LIMIT,
    DEFAULT_EXACT_BUDGET,
};
