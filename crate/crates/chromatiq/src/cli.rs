//! Command-line front end wiring every library capability to files and
//! pipes.
//!
//! Eight subcommands cover the workflow end to end:
//!
//! | command         | does                                                      |
//! |-----------------|-----------------------------------------------------------|
//! | `optimize`      | reorder a commuting circuit to minimize depth             |
//! | `graph`         | export a circuit's conflict graph (JSON or DOT)           |
//! | `chromatic`     | color a conflict graph, or a circuit's graph directly     |
//! | `gen-mult`      | generate the two-phase binary-field multiplier            |
//! | `gen-qft-add`   | generate a phase-rotation adder (`add` or `product`)      |
//! | `optimize-mult` | optimize both multiplier phases, report Toffoli depths    |
//! | `tradeoff`      | sweep extra-qubit budgets, emit the depth/width curve     |
//! | `verify`        | check the reduction theorems on random commuting circuits |
//!
//! Streams are split so pipelines stay clean: the primary artifact
//! (circuit, graph, coloring, CSV) goes to `--out` when given and to
//! stdout otherwise; the accompanying report then goes to stdout when the
//! artifact went to a file, and to stderr when the artifact occupies
//! stdout.
//!
//! Exit codes: `0` success, `1` invalid input (malformed JSON, an illegal
//! gate, a gate pair that cannot be verified to commute without
//! `--allow-noncommuting`, or failed theorem verification), `2`
//! exact-solver budget exhaustion.
//!
//! Every run is deterministic: all randomness flows from `--seed`
//! (default [`DEFAULT_SEED`]), JSON keys are sorted, and CSV uses plain
//! `.`-free integer fields — identical invocations produce byte-identical
//! artifacts.

use crate::circuit::{Circuit, QubitDisjoint};
use crate::circuit::find_unverified_pair;
use crate::error::{Error, Result};
use crate::format::{
    read_json, to_canonical_string, write_json, write_text, CircuitDoc, ColoringDoc, GraphDoc,
};
use crate::graph::{construct_graph, export_dot, ConflictGraph};
use crate::mult::optimize_mult;
use crate::qft::{build_tradeoff_curve, generate_adder, AdderVariant, FanoutAccounting, TradeoffPoint};
use crate::reduction::{
    optimize, solve_coloring, verify_propositions, OptimizationReport, OptimizeOptions,
    SolverChoice, DEFAULT_EXACT_BUDGET,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Seed used when `--seed` is not given: the fractional bits of √2, an
/// arbitrary fixed constant. Runs never draw entropy from the clock or
/// the platform.
pub const DEFAULT_SEED: u64 = 0x6A09_E667_F3BC_C908;

/// Top-level argument parser.
#[derive(Debug, Parser)]
#[command(
    name = "chromatiq",
    version,
    about = "Depth optimization for commuting quantum circuits via conflict-graph coloring"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Coloring solver selection, shared by several commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverArg {
    /// First-fit greedy in natural vertex order.
    Greedy,
    /// DSatur with deterministic tie-breaking (the default).
    Dsatur,
    /// Branch-and-bound exact coloring; exits 2 if its node budget runs out.
    Exact,
}

impl SolverArg {
    /// The library-level solver this flag names.
    pub fn choice(self) -> SolverChoice {
        match self {
            SolverArg::Greedy => SolverChoice::Greedy,
            SolverArg::Dsatur => SolverChoice::Dsatur,
            SolverArg::Exact => SolverChoice::Exact {
                node_budget: DEFAULT_EXACT_BUDGET,
            },
        }
    }
}

/// Adder variant selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// In-place two-operand adder: one controlled rotation per (input bit,
    /// accumulator bit) pair.
    Add,
    /// Doubly-controlled product adder accumulating a·b.
    #[value(alias = "product_add", alias = "product-add")]
    Product,
}

impl VariantArg {
    /// The library-level variant this flag names.
    pub fn variant(self) -> AdderVariant {
        match self {
            VariantArg::Add => AdderVariant::Add,
            VariantArg::Product => AdderVariant::ProductAdd,
        }
    }
}

/// One subcommand per capability; see the module docs for the map.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reorder a commuting circuit to minimize depth.
    ///
    /// Reads a circuit JSON file. If it carries `phase_boundaries`, each
    /// segment is optimized independently and gates never cross a cut.
    /// The optimized circuit goes to --out (report to stdout) or to
    /// stdout (report to stderr).
    Optimize {
        /// Input circuit JSON.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Output circuit JSON; stdout when omitted.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
        /// Coloring solver.
        #[arg(long, value_enum, default_value = "dsatur")]
        solver: SolverArg,
        /// Skip the structural commutation check. The reordering is only
        /// sound if the gates really do pairwise commute.
        #[arg(long)]
        allow_noncommuting: bool,
    },
    /// Export a circuit's conflict graph.
    ///
    /// Writes DOT when --out ends in `.dot`, JSON otherwise. Phase cuts
    /// in the input are ignored: the graph covers all gates.
    Graph {
        /// Input circuit JSON.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Output path; stdout (JSON) when omitted.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
        /// Skip the structural commutation check.
        #[arg(long)]
        allow_noncommuting: bool,
    },
    /// Color a conflict graph.
    ///
    /// Accepts either a graph JSON file ({"vertices", "edges"}) or a
    /// circuit JSON file, whose conflict graph is built first. Writes the
    /// coloring as JSON, or as a colored DOT rendering when --out ends in
    /// `.dot`.
    Chromatic {
        /// Input graph or circuit JSON.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Output path; stdout (JSON) when omitted.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
        /// Coloring solver.
        #[arg(long, value_enum, default_value = "dsatur")]
        solver: SolverArg,
        /// Skip the structural commutation check (circuit inputs only).
        #[arg(long)]
        allow_noncommuting: bool,
    },
    /// Generate the n-bit binary-field multiplier's Toffoli circuit.
    ///
    /// Both accumulation phases are concatenated with a phase boundary
    /// between them, so `optimize` keeps them separate.
    GenMult {
        /// Operand width in bits (n ≥ 2).
        #[arg(long)]
        n: u32,
        /// Output circuit JSON; stdout when omitted.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Generate a phase-rotation adder circuit.
    GenQftAdd {
        /// Accumulator width in bits (n ≥ 1).
        #[arg(long)]
        n: u32,
        /// Which adder to generate.
        #[arg(long, value_enum, default_value = "add")]
        variant: VariantArg,
        /// Output circuit JSON; stdout when omitted.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Optimize both multiplier phases and report Toffoli depths.
    ///
    /// Emits a JSON report {baseline, bound, n, phase1_depth,
    /// phase3_depth, total} to stdout.
    OptimizeMult {
        /// Operand width in bits (n ≥ 2).
        #[arg(long)]
        n: u32,
        /// Coloring solver.
        #[arg(long, value_enum, default_value = "dsatur")]
        solver: SolverArg,
        /// Seed for the small-width restart search.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Sweep extra-qubit budgets and emit the depth/width tradeoff curve.
    ///
    /// CSV rows `qubits,depth,S,T` go to --out (summary JSON to stdout)
    /// or to stdout (summary to stderr). The summary names the S- and
    /// T-optimal points.
    Tradeoff {
        /// Accumulator width in bits.
        #[arg(long)]
        n: u32,
        /// Which adder to analyze.
        #[arg(long, value_enum, default_value = "add")]
        variant: VariantArg,
        /// Largest extra-qubit budget to sweep to.
        #[arg(long)]
        budget_max: u32,
        /// Coloring solver.
        #[arg(long, value_enum, default_value = "dsatur")]
        solver: SolverArg,
        /// Count only rotation layers, excluding CNOT fan-out layers.
        #[arg(long)]
        no_fanout_overhead: bool,
        /// Output CSV path; stdout when omitted.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check the reduction theorems on random commuting circuits.
    ///
    /// Prints "<k>/<t> P1, <k>/<t> P2, <k>/<t> Remark1"; exits 1 unless
    /// every trial passes all three checks.
    Verify {
        /// Number of random circuits to test.
        #[arg(long, default_value_t = 100)]
        trials: u32,
        /// Largest circuit size to draw.
        #[arg(long, default_value_t = 8)]
        max_gates: usize,
        /// Seed for circuit generation.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Report for a phase-segmented optimization: one entry per segment plus
/// whole-circuit depths. Segments execute sequentially (a cut always
/// starts a fresh layer), so the totals are per-segment sums. Field order
/// is alphabetical so serialized keys come out sorted.
#[derive(Debug, Serialize)]
struct SegmentedReport {
    /// Sum of segment input depths.
    input_depth: usize,
    /// Sum of segment output depths.
    output_depth: usize,
    /// Per-segment reports, in circuit order.
    segments: Vec<OptimizationReport>,
}

/// The S/T-optimal rows of a tradeoff sweep. Field order is alphabetical
/// so serialized keys come out sorted.
#[derive(Debug, Serialize)]
struct TradeoffSummary {
    /// Row minimizing S = depth · qubits.
    s_optimal: TradeoffPoint,
    /// Row minimizing T = depth² · qubits.
    t_optimal: TradeoffPoint,
}

/// Exit code for a failed run: `2` for solver budget exhaustion, `1` for
/// everything else (I/O, parse, validation).
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) => 2,
        _ => 1,
    }
}

/// Runs a parsed command against the given output streams and returns the
/// process exit code. Stream write failures are ignored — on a closed
/// pipe there is nobody left to tell.
pub fn run<W: Write, E: Write>(cli: Cli, stdout: &mut W, stderr: &mut E) -> i32 {
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code(&err)
        }
    }
}

fn execute<W: Write, E: Write>(command: Command, stdout: &mut W, stderr: &mut E) -> Result<i32> {
    match command {
        Command::Optimize {
            input,
            output,
            solver,
            allow_noncommuting,
        } => {
            let doc: CircuitDoc = read_json(&input)?;
            let (circuit, boundaries) = doc.into_parts()?;
            let opts = OptimizeOptions {
                solver: solver.choice(),
                allow_unverified: allow_noncommuting,
            };
            let (out_doc, report_text) = match boundaries {
                None => {
                    let (optimized, report) = optimize(&circuit, &QubitDisjoint, opts)?;
                    (
                        CircuitDoc::from_circuit(&optimized),
                        to_canonical_string(&report),
                    )
                }
                Some(bounds) => {
                    let mut gates = Vec::with_capacity(circuit.len());
                    let mut segments = Vec::new();
                    for segment in split_at_boundaries(&circuit, &bounds) {
                        let (optimized, report) = optimize(&segment, &QubitDisjoint, opts)?;
                        gates.extend_from_slice(optimized.gates());
                        segments.push(report);
                    }
                    let merged = Circuit::new(circuit.qubit_count(), gates)?;
                    let report = SegmentedReport {
                        input_depth: segments.iter().map(|r| r.input_depth).sum(),
                        output_depth: segments.iter().map(|r| r.output_depth).sum(),
                        segments,
                    };
                    (
                        CircuitDoc::from_circuit_with_boundaries(&merged, bounds),
                        to_canonical_string(&report),
                    )
                }
            };
            emit_with_report(
                output.as_deref(),
                &to_canonical_string(&out_doc),
                &report_text,
                stdout,
                stderr,
            )?;
            Ok(0)
        }
        Command::Graph {
            input,
            output,
            allow_noncommuting,
        } => {
            let doc: CircuitDoc = read_json(&input)?;
            let circuit = doc.into_circuit()?;
            check_commuting(&circuit, allow_noncommuting)?;
            let graph = construct_graph(&circuit, &QubitDisjoint);
            match output.as_deref() {
                Some(path) if wants_dot(path) => write_text(path, &export_dot(&graph, None)?)?,
                Some(path) => write_json(path, &GraphDoc::from_graph(&graph))?,
                None => {
                    let _ = stdout
                        .write_all(to_canonical_string(&GraphDoc::from_graph(&graph)).as_bytes());
                }
            }
            Ok(0)
        }
        Command::Chromatic {
            input,
            output,
            solver,
            allow_noncommuting,
        } => {
            let graph = load_graph_or_circuit(&input, allow_noncommuting)?;
            let colored = solve_coloring(&graph, solver.choice())?;
            match output.as_deref() {
                Some(path) if wants_dot(path) => {
                    write_text(path, &export_dot(colored.graph(), Some(colored.coloring()))?)?;
                }
                Some(path) => write_json(path, &ColoringDoc::from_coloring(colored.coloring()))?,
                None => {
                    let doc = ColoringDoc::from_coloring(colored.coloring());
                    let _ = stdout.write_all(to_canonical_string(&doc).as_bytes());
                }
            }
            Ok(0)
        }
        Command::GenMult { n, output } => {
            let instance = crate::mult::generate_mult(n)?;
            let doc = CircuitDoc::from_circuit_with_boundaries(
                &instance.circuit(),
                vec![instance.boundary() as u32],
            );
            emit_doc(output.as_deref(), &to_canonical_string(&doc), stdout)?;
            Ok(0)
        }
        Command::GenQftAdd { n, variant, output } => {
            let instance = generate_adder(n, variant.variant())?;
            let doc = CircuitDoc::from_circuit(instance.circuit());
            emit_doc(output.as_deref(), &to_canonical_string(&doc), stdout)?;
            Ok(0)
        }
        Command::OptimizeMult { n, solver, seed } => {
            let result = optimize_mult(n, solver.choice(), seed)?;
            let _ = stdout.write_all(to_canonical_string(&result.report).as_bytes());
            Ok(0)
        }
        Command::Tradeoff {
            n,
            variant,
            budget_max,
            solver,
            no_fanout_overhead,
            output,
        } => {
            let accounting = if no_fanout_overhead {
                FanoutAccounting::RotationOnly
            } else {
                FanoutAccounting::IncludeOverhead
            };
            let curve =
                build_tradeoff_curve(n, variant.variant(), budget_max, solver.choice(), accounting)?;
            let summary = TradeoffSummary {
                s_optimal: curve.s_optimal,
                t_optimal: curve.t_optimal,
            };
            emit_with_report(
                output.as_deref(),
                &render_csv(&curve.points),
                &to_canonical_string(&summary),
                stdout,
                stderr,
            )?;
            Ok(0)
        }
        Command::Verify {
            trials,
            max_gates,
            seed,
        } => {
            let report = verify_propositions(trials, max_gates, seed)?;
            let _ = writeln!(
                stdout,
                "{}/{} P1, {}/{} P2, {}/{} Remark1",
                report.p1_passes,
                report.trials,
                report.p2_passes,
                report.trials,
                report.remark1_passes,
                report.trials
            );
            Ok(if report.is_all_pass() { 0 } else { 1 })
        }
    }
}

/// Cuts a circuit into per-segment circuits at the given (already
/// validated) boundary positions.
fn split_at_boundaries(circuit: &Circuit, boundaries: &[u32]) -> Vec<Circuit> {
    let gates = circuit.gates();
    let mut cuts = Vec::with_capacity(boundaries.len() + 2);
    cuts.push(0usize);
    cuts.extend(boundaries.iter().map(|&b| b as usize));
    cuts.push(gates.len());
    cuts.windows(2)
        .map(|pair| {
            Circuit::new(circuit.qubit_count(), gates[pair[0]..pair[1]].to_vec())
                .expect("a slice of a valid circuit stays valid")
        })
        .collect()
}

/// Errors with the first unverified gate pair unless the override is set.
fn check_commuting(circuit: &Circuit, allow: bool) -> Result<()> {
    if !allow {
        if let Some((a, b)) = find_unverified_pair(circuit) {
            return Err(Error::NotCommuting { a, b });
        }
    }
    Ok(())
}

/// Reads `--in` for `chromatic`: a graph document when the JSON object
/// has a `vertices` key, otherwise a circuit whose conflict graph is
/// built on the spot.
fn load_graph_or_circuit(path: &Path, allow_noncommuting: bool) -> Result<ConflictGraph> {
    let value: serde_json::Value = read_json(path)?;
    let in_context = |source| Error::Json {
        path: path.display().to_string(),
        source,
    };
    if value.get("vertices").is_some() {
        let doc: GraphDoc = serde_json::from_value(value).map_err(in_context)?;
        doc.into_graph()
    } else {
        let doc: CircuitDoc = serde_json::from_value(value).map_err(in_context)?;
        let circuit = doc.into_circuit()?;
        check_commuting(&circuit, allow_noncommuting)?;
        Ok(construct_graph(&circuit, &QubitDisjoint))
    }
}

fn wants_dot(path: &Path) -> bool {
    path.extension()
        .map(|ext| ext.eq_ignore_ascii_case("dot"))
        .unwrap_or(false)
}

/// `qubits,depth,S,T` rows, all plain integers, one per sweep point.
fn render_csv(points: &[TradeoffPoint]) -> String {
    let mut csv = String::from("qubits,depth,S,T\n");
    for point in points {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            point.qubit_count, point.depth, point.s, point.t
        ));
    }
    csv
}

/// Writes the primary artifact to `--out` if given, else to stdout.
fn emit_doc<W: Write>(out: Option<&Path>, text: &str, stdout: &mut W) -> Result<()> {
    match out {
        Some(path) => write_text(path, text),
        None => {
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

/// Routes an artifact and its report: artifact to `--out` with the report
/// on stdout, or artifact on stdout with the report on stderr.
fn emit_with_report<W: Write, E: Write>(
    out: Option<&Path>,
    artifact: &str,
    report: &str,
    stdout: &mut W,
    stderr: &mut E,
) -> Result<()> {
    match out {
        Some(path) => {
            write_text(path, artifact)?;
            let _ = stdout.write_all(report.as_bytes());
        }
        None => {
            let _ = stdout.write_all(artifact.as_bytes());
            let _ = stderr.write_all(report.as_bytes());
        }
    }
    Ok(())
}
