//! Fourier-basis adders and the depth/width tradeoff from qubit fan-out.
//!
//! Addition in the Fourier basis is a block of pairwise-commuting
//! controlled phase rotations, so its depth is governed by the conflict
//! graph like any other commuting circuit — but unlike the multiplier,
//! the graph here contains large cliques through the heavily-referenced
//! wires, and the base depth cannot be improved by reordering alone.
//!
//! Diagonal gates open a second lever: a qubit can be *fanned out* into
//! `r` copies with a CNOT tree (`⌈log₂ r⌉` layers out, the mirror tree
//! back in), after which gates referencing different copies commute
//! through disjoint wires. Splitting the busiest wires trades extra
//! qubits for depth. [`parallelize_with_extra_qubits`] applies a greedy
//! splitter for one budget; [`build_tradeoff_curve`] sweeps budgets and
//! reports the Pareto frontier along with the designs minimizing the
//! space-time products `S = depth·qubits` and `T = depth²·qubits`.

use crate::circuit::{Angle, Circuit, Gate, QubitDisjoint, QubitId};
use crate::error::{Error, Result};
use crate::graph::{construct_graph, ConflictGraph};
use crate::reduction::{optimize, solve_coloring, to_circuit, OptimizeOptions, SolverChoice};
use serde::Serialize;

/// Which adder to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdderVariant {
    /// In-place `|x⟩|φ(y)⟩ → |x⟩|φ(x+y)⟩` on `2n` qubits: each bit `x_j`
    /// rotates every accumulator wire `m ≥ j`.
    Add,
    /// Product accumulation `|x⟩|y⟩|φ(z)⟩ → |x⟩|y⟩|φ(xy+z)⟩` on `4n`
    /// qubits: one doubly-controlled rotation per `(i, j, m)` with
    /// `m ≥ i+j`, the workhorse of repeated multiply-adds.
    ProductAdd,
}

impl AdderVariant {
    /// Stable name used in reports and file names.
    pub fn name(&self) -> &'static str {
        match self {
            AdderVariant::Add => "add",
            AdderVariant::ProductAdd => "product",
        }
    }
}

/// A generated adder: the operand width, the variant, and the rotation
/// block itself.
#[derive(Debug, Clone)]
pub struct AdderInstance {
    n: u32,
    variant: AdderVariant,
    circuit: Circuit,
}

impl AdderInstance {
    /// Operand width in bits.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Which adder this is.
    pub fn variant(&self) -> AdderVariant {
        self.variant
    }

    /// The rotation block.
    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }
}

/// Generates the rotation block of an `n`-bit Fourier-basis adder.
///
/// `Add` lays out `x_j` on wire `j` and the accumulator `φ(y)_m` on wire
/// `n+m`; the rotation for `(j, m)`, `j ≤ m < n`, turns by `2π/2^{m−j+1}`.
/// `ProductAdd` adds `y_j` on wire `n+j` and a double-width accumulator
/// `φ(z)_m` on wire `2n+m`, `m < 2n`, with a rotation for every
/// `(i, j, m)`, `m ≥ i+j`, by `2π/2^{m−i−j+1}`. Gate ids equal positions;
/// generation order is lexicographic in the loop indices.
pub fn generate_adder(n: u32, variant: AdderVariant) -> Result<AdderInstance> {
    if n < 1 {
        return Err(Error::BadParameter(format!(
            "adders need n >= 1 bit operands, got {n}"
        )));
    }
    let mut gates = Vec::new();
    match variant {
        AdderVariant::Add => {
            for j in 0..n {
                for m in j..n {
                    let angle = Angle {
                        num: 1,
                        den_pow2: m - j + 1,
                    };
                    gates.push(Gate::cphase(gates.len() as u32, j, n + m, angle)?);
                }
            }
        }
        AdderVariant::ProductAdd => {
            for i in 0..n {
                for j in 0..n {
                    for m in (i + j)..(2 * n) {
                        let angle = Angle {
                            num: 1,
                            den_pow2: m - i - j + 1,
                        };
                        gates.push(Gate::ccphase(
                            gates.len() as u32,
                            i,
                            n + j,
                            2 * n + m,
                            angle,
                        )?);
                    }
                }
            }
        }
    }
    let qubits = match variant {
        AdderVariant::Add => 2 * n,
        AdderVariant::ProductAdd => 4 * n,
    };
    Ok(AdderInstance {
        n,
        variant,
        circuit: Circuit::new(qubits, gates)?,
    })
}

/// Depth of the adder without any extra qubits: color the conflict graph
/// with `solver` and reorder. For `Add` this is exactly `n` — wire `x_0`
/// (equivalently `φ_{n−1}`) touches `n` gates, forming a clique, and the
/// skew-diagonal schedule meets it.
pub fn base_depth(instance: &AdderInstance, solver: SolverChoice) -> Result<usize> {
    let opts = OptimizeOptions {
        solver,
        allow_unverified: false,
    };
    let (_, report) = optimize(instance.circuit(), &QubitDisjoint, opts)?;
    Ok(report.output_depth)
}

/// Whether reported depths include the CNOT fan-out/fan-in layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FanoutAccounting {
    /// Total depth = rotation layers + `2·⌈log₂ r_max⌉` copy layers.
    #[default]
    IncludeOverhead,
    /// Rotation layers only (useful when copies can be prepared offline).
    RotationOnly,
}

/// Same-wire gate pairs left after splitting `f` references across `r`
/// copies as evenly as possible.
fn pairs_after_split(f: u64, r: u64) -> u64 {
    let big = f % r;
    let lo = f / r;
    let hi = lo + 1;
    big * (hi * (hi - 1) / 2) + (r - big) * (lo * (lo - 1) / 2)
}

/// `⌈log₂ r⌉` for `r ≥ 1`.
fn ceil_log2(r: u64) -> u32 {
    if r <= 1 {
        0
    } else {
        u64::BITS - (r - 1).leading_zeros()
    }
}

/// The evolving copy allocation: how many replicas each original wire
/// has, and which gates reference it (by position, in circuit order).
struct Replication {
    refs: Vec<Vec<usize>>,
    replicas: Vec<u64>,
}

impl Replication {
    fn new(circuit: &Circuit) -> Replication {
        let mut refs: Vec<Vec<usize>> = vec![Vec::new(); circuit.qubit_count() as usize];
        for (pos, gate) in circuit.gates().iter().enumerate() {
            for q in gate.support() {
                refs[q.index()].push(pos);
            }
        }
        let replicas = vec![1u64; refs.len()];
        Replication { refs, replicas }
    }

    /// Grants one more copy to the wire whose split removes the most
    /// same-wire gate pairs (first wire wins ties). Returns `false` when
    /// no wire can improve, leaving the allocation unchanged.
    fn allocate_one(&mut self) -> bool {
        let mut best: Option<usize> = None;
        let mut best_gain = 0u64;
        for q in 0..self.refs.len() {
            let f = self.refs[q].len() as u64;
            if self.replicas[q] >= f.max(1) {
                continue;
            }
            let gain = pairs_after_split(f, self.replicas[q])
                - pairs_after_split(f, self.replicas[q] + 1);
            if gain > best_gain {
                best_gain = gain;
                best = Some(q);
            }
        }
        match best {
            Some(q) if best_gain > 0 => {
                self.replicas[q] += 1;
                true
            }
            _ => false,
        }
    }

    /// Splits wire `q`'s referencing gates into `replicas[q]` contiguous
    /// runs (larger runs first) and hands each run to `visit` — gates in
    /// the same run share a copy of `q`.
    fn for_each_run(&self, q: usize, mut visit: impl FnMut(usize, &[usize])) {
        let f = self.refs[q].len();
        let r = self.replicas[q] as usize;
        if f == 0 {
            return;
        }
        let big = f % r;
        let lo = f / r;
        let mut idx = 0;
        for c in 0..r {
            let sz = if c < big { lo + 1 } else { lo };
            visit(c, &self.refs[q][idx..idx + sz]);
            idx += sz;
        }
    }

    /// Conflict graph of the replicated circuit, built directly from the
    /// runs: two gates conflict iff they share a copy of some wire. Vertex
    /// `i` stands for gate position `i` (valid because generated circuits
    /// use positional gate ids).
    fn conflict_graph(&self, gate_count: usize) -> ConflictGraph {
        let mut edges = std::collections::BTreeSet::new();
        for q in 0..self.refs.len() {
            self.for_each_run(q, |_, run| {
                for (i, &a) in run.iter().enumerate() {
                    for &b in &run[..i] {
                        edges.insert((b.min(a) as u32, a.max(b) as u32));
                    }
                }
            });
        }
        let edges: Vec<(u32, u32)> = edges.into_iter().collect();
        ConflictGraph::from_edges(gate_count as u32, &edges)
            .expect("run pairs are in range and deduplicated")
    }

    /// Rewrites the circuit onto the replicated wires: copy 0 keeps the
    /// original wire id and further copies get fresh ids, assigned wire by
    /// wire in ascending order.
    fn materialize(&self, circuit: &Circuit) -> Result<Circuit> {
        let base = circuit.qubit_count();
        let mut next = base;
        let mut copy_ids: Vec<Vec<u32>> = Vec::with_capacity(base as usize);
        for q in 0..base as usize {
            let mut ids = vec![q as u32];
            for _ in 1..self.replicas[q] {
                ids.push(next);
                next += 1;
            }
            copy_ids.push(ids);
        }
        // Per-gate wire substitution derived from the runs.
        let mut subs: Vec<Vec<(u32, u32)>> = vec![Vec::new(); circuit.len()];
        for (q, ids) in copy_ids.iter().enumerate() {
            self.for_each_run(q, |c, run| {
                for &pos in run {
                    subs[pos].push((q as u32, ids[c]));
                }
            });
        }
        let gates: Result<Vec<Gate>> = circuit
            .gates()
            .iter()
            .enumerate()
            .map(|(pos, gate)| {
                gate.with_remapped_qubits(|q: QubitId| {
                    let to = subs[pos]
                        .iter()
                        .find(|&&(from, _)| from == q.0)
                        .map(|&(_, to)| to)
                        .unwrap_or(q.0);
                    QubitId(to)
                })
            })
            .collect();
        Circuit::new(next, gates?)
    }

    fn extras(&self) -> u64 {
        self.replicas.iter().map(|&r| r - 1).sum()
    }

    fn max_replicas(&self) -> u64 {
        self.replicas.iter().copied().max().unwrap_or(1)
    }
}

/// Fan-out/fan-in depth for a maximum copy count: `2·⌈log₂ r_max⌉` CNOT
/// layers, zero when nothing is copied.
fn fanout_layers(max_replicas: u64) -> usize {
    2 * ceil_log2(max_replicas) as usize
}

/// A circuit rescheduled onto extra qubits, with its depth accounting.
#[derive(Debug, Clone)]
pub struct ParallelizedDesign {
    /// The rotation block on the widened wire set, ordered by color.
    pub circuit: Circuit,
    /// Rotation layers used by the schedule.
    pub rotation_depth: usize,
    /// CNOT layers spent copying and uncopying (per
    /// [`FanoutAccounting`]; zero under `RotationOnly`).
    pub fanout_overhead: usize,
    /// `rotation_depth + fanout_overhead`.
    pub depth: usize,
    /// Wires in the widened design.
    pub qubit_count: u32,
    /// Largest copy count of any single wire.
    pub max_replicas: u64,
    /// Extra wires actually granted (≤ the requested budget; the greedy
    /// splitter stops once no split removes a conflict).
    pub extras_used: u64,
}

/// Greedily spends up to `budget` extra qubits copying the busiest wires
/// of a diagonal-gate circuit, then colors the widened conflict graph and
/// reorders by color.
///
/// Only phase-kind gates may be fanned out — copying an X-type gate's
/// wires does not commute — so circuits containing X-type gates are
/// rejected with [`Error::BadParameter`].
pub fn parallelize_with_extra_qubits(
    circuit: &Circuit,
    budget: u32,
    solver: SolverChoice,
    accounting: FanoutAccounting,
) -> Result<ParallelizedDesign> {
    if let Some(gate) = circuit.gates().iter().find(|g| g.kind().is_x_type()) {
        return Err(Error::BadParameter(format!(
            "fan-out parallelization applies to phase gates only; gate {} is {:?}",
            gate.id(),
            gate.kind()
        )));
    }
    let mut replication = Replication::new(circuit);
    for _ in 0..budget {
        if !replication.allocate_one() {
            break;
        }
    }
    let widened = replication.materialize(circuit)?;
    let graph = construct_graph(&widened, &QubitDisjoint);
    let colored = solve_coloring(&graph, solver)?;
    let scheduled = to_circuit(&colored, &widened)?;
    let rotation_depth = colored.color_count() as usize;
    let fanout_overhead = match accounting {
        FanoutAccounting::IncludeOverhead => fanout_layers(replication.max_replicas()),
        FanoutAccounting::RotationOnly => 0,
    };
    Ok(ParallelizedDesign {
        circuit: scheduled,
        rotation_depth,
        fanout_overhead,
        depth: rotation_depth + fanout_overhead,
        qubit_count: widened.qubit_count(),
        max_replicas: replication.max_replicas(),
        extras_used: replication.extras(),
    })
}

/// One budget step on a tradeoff curve. Field order is alphabetical so
/// serialized keys come out sorted.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TradeoffPoint {
    /// Extra qubits made available at this step (idle ones included).
    pub budget: u32,
    /// Best total depth known with this many qubits.
    pub depth: usize,
    /// Copy/uncopy layers included in `depth` (zero under
    /// [`FanoutAccounting::RotationOnly`]).
    pub fanout_overhead: usize,
    /// Base wires plus `budget`.
    pub qubit_count: u32,
    /// Rotation layers included in `depth`.
    pub rotation_depth: usize,
    /// Space-time product `depth · qubit_count`.
    pub s: u128,
    /// Time-weighted product `depth² · qubit_count`.
    pub t: u128,
}

/// A monotone depth/width frontier with its product-optimal points.
#[derive(Debug, Clone, Serialize)]
pub struct TradeoffCurve {
    /// Strictly deeper-to-shallower as qubits grow: the first point is the
    /// no-extra design and each later point strictly reduces depth.
    pub points: Vec<TradeoffPoint>,
    /// The point minimizing `S = depth · qubits` (earliest such point).
    pub s_optimal: TradeoffPoint,
    /// The point minimizing `T = depth² · qubits` (earliest such point).
    pub t_optimal: TradeoffPoint,
}

/// The products `(S, T) = (depth·qubits, depth²·qubits)`.
pub fn cost_metrics(depth: usize, qubits: u32) -> (u128, u128) {
    let d = depth as u128;
    let q = qubits as u128;
    (d * q, d * d * q)
}

/// Sweeps fan-out budgets `0..=budget_max` for an adder and returns the
/// Pareto frontier of the resulting designs.
///
/// Budgets are granted one qubit at a time by the greedy splitter, so
/// allocations nest across the sweep; the depth recorded at each budget is
/// the best seen so far (a smaller design always remains available by
/// leaving qubits idle, so the curve never degrades). The sweep stops
/// early once no further split removes any conflict. Points that fail to
/// strictly reduce total depth are dropped.
pub fn build_tradeoff_curve(
    n: u32,
    variant: AdderVariant,
    budget_max: u32,
    solver: SolverChoice,
    accounting: FanoutAccounting,
) -> Result<TradeoffCurve> {
    let instance = generate_adder(n, variant)?;
    let circuit = instance.circuit();
    let base = circuit.qubit_count();
    let mut replication = Replication::new(circuit);
    let mut best_rotation = usize::MAX;
    let mut raw: Vec<TradeoffPoint> = Vec::new();
    for budget in 0..=budget_max {
        if budget > 0 && !replication.allocate_one() {
            break;
        }
        let graph = replication.conflict_graph(circuit.len());
        let colored = solve_coloring(&graph, solver)?;
        best_rotation = best_rotation.min(colored.color_count() as usize);
        let fanout_overhead = match accounting {
            FanoutAccounting::IncludeOverhead => fanout_layers(replication.max_replicas()),
            FanoutAccounting::RotationOnly => 0,
        };
        let depth = best_rotation + fanout_overhead;
        let qubit_count = base + budget;
        let (s, t) = cost_metrics(depth, qubit_count);
        raw.push(TradeoffPoint {
            budget,
            depth,
            fanout_overhead,
            qubit_count,
            rotation_depth: best_rotation,
            s,
            t,
        });
    }

    // Pareto filter: keep the baseline, then only strict depth reductions.
    let mut points: Vec<TradeoffPoint> = Vec::new();
    for p in raw {
        match points.last() {
            None => points.push(p),
            Some(last) if p.depth < last.depth && p.qubit_count > last.qubit_count => {
                points.push(p)
            }
            _ => {}
        }
    }
    let argmin = |key: fn(&TradeoffPoint) -> u128| {
        points
            .iter()
            .enumerate()
            .min_by_key(|(i, p)| (key(p), *i))
            .map(|(_, p)| *p)
            .expect("the zero-budget point always exists")
    };
    let s_optimal = argmin(|p| p.s);
    let t_optimal = argmin(|p| p.t);
    Ok(TradeoffCurve {
        points,
        s_optimal,
        t_optimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{compute_depth, find_unverified_pair};
    use crate::coloring::greedy_clique;
    use crate::reduction::brute_force_min_depth;

    #[test]
    fn add_gate_set_for_two_bits() {
        let inst = generate_adder(2, AdderVariant::Add).unwrap();
        let gates: Vec<(u32, u32, u32)> = inst
            .circuit()
            .gates()
            .iter()
            .map(|g| {
                (
                    g.controls()[0].0,
                    g.controls()[1].0,
                    g.angle().unwrap().den_pow2,
                )
            })
            .collect();
        // (j, m) ∈ {(0,0), (0,1), (1,1)} on wires (j, 2+m), angle 2π/2^{m−j+1}.
        assert_eq!(gates, vec![(0, 2, 1), (0, 3, 2), (1, 3, 1)]);
        assert_eq!(inst.circuit().qubit_count(), 4);
    }

    #[test]
    fn one_bit_adder_is_a_single_rotation() {
        let inst = generate_adder(1, AdderVariant::Add).unwrap();
        assert_eq!(inst.circuit().len(), 1);
        assert_eq!(base_depth(&inst, SolverChoice::Dsatur).unwrap(), 1);
        assert!(matches!(
            generate_adder(0, AdderVariant::Add),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn product_add_counts_and_commutes() {
        let inst = generate_adder(2, AdderVariant::ProductAdd).unwrap();
        assert_eq!(inst.circuit().len(), 12); // n²(n+1)
        assert_eq!(inst.circuit().qubit_count(), 8);
        assert!(find_unverified_pair(inst.circuit()).is_none());
        let inst3 = generate_adder(3, AdderVariant::ProductAdd).unwrap();
        assert_eq!(inst3.circuit().len(), 36);
    }

    #[test]
    fn base_depth_matches_brute_force_on_small_adders() {
        for n in 1..=4u32 {
            let inst = generate_adder(n, AdderVariant::Add).unwrap();
            let bf = brute_force_min_depth(inst.circuit(), &QubitDisjoint, 12).unwrap();
            assert_eq!(
                base_depth(&inst, SolverChoice::Dsatur).unwrap(),
                bf,
                "n = {n}"
            );
            assert_eq!(bf, n as usize);
        }
    }

    #[test]
    fn zero_budget_changes_nothing() {
        let inst = generate_adder(4, AdderVariant::Add).unwrap();
        let design = parallelize_with_extra_qubits(
            inst.circuit(),
            0,
            SolverChoice::Dsatur,
            FanoutAccounting::IncludeOverhead,
        )
        .unwrap();
        assert_eq!(design.extras_used, 0);
        assert_eq!(design.max_replicas, 1);
        assert_eq!(design.fanout_overhead, 0);
        assert_eq!(design.qubit_count, 8);
        assert_eq!(design.rotation_depth, 4);
    }

    #[test]
    fn fan_of_sixteen_halves_with_one_copy() {
        // Sixteen rotations all sharing wire 0: depth 16 unaided. One copy
        // of wire 0 splits them into two groups of eight.
        let gates: Vec<Gate> = (0..16)
            .map(|k| Gate::cphase(k, 0, k + 1, Angle::HALF_TURN).unwrap())
            .collect();
        let fan = Circuit::new(17, gates).unwrap();
        let before = parallelize_with_extra_qubits(
            &fan,
            0,
            SolverChoice::Dsatur,
            FanoutAccounting::IncludeOverhead,
        )
        .unwrap();
        assert_eq!(before.rotation_depth, 16);
        let after = parallelize_with_extra_qubits(
            &fan,
            1,
            SolverChoice::Dsatur,
            FanoutAccounting::IncludeOverhead,
        )
        .unwrap();
        assert_eq!(after.rotation_depth, 8);
        assert_eq!(after.fanout_overhead, 2);
        assert_eq!(after.depth, 10);
        assert_eq!(after.max_replicas, 2);
        assert_eq!(after.qubit_count, 18);
        assert_eq!(compute_depth(&after.circuit, &QubitDisjoint).0, 8);
    }

    #[test]
    fn x_gates_cannot_be_fanned_out() {
        let circuit = Circuit::new(3, vec![Gate::toffoli(0, 0, 1, 2).unwrap()]).unwrap();
        assert!(matches!(
            parallelize_with_extra_qubits(
                &circuit,
                1,
                SolverChoice::Dsatur,
                FanoutAccounting::IncludeOverhead
            ),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn run_graph_matches_the_materialized_circuit() {
        // The incremental conflict graph must agree with building the
        // widened circuit and scanning qubit overlaps.
        let inst = generate_adder(3, AdderVariant::Add).unwrap();
        let mut replication = Replication::new(inst.circuit());
        for _ in 0..3 {
            replication.allocate_one();
        }
        let fast = replication.conflict_graph(inst.circuit().len());
        let widened = replication.materialize(inst.circuit()).unwrap();
        let slow = construct_graph(&widened, &QubitDisjoint);
        assert_eq!(fast, slow);
    }

    #[test]
    fn replication_preserves_gate_structure() {
        let inst = generate_adder(3, AdderVariant::ProductAdd).unwrap();
        let design = parallelize_with_extra_qubits(
            inst.circuit(),
            5,
            SolverChoice::Dsatur,
            FanoutAccounting::IncludeOverhead,
        )
        .unwrap();
        assert_eq!(design.circuit.len(), inst.circuit().len());
        let original: std::collections::HashMap<u32, &Gate> =
            inst.circuit().gates().iter().map(|g| (g.id(), g)).collect();
        for gate in design.circuit.gates() {
            let source = original[&gate.id()];
            assert_eq!(gate.kind(), source.kind());
            assert_eq!(gate.angle(), source.angle());
            assert_eq!(gate.support().len(), source.support().len());
        }
    }

    #[test]
    fn tradeoff_curve_is_strictly_improving() {
        let curve = build_tradeoff_curve(
            8,
            AdderVariant::Add,
            24,
            SolverChoice::Dsatur,
            FanoutAccounting::IncludeOverhead,
        )
        .unwrap();
        assert_eq!(curve.points[0].budget, 0);
        assert_eq!(curve.points[0].qubit_count, 16);
        assert_eq!(curve.points[0].rotation_depth, 8);
        for pair in curve.points.windows(2) {
            assert!(pair[1].depth < pair[0].depth);
            assert!(pair[1].qubit_count > pair[0].qubit_count);
        }
        assert!(curve.t_optimal.qubit_count >= curve.s_optimal.qubit_count);
        for p in &curve.points {
            let (s, t) = cost_metrics(p.depth, p.qubit_count);
            assert_eq!((p.s, p.t), (s, t));
            assert_eq!(p.depth, p.rotation_depth + p.fanout_overhead);
        }
    }

    #[test]
    fn rotation_only_accounting_drops_the_overhead() {
        let curve = build_tradeoff_curve(
            6,
            AdderVariant::Add,
            10,
            SolverChoice::Dsatur,
            FanoutAccounting::RotationOnly,
        )
        .unwrap();
        assert!(curve.points.iter().all(|p| p.fanout_overhead == 0));
        assert!(curve
            .points
            .iter()
            .all(|p| p.depth == p.rotation_depth));
    }

    #[test]
    fn splitting_keeps_the_clique_bound_honest() {
        // After any allocation the rotation depth is still at least the
        // size of the largest surviving clique.
        let inst = generate_adder(5, AdderVariant::Add).unwrap();
        let design = parallelize_with_extra_qubits(
            inst.circuit(),
            3,
            SolverChoice::Dsatur,
            FanoutAccounting::IncludeOverhead,
        )
        .unwrap();
        let graph = construct_graph(&design.circuit, &QubitDisjoint);
        assert!(design.rotation_depth >= greedy_clique(&graph).len());
    }
}
