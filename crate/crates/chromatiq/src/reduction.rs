//! The two-way reduction between gate ordering and vertex coloring.
//!
//! For a circuit of pairwise-commuting gates, reordering gates never
//! changes the implemented unitary, and two gates can share a time step
//! exactly when the conflict policy allows it (by default: disjoint qubit
//! support). Depth minimization is therefore minimum vertex coloring of
//! the conflict graph:
//!
//! * [`to_circuit`] — turns a colored conflict graph back into a circuit
//!   by sorting gates by color (stable in gate id). A proper `h`-coloring
//!   yields depth at most `h`.
//! * [`to_colored_graph`] — reads a coloring off an existing gate order by
//!   scanning maximal conflict-free runs; the number of colors equals the
//!   circuit's depth.
//! * [`construct_circuit`] — the reverse reduction: builds a commuting
//!   phase-gate circuit whose conflict graph is exactly a given graph,
//!   using at most `|V|^2/2` qubits. Together with [`construct_graph`]
//!   this shows depth minimization and graph coloring are the same
//!   problem, so the exact solver's budget failures are expected on
//!   adversarial inputs.
//! * [`optimize`] — the end-to-end pipeline with a pluggable solver and a
//!   never-degrade guarantee.
//! * [`brute_force_min_depth`] / [`brute_force_best_ordering`] — exact
//!   oracles over all gate orderings, for validating everything above on
//!   small instances.
//! * [`verify_propositions`] — randomized self-check that optimal depth
//!   equals the chromatic number in both directions.
//!
//! [`construct_graph`]: crate::graph::construct_graph

use crate::circuit::{
    compute_depth, find_unverified_pair, Angle, Circuit, ConflictPolicy, Gate,
};
use crate::coloring::{
    color_dsatur, color_exact, color_greedy, greedy_clique, ColoredGraph, Coloring, TieBreak,
};
use crate::error::{Error, Result};
use crate::graph::{construct_graph, ConflictGraph};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// Default search-node budget for the exact solver. A million nodes is
/// enough to settle every circuit-derived instance in this crate (the
/// 47-vertex Mycielski graph, a classic worst case for clique-based
/// pruning, closes well under it); triangle-free constructions around
/// ~90 vertices exhaust it in seconds, which keeps the failure mode
/// prompt rather than an open-ended stall.
pub const DEFAULT_EXACT_BUDGET: u64 = 1_000_000;

/// Default gate cap for the brute-force oracles; factorial growth makes
/// larger circuits impractical without structure.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 8;

/// Which coloring algorithm drives an optimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverChoice {
    /// First-fit in gate order. Fast, no quality guarantee.
    Greedy,
    /// DSatur with deterministic tie-breaking. The default.
    #[default]
    Dsatur,
    /// Branch-and-bound exact coloring with a search-node budget.
    Exact { node_budget: u64 },
}

impl SolverChoice {
    /// Stable human-readable name, used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            SolverChoice::Greedy => "greedy",
            SolverChoice::Dsatur => "dsatur",
            SolverChoice::Exact { .. } => "exact",
        }
    }
}

/// Runs the chosen solver on a conflict graph. Greedy uses the natural
/// vertex order; only `Exact` can fail (budget exhaustion).
pub fn solve_coloring(graph: &ConflictGraph, choice: SolverChoice) -> Result<ColoredGraph> {
    match choice {
        SolverChoice::Greedy => {
            let order: Vec<u32> = (0..graph.vertex_count() as u32).collect();
            color_greedy(graph, &order)
        }
        SolverChoice::Dsatur => Ok(color_dsatur(graph, TieBreak::default())),
        SolverChoice::Exact { node_budget } => color_exact(graph, node_budget),
    }
}

/// Options for [`optimize`].
#[derive(Debug, Clone, Copy)]
pub struct OptimizeOptions {
    /// Coloring solver to run.
    pub solver: SolverChoice,
    /// Skip the structural commutation check. The reduction is only sound
    /// for pairwise-commuting gates; enabling this shifts responsibility
    /// for that guarantee to the caller.
    pub allow_unverified: bool,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions {
            solver: SolverChoice::Dsatur,
            allow_unverified: false,
        }
    }
}

/// What [`optimize`] did. Field order is alphabetical so serialized keys
/// come out sorted.
#[derive(Debug, Clone, Serialize)]
pub struct OptimizationReport {
    /// Colors used by the solver (equals the output depth unless the
    /// original order was kept).
    pub color_count: u32,
    /// `color_count` minus the greedy clique lower bound: an upper bound
    /// on how far the result can be from optimal. Zero proves optimality.
    pub gap_bound: u32,
    /// Depth of the circuit as given.
    pub input_depth: usize,
    /// True when the recolored order would have been deeper than the
    /// input, so the input order was returned unchanged.
    pub kept_input_order: bool,
    /// Depth of the returned circuit.
    pub output_depth: usize,
    /// Name of the solver that ran.
    pub solver_name: &'static str,
    /// Wall-clock solve time (not serialized; timing is not part of the
    /// canonical report).
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Reorders a commuting circuit to minimize depth via conflict-graph
/// coloring. Never returns a circuit deeper than the input: if the
/// coloring-induced order is worse (possible with the heuristic solvers),
/// the input order is kept and the report says so.
///
/// Fails with [`Error::NotCommuting`] when some gate pair lacks a
/// structural commutation certificate, unless
/// [`OptimizeOptions::allow_unverified`] is set.
pub fn optimize<P: ConflictPolicy>(
    circuit: &Circuit,
    policy: &P,
    opts: OptimizeOptions,
) -> Result<(Circuit, OptimizationReport)> {
    if !opts.allow_unverified {
        if let Some((a, b)) = find_unverified_pair(circuit) {
            return Err(Error::NotCommuting { a, b });
        }
    }
    let start = Instant::now();
    let (input_depth, _) = compute_depth(circuit, policy);
    let graph = construct_graph(circuit, policy);
    let colored = solve_coloring(&graph, opts.solver)?;
    let gap_bound = colored.color_count() - greedy_clique(&graph).len() as u32;
    let candidate = to_circuit(&colored, circuit)?;
    let (candidate_depth, _) = compute_depth(&candidate, policy);
    let kept_input_order = candidate_depth > input_depth;
    let (output, output_depth) = if kept_input_order {
        (circuit.clone(), input_depth)
    } else {
        (candidate, candidate_depth)
    };
    let report = OptimizationReport {
        color_count: colored.color_count(),
        gap_bound,
        input_depth,
        kept_input_order,
        output_depth,
        solver_name: opts.solver.name(),
        elapsed: start.elapsed(),
    };
    Ok((output, report))
}

/// Realizes a colored conflict graph as a gate order: gates sorted by
/// color, ties broken by gate id. Because each color class is an
/// independent set, the result's depth is at most the number of colors.
///
/// `source` supplies the gates; every vertex's gate id must resolve there.
pub fn to_circuit(colored: &ColoredGraph, source: &Circuit) -> Result<Circuit> {
    let by_id: HashMap<u32, &Gate> = source.gates().iter().map(|g| (g.id(), g)).collect();
    let graph = colored.graph();
    let mut order: Vec<u32> = (0..graph.vertex_count() as u32).collect();
    order.sort_by_key(|&v| (colored.coloring().color(v), graph.gate_id(v)));
    let mut gates = Vec::with_capacity(order.len());
    for v in order {
        let id = graph.gate_id(v);
        let gate = by_id.get(&id).ok_or(Error::MissingGateMapping {
            vertex: v,
            gate_id: id,
        })?;
        gates.push((*gate).clone());
    }
    Circuit::new(source.qubit_count(), gates)
}

/// Reads the coloring induced by the circuit's current gate order: scan
/// left to right, keep extending the current color class while the next
/// gate conflicts with none of its members, and start a fresh color
/// otherwise. The number of colors equals the circuit's depth, so an
/// optimal order yields an optimal coloring.
pub fn to_colored_graph<P: ConflictPolicy>(
    circuit: &Circuit,
    policy: &P,
) -> (ColoredGraph, usize) {
    let graph = construct_graph(circuit, policy);
    let n = graph.vertex_count();
    let mut colors = vec![0u32; n];
    let mut current: Vec<u32> = Vec::new();
    let mut d = 0u32;
    for v in 0..n as u32 {
        if current.iter().any(|&m| graph.has_edge(m, v)) {
            current.clear();
        }
        if current.is_empty() {
            d += 1;
        }
        current.push(v);
        colors[v as usize] = d;
    }
    let coloring = Coloring::new(colors).expect("block scan emits contiguous colors");
    let colored = ColoredGraph::new(graph, coloring).expect("block scan is proper");
    (colored, d as usize)
}

/// Builds a circuit of commuting multi-controlled phase gates whose
/// conflict graph (under the qubit-disjointness policy) is exactly
/// `graph`: vertex `i` becomes gate id `i`, and two gates share a qubit
/// iff the vertices are adjacent. Uses at most `|V|^2/2` qubits.
///
/// Sketch: each vertex starts by claiming every existing qubit, drops the
/// qubits of all non-neighbors, and then walks its earlier neighbors; any
/// neighbor left without a common qubit gets one — a qubit freshly created
/// during this vertex's pass is reused for the neighbor when that reuse
/// introduces no edge to the neighbor's non-neighbors, and a brand-new
/// qubit is created otherwise. Isolated-so-far vertices get a private
/// qubit so every gate references at least one.
pub fn construct_circuit(graph: &ConflictGraph) -> Circuit {
    let n = graph.vertex_count();
    if n == 0 {
        return Circuit::new(1, vec![]).expect("empty circuit on one qubit");
    }
    use std::collections::BTreeSet;
    // refs[i] is the evolving qubit set of vertex i; qubit ids are 0-based
    // creation indices. One qubit exists up front.
    let mut refs: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    let mut qubit_count: u32 = 1;
    for i in 0..n {
        refs[i] = (0..qubit_count).collect();
        // Qubits created during this vertex's pass, in creation order.
        let mut fresh_here: Vec<u32> = Vec::new();
        for j in 0..i {
            if !graph.has_edge(i as u32, j as u32) {
                let drop: Vec<u32> = refs[j].iter().copied().collect();
                for q in drop {
                    refs[i].remove(&q);
                }
            }
        }
        for j in 0..i {
            if !graph.has_edge(i as u32, j as u32) || !refs[i].is_disjoint(&refs[j]) {
                continue;
            }
            // Vertex j is a neighbor but shares no qubit yet. Prefer
            // reusing a qubit created earlier in this pass, provided no
            // non-neighbor of j already holds it (which would force a
            // spurious edge).
            let mut reused = false;
            for &q in &fresh_here {
                let safe =
                    (0..j).all(|k| graph.has_edge(k as u32, j as u32) || !refs[k].contains(&q));
                if safe {
                    refs[i].insert(q);
                    refs[j].insert(q);
                    reused = true;
                    break;
                }
            }
            if !reused && fresh_here.iter().all(|q| !refs[j].contains(q)) {
                let q = qubit_count;
                qubit_count += 1;
                refs[i].insert(q);
                refs[j].insert(q);
                fresh_here.push(q);
            }
        }
        if refs[i].is_empty() {
            let q = qubit_count;
            qubit_count += 1;
            refs[i].insert(q);
        }
    }
    let gates: Vec<Gate> = refs
        .iter()
        .enumerate()
        .map(|(i, set)| {
            let controls: Vec<u32> = set.iter().copied().collect();
            Gate::mcphase(i as u32, &controls, Angle::HALF_TURN)
                .expect("reference sets are nonempty and duplicate-free")
        })
        .collect();
    Circuit::new(qubit_count, gates).expect("every created qubit is referenced")
}

/// Exact minimum depth over all gate orderings, by depth-first search over
/// partitions of the gates into conflict-free groups (equivalent to
/// orderings, but exponentially smaller). Circuits with more than
/// `gate_limit` gates (or 63, the bitmask width) are rejected with
/// [`Error::TooLarge`].
pub fn brute_force_min_depth<P: ConflictPolicy>(
    circuit: &Circuit,
    policy: &P,
    gate_limit: usize,
) -> Result<usize> {
    Ok(brute_force_best_ordering(circuit, policy, gate_limit)?.1)
}

/// Like [`brute_force_min_depth`], but also returns a reordered circuit
/// achieving the minimum.
pub fn brute_force_best_ordering<P: ConflictPolicy>(
    circuit: &Circuit,
    policy: &P,
    gate_limit: usize,
) -> Result<(Circuit, usize)> {
    let n = circuit.gates().len();
    if n > gate_limit {
        return Err(Error::TooLarge {
            got: n,
            limit: gate_limit,
        });
    }
    if n > 63 {
        return Err(Error::TooLarge { got: n, limit: 63 });
    }
    if n == 0 {
        return Ok((circuit.clone(), 0));
    }
    let graph = construct_graph(circuit, policy);
    let adj: Vec<u64> = (0..n as u32)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1u64 << w))
        .collect();

    // Vertex order: a greedy clique first (its members are forced into
    // distinct groups, bounding the search immediately), then the rest by
    // descending degree.
    let clique = greedy_clique(&graph);
    let mut order: Vec<u32> = clique.clone();
    let in_clique: u64 = clique.iter().fold(0u64, |m, &v| m | 1u64 << v);
    let mut rest: Vec<u32> = (0..n as u32).filter(|&v| in_clique >> v & 1 == 0).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    order.extend(rest);

    // Incumbent: DSatur's color classes form a valid grouping.
    let incumbent = color_dsatur(&graph, TieBreak::default());
    let mut best_count = incumbent.color_count() as usize;
    let mut best_groups: Vec<Vec<u32>> = vec![Vec::new(); best_count];
    for v in 0..n as u32 {
        best_groups[incumbent.coloring().color(v) as usize - 1].push(v);
    }

    if best_count > clique.len() {
        // Depth-first search over group assignments in restricted-growth
        // form: a vertex may join any existing compatible group or open
        // the next one. Prune when the group count reaches the incumbent.
        struct Dfs<'a> {
            order: &'a [u32],
            adj: &'a [u64],
            groups: Vec<u64>,
            members: Vec<Vec<u32>>,
            best_count: usize,
            best_groups: Vec<Vec<u32>>,
        }
        impl Dfs<'_> {
            fn run(&mut self, pos: usize) {
                if self.groups.len() >= self.best_count {
                    return;
                }
                if pos == self.order.len() {
                    self.best_count = self.groups.len();
                    self.best_groups = self.members.clone();
                    return;
                }
                let v = self.order[pos];
                for g in 0..self.groups.len() {
                    if self.groups[g] & self.adj[v as usize] == 0 {
                        self.groups[g] |= 1u64 << v;
                        self.members[g].push(v);
                        self.run(pos + 1);
                        self.members[g].pop();
                        self.groups[g] &= !(1u64 << v);
                    }
                }
                self.groups.push(1u64 << v);
                self.members.push(vec![v]);
                self.run(pos + 1);
                self.members.pop();
                self.groups.pop();
            }
        }
        let mut dfs = Dfs {
            order: &order,
            adj: &adj,
            groups: Vec::new(),
            members: Vec::new(),
            best_count,
            best_groups,
        };
        dfs.run(0);
        best_count = dfs.best_count;
        best_groups = dfs.best_groups;
    }

    // Concatenating the groups realizes the minimum as an ordering.
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    for group in &mut best_groups {
        group.sort_unstable();
        perm.extend(group.iter().map(|&v| v as usize));
    }
    let reordered = circuit.permuted(&perm)?;
    let (depth, _) = compute_depth(&reordered, policy);
    debug_assert_eq!(depth, best_count);
    Ok((reordered, depth))
}

/// Outcome of [`verify_propositions`]: per-property pass counts over the
/// randomized trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Trials run per property.
    pub trials: u32,
    /// Trials where exact coloring + reordering matched the brute-force
    /// minimum depth.
    pub p1_passes: u32,
    /// Trials where the brute-force optimal ordering's induced coloring
    /// used exactly the chromatic number of colors.
    pub p2_passes: u32,
    /// Trials where an arbitrary proper coloring yielded an ordering no
    /// deeper than its color count.
    pub remark1_passes: u32,
}

impl VerifyReport {
    /// True when every trial of every property passed.
    pub fn is_all_pass(&self) -> bool {
        self.p1_passes == self.trials
            && self.p2_passes == self.trials
            && self.remark1_passes == self.trials
    }
}

/// Random circuit of pairwise-commuting multi-controlled phase gates on 8
/// qubits (1–3 referenced qubits each, dyadic angles).
fn random_commuting_circuit(rng: &mut ChaCha8Rng, gate_count: usize) -> Circuit {
    let qubits: Vec<u32> = (0..8).collect();
    let gates = (0..gate_count)
        .map(|id| {
            let size = rng.random_range(1..=3usize);
            let mut picked: Vec<u32> = Vec::with_capacity(size);
            while picked.len() < size {
                let q = *qubits.choose(rng).expect("nonempty");
                if !picked.contains(&q) {
                    picked.push(q);
                }
            }
            let angle = Angle {
                num: rng.random_range(1..=7),
                den_pow2: rng.random_range(1..=4),
            };
            Gate::mcphase(id as u32, &picked, angle).expect("valid random gate")
        })
        .collect();
    Circuit::new(8, gates).expect("valid random circuit")
}

/// A uniform-ish random proper coloring: greedy first-fit over a shuffled
/// vertex order, except each vertex takes a brand-new color with
/// probability 0.3, then colors are compressed to a contiguous range.
fn random_proper_coloring(rng: &mut ChaCha8Rng, graph: &ConflictGraph) -> Result<ColoredGraph> {
    let n = graph.vertex_count();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    let mut raw = vec![0u32; n];
    let mut max_used = 0u32;
    for &v in &order {
        let c = if rng.random_bool(0.3) {
            max_used + 1
        } else {
            let mut used: Vec<u32> = graph
                .neighbors(v)
                .iter()
                .map(|&w| raw[w as usize])
                .filter(|&c| c != 0)
                .collect();
            used.sort_unstable();
            used.dedup();
            let mut c = 1;
            for u in used {
                if u == c {
                    c += 1;
                } else if u > c {
                    break;
                }
            }
            c
        };
        raw[v as usize] = c;
        max_used = max_used.max(c);
    }
    ColoredGraph::new(graph.clone(), Coloring::normalize(&raw))
}

/// Randomized validation of the reduction on small commuting circuits
/// (3..=`max_gates` gates on 8 qubits), `trials` independent trials per
/// property, fully determined by `seed`:
///
/// 1. Recoloring with the exact solver and reordering by color reaches the
///    true minimum depth (checked against brute force over orderings).
/// 2. Reading the coloring off a brute-force optimal ordering uses exactly
///    the chromatic number of colors.
/// 3. Any proper coloring, reordered by color, has depth at most its
///    number of colors.
pub fn verify_propositions(trials: u32, max_gates: usize, seed: u64) -> Result<VerifyReport> {
    let policy = crate::circuit::QubitDisjoint;
    let max_gates = max_gates.max(3);
    let mut report = VerifyReport {
        trials,
        p1_passes: 0,
        p2_passes: 0,
        remark1_passes: 0,
    };
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add((trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let gate_count = rng.random_range(3..=max_gates);
        let circuit = random_commuting_circuit(&mut rng, gate_count);
        let graph = construct_graph(&circuit, &policy);

        let min_depth = brute_force_min_depth(&circuit, &policy, max_gates)?;
        let exact = color_exact(&graph, DEFAULT_EXACT_BUDGET)?;

        // Minimum depth is achievable by recoloring and sorting by color.
        let recolored = to_circuit(&exact, &circuit)?;
        if compute_depth(&recolored, &policy).0 == min_depth {
            report.p1_passes += 1;
        }

        // An optimal ordering induces an optimal coloring.
        let (best, _) = brute_force_best_ordering(&circuit, &policy, max_gates)?;
        let (_, induced_colors) = to_colored_graph(&best, &policy);
        if induced_colors == exact.color_count() as usize {
            report.p2_passes += 1;
        }

        // Any proper h-coloring yields an ordering of depth at most h.
        let arbitrary = random_proper_coloring(&mut rng, &graph)?;
        let reordered = to_circuit(&arbitrary, &circuit)?;
        if compute_depth(&reordered, &policy).0 <= arbitrary.color_count() as usize {
            report.remark1_passes += 1;
        }
    }
    Ok(report)
}
