//! Gates, circuits, parallelizability, and depth computation.
//!
//! A [`Circuit`] is an ordered sequence of pairwise-commuting [`Gate`]s over
//! a declared number of qubits. Two gates can run in the same layer exactly
//! when the active [`ConflictPolicy`] says so; the default policy,
//! [`QubitDisjoint`], allows it iff the gates touch disjoint qubit sets.
//!
//! Two depth notions are provided:
//!
//! * [`compute_depth`] — the canonical semantics: scan the sequence left to
//!   right and extend the current layer while every pair of gates since the
//!   layer started is parallelizable; a conflicting gate opens a new layer.
//!   This is the quantity the coloring reduction reasons about.
//! * [`compute_depth_asap`] — a diagnostic earliest-fit schedule: each gate
//!   joins the first layer that contains no conflicting gate. Never deeper
//!   than the canonical depth.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// Index of a wire in a circuit. Valid only while `index < qubit_count` of
/// the owning [`Circuit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QubitId(pub u32);

impl QubitId {
    /// The raw wire index.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for QubitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}", self.0)
    }
}

impl From<u32> for QubitId {
    fn from(v: u32) -> Self {
        QubitId(v)
    }
}

/// An exact rotation angle `2π · num / 2^den_pow2`.
///
/// Angles are dyadic rationals so that gates compare and serialize
/// bit-exactly; no floating point enters gate identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Angle {
    /// Numerator of the turn fraction.
    pub num: i64,
    /// The denominator is `2^den_pow2`.
    pub den_pow2: u32,
}

/// Largest accepted denominator exponent. Rotations by `2π/2^4096` are far
/// below any realizable precision; a larger exponent in an input file is
/// treated as data corruption rather than a meaningful angle.
pub const MAX_DEN_POW2: u32 = 4096;

impl Angle {
    /// π (half a turn), the angle of a plain controlled-Z.
    pub const HALF_TURN: Angle = Angle { num: 1, den_pow2: 1 };

    /// The angle in radians, for display only.
    pub fn radians(self) -> f64 {
        std::f64::consts::TAU * self.num as f64 * 2f64.powi(-(self.den_pow2 as i32))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2π·{}/2^{}", self.num, self.den_pow2)
    }
}

/// The supported gate kinds.
///
/// X-type kinds flip exactly one target conditioned on their controls.
/// Phase kinds are diagonal; they have no targets and are symmetric in
/// their referenced qubits, so their support is the control set itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    /// Doubly-controlled X: two controls, one target.
    Toffoli,
    /// Singly-controlled X: one control, one target.
    Cnot,
    /// X with any number of controls and one target.
    MultiControlledX,
    /// Diagonal phase on exactly two qubits.
    ControlledPhase,
    /// Diagonal phase on exactly three qubits.
    DoublyControlledPhase,
    /// Diagonal phase on one or more qubits.
    MultiControlledPhase,
}

impl GateKind {
    /// True for the diagonal (phase) kinds.
    pub fn is_phase(self) -> bool {
        matches!(
            self,
            GateKind::ControlledPhase
                | GateKind::DoublyControlledPhase
                | GateKind::MultiControlledPhase
        )
    }

    /// True for the X-type kinds (one flipped target).
    pub fn is_x_type(self) -> bool {
        !self.is_phase()
    }
}

/// One commuting operation: a kind, its referenced qubits, and (for phase
/// kinds) an exact angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    id: u32,
    kind: GateKind,
    controls: Vec<QubitId>,
    targets: Vec<QubitId>,
    angle: Option<Angle>,
    /// controls ∪ targets, kept sorted for fast disjointness tests.
    support: Vec<QubitId>,
}

impl Gate {
    /// Builds a gate, enforcing the kind's arity, control/target
    /// disjointness, and angle presence rules. Controls and targets are
    /// stored sorted; their incoming order carries no meaning.
    pub fn new(
        id: u32,
        kind: GateKind,
        controls: Vec<QubitId>,
        targets: Vec<QubitId>,
        angle: Option<Angle>,
    ) -> Result<Gate> {
        let mut controls = controls;
        let mut targets = targets;
        controls.sort_unstable();
        targets.sort_unstable();
        for list in [&controls, &targets] {
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateQubit {
                        gate_id: id,
                        qubit: w[0].0,
                    });
                }
            }
        }

        let arity_err = |expected: &'static str| Error::ArityMismatch {
            gate_id: id,
            kind,
            expected,
            got: format!("{} controls and {} targets", controls.len(), targets.len()),
        };
        match kind {
            GateKind::Toffoli => {
                if controls.len() != 2 || targets.len() != 1 {
                    return Err(arity_err("2 controls and 1 target"));
                }
            }
            GateKind::Cnot => {
                if controls.len() != 1 || targets.len() != 1 {
                    return Err(arity_err("1 control and 1 target"));
                }
            }
            GateKind::MultiControlledX => {
                if targets.len() != 1 {
                    return Err(arity_err("exactly 1 target"));
                }
            }
            GateKind::ControlledPhase => {
                if controls.len() != 2 || !targets.is_empty() {
                    return Err(arity_err("2 referenced qubits and 0 targets"));
                }
            }
            GateKind::DoublyControlledPhase => {
                if controls.len() != 3 || !targets.is_empty() {
                    return Err(arity_err("3 referenced qubits and 0 targets"));
                }
            }
            GateKind::MultiControlledPhase => {
                if controls.is_empty() || !targets.is_empty() {
                    return Err(arity_err(">= 1 referenced qubit and 0 targets"));
                }
            }
        }

        match (kind.is_phase(), &angle) {
            (true, None) => {
                return Err(Error::AngleMismatch {
                    gate_id: id,
                    kind,
                    problem: "is a phase gate and requires an angle",
                })
            }
            (false, Some(_)) => {
                return Err(Error::AngleMismatch {
                    gate_id: id,
                    kind,
                    problem: "is an X-type gate and must not carry an angle",
                })
            }
            _ => {}
        }
        if let Some(a) = &angle {
            if a.den_pow2 > MAX_DEN_POW2 {
                return Err(Error::AngleOverflow {
                    gate_id: id,
                    den_pow2: a.den_pow2,
                });
            }
        }

        // Controls and targets must be disjoint (merge walk over the two
        // sorted lists also builds the support).
        let mut support = Vec::with_capacity(controls.len() + targets.len());
        let (mut i, mut j) = (0, 0);
        while i < controls.len() && j < targets.len() {
            match controls[i].cmp(&targets[j]) {
                std::cmp::Ordering::Less => {
                    support.push(controls[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    support.push(targets[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    return Err(Error::ControlTargetOverlap {
                        gate_id: id,
                        qubit: controls[i].0,
                    })
                }
            }
        }
        support.extend_from_slice(&controls[i..]);
        support.extend_from_slice(&targets[j..]);
        debug_assert!(!support.is_empty(), "arity rules guarantee a support");

        Ok(Gate {
            id,
            kind,
            controls,
            targets,
            angle,
            support,
        })
    }

    /// Toffoli (CX with controls `c1`, `c2` and target `t`).
    pub fn toffoli(id: u32, c1: u32, c2: u32, t: u32) -> Result<Gate> {
        Gate::new(
            id,
            GateKind::Toffoli,
            vec![QubitId(c1), QubitId(c2)],
            vec![QubitId(t)],
            None,
        )
    }

    /// CNOT with control `c` and target `t`.
    pub fn cnot(id: u32, c: u32, t: u32) -> Result<Gate> {
        Gate::new(
            id,
            GateKind::Cnot,
            vec![QubitId(c)],
            vec![QubitId(t)],
            None,
        )
    }

    /// Multi-controlled X.
    pub fn mcx(id: u32, controls: &[u32], t: u32) -> Result<Gate> {
        Gate::new(
            id,
            GateKind::MultiControlledX,
            controls.iter().copied().map(QubitId).collect(),
            vec![QubitId(t)],
            None,
        )
    }

    /// Two-qubit controlled phase.
    pub fn cphase(id: u32, a: u32, b: u32, angle: Angle) -> Result<Gate> {
        Gate::new(
            id,
            GateKind::ControlledPhase,
            vec![QubitId(a), QubitId(b)],
            vec![],
            Some(angle),
        )
    }

    /// Three-qubit controlled phase.
    pub fn ccphase(id: u32, a: u32, b: u32, c: u32, angle: Angle) -> Result<Gate> {
        Gate::new(
            id,
            GateKind::DoublyControlledPhase,
            vec![QubitId(a), QubitId(b), QubitId(c)],
            vec![],
            Some(angle),
        )
    }

    /// Phase gate on an arbitrary non-empty qubit set.
    pub fn mcphase(id: u32, qubits: &[u32], angle: Angle) -> Result<Gate> {
        Gate::new(
            id,
            GateKind::MultiControlledPhase,
            qubits.iter().copied().map(QubitId).collect(),
            vec![],
            Some(angle),
        )
    }

    /// The unique id of this gate within its circuit.
    pub fn id(&self) -> u32 {
        self.id
    }

    /// The gate kind.
    pub fn kind(&self) -> GateKind {
        self.kind
    }

    /// Control qubits, sorted ascending. For phase kinds this is the whole
    /// referenced set.
    pub fn controls(&self) -> &[QubitId] {
        &self.controls
    }

    /// Target qubits, sorted ascending (empty for phase kinds).
    pub fn targets(&self) -> &[QubitId] {
        &self.targets
    }

    /// The angle, present exactly for phase kinds.
    pub fn angle(&self) -> Option<Angle> {
        self.angle
    }

    /// controls ∪ targets, sorted ascending. Never empty.
    pub fn support(&self) -> &[QubitId] {
        &self.support
    }

    /// Returns a copy of this gate with every referenced qubit replaced
    /// according to `map` (used by the fan-out engine). The gate id, kind,
    /// and angle are preserved.
    pub fn with_remapped_qubits(&self, map: impl Fn(QubitId) -> QubitId) -> Result<Gate> {
        Gate::new(
            self.id,
            self.kind,
            self.controls.iter().map(|&q| map(q)).collect(),
            self.targets.iter().map(|&q| map(q)).collect(),
            self.angle,
        )
    }
}

/// True iff the two sorted slices share no element.
pub(crate) fn sorted_disjoint(a: &[QubitId], b: &[QubitId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// An ordered sequence of gates over `qubit_count` wires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    qubit_count: u32,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Builds a circuit, checking that every referenced qubit is in range
    /// and that gate ids are unique. `qubit_count` must be at least 1.
    pub fn new(qubit_count: u32, gates: Vec<Gate>) -> Result<Circuit> {
        if qubit_count == 0 {
            return Err(Error::NoQubits);
        }
        let mut seen = HashSet::with_capacity(gates.len());
        for g in &gates {
            if !seen.insert(g.id) {
                return Err(Error::DuplicateGateId(g.id));
            }
            for &q in g.support() {
                if q.0 >= qubit_count {
                    return Err(Error::QubitOutOfRange {
                        gate_id: g.id,
                        qubit: q.0,
                        qubit_count,
                    });
                }
            }
        }
        Ok(Circuit { qubit_count, gates })
    }

    /// Number of wires.
    pub fn qubit_count(&self) -> u32 {
        self.qubit_count
    }

    /// The gates in circuit order.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Number of gates.
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    /// True when the circuit has no gates (depth 0).
    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Returns the circuit with gates reordered so that position `k` holds
    /// what was at position `perm[k]`. `perm` must be a permutation of
    /// `0..len`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Circuit> {
        validate_permutation(perm, self.gates.len())?;
        let gates = perm.iter().map(|&p| self.gates[p].clone()).collect();
        Circuit::new(self.qubit_count, gates)
    }
}

/// Checks that `perm` is a bijection on `0..len`.
pub fn validate_permutation(perm: &[usize], len: usize) -> Result<()> {
    if perm.len() != len {
        return Err(Error::InvalidPermutation(format!(
            "length {} does not match {} items",
            perm.len(),
            len
        )));
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len {
            return Err(Error::InvalidPermutation(format!(
                "index {p} out of range for {len} items"
            )));
        }
        if seen[p] {
            return Err(Error::InvalidPermutation(format!("index {p} repeated")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Decides whether two gates may run simultaneously.
///
/// Policies must be symmetric: `parallelizable(u, v) == parallelizable(v, u)`.
pub trait ConflictPolicy {
    /// True iff `a` and `b` can share a layer.
    fn parallelizable(&self, a: &Gate, b: &Gate) -> bool;

    /// A short name for reports.
    fn name(&self) -> &'static str {
        "custom"
    }
}

/// The default hardware model: two gates are simultaneously executable iff
/// their referenced qubit sets are disjoint.
#[derive(Debug, Clone, Copy, Default)]
pub struct QubitDisjoint;

impl ConflictPolicy for QubitDisjoint {
    fn parallelizable(&self, a: &Gate, b: &Gate) -> bool {
        sorted_disjoint(a.support(), b.support())
    }

    fn name(&self) -> &'static str {
        "qubit-disjoint"
    }
}

/// A partition of a circuit's gate ids into executable layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    layers: Vec<Vec<u32>>,
}

impl Layering {
    /// The layers in execution order; each entry lists gate ids.
    pub fn layers(&self) -> &[Vec<u32>] {
        &self.layers
    }

    /// Number of layers.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Verifies the layering invariants against a circuit: the layers
    /// partition the circuit's gate ids and every intra-layer pair is
    /// parallelizable.
    pub fn is_valid_for<P: ConflictPolicy>(&self, circuit: &Circuit, policy: &P) -> bool {
        let by_id: std::collections::HashMap<u32, &Gate> =
            circuit.gates().iter().map(|g| (g.id(), g)).collect();
        let mut seen = HashSet::new();
        for layer in &self.layers {
            for (i, &a) in layer.iter().enumerate() {
                if !by_id.contains_key(&a) || !seen.insert(a) {
                    return false;
                }
                for &b in &layer[i + 1..] {
                    match (by_id.get(&a), by_id.get(&b)) {
                        (Some(ga), Some(gb)) if policy.parallelizable(ga, gb) => {}
                        _ => return false,
                    }
                }
            }
        }
        seen.len() == circuit.len()
    }
}

/// Canonical depth: consecutive-block layering.
///
/// Scans gates left to right; the current layer extends while the incoming
/// gate is parallelizable with every gate already in the layer, otherwise a
/// new layer opens. Returns the layer count and the layering itself. An
/// empty circuit has depth 0.
pub fn compute_depth<P: ConflictPolicy>(circuit: &Circuit, policy: &P) -> (usize, Layering) {
    let gates = circuit.gates();
    let mut layers: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for (pos, gate) in gates.iter().enumerate() {
        let fits = current
            .iter()
            .all(|&p| policy.parallelizable(&gates[p], gate));
        if current.is_empty() || fits {
            current.push(pos);
        } else {
            layers.push(current.iter().map(|&p| gates[p].id()).collect());
            current = vec![pos];
        }
    }
    if !current.is_empty() {
        layers.push(current.iter().map(|&p| gates[p].id()).collect());
    }
    let depth = layers.len();
    (depth, Layering { layers })
}

/// Diagnostic earliest-fit depth: each gate joins the first layer with no
/// conflicting gate, or opens a new last layer. Never deeper than
/// [`compute_depth`].
pub fn compute_depth_asap<P: ConflictPolicy>(circuit: &Circuit, policy: &P) -> (usize, Layering) {
    let gates = circuit.gates();
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for (pos, gate) in gates.iter().enumerate() {
        let slot = layers.iter_mut().find(|layer| {
            layer
                .iter()
                .all(|&p| policy.parallelizable(&gates[p], gate))
        });
        match slot {
            Some(layer) => layer.push(pos),
            None => layers.push(vec![pos]),
        }
    }
    let layers: Vec<Vec<u32>> = layers
        .into_iter()
        .map(|layer| layer.into_iter().map(|p| gates[p].id()).collect())
        .collect();
    let depth = layers.len();
    (depth, Layering { layers })
}

/// Structural commutation certificate for a gate pair:
///
/// 1. two phase (diagonal) gates always commute;
/// 2. two X-type gates commute iff neither's target lies in the other's
///    control set;
/// 3. an X-type and a phase gate commute iff the X-target is not in the
///    phase gate's referenced set.
///
/// This is sufficient, not complete: `false` means "unverified", not
/// "provably non-commuting".
pub fn commutes_structurally(a: &Gate, b: &Gate) -> bool {
    match (a.kind().is_phase(), b.kind().is_phase()) {
        (true, true) => true,
        (false, false) => {
            sorted_disjoint(a.targets(), b.controls()) && sorted_disjoint(b.targets(), a.controls())
        }
        (false, true) => sorted_disjoint(a.targets(), b.controls()),
        (true, false) => sorted_disjoint(b.targets(), a.controls()),
    }
}

/// True iff every gate pair in the circuit is certified commuting by
/// [`commutes_structurally`]. Permutation-invariant by construction.
pub fn validate_commuting(circuit: &Circuit) -> bool {
    find_unverified_pair(circuit).is_none()
}

/// The first gate pair (by position) the structural rules cannot certify,
/// as gate ids; `None` when the whole circuit is certified.
pub fn find_unverified_pair(circuit: &Circuit) -> Option<(u32, u32)> {
    let gates = circuit.gates();
    for i in 0..gates.len() {
        for j in i + 1..gates.len() {
            if !commutes_structurally(&gates[i], &gates[j]) {
                return Some((gates[i].id(), gates[j].id()));
            }
        }
    }
    None
}
