//! Error types shared across the crate.

use crate::circuit::GateKind;

/// Errors produced by circuit construction, solvers, and the reduction
/// pipeline.
///
/// Variants carry enough context to name the offending gate, qubit, or
/// field in diagnostics. [`Error::BudgetExceeded`] is special-cased by the
/// CLI (exit code 2); every other variant is a validation or usage error
/// (exit code 1).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A gate references a qubit index at or beyond the declared count.
    #[error("gate {gate_id}: qubit {qubit} out of range for a circuit with {qubit_count} qubits")]
    QubitOutOfRange {
        gate_id: u32,
        qubit: u32,
        qubit_count: u32,
    },

    /// Two gates in one circuit share an id.
    #[error("duplicate gate id {0}")]
    DuplicateGateId(u32),

    /// A qubit appears both as a control and as a target of one gate.
    #[error("gate {gate_id}: qubit {qubit} is listed as both control and target")]
    ControlTargetOverlap { gate_id: u32, qubit: u32 },

    /// A qubit is listed twice in the controls (or twice in the targets).
    #[error("gate {gate_id}: qubit {qubit} is listed twice")]
    DuplicateQubit { gate_id: u32, qubit: u32 },

    /// The control/target counts do not match the gate kind.
    #[error("gate {gate_id}: {kind:?} requires {expected}, got {got} ")]
    ArityMismatch {
        gate_id: u32,
        kind: GateKind,
        expected: &'static str,
        got: String,
    },

    /// Phase-kind gates must carry an angle; X-kind gates must not.
    #[error("gate {gate_id}: {kind:?} {problem}")]
    AngleMismatch {
        gate_id: u32,
        kind: GateKind,
        problem: &'static str,
    },

    /// An angle denominator exponent beyond the supported maximum is
    /// treated as corrupt input rather than a meaningful rotation.
    #[error("gate {gate_id}: angle denominator exponent {den_pow2} exceeds the supported maximum")]
    AngleOverflow { gate_id: u32, den_pow2: u32 },

    /// Circuits must declare at least one qubit.
    #[error("a circuit must declare at least one qubit")]
    NoQubits,

    /// The structural commutation check could not certify a gate pair and
    /// the caller did not override it.
    #[error(
        "gates {a} and {b} are not structurally certified as commuting \
         (rerun with the override to optimize anyway)"
    )]
    NotCommuting { a: u32, b: u32 },

    /// A graph edge endpoint is out of range.
    #[error("edge ({a}, {b}) references a vertex >= {vertex_count}")]
    EdgeOutOfRange { a: u32, b: u32, vertex_count: u32 },

    /// Self-loops are not allowed in conflict graphs.
    #[error("self-loop on vertex {0} is not a valid conflict edge")]
    SelfLoop(u32),

    /// Duplicate edges are not allowed in conflict graphs.
    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: u32, b: u32 },

    /// A coloring assigns the same color to two adjacent vertices.
    #[error("coloring is not proper: vertices {a} and {b} are adjacent and both have color {color}")]
    ImproperColoring { a: u32, b: u32, color: u32 },

    /// Colors must form the contiguous range 1..=count.
    #[error("colors are not normalized: expected the contiguous range 1..={expected}, found {found}")]
    NonContiguousColors { expected: u32, found: u32 },

    /// A coloring's domain does not match the graph's vertex set.
    #[error("coloring covers {colors} vertices but the graph has {vertices}")]
    ColoringDomainMismatch { colors: usize, vertices: usize },

    /// A vertex order / permutation is not a bijection on the expected set.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// The exact solver ran out of its search-node budget.
    #[error("solver budget exhausted after {0} search nodes; shrink the instance or raise the budget")]
    BudgetExceeded(u64),

    /// A brute-force oracle was handed more gates than its limit.
    #[error("instance too large for brute force: {got} gates exceeds the limit of {limit}")]
    TooLarge { got: usize, limit: usize },

    /// A conflict-graph vertex has no backing gate in the source circuit.
    #[error("vertex {vertex} maps to gate id {gate_id}, which is not present in the source circuit")]
    MissingGateMapping { vertex: u32, gate_id: u32 },

    /// A generator or operation received an out-of-domain parameter.
    #[error("{0}")]
    BadParameter(String),

    /// The closed-form Toffoli-depth lower bound only applies for n >= 6.
    #[error("lower bound formula not applicable for n = {0}; it requires n >= 6")]
    BoundNotApplicable(u32),

    /// Phase-boundary annotations must be ascending positions within the
    /// gate list.
    #[error("phase boundary {boundary} is not a valid split of a {gates}-gate circuit")]
    BadPhaseBoundary { boundary: u32, gates: usize },

    /// File I/O failure while reading or writing an artifact.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// JSON that does not match the canonical schema.
    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
