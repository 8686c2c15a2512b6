//! Canonical JSON documents for circuits, graphs, and colorings.
//!
//! These mirror the core types field-for-field but exist separately so the
//! wire format stays stable and strict: unknown fields are rejected, keys
//! serialize in a fixed order, and all validation (qubit ranges, arities,
//! angle presence, edge sanity) runs during conversion to the core types,
//! never silently. Writers emit pretty-printed JSON with a trailing
//! newline so repeated runs are byte-identical.
//!
//! A circuit document:
//!
//! ```json
//! {
//!   "qubits": 9,
//!   "gates": [
//!     { "id": 0, "kind": "toffoli", "controls": [1, 3], "targets": [4] },
//!     { "id": 1, "kind": "cphase", "controls": [0, 5], "targets": [], "angle": { "num": 1, "den_pow2": 3 } }
//!   ]
//! }
//! ```
//!
//! The optional `phase_boundaries` array marks cut positions between
//! independently-orderable gate blocks (the multiplier's two accumulation
//! phases, for example); optimizers must not move gates across a cut.

use crate::circuit::{Angle, Circuit, Gate, GateKind, QubitId};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::ConflictGraph;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Gate kind names as they appear on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindDoc {
    /// Two controls, one target, X-type.
    Toffoli,
    /// One control, one target, X-type.
    Cnot,
    /// Any controls, one target, X-type.
    Mcx,
    /// Two referenced qubits, diagonal.
    Cphase,
    /// Three referenced qubits, diagonal.
    Ccphase,
    /// One or more referenced qubits, diagonal.
    Mcphase,
}

impl From<GateKind> for KindDoc {
    fn from(kind: GateKind) -> KindDoc {
        match kind {
            GateKind::Toffoli => KindDoc::Toffoli,
            GateKind::Cnot => KindDoc::Cnot,
            GateKind::MultiControlledX => KindDoc::Mcx,
            GateKind::ControlledPhase => KindDoc::Cphase,
            GateKind::DoublyControlledPhase => KindDoc::Ccphase,
            GateKind::MultiControlledPhase => KindDoc::Mcphase,
        }
    }
}

impl From<KindDoc> for GateKind {
    fn from(kind: KindDoc) -> GateKind {
        match kind {
            KindDoc::Toffoli => GateKind::Toffoli,
            KindDoc::Cnot => GateKind::Cnot,
            KindDoc::Mcx => GateKind::MultiControlledX,
            KindDoc::Cphase => GateKind::ControlledPhase,
            KindDoc::Ccphase => GateKind::DoublyControlledPhase,
            KindDoc::Mcphase => GateKind::MultiControlledPhase,
        }
    }
}

/// One gate on the wire. `angle` is present exactly for phase kinds;
/// [`GateDoc::into_gate`] enforces that along with every other gate rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateDoc {
    /// Unique id within the circuit.
    pub id: u32,
    /// Kind name.
    pub kind: KindDoc,
    /// Control qubits (for phase kinds: the whole referenced set).
    pub controls: Vec<u32>,
    /// Target qubits (empty for phase kinds).
    pub targets: Vec<u32>,
    /// Rotation angle, phase kinds only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<Angle>,
}

impl GateDoc {
    /// Lowers a core gate to its document form (qubits come out sorted,
    /// the core type's canonical order).
    pub fn from_gate(gate: &Gate) -> GateDoc {
        GateDoc {
            id: gate.id(),
            kind: gate.kind().into(),
            controls: gate.controls().iter().map(|q| q.0).collect(),
            targets: gate.targets().iter().map(|q| q.0).collect(),
            angle: gate.angle(),
        }
    }

    /// Validates and converts to the core type.
    pub fn into_gate(self) -> Result<Gate> {
        Gate::new(
            self.id,
            self.kind.into(),
            self.controls.into_iter().map(QubitId).collect(),
            self.targets.into_iter().map(QubitId).collect(),
            self.angle,
        )
    }
}

/// A circuit on the wire: wire count, gates in circuit order, and optional
/// phase cuts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDoc {
    /// Number of wires.
    pub qubits: u32,
    /// Gates in execution order.
    pub gates: Vec<GateDoc>,
    /// Optional ascending cut positions; gates may not be reordered across
    /// a cut. A cut at position `b` separates `gates[..b]` from
    /// `gates[b..]`, so valid positions are `1..len`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase_boundaries: Option<Vec<u32>>,
}

impl CircuitDoc {
    /// Lowers a core circuit (no phase cuts).
    pub fn from_circuit(circuit: &Circuit) -> CircuitDoc {
        CircuitDoc {
            qubits: circuit.qubit_count(),
            gates: circuit.gates().iter().map(GateDoc::from_gate).collect(),
            phase_boundaries: None,
        }
    }

    /// Lowers a core circuit with phase cuts at the given positions.
    pub fn from_circuit_with_boundaries(circuit: &Circuit, boundaries: Vec<u32>) -> CircuitDoc {
        CircuitDoc {
            qubits: circuit.qubit_count(),
            gates: circuit.gates().iter().map(GateDoc::from_gate).collect(),
            phase_boundaries: Some(boundaries),
        }
    }

    /// Validates and converts to the core circuit plus the cut list, which
    /// must be strictly ascending with every cut splitting the gate list
    /// into non-empty parts.
    pub fn into_parts(self) -> Result<(Circuit, Option<Vec<u32>>)> {
        let gate_count = self.gates.len();
        if let Some(bounds) = &self.phase_boundaries {
            let mut prev = 0u32;
            for &b in bounds {
                if b == 0 || b as usize >= gate_count || b <= prev {
                    return Err(Error::BadPhaseBoundary {
                        boundary: b,
                        gates: gate_count,
                    });
                }
                prev = b;
            }
        }
        let gates: Result<Vec<Gate>> = self.gates.into_iter().map(GateDoc::into_gate).collect();
        let circuit = Circuit::new(self.qubits, gates?)?;
        Ok((circuit, self.phase_boundaries))
    }

    /// [`CircuitDoc::into_parts`] for callers that ignore phase cuts.
    pub fn into_circuit(self) -> Result<Circuit> {
        Ok(self.into_parts()?.0)
    }
}

/// A conflict graph on the wire. Edges are `[a, b]` pairs with `a < b`,
/// sorted lexicographically; vertex `i` corresponds to gate id `i` (the
/// file format does not carry gate metadata).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    /// Number of vertices.
    pub vertices: u32,
    /// Undirected edges, each as a two-element array.
    pub edges: Vec<(u32, u32)>,
}

impl GraphDoc {
    /// Lowers a core graph (edges come out sorted and deduplicated, the
    /// core type's canonical order).
    pub fn from_graph(graph: &ConflictGraph) -> GraphDoc {
        GraphDoc {
            vertices: graph.vertex_count() as u32,
            edges: graph.edges(),
        }
    }

    /// Validates (range, self-loops, duplicates) and converts.
    pub fn into_graph(self) -> Result<ConflictGraph> {
        ConflictGraph::from_edges(self.vertices, &self.edges)
    }
}

/// A coloring on the wire: one color per vertex plus the declared count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDoc {
    /// Color of vertex `i` at index `i`, colors in `1..=count`.
    pub colors: Vec<u32>,
    /// Number of distinct colors.
    pub count: u32,
}

impl ColoringDoc {
    /// Lowers a core coloring.
    pub fn from_coloring(coloring: &Coloring) -> ColoringDoc {
        ColoringDoc {
            colors: coloring.as_slice().to_vec(),
            count: coloring.color_count(),
        }
    }

    /// Validates contiguity and the declared count, then converts.
    pub fn into_coloring(self) -> Result<Coloring> {
        let coloring = Coloring::new(self.colors)?;
        if coloring.color_count() != self.count {
            return Err(Error::BadParameter(format!(
                "coloring declares count {} but uses {} colors",
                self.count,
                coloring.color_count()
            )));
        }
        Ok(coloring)
    }
}

/// Serializes any document in the canonical on-disk form: pretty-printed,
/// two-space indent, trailing newline.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}

/// Reads and parses a JSON document, wrapping failures with the path.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.display().to_string(),
        source,
    })
}

/// Writes a document in canonical form, wrapping failures with the path.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write_text(path, &to_canonical_string(value))
}

/// Writes plain text (DOT, CSV), wrapping failures with the path.
pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::QubitDisjoint;
    use crate::graph::construct_graph;

    fn sample_circuit() -> Circuit {
        Circuit::new(
            9,
            vec![
                Gate::toffoli(0, 1, 3, 4).unwrap(),
                Gate::cphase(
                    1,
                    0,
                    5,
                    Angle {
                        num: 1,
                        den_pow2: 3,
                    },
                )
                .unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn canonical_compact_form_is_stable() {
        let doc = CircuitDoc::from_circuit(&sample_circuit());
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            json,
            "{\"qubits\":9,\"gates\":[\
             {\"id\":0,\"kind\":\"toffoli\",\"controls\":[1,3],\"targets\":[4]},\
             {\"id\":1,\"kind\":\"cphase\",\"controls\":[0,5],\"targets\":[],\
             \"angle\":{\"num\":1,\"den_pow2\":3}}]}"
        );
    }

    #[test]
    fn circuit_documents_round_trip() {
        let circuit = sample_circuit();
        let doc = CircuitDoc::from_circuit(&circuit);
        let text = to_canonical_string(&doc);
        assert!(text.ends_with('\n'));
        let parsed: CircuitDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.into_circuit().unwrap(), circuit);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let with_extra = "{\"qubits\":1,\"gates\":[],\"comment\":\"hi\"}";
        assert!(serde_json::from_str::<CircuitDoc>(with_extra).is_err());
        let gate_extra = "{\"qubits\":2,\"gates\":[{\"id\":0,\"kind\":\"cnot\",\
                          \"controls\":[0],\"targets\":[1],\"label\":\"x\"}]}";
        assert!(serde_json::from_str::<CircuitDoc>(gate_extra).is_err());
        let angle_extra = "{\"num\":1,\"den_pow2\":2,\"units\":\"rad\"}";
        assert!(serde_json::from_str::<Angle>(angle_extra).is_err());
    }

    #[test]
    fn gate_validation_runs_on_conversion() {
        // A cphase without an angle parses as a document but fails to
        // become a gate.
        let doc: CircuitDoc = serde_json::from_str(
            "{\"qubits\":2,\"gates\":[{\"id\":0,\"kind\":\"cphase\",\
             \"controls\":[0,1],\"targets\":[]}]}",
        )
        .unwrap();
        assert!(matches!(
            doc.into_circuit(),
            Err(Error::AngleMismatch { gate_id: 0, .. })
        ));
        // Out-of-range qubit.
        let doc: CircuitDoc = serde_json::from_str(
            "{\"qubits\":2,\"gates\":[{\"id\":0,\"kind\":\"cnot\",\
             \"controls\":[0],\"targets\":[5]}]}",
        )
        .unwrap();
        assert!(matches!(
            doc.into_circuit(),
            Err(Error::QubitOutOfRange { qubit: 5, .. })
        ));
    }

    #[test]
    fn phase_boundaries_must_split_properly() {
        let circuit = sample_circuit();
        let ok = CircuitDoc::from_circuit_with_boundaries(&circuit, vec![1]);
        let text = to_canonical_string(&ok);
        assert!(text.contains("phase_boundaries"));
        let (_, bounds) = serde_json::from_str::<CircuitDoc>(&text)
            .unwrap()
            .into_parts()
            .unwrap();
        assert_eq!(bounds, Some(vec![1]));

        for bad in [vec![0], vec![2], vec![1, 1], vec![5]] {
            let doc = CircuitDoc::from_circuit_with_boundaries(&circuit, bad);
            assert!(matches!(
                doc.into_parts(),
                Err(Error::BadPhaseBoundary { .. })
            ));
        }
        // Absent boundaries stay absent on the wire.
        let plain = to_canonical_string(&CircuitDoc::from_circuit(&circuit));
        assert!(!plain.contains("phase_boundaries"));
    }

    #[test]
    fn graph_documents_round_trip_and_validate() {
        let graph = construct_graph(&sample_circuit(), &QubitDisjoint);
        let doc = GraphDoc::from_graph(&graph);
        assert_eq!(doc.vertices, 2);
        assert_eq!(doc.edges, vec![]);

        let parsed: GraphDoc =
            serde_json::from_str("{\"vertices\":3,\"edges\":[[0,1],[1,2]]}").unwrap();
        let graph = parsed.into_graph().unwrap();
        assert_eq!(graph.edge_count(), 2);

        let bad: GraphDoc =
            serde_json::from_str("{\"vertices\":2,\"edges\":[[0,0]]}").unwrap();
        assert!(matches!(bad.into_graph(), Err(Error::SelfLoop(0))));
        let dup: GraphDoc =
            serde_json::from_str("{\"vertices\":3,\"edges\":[[0,1],[1,0]]}").unwrap();
        assert!(matches!(dup.into_graph(), Err(Error::DuplicateEdge { .. })));
    }

    #[test]
    fn coloring_documents_validate_the_count() {
        let doc: ColoringDoc =
            serde_json::from_str("{\"colors\":[1,2,1],\"count\":2}").unwrap();
        let coloring = doc.into_coloring().unwrap();
        assert_eq!(coloring.color_count(), 2);

        let wrong: ColoringDoc =
            serde_json::from_str("{\"colors\":[1,2,1],\"count\":3}").unwrap();
        assert!(wrong.into_coloring().is_err());
        let gap: ColoringDoc =
            serde_json::from_str("{\"colors\":[1,3],\"count\":2}").unwrap();
        assert!(gap.into_coloring().is_err());
    }

    #[test]
    fn file_helpers_carry_path_context() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("circuit.json");
        let doc = CircuitDoc::from_circuit(&sample_circuit());
        write_json(&path, &doc).unwrap();
        let back: CircuitDoc = read_json(&path).unwrap();
        assert_eq!(back, doc);

        let missing = dir.path().join("absent.json");
        match read_json::<CircuitDoc>(&missing) {
            Err(Error::Io { path, .. }) => assert!(path.contains("absent.json")),
            other => panic!("expected an Io error, got {other:?}"),
        }

        std::fs::write(&path, "{not json").unwrap();
        match read_json::<CircuitDoc>(&path) {
            Err(Error::Json { path, .. }) => assert!(path.contains("circuit.json")),
            other => panic!("expected a Json error, got {other:?}"),
        }
    }
}
