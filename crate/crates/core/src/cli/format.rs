//! On-disk formats: JSON trace and circuit documents, CSV scan series.

use serde::{Deserialize, Serialize};

use crate::amplitude::{AmplitudeVector, Complex, NORM_TOLERANCE};
use crate::error::{Error, Result};
use crate::grover::SimulationTrace;
use crate::reversible::{Gate, GateKind, ReversibleCircuit};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RngInfo {
    pub algorithm: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStepDocument {
    pub label: String,
    /// `[re, im]` per basis state, index 0 first.
    pub amplitudes: Vec<[f64; 2]>,
}

/// Serialized [`SimulationTrace`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub format_version: String,
    pub n: u32,
    pub rng: RngInfo,
    pub steps: Vec<TraceStepDocument>,
    pub outcome: u64,
    pub oracle_evals: u64,
}

impl TraceDocument {
    /// Uses the recorded steps, or the final state alone (labelled `final`)
    /// when the run was not traced.
    pub fn from_trace(trace: &SimulationTrace) -> Self {
        let encode = |v: &AmplitudeVector| v.amplitudes().iter().map(|a| [a.re, a.im]).collect();
        let steps = if trace.steps.is_empty() {
            vec![TraceStepDocument {
                label: "final".into(),
                amplitudes: encode(&trace.final_state),
            }]
        } else {
            trace
                .steps
                .iter()
                .map(|s| TraceStepDocument {
                    label: s.label.clone(),
                    amplitudes: encode(&s.state),
                })
                .collect()
        };
        Self {
            format_version: FORMAT_VERSION.into(),
            n: trace.n,
            rng: RngInfo {
                algorithm: trace.rng_algorithm.into(),
                seed: trace.seed,
            },
            steps,
            outcome: trace.outcome as u64,
            oracle_evals: trace.oracle_evals,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "format_version: expected \"{FORMAT_VERSION}\", found \"{}\"",
                self.format_version
            )));
        }
        for (i, s) in self.steps.iter().enumerate() {
            self.step_state(i)
                .map_err(|e| Error::Parse(format!("steps[{i}] ({}): {e}", s.label)))?;
        }
        Ok(())
    }

    /// Decodes step `i` into a vector, checking its length and norm.
    pub fn step_state(&self, i: usize) -> Result<AmplitudeVector> {
        let step = self
            .steps
            .get(i)
            .ok_or_else(|| Error::domain(format!("no step {i}")))?;
        let expected = 1usize.checked_shl(self.n).unwrap_or(0);
        if step.amplitudes.len() != expected {
            return Err(Error::Parse(format!(
                "amplitudes: expected {expected} entries for n = {}, found {}",
                self.n,
                step.amplitudes.len()
            )));
        }
        let amps = step
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex::new(re, im))
            .collect();
        AmplitudeVector::from_amplitudes(amps).map_err(|e| match e {
            Error::State(msg) => {
                Error::Parse(format!("amplitudes: {msg} (tolerance {NORM_TOLERANCE})"))
            }
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateType {
    Not,
    Cnot,
    Toffoli,
}

impl From<GateType> for GateKind {
    fn from(t: GateType) -> Self {
        match t {
            GateType::Not => GateKind::Not,
            GateType::Cnot => GateKind::Cnot,
            GateType::Toffoli => GateKind::Toffoli,
        }
    }
}

impl From<GateKind> for GateType {
    fn from(k: GateKind) -> Self {
        match k {
            GateKind::Not => GateType::Not,
            GateKind::Cnot => GateType::Cnot,
            GateKind::Toffoli => GateType::Toffoli,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateDocument {
    #[serde(rename = "type")]
    pub kind: GateType,
    pub target: usize,
    #[serde(default)]
    pub controls: Vec<usize>,
}

/// Serialized [`ReversibleCircuit`]. Wire 0 is the top schematic line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDocument {
    pub format_version: String,
    pub wires: usize,
    pub gates: Vec<GateDocument>,
}

impl CircuitDocument {
    pub fn from_circuit(c: &ReversibleCircuit) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            wires: c.wires(),
            gates: c
                .gates()
                .iter()
                .map(|g| GateDocument {
                    kind: g.kind().into(),
                    target: g.target(),
                    controls: g.controls().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_circuit(&self) -> Result<ReversibleCircuit> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "format_version: expected \"{FORMAT_VERSION}\", found \"{}\"",
                self.format_version
            )));
        }
        let gates = self
            .gates
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let gate = Gate::new(g.kind.into(), g.target, &g.controls)
                    .map_err(|e| Error::Parse(format!("gates[{i}]: {e}")))?;
                gate.check(self.wires)
                    .map_err(|e| Error::Parse(format!("gates[{i}]: {e}")))?;
                Ok(gate)
            })
            .collect::<Result<Vec<_>>>()?;
        ReversibleCircuit::new(self.wires, gates).map_err(|e| Error::Parse(format!("wires: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Parses a circuit document straight into a validated circuit.
pub fn parse_circuit(text: &str) -> Result<ReversibleCircuit> {
    CircuitDocument::from_json(text)?.to_circuit()
}

/// Decimal rendering with `digits` significant digits. Magnitudes outside
/// `[1e-5, 1e15)` fall back to scientific notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // rounding can bump the exponent (9.99.. -> 10.0), so read it back from
    // the scientific rendering rather than from log10
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if !(-5..15).contains(&exp) {
        return sci;
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// CSV with header `t,success_probability`, 15 significant digits.
pub fn scan_to_csv(series: &[(u64, f64)]) -> String {
    let mut out = String::from("t,success_probability\n");
    for (t, p) in series {
        out.push_str(&format!("{t},{}\n", format_significant(*p, 15)));
    }
    out
}

/// Parses the output of [`scan_to_csv`].
pub fn parse_scan_csv(text: &str) -> Result<Vec<(u64, f64)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("t,success_probability") => {}
        other => {
            return Err(Error::Parse(format!(
                "line 1: expected header t,success_probability, found {other:?}"
            )))
        }
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let bad = || Error::Parse(format!("line {}: malformed row {line:?}", i + 2));
            let (t, p) = line.split_once(',').ok_or_else(bad)?;
            Ok((t.parse().map_err(|_| bad())?, p.parse().map_err(|_| bad())?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reversible::adder_circuit;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.25, 15), "0.250000000000000");
        assert_eq!(format_significant(1.0, 15), "1.00000000000000");
        assert_eq!(format_significant(0.0, 3), "0.00");
        assert_eq!(
            format_significant(0.999_999_999_999_999_9, 15),
            "1.00000000000000"
        );
        assert_eq!(format_significant(123.456, 4), "123.5");
        assert_eq!(format_significant(1.5e-9, 3), "1.50e-9");
    }

    #[test]
    fn circuit_document_round_trip() {
        let doc = CircuitDocument::from_circuit(&adder_circuit());
        let text = doc.to_json();
        assert!(text.contains("\"TOFFOLI\""));
        let back = CircuitDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_circuit().unwrap(), adder_circuit());
    }

    #[test]
    fn circuit_diagnostics() {
        let bad_type = r#"{"format_version":"1","wires":2,"gates":[{"type":"NAND","target":1,"controls":[0]}]}"#;
        let err = parse_circuit(bad_type).unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");

        let bad_wire = r#"{"format_version":"1","wires":2,"gates":[{"type":"CNOT","target":2,"controls":[0]}]}"#;
        let err = parse_circuit(bad_wire).unwrap_err().to_string();
        assert!(err.starts_with("gates[0]"), "{err}");

        let bad_controls = r#"{"format_version":"1","wires":3,"gates":[{"type":"TOFFOLI","target":2,"controls":[0]}]}"#;
        assert!(parse_circuit(bad_controls)
            .unwrap_err()
            .to_string()
            .contains("gates[0]"));

        let bad_version = r#"{"format_version":"2","wires":1,"gates":[]}"#;
        assert!(parse_circuit(bad_version)
            .unwrap_err()
            .to_string()
            .contains("format_version"));
    }

    #[test]
    fn scan_csv_round_trip() {
        let series = vec![(0, 0.25), (1, 1.0), (2, 0.25)];
        let csv = scan_to_csv(&series);
        assert!(csv.starts_with("t,success_probability\n0,0.250000000000000\n"));
        assert_eq!(parse_scan_csv(&csv).unwrap(), series);
        assert!(parse_scan_csv("t,p\n").is_err());
        assert!(parse_scan_csv("t,success_probability\n1;2\n").is_err());
    }

    #[test]
    fn trace_document_rejects_bad_steps() {
        let text = r#"{"format_version":"1","n":1,"rng":{"algorithm":"ChaCha8Rng","seed":0},
            "steps":[{"label":"i","amplitudes":[[1.0,0.0],[1.0,0.0]]}],"outcome":0,"oracle_evals":0}"#;
        let err = TraceDocument::from_json(text).unwrap_err().to_string();
        assert!(err.contains("steps[0]"), "{err}");

        let short = text.replace("[[1.0,0.0],[1.0,0.0]]", "[[1.0,0.0]]");
        assert!(TraceDocument::from_json(&short).is_err());
    }
}
