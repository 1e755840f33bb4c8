//! Reversible classical logic: NOT, CNOT and Toffoli gates, circuits built
//! from them, and the bridge to amplitude-vector permutations.
//!
//! Wire 0 is the top line of a schematic. When a bit vector is packed into
//! a [`BasisIndex`], wire `i` becomes bit `i` (wire 0 is the least
//! significant bit).

use std::fmt;

use crate::amplitude::{qubit_cap, BasisIndex};
use crate::error::{Error, Result};

/// Largest width accepted by the exhaustive checks.
pub const MAX_EXHAUSTIVE_WIRES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Not,
    Cnot,
    Toffoli,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "TOFFOLI",
        }
    }

    pub fn control_count(self) -> usize {
        match self {
            GateKind::Not => 0,
            GateKind::Cnot => 1,
            GateKind::Toffoli => 2,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `A -> NOT A`, `(A, B) -> (A, A XOR B)`, `(A, B, C) -> (A, B, AB XOR C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Not { target: usize },
    Cnot { control: usize, target: usize },
    Toffoli { controls: [usize; 2], target: usize },
}

impl Gate {
    /// Builds a gate from a kind, target and control list, checking the
    /// control count and that no wire appears twice.
    pub fn new(kind: GateKind, target: usize, controls: &[usize]) -> Result<Self> {
        if controls.len() != kind.control_count() {
            return Err(Error::domain(format!(
                "{kind} takes {} control(s), got {}",
                kind.control_count(),
                controls.len()
            )));
        }
        let gate = match kind {
            GateKind::Not => Gate::Not { target },
            GateKind::Cnot => Gate::Cnot {
                control: controls[0],
                target,
            },
            GateKind::Toffoli => Gate::Toffoli {
                controls: [controls[0], controls[1]],
                target,
            },
        };
        gate.check_distinct()?;
        Ok(gate)
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Not { .. } => GateKind::Not,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Toffoli { .. } => GateKind::Toffoli,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Gate::Not { target } | Gate::Cnot { target, .. } | Gate::Toffoli { target, .. } => {
                target
            }
        }
    }

    pub fn controls(&self) -> &[usize] {
        match self {
            Gate::Not { .. } => &[],
            Gate::Cnot { control, .. } => std::slice::from_ref(control),
            Gate::Toffoli { controls, .. } => controls,
        }
    }

    fn check_distinct(&self) -> Result<()> {
        let t = self.target();
        let c = self.controls();
        let clash = c.contains(&t) || (c.len() == 2 && c[0] == c[1]);
        if clash {
            return Err(Error::domain(format!(
                "{} uses wire indices {:?} -> {t} more than once",
                self.kind(),
                c
            )));
        }
        Ok(())
    }

    /// Validates the gate against a circuit of `wires` lines.
    pub fn check(&self, wires: usize) -> Result<()> {
        self.check_distinct()?;
        let max = self
            .controls()
            .iter()
            .copied()
            .chain([self.target()])
            .max()
            .unwrap_or(0);
        if max >= wires {
            return Err(Error::domain(format!(
                "{} touches wire {max}, circuit has {wires} wire(s)",
                self.kind()
            )));
        }
        Ok(())
    }

    /// Gate action on a packed word (wire `i` = bit `i`).
    #[inline]
    pub fn apply_word(&self, word: u64) -> u64 {
        let bit = |w: usize| (word >> w) & 1;
        let flip = match *self {
            Gate::Not { .. } => 1,
            Gate::Cnot { control, .. } => bit(control),
            Gate::Toffoli { controls, .. } => bit(controls[0]) & bit(controls[1]),
        };
        word ^ (flip << self.target())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Not { target } => write!(f, "NOT({target})"),
            Gate::Cnot { control, target } => write!(f, "CNOT({control} -> {target})"),
            Gate::Toffoli { controls, target } => {
                write!(f, "TOFFOLI({}, {} -> {target})", controls[0], controls[1])
            }
        }
    }
}

/// Applies one gate to a bit vector.
pub fn apply_gate(bits: &[bool], gate: &Gate) -> Result<Vec<bool>> {
    gate.check(bits.len())?;
    let mut out = bits.to_vec();
    let fire = gate.controls().iter().all(|&c| bits[c]);
    if fire {
        out[gate.target()] ^= true;
    }
    Ok(out)
}

/// Packs bits so that `bits[i]` becomes bit `i`.
pub fn pack_bits(bits: &[bool]) -> u64 {
    bits.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
}

pub fn unpack_bits(word: u64, width: usize) -> Vec<bool> {
    (0..width).map(|i| (word >> i) & 1 == 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReversibleCircuit {
    wires: usize,
    gates: Vec<Gate>,
}

impl ReversibleCircuit {
    pub fn new(wires: usize, gates: Vec<Gate>) -> Result<Self> {
        if wires > 64 {
            return Err(Error::domain(format!(
                "{wires} wires exceeds the limit of 64"
            )));
        }
        for (i, g) in gates.iter().enumerate() {
            g.check(wires)
                .map_err(|e| Error::domain(format!("gate {i}: {e}")))?;
        }
        Ok(Self { wires, gates })
    }

    pub fn wires(&self) -> usize {
        self.wires
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.check(self.wires)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Runs the gates in list order.
    pub fn run(&self, input: &[bool]) -> Result<Vec<bool>> {
        if input.len() != self.wires {
            return Err(Error::domain(format!(
                "width mismatch: input has {} bit(s), circuit has {} wire(s)",
                input.len(),
                self.wires
            )));
        }
        Ok(unpack_bits(self.run_word(pack_bits(input)), self.wires))
    }

    pub fn run_word(&self, word: u64) -> u64 {
        self.gates.iter().fold(word, |w, g| g.apply_word(w))
    }

    /// Every gate is an involution, so the inverse is the reversed list.
    pub fn inverse(&self) -> ReversibleCircuit {
        Self {
            wires: self.wires,
            gates: self.gates.iter().rev().copied().collect(),
        }
    }

    /// Output word for every input word, indexed by input.
    pub fn truth_table(&self) -> Result<Vec<u64>> {
        if self.wires > MAX_EXHAUSTIVE_WIRES {
            return Err(Error::resource(format!(
                "truth table of {} wires exceeds the limit of {MAX_EXHAUSTIVE_WIRES}",
                self.wires
            )));
        }
        Ok((0..1u64 << self.wires).map(|w| self.run_word(w)).collect())
    }

    /// Exhaustive check that the circuit permutes `{0,1}^wires`.
    pub fn is_reversible(&self) -> Result<bool> {
        Ok(is_permutation(&self.truth_table()?))
    }

    /// Lifts the circuit to a basis-state relabeling `r -> run(r)`.
    pub fn to_permutation(&self) -> Result<Vec<BasisIndex>> {
        let cap = qubit_cap() as usize;
        if self.wires > cap {
            return Err(Error::resource(format!(
                "{} wires exceeds the qubit cap of {cap}",
                self.wires
            )));
        }
        if self.wires == 0 {
            return Err(Error::domain("a circuit with no wires has no state space"));
        }
        let table = self.truth_table()?;
        if !is_permutation(&table) {
            return Err(Error::Internal(
                "circuit truth table is not a bijection".into(),
            ));
        }
        Ok(table.into_iter().map(|w| w as BasisIndex).collect())
    }
}

/// Alias for [`ReversibleCircuit::run`].
pub fn run_circuit(circuit: &ReversibleCircuit, input: &[bool]) -> Result<Vec<bool>> {
    circuit.run(input)
}

/// Alias for [`ReversibleCircuit::inverse`].
pub fn inverse_circuit(circuit: &ReversibleCircuit) -> ReversibleCircuit {
    circuit.inverse()
}

/// Alias for [`ReversibleCircuit::to_permutation`].
pub fn circuit_to_permutation(circuit: &ReversibleCircuit) -> Result<Vec<BasisIndex>> {
    circuit.to_permutation()
}

/// One-bit adder on wires `(A, B, 0)`: a Toffoli computes the carry into
/// the ancilla, then a CNOT from A turns B into the sum. Output is
/// `(A, SUM, CARRY)`.
pub fn adder_circuit() -> ReversibleCircuit {
    ReversibleCircuit {
        wires: 3,
        gates: vec![
            Gate::Toffoli {
                controls: [0, 1],
                target: 2,
            },
            Gate::Cnot {
                control: 0,
                target: 1,
            },
        ],
    }
}

fn is_permutation(table: &[u64]) -> bool {
    let mut seen = vec![false; table.len()];
    table.iter().all(|&w| {
        usize::try_from(w)
            .ok()
            .and_then(|i| seen.get_mut(i))
            .is_some_and(|s| !std::mem::replace(s, true))
    })
}

/// True iff `table` (outputs indexed by input) is a permutation of all
/// bit vectors of its width. The length must be `2^width`.
pub fn check_bijection(table: &[Vec<bool>]) -> bool {
    let Some(width) = table.first().map(Vec::len) else {
        return false;
    };
    if width >= 64 || table.len() != 1usize << width || table.iter().any(|row| row.len() != width) {
        return false;
    }
    let packed: Vec<u64> = table.iter().map(|row| pack_bits(row)).collect();
    is_permutation(&packed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn toffoli_fires_on_both_controls() {
        let g = Gate::new(GateKind::Toffoli, 2, &[0, 1]).unwrap();
        assert_eq!(apply_gate(&bits("110"), &g).unwrap(), bits("111"));
        assert_eq!(apply_gate(&bits("100"), &g).unwrap(), bits("100"));
    }

    #[test]
    fn cnot_with_control_off() {
        let g = Gate::new(GateKind::Cnot, 1, &[0]).unwrap();
        assert_eq!(apply_gate(&bits("01"), &g).unwrap(), bits("01"));
        assert_eq!(apply_gate(&bits("11"), &g).unwrap(), bits("10"));
    }

    #[test]
    fn gates_are_involutions_on_three_wires() {
        let gates = [
            Gate::new(GateKind::Not, 1, &[]).unwrap(),
            Gate::new(GateKind::Cnot, 2, &[0]).unwrap(),
            Gate::new(GateKind::Toffoli, 0, &[2, 1]).unwrap(),
        ];
        for g in &gates {
            for w in 0..8u64 {
                let input = unpack_bits(w, 3);
                let once = apply_gate(&input, g).unwrap();
                assert_eq!(apply_gate(&once, g).unwrap(), input, "{g}");
            }
        }
    }

    #[test]
    fn bad_gates() {
        assert!(Gate::new(GateKind::Cnot, 1, &[1]).is_err());
        assert!(Gate::new(GateKind::Toffoli, 2, &[0, 0]).is_err());
        assert!(Gate::new(GateKind::Not, 0, &[1]).is_err());
        let g = Gate::new(GateKind::Cnot, 3, &[0]).unwrap();
        assert!(apply_gate(&bits("000"), &g).is_err());
        assert!(ReversibleCircuit::new(3, vec![g]).is_err());
    }

    #[test]
    fn adder_truth_table() {
        let adder = adder_circuit();
        assert_eq!(adder.run(&bits("110")).unwrap(), bits("101"));
        assert_eq!(adder.run(&bits("000")).unwrap(), bits("000"));
        assert_eq!(adder.run(&bits("100")).unwrap(), bits("110"));
        assert_eq!(adder.run(&bits("010")).unwrap(), bits("010"));
        assert_eq!(adder.run(&bits("111")).unwrap(), bits("100"));
        for a in [false, true] {
            for b in [false, true] {
                let out = adder.run(&[a, b, false]).unwrap();
                assert_eq!(out, [a, a ^ b, a & b]);
            }
        }
        assert!(adder.run(&bits("11")).is_err());
    }

    #[test]
    fn swapped_adder_order_is_wrong() {
        // CNOT before the Toffoli overwrites B before the carry is formed
        let c = ReversibleCircuit::new(3, adder_circuit().gates().iter().rev().copied().collect())
            .unwrap();
        assert_ne!(c.run(&bits("110")).unwrap(), bits("101"));
    }

    #[test]
    fn inverses() {
        let adder = adder_circuit();
        let inv = adder.inverse();
        for w in 0..8 {
            assert_eq!(inv.run_word(adder.run_word(w)), w);
        }
        let empty = ReversibleCircuit::new(2, vec![]).unwrap();
        assert_eq!(empty.inverse(), empty);
        let not = ReversibleCircuit::new(1, vec![Gate::Not { target: 0 }]).unwrap();
        assert_eq!(not.inverse(), not);
    }

    #[test]
    fn bijection_checks() {
        let nand: Vec<_> = (0..4u64)
            .map(|w| {
                let (a, b) = (w & 1 == 1, w & 2 == 2);
                vec![a, !(a && b)]
            })
            .collect();
        assert!(!check_bijection(&nand));

        let cnot: Vec<_> = (0..4u64)
            .map(|w| {
                let (a, b) = (w & 1 == 1, w & 2 == 2);
                vec![a, a ^ b]
            })
            .collect();
        assert!(check_bijection(&cnot));

        let identity: Vec<_> = (0..8).map(|w| unpack_bits(w, 3)).collect();
        assert!(check_bijection(&identity));

        assert!(!check_bijection(&[]));
        assert!(!check_bijection(&identity[..7]));
    }

    #[test]
    fn lifted_permutations() {
        let not = ReversibleCircuit::new(1, vec![Gate::Not { target: 0 }]).unwrap();
        assert_eq!(not.to_permutation().unwrap(), [1, 0]);
        let p = adder_circuit().to_permutation().unwrap();
        let mut sorted = p.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..8).collect::<Vec<_>>());
        assert!(ReversibleCircuit::new(0, vec![])
            .unwrap()
            .to_permutation()
            .is_err());
    }
}
