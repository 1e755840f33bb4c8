//! Path-sum amplitudes.
//!
//! The amplitude of going from `start` to `end` through a list of steps is
//! the sum, over every assignment of intermediate states, of the product of
//! the per-step transition amplitudes. A transform step branches to all
//! `N` states with amplitude `±1/sqrt(N)` from the sign rule; a phase flip
//! is diagonal and contributes a single branch of weight `±1`.
//!
//! Enumeration is exponential and only meant to cross-check the vector
//! engine on small registers.

use std::collections::BTreeSet;

use crate::amplitude::{AmplitudeVector, BasisIndex};
use crate::error::{Error, Result};
use crate::transforms::{invert_phase_zero, walsh_hadamard_fast, wh_sign};

/// Upper bound on enumerated leaf paths.
pub const MAX_PATHS: u128 = 1 << 26;

/// Register width accepted by [`verify_against_matrix`].
pub const MAX_VERIFY_QUBITS: u32 = 4;

/// Step count accepted by [`verify_against_matrix`].
pub const MAX_VERIFY_STEPS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOp {
    WalshHadamard,
    FlipMarked(BTreeSet<BasisIndex>),
    FlipZero,
}

impl StepOp {
    fn branching(&self, n: u32) -> u128 {
        match self {
            StepOp::WalshHadamard => 1u128 << n,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    /// State at every step boundary, `start` first and `end` last.
    pub states: Vec<BasisIndex>,
    pub amplitude: f64,
}

/// Steps of the search program: one transform of `|0>`, then `iterations`
/// repetitions of flip-marked, transform, flip-zero, transform.
pub fn grover_program<I>(marked: I, iterations: usize) -> Vec<StepOp>
where
    I: IntoIterator<Item = BasisIndex>,
{
    let marked: BTreeSet<_> = marked.into_iter().collect();
    let mut steps = vec![StepOp::WalshHadamard];
    for _ in 0..iterations {
        steps.extend([
            StepOp::FlipMarked(marked.clone()),
            StepOp::WalshHadamard,
            StepOp::FlipZero,
            StepOp::WalshHadamard,
        ]);
    }
    steps
}

/// Number of complete paths from a fixed start when the end state is free.
pub fn path_count(n: u32, steps: &[StepOp]) -> u128 {
    steps
        .iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s.branching(n)))
}

/// Number of paths from a fixed start to a fixed end.
pub fn paths_to_end_count(n: u32, steps: &[StepOp]) -> u128 {
    match steps.split_last() {
        Some((_, init)) => path_count(n, init),
        None => 1,
    }
}

struct Enumerator<'a> {
    n: u32,
    scale: f64,
    steps: &'a [StepOp],
    end: BasisIndex,
}

impl Enumerator<'_> {
    fn transition(&self, step: &StepOp, from: BasisIndex, to: BasisIndex) -> f64 {
        match step {
            StepOp::WalshHadamard => f64::from(wh_sign(to, from)) * self.scale,
            StepOp::FlipMarked(set) if from == to => {
                if set.contains(&from) {
                    -1.0
                } else {
                    1.0
                }
            }
            StepOp::FlipZero if from == to => {
                if from == 0 {
                    -1.0
                } else {
                    1.0
                }
            }
            _ => 0.0,
        }
    }

    /// Depth-first walk; `visit` sees every complete path ending at `end`.
    fn walk<F>(&self, depth: usize, states: &mut Vec<BasisIndex>, product: f64, visit: &mut F)
    where
        F: FnMut(&[BasisIndex], f64),
    {
        let from = *states.last().expect("path has a start");
        let step = &self.steps[depth];
        if depth + 1 == self.steps.len() {
            let amp = product * self.transition(step, from, self.end);
            states.push(self.end);
            visit(states, amp);
            states.pop();
            return;
        }
        match step {
            StepOp::WalshHadamard => {
                for to in 0..1usize << self.n {
                    states.push(to);
                    self.walk(
                        depth + 1,
                        states,
                        product * self.transition(step, from, to),
                        visit,
                    );
                    states.pop();
                }
            }
            _ => {
                states.push(from);
                self.walk(
                    depth + 1,
                    states,
                    product * self.transition(step, from, from),
                    visit,
                );
                states.pop();
            }
        }
    }
}

fn enumerate<F>(
    n: u32,
    steps: &[StepOp],
    start: BasisIndex,
    end: BasisIndex,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[BasisIndex], f64),
{
    if n == 0 || n > 26 {
        return Err(Error::domain(format!(
            "path sums need 1..=26 qubits, got {n}"
        )));
    }
    let len = 1usize << n;
    if start >= len || end >= len {
        return Err(Error::domain(format!(
            "path endpoints ({start}, {end}) out of range for N = {len}"
        )));
    }
    for s in steps {
        if let StepOp::FlipMarked(set) = s {
            if let Some(&r) = set.iter().find(|&&r| r >= len) {
                return Err(Error::domain(format!(
                    "marked index {r} out of range for N = {len}"
                )));
            }
        }
    }
    let leaves = paths_to_end_count(n, steps);
    if leaves > MAX_PATHS {
        return Err(Error::resource(format!(
            "{leaves} paths exceeds the enumeration guard of {MAX_PATHS}"
        )));
    }
    if steps.is_empty() {
        visit(&[start], if start == end { 1.0 } else { 0.0 });
        return Ok(());
    }
    let e = Enumerator {
        n,
        scale: 1.0 / (len as f64).sqrt(),
        steps,
        end,
    };
    let mut states = Vec::with_capacity(steps.len() + 1);
    states.push(start);
    e.walk(0, &mut states, 1.0, &mut visit);
    Ok(())
}

/// Transition amplitude from `start` to `end` by full path enumeration.
pub fn path_amplitude(n: u32, steps: &[StepOp], start: BasisIndex, end: BasisIndex) -> Result<f64> {
    let mut total = 0.0;
    enumerate(n, steps, start, end, |_, amp| total += amp)?;
    Ok(total)
}

/// Every path from `start` to `end` with its amplitude, in enumeration order.
pub fn paths(n: u32, steps: &[StepOp], start: BasisIndex, end: BasisIndex) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    enumerate(n, steps, start, end, |states, amplitude| {
        out.push(Path {
            states: states.to_vec(),
            amplitude,
        })
    })?;
    Ok(out)
}

/// Runs `steps` on `|0>` with the vector engine.
pub fn matrix_amplitudes(n: u32, steps: &[StepOp]) -> Result<AmplitudeVector> {
    let mut v = AmplitudeVector::basis_state(n, 0)?;
    for s in steps {
        match s {
            StepOp::WalshHadamard => walsh_hadamard_fast(&mut v),
            StepOp::FlipMarked(set) => v.apply_phase_flip(|r| set.contains(&r)),
            StepOp::FlipZero => invert_phase_zero(&mut v),
        }
    }
    Ok(v)
}

/// Largest deviation, over all end states, between the path sum from `|0>`
/// and the vector engine's amplitude.
pub fn verify_against_matrix(n: u32, steps: &[StepOp]) -> Result<f64> {
    if n > MAX_VERIFY_QUBITS {
        return Err(Error::resource(format!(
            "verification is limited to {MAX_VERIFY_QUBITS} qubits, got {n}"
        )));
    }
    if steps.len() > MAX_VERIFY_STEPS {
        return Err(Error::resource(format!(
            "verification is limited to {MAX_VERIFY_STEPS} steps, got {}",
            steps.len()
        )));
    }
    let engine = matrix_amplitudes(n, steps)?;
    let mut worst = 0.0f64;
    for (end, amp) in engine.amplitudes().iter().enumerate() {
        let summed = path_amplitude(n, steps, 0, end)?;
        worst = worst.max((amp - summed).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_paths_to_zero() {
        let steps = &grover_program([2], 1)[..3];
        let ps = paths(2, steps, 0, 0).unwrap();
        assert_eq!(ps.len(), 4);
        let amps: Vec<_> = ps.iter().map(|p| p.amplitude).collect();
        assert_eq!(amps, [0.25, 0.25, -0.25, 0.25]);
        assert_eq!(ps[1].states, [0, 1, 1, 0]);
        assert_eq!(path_amplitude(2, steps, 0, 0).unwrap(), 0.5);
        assert_eq!(paths_to_end_count(2, steps), 4);
    }

    #[test]
    fn diagonal_step() {
        assert_eq!(path_amplitude(2, &[StepOp::FlipZero], 0, 0).unwrap(), -1.0);
        assert_eq!(path_amplitude(2, &[StepOp::FlipZero], 1, 1).unwrap(), 1.0);
        assert_eq!(path_amplitude(2, &[StepOp::FlipZero], 1, 2).unwrap(), 0.0);
    }

    #[test]
    fn transform_twice_is_identity() {
        let steps = [StepOp::WalshHadamard, StepOp::WalshHadamard];
        for end in 0..8 {
            let a = path_amplitude(3, &steps, 5, end).unwrap();
            let expected = if end == 5 { 1.0 } else { 0.0 };
            assert!((a - expected).abs() < 1e-15, "end {end}: {a}");
        }
    }

    #[test]
    fn path_counts() {
        for n in 1..=5 {
            assert_eq!(path_count(n, &[StepOp::WalshHadamard]), 1 << n);
        }
        assert_eq!(path_count(3, &[]), 1);
    }

    #[test]
    fn empty_program() {
        assert_eq!(path_amplitude(2, &[], 1, 1).unwrap(), 1.0);
        assert_eq!(path_amplitude(2, &[], 1, 2).unwrap(), 0.0);
        assert_eq!(verify_against_matrix(3, &[]).unwrap(), 0.0);
    }

    #[test]
    fn guards() {
        let big = vec![StepOp::WalshHadamard; 8];
        assert!(matches!(
            path_amplitude(4, &big, 0, 0),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            verify_against_matrix(5, &[StepOp::WalshHadamard]),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            verify_against_matrix(2, &vec![StepOp::FlipZero; 11]),
            Err(Error::Resource(_))
        ));
        assert!(path_amplitude(2, &[StepOp::FlipZero], 4, 0).is_err());
        assert!(path_amplitude(2, &[StepOp::FlipMarked([7].into())], 0, 0).is_err());
    }

    #[test]
    fn verify_small_programs() {
        assert!(verify_against_matrix(2, &grover_program([2], 1)).unwrap() <= 1e-12);
        assert!(verify_against_matrix(3, &grover_program([6], 2)).unwrap() <= 1e-10);
    }
}
