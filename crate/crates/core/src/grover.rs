//! The search driver.
//!
//! One iteration is the loop body of the quantum search program, in this
//! order: flip the marked states, transform, flip state 0, transform. The
//! register starts as the transform of `|0>`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rand::Rng;

use crate::amplitude::{AmplitudeVector, BasisIndex};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::transforms::{invert_phase_marked, invert_phase_zero, walsh_hadamard_fast};
use crate::{seeded_rng, RNG_ALGORITHM};

/// Labels of the program steps: `i` prepares the register, `ii`..`v` make
/// up one iteration.
pub const STEP_LABELS: [&str; 5] = ["i", "ii", "iii", "iv", "v"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iterations {
    Fixed(u64),
    /// Resolved through [`optimal_iterations`] from the oracle's marked count.
    Auto,
}

#[derive(Debug, Clone)]
pub struct GroverConfig {
    pub n: u32,
    pub oracle: Oracle,
    pub iterations: Iterations,
    pub seed: u64,
    pub trace_every_step: bool,
}

impl GroverConfig {
    pub fn new(n: u32, oracle: Oracle, iterations: Iterations, seed: u64) -> Self {
        Self {
            n,
            oracle,
            iterations,
            seed,
            trace_every_step: false,
        }
    }

    pub fn with_trace(mut self, on: bool) -> Self {
        self.trace_every_step = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub label: String,
    pub state: AmplitudeVector,
}

#[derive(Debug, Clone)]
pub struct SimulationTrace {
    pub n: u32,
    pub seed: u64,
    pub rng_algorithm: &'static str,
    /// Iteration count actually run (after resolving `auto`).
    pub eta: u64,
    /// Every intermediate state when tracing is on, otherwise empty.
    pub steps: Vec<TraceStep>,
    pub final_state: AmplitudeVector,
    pub success_probability: f64,
    pub outcome: BasisIndex,
    pub oracle_evals: u64,
    /// At least half of the states are marked; amplification cannot be
    /// expected to help.
    pub degenerate: bool,
}

fn step_label(step: usize, iteration: u64) -> String {
    if iteration <= 1 {
        STEP_LABELS[step].to_string()
    } else {
        format!("{}.{iteration}", STEP_LABELS[step])
    }
}

fn check_config(n: u32, oracle: &Oracle) -> Result<()> {
    if oracle.qubits() != n {
        return Err(Error::domain(format!(
            "oracle is defined on {} qubits, config asks for {n}",
            oracle.qubits()
        )));
    }
    Ok(())
}

/// The prepared register: the transform applied to `|0>`.
fn initial_state(n: u32) -> Result<AmplitudeVector> {
    let mut v = AmplitudeVector::basis_state(n, 0)?;
    walsh_hadamard_fast(&mut v);
    Ok(v)
}

/// One pass of the loop body; costs exactly one oracle evaluation.
pub fn grover_iteration(v: &mut AmplitudeVector, oracle: &Oracle) -> Result<()> {
    invert_phase_marked(v, oracle)?;
    walsh_hadamard_fast(v);
    invert_phase_zero(v);
    walsh_hadamard_fast(v);
    Ok(())
}

/// Total probability of observing a marked state.
pub fn success_probability(v: &AmplitudeVector, oracle: &Oracle) -> f64 {
    let probs = v.amplitudes();
    oracle
        .marked_states()
        .into_iter()
        .filter_map(|r| probs.get(r))
        .map(|a| a.norm_sqr())
        .sum()
}

/// Iteration count maximizing `sin²((2t + 1)θ)`, `θ = asin(sqrt(k/N))`,
/// within the first oscillation period. Ties go to the smaller count.
pub fn optimal_iterations(state_count: usize, marked_count: usize) -> Result<u64> {
    if marked_count == 0 {
        return Err(Error::domain("at least one state must be marked"));
    }
    if marked_count >= state_count {
        return Err(Error::domain(format!(
            "marked count {marked_count} must be below the state count {state_count}"
        )));
    }
    let theta = (marked_count as f64 / state_count as f64).sqrt().asin();
    let peak = PI / (4.0 * theta) - 0.5;
    let lo = peak.floor().max(0.0);
    let hi = peak.ceil().max(0.0);
    let p = |t: f64| ((2.0 * t + 1.0) * theta).sin().powi(2);
    let best = if p(hi) > p(lo) + 1e-12 { hi } else { lo };
    Ok(best as u64)
}

fn resolve_iterations(config: &GroverConfig) -> Result<(u64, bool)> {
    let states = config.oracle.state_count();
    let marked = config.oracle.marked_count();
    let degenerate = 2 * marked >= states;
    let eta = match config.iterations {
        Iterations::Fixed(t) => t,
        Iterations::Auto if marked == 0 => {
            return Err(Error::domain(
                "cannot pick an iteration count: no state is marked",
            ))
        }
        // every state marked: nothing to amplify
        Iterations::Auto if marked >= states => 0,
        Iterations::Auto => optimal_iterations(states, marked)?,
    };
    Ok((eta, degenerate))
}

/// Runs the full search program and measures the register.
pub fn run_grover(config: &GroverConfig) -> Result<SimulationTrace> {
    check_config(config.n, &config.oracle)?;
    let (eta, degenerate) = resolve_iterations(config)?;
    let oracle = &config.oracle;
    let evals_before = oracle.evaluations();

    let mut steps = Vec::new();
    let mut record = |label: String, v: &AmplitudeVector| {
        if config.trace_every_step {
            steps.push(TraceStep {
                label,
                state: v.clone(),
            });
        }
    };

    let mut v = initial_state(config.n)?;
    record(step_label(0, 1), &v);
    for k in 1..=eta {
        invert_phase_marked(&mut v, oracle)?;
        record(step_label(1, k), &v);
        walsh_hadamard_fast(&mut v);
        record(step_label(2, k), &v);
        invert_phase_zero(&mut v);
        record(step_label(3, k), &v);
        walsh_hadamard_fast(&mut v);
        record(step_label(4, k), &v);
    }

    let success = success_probability(&v, oracle);
    let (outcome, _) = v.measure(&mut seeded_rng(config.seed))?;
    Ok(SimulationTrace {
        n: config.n,
        seed: config.seed,
        rng_algorithm: RNG_ALGORITHM,
        eta,
        steps,
        final_state: v,
        success_probability: success,
        outcome,
        oracle_evals: oracle.evaluations() - evals_before,
        degenerate,
    })
}

/// Exact success probability after each of `0..=t_max` iterations.
/// `config.iterations` and the seed are ignored.
pub fn scan_probabilities(config: &GroverConfig, t_max: u64) -> Result<Vec<(u64, f64)>> {
    if t_max == 0 {
        return Err(Error::domain("max iterations must be at least 1"));
    }
    check_config(config.n, &config.oracle)?;
    let mut v = initial_state(config.n)?;
    let mut series = Vec::with_capacity(t_max as usize + 1);
    series.push((0, success_probability(&v, &config.oracle)));
    for t in 1..=t_max {
        grover_iteration(&mut v, &config.oracle)?;
        series.push((t, success_probability(&v, &config.oracle)));
    }
    Ok(series)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalReport {
    pub state_count: usize,
    pub marked_count: usize,
    pub iterations: u64,
    pub trials: u64,
    pub successes: u64,
    pub empirical: f64,
    /// `1 - (1 - k/N)^iterations`.
    pub analytic: f64,
}

/// Probability that `iterations` independent uniform guesses hit one of
/// `marked_count` states out of `state_count`.
pub fn classical_success(state_count: usize, marked_count: usize, iterations: u64) -> f64 {
    let miss = 1.0 - (marked_count.min(state_count) as f64 / state_count as f64);
    let all_miss = match i32::try_from(iterations) {
        Ok(k) => miss.powi(k),
        Err(_) => miss.powf(iterations as f64),
    };
    1.0 - all_miss
}

/// Fewest guesses for which [`classical_success`] reaches `target`.
pub fn classical_iterations_for(state_count: usize, marked_count: usize, target: f64) -> u64 {
    if target <= 0.0 {
        return 0;
    }
    let miss = 1.0 - marked_count.min(state_count) as f64 / state_count as f64;
    if miss <= 0.0 {
        return 1;
    }
    let mut k = ((1.0 - target).ln() / miss.ln()).ceil().max(0.0) as u64;
    // the logarithm can land one step off either way
    while k > 0 && classical_success(state_count, marked_count, k - 1) >= target {
        k -= 1;
    }
    while classical_success(state_count, marked_count, k) < target {
        k += 1;
    }
    k
}

/// Monte Carlo of the classical guessing loop: draw `r` uniformly
/// `iterations` times and succeed if any draw is marked.
pub fn classical_baseline(
    state_count: usize,
    marked: &BTreeSet<BasisIndex>,
    iterations: u64,
    trials: u64,
    seed: u64,
) -> Result<ClassicalReport> {
    if state_count == 0 {
        return Err(Error::domain("state count must be at least 1"));
    }
    if trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    if let Some(&r) = marked.iter().find(|&&r| r >= state_count) {
        return Err(Error::domain(format!(
            "marked index {r} out of range for N = {state_count}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut successes = 0u64;
    for _ in 0..trials {
        let hit = (0..iterations).any(|_| marked.contains(&rng.random_range(0..state_count)));
        successes += u64::from(hit);
    }
    Ok(ClassicalReport {
        state_count,
        marked_count: marked.len(),
        iterations,
        trials,
        successes,
        empirical: successes as f64 / trials as f64,
        analytic: classical_success(state_count, marked.len(), iterations),
    })
}
