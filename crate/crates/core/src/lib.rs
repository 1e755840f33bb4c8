//! Quantum search on a classical desk.
//!
//! `groversim` simulates the quantum search algorithm on a dense state
//! vector and ships the pieces needed to check it from several directions:
//!
//! - [`amplitude`]: the wavefunction ([`AmplitudeVector`]), basis and
//!   uniform states, probabilities, seeded measurement with collapse, phase
//!   flips and permutations.
//! - [`transforms`]: the Walsh-Hadamard transform three ways (sign rule,
//!   naive matrix, in-place butterfly) and the two phase-inversion steps of
//!   the search loop.
//! - [`grover`]: the search driver with step-by-step traces, the optimal
//!   iteration count, exact oscillation scans and the classical
//!   random-guessing baseline.
//! - [`pathsum`]: an independent amplitude oracle that sums products of
//!   per-step transition amplitudes over every intermediate path.
//! - [`reversible`]: NOT / CNOT / Toffoli circuits, the one-bit adder,
//!   bijection checks and lifting circuits onto amplitude vectors.
//! - [`cli`]: trace, circuit and scan file formats plus the `groversim`
//!   command surface.
//!
//! The runnable programs under `examples/` walk through each capability:
//!
//! ```bash
//! cargo run --example four_state_trace
//! cargo run --example sign_table
//! cargo run --example path_sum
//! cargo run --example oscillation
//! cargo run --release --example speedup
//! cargo run --example classical_baseline
//! cargo run --example reversible_adder
//! cargo run --example measurement
//! ```
//!
//! A four-state search, marked state 2:
//!
//! ```
//! use groversim::{run_grover, GroverConfig, Iterations, Oracle};
//!
//! let oracle = Oracle::from_marked(2, [2]).unwrap();
//! let config = GroverConfig::new(2, oracle, Iterations::Fixed(1), 7);
//! let trace = run_grover(&config).unwrap();
//! assert_eq!(trace.outcome, 2);
//! assert_eq!(trace.oracle_evals, 1);
//! ```

pub mod amplitude;
pub mod cli;
pub mod error;
pub mod grover;
pub mod oracle;
pub mod pathsum;
pub mod reversible;
pub mod transforms;

pub use amplitude::{
    qubit_cap, AmplitudeVector, BasisIndex, Complex, DEFAULT_MAX_QUBITS, MAX_QUBITS_ENV,
};
pub use error::{Error, Result};
pub use grover::{
    classical_baseline, classical_iterations_for, classical_success, grover_iteration,
    optimal_iterations, run_grover, scan_probabilities, success_probability, ClassicalReport,
    GroverConfig, Iterations, SimulationTrace, TraceStep,
};
pub use oracle::Oracle;
pub use pathsum::{path_amplitude, verify_against_matrix, StepOp};
pub use reversible::{adder_circuit, check_bijection, Gate, ReversibleCircuit};
pub use transforms::{wh_matrix_entry, wh_sign};

/// Seedable generator used for every sampled quantity.
pub type SimRng = rand_chacha::ChaCha8Rng;

/// Algorithm identifier recorded next to seeds in trace output.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng";

/// Builds the deterministic generator for `seed`.
pub fn seeded_rng(seed: u64) -> SimRng {
    use rand::SeedableRng;
    SimRng::seed_from_u64(seed)
}
