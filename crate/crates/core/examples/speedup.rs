//! Iterations needed by the quantum search against classical guessing.
//!
//! ```bash
//! cargo run --release --example speedup
//! ```

use groversim::{classical_iterations_for, run_grover, GroverConfig, Iterations, Oracle};

fn main() -> groversim::Result<()> {
    println!(
        "{:>3} {:>7} {:>6} {:>9} {:>12} {:>10}",
        "n", "N", "eta", "eta/sqrtN", "p(success)", "classical"
    );
    for n in 8..=18u32 {
        let len = 1usize << n;
        let oracle = Oracle::from_marked(n, [len / 3])?;
        let trace = run_grover(&GroverConfig::new(n, oracle, Iterations::Auto, 1))?;
        // guesses for an even chance with the classical strategy
        let classical = classical_iterations_for(len, 1, 0.5);
        println!(
            "{n:>3} {len:>7} {:>6} {:>9.4} {:>12.9} {classical:>10}",
            trace.eta,
            trace.eta as f64 / (len as f64).sqrt(),
            trace.success_probability,
        );
    }
    Ok(())
}
