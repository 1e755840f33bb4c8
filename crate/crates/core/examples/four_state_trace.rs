//! The four-state search, one snapshot per step.
//!
//! ```bash
//! cargo run --example four_state_trace
//! ```

use groversim::{run_grover, GroverConfig, Iterations, Oracle};

fn main() -> groversim::Result<()> {
    let oracle = Oracle::from_marked(2, [2])?;
    let config = GroverConfig::new(2, oracle, Iterations::Fixed(1), 0).with_trace(true);
    let trace = run_grover(&config)?;

    println!("N = 4, marked state 2, one iteration\n");
    for step in &trace.steps {
        println!("({:>3})  {}", step.label, step.state);
    }
    println!();
    println!("success probability: {}", trace.success_probability);
    println!("measured:            {}", trace.outcome);
    println!("oracle evaluations:  {}", trace.oracle_evals);
    Ok(())
}
