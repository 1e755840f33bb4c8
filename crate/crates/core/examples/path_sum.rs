//! Amplitudes as sums over paths, checked against the state-vector engine.
//!
//! ```bash
//! cargo run --example path_sum
//! ```

use groversim::pathsum::{grover_program, paths};
use groversim::{path_amplitude, verify_against_matrix};

fn main() -> groversim::Result<()> {
    // Up to step (iii) of the four-state search: W, flip 2, W.
    let steps = &grover_program([2], 1)[..3];
    println!("paths from 0 to 0 through W, flip(2), W:");
    for p in paths(2, steps, 0, 0)? {
        println!("  {:?}  {:+}", p.states, p.amplitude);
    }
    println!("sum: {}\n", path_amplitude(2, steps, 0, 0)?);

    println!("max |path sum - engine| per width, 2 iterations, marked state 1:");
    for n in 1..=4 {
        let d = verify_against_matrix(n, &grover_program([1], 2))?;
        println!("  n = {n}: {d:.2e}");
    }
    Ok(())
}
