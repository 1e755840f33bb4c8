//! Random guessing with replacement, simulated and in closed form.
//!
//! ```bash
//! cargo run --example classical_baseline
//! ```

use std::collections::BTreeSet;

use groversim::classical_baseline;

fn main() -> groversim::Result<()> {
    let marked: BTreeSet<usize> = [2].into();
    println!(
        "{:>6} {:>6} {:>8} {:>10} {:>10}",
        "N", "iters", "trials", "empirical", "analytic"
    );
    for (len, iters, trials) in [
        (4, 1, 100_000),
        (4, 4, 100_000),
        (1024, 1024, 10_000),
        (1024, 2048, 10_000),
    ] {
        let r = classical_baseline(len, &marked, iters, trials, 42)?;
        println!(
            "{len:>6} {iters:>6} {trials:>8} {:>10.5} {:>10.5}",
            r.empirical, r.analytic
        );
    }
    Ok(())
}
