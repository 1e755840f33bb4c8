//! Success probability keeps rising and falling as iterations continue.
//!
//! ```bash
//! cargo run --example oscillation            # 6 qubits
//! cargo run --example oscillation -- 8 40    # 8 qubits, 40 iterations
//! ```

use groversim::{optimal_iterations, scan_probabilities, GroverConfig, Iterations, Oracle};

fn main() -> groversim::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(6) as u32;
    let t_max = args.next().flatten().unwrap_or(20);

    let len = 1usize << n;
    let oracle = Oracle::from_marked(n, [len - 1])?;
    let config = GroverConfig::new(n, oracle, Iterations::Auto, 0);
    let best = optimal_iterations(len, 1)?;

    println!("N = {len}, optimum at t = {best}");
    for (t, p) in scan_probabilities(&config, t_max)? {
        let bar = "#".repeat((p * 50.0).round() as usize);
        let mark = if t == best { " <" } else { "" };
        println!("{t:>4} {p:.6} {bar}{mark}");
    }
    Ok(())
}
