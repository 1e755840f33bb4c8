//! Seeded measurement: histograms of repeated draws, and collapse.
//!
//! ```bash
//! cargo run --example measurement
//! ```

use groversim::{seeded_rng, AmplitudeVector};

fn main() -> groversim::Result<()> {
    let v = AmplitudeVector::from_real(&[0.6, 0.0, 0.0, -0.8])?;
    let draws = 100_000;
    let mut rng = seeded_rng(2024);
    let mut counts = [0usize; 4];
    for _ in 0..draws {
        counts[v.measure(&mut rng)?.0] += 1;
    }
    println!("state {v}");
    for (r, c) in counts.iter().enumerate() {
        println!(
            "  {r}: {:.4} observed, {:.4} expected",
            *c as f64 / draws as f64,
            v.probability(r)?
        );
    }

    let (outcome, collapsed) = v.measure(&mut seeded_rng(7))?;
    println!("\none draw with seed 7: {outcome}, collapsed to {collapsed}");
    let (again, _) = collapsed.measure(&mut seeded_rng(8))?;
    println!("measuring again gives {again}");
    Ok(())
}
