//! Walsh-Hadamard signs: entry (q, r) is + exactly when q & r has an even
//! number of 1-bits.
//!
//! ```bash
//! cargo run --example sign_table          # 2 qubits
//! cargo run --example sign_table -- 3     # 3 qubits
//! ```

use groversim::transforms::wh_sign;
use groversim::wh_matrix_entry;

fn main() -> groversim::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(2);
    let len = 1usize << n;
    let width = n as usize;

    print!("{:>w$}  ", "", w = width);
    for q in 0..len {
        print!("{q:0w$b} ", w = width);
    }
    println!();
    for r in 0..len {
        print!("{r:0w$b}  ", w = width);
        for q in 0..len {
            let s = if wh_sign(q, r) > 0 { '+' } else { '-' };
            print!("{s:>w$} ", w = width);
        }
        println!();
    }
    println!("\neach entry has magnitude {}", wh_matrix_entry(n, 0, 0)?);
    Ok(())
}
