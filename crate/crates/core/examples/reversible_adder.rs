//! The one-bit adder built from a Toffoli and a CNOT, and its inverse.
//!
//! ```bash
//! cargo run --example reversible_adder
//! ```

use groversim::reversible::circuit_to_permutation;
use groversim::{adder_circuit, AmplitudeVector};

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn main() -> groversim::Result<()> {
    let adder = adder_circuit();
    for gate in adder.gates() {
        println!("  {gate}");
    }

    println!("\n A B | A SUM CARRY");
    for a in [false, true] {
        for b in [false, true] {
            let out = adder.run(&[a, b, false])?;
            let o = bits(&out);
            println!(
                " {} {} | {}  {}    {}",
                a as u8,
                b as u8,
                &o[0..1],
                &o[1..2],
                &o[2..3]
            );
        }
    }
    println!("\nbijective: {}", adder.is_reversible()?);

    let inverse = adder.inverse();
    let undone = (0..8).all(|w| inverse.run_word(adder.run_word(w)) == w);
    println!("inverse undoes every input: {undone}");

    // The same circuit acting on amplitudes is a basis permutation.
    let perm = circuit_to_permutation(&adder)?;
    let v = AmplitudeVector::basis_state(3, 0b011)?;
    let moved = v.apply_permutation(&perm)?;
    let lit = (0..8)
        .find(|&i| moved.amplitude(i).is_ok_and(|a| a.norm_sqr() > 0.5))
        .unwrap();
    println!("|011> (A = B = 1, wire 0 lowest bit) maps to |{lit:03b}>");
    Ok(())
}
