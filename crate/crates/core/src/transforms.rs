//! The Walsh-Hadamard transform (the "quantum random number generator")
//! and the two phase inversions of the search loop.
//!
//! The transform matrix has entry `(q, r)` equal to `±1/sqrt(N)`, positive
//! exactly when `q` and `r` share an even number of 1-bits. The matrix is
//! real and symmetric, so `out[q] = Σ_r M[q][r] · in[r]` needs no
//! transposition convention. Three routes are provided:
//!
//! - [`wh_sign`] / [`wh_matrix_entry`]: single entries from the sign rule.
//! - [`walsh_hadamard_naive`]: the `O(N^2)` matrix-vector product.
//! - [`walsh_hadamard_fast`]: the in-place `O(N log N)` butterfly.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::amplitude::{check_qubits, AmplitudeVector, BasisIndex, Complex};
use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// `+1` if `q & r` has even popcount, `-1` otherwise.
#[inline]
pub fn wh_sign(q: BasisIndex, r: BasisIndex) -> i32 {
    if (q & r).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Entry `(q, r)` of the `n`-qubit transform: `wh_sign(q, r) / sqrt(2^n)`.
pub fn wh_matrix_entry(n: u32, q: BasisIndex, r: BasisIndex) -> Result<f64> {
    check_qubits(n)?;
    let len = 1usize << n;
    if q >= len || r >= len {
        return Err(Error::domain(format!(
            "index ({q}, {r}) out of range for {n} qubits (N = {len})"
        )));
    }
    Ok(f64::from(wh_sign(q, r)) / (len as f64).sqrt())
}

/// Reference transform built entry by entry from the sign rule.
pub fn walsh_hadamard_naive(v: &AmplitudeVector) -> AmplitudeVector {
    let len = v.len();
    let scale = 1.0 / (len as f64).sqrt();
    let input = v.amplitudes();
    let mut out = v.clone();
    for (q, slot) in out.amplitudes_mut().iter_mut().enumerate() {
        let mut acc = Complex::new(0.0, 0.0);
        for (r, a) in input.iter().enumerate() {
            if wh_sign(q, r) > 0 {
                acc += a;
            } else {
                acc -= a;
            }
        }
        *slot = acc * scale;
    }
    out
}

/// In-place butterfly over a slice whose length is a power of two.
///
/// Pass `k` pairs the indices that differ only in bit `k` and replaces
/// `(x, y)` with `(x + y, x − y)`. The `1/√N` normalization is spread over
/// the passes: every second pass scales by exactly `1/2`, and an odd pass
/// count ends with one `1/√2`. Norms stay within a factor `√2` of 1 and
/// power-of-four sizes are computed without rounding in the scale.
pub fn fwht_in_place(amps: &mut [Complex]) {
    let len = amps.len();
    debug_assert!(len.is_power_of_two());
    let passes = len.trailing_zeros();
    let mut half = 1;
    for pass in 0..passes {
        let scale = if pass % 2 == 1 {
            0.5
        } else if pass + 1 == passes {
            FRAC_1_SQRT_2
        } else {
            1.0
        };
        for block in amps.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = (a + b) * scale;
                *y = (a - b) * scale;
            }
        }
        half *= 2;
    }
}

/// Applies the transform to `v` in place.
pub fn walsh_hadamard_fast(v: &mut AmplitudeVector) {
    fwht_in_place(v.amplitudes_mut());
}

fn check_width(v: &AmplitudeVector, oracle: &Oracle) -> Result<()> {
    if v.qubits() != oracle.qubits() {
        return Err(Error::domain(format!(
            "oracle is defined on {} qubits, vector has {}",
            oracle.qubits(),
            v.qubits()
        )));
    }
    Ok(())
}

/// `if (f(r) == 1) invert_phase();`: one evaluation pass of the oracle.
pub fn invert_phase_marked(v: &mut AmplitudeVector, oracle: &Oracle) -> Result<()> {
    check_width(v, oracle)?;
    oracle.record_evaluation();
    match oracle.marked_set() {
        Some(set) => {
            let amps = v.amplitudes_mut();
            for &r in set {
                amps[r] = -amps[r];
            }
        }
        None => v.apply_phase_flip(|r| oracle.is_marked(r)),
    }
    Ok(())
}

/// `if (r == 0) invert_phase();`
pub fn invert_phase_zero(v: &mut AmplitudeVector) {
    let amps = v.amplitudes_mut();
    amps[0] = -amps[0];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: &AmplitudeVector) -> Vec<f64> {
        v.amplitudes().iter().map(|a| a.re).collect()
    }

    fn assert_close(v: &AmplitudeVector, expected: &[f64], tol: f64) {
        for (a, e) in v.amplitudes().iter().zip(expected) {
            assert!(
                (a.re - e).abs() <= tol && a.im == 0.0,
                "{v} != {expected:?}"
            );
        }
    }

    #[test]
    fn sign_rule() {
        assert_eq!(wh_sign(1, 1), -1);
        for r in 0..64 {
            assert_eq!(wh_sign(0, r), 1);
        }
        assert_eq!(wh_sign(0b0111_0101, 0b1011_0111), 1);
    }

    #[test]
    fn matrix_entries() {
        assert_eq!(wh_matrix_entry(2, 0, 0).unwrap(), 0.5);
        assert_eq!(wh_matrix_entry(2, 3, 3).unwrap(), 0.5);
        assert_eq!(wh_matrix_entry(2, 2, 3).unwrap(), -0.5);
        assert!(matches!(wh_matrix_entry(2, 4, 0), Err(Error::Domain(_))));
        assert!(wh_matrix_entry(2, 0, 4).is_err());
    }

    #[test]
    fn naive_reproduces_four_state_steps() {
        let v = AmplitudeVector::basis_state(2, 0).unwrap();
        assert_eq!(real(&walsh_hadamard_naive(&v)), [0.5; 4]);

        let v = AmplitudeVector::from_real(&[0.5, 0.5, -0.5, 0.5]).unwrap();
        assert_eq!(real(&walsh_hadamard_naive(&v)), [0.5, -0.5, 0.5, 0.5]);

        let v = AmplitudeVector::from_real(&[-0.5, -0.5, 0.5, 0.5]).unwrap();
        assert_eq!(real(&walsh_hadamard_naive(&v)), [0.0, 0.0, -1.0, 0.0]);
    }

    #[test]
    fn fast_matches_naive_on_basis_state() {
        let v = AmplitudeVector::basis_state(4, 0).unwrap();
        let mut fast = v.clone();
        walsh_hadamard_fast(&mut fast);
        assert!(fast.max_abs_diff(&walsh_hadamard_naive(&v)) <= 1e-12);
    }

    #[test]
    fn fast_inverts_uniform_state() {
        let mut v = AmplitudeVector::uniform_state(3).unwrap();
        walsh_hadamard_fast(&mut v);
        let e0 = AmplitudeVector::basis_state(3, 0).unwrap();
        assert!(v.max_abs_diff(&e0) <= 1e-12);
    }

    #[test]
    fn marked_inversion() {
        let o = Oracle::from_marked(2, [2]).unwrap();
        let mut v = AmplitudeVector::uniform_state(2).unwrap();
        invert_phase_marked(&mut v, &o).unwrap();
        assert_close(&v, &[0.5, 0.5, -0.5, 0.5], 0.0);
        assert_eq!(o.evaluations(), 1);

        let none = Oracle::from_marked(2, []).unwrap();
        let before = v.clone();
        invert_phase_marked(&mut v, &none).unwrap();
        assert_eq!(v, before);

        let all = Oracle::from_predicate(2, |_| true).unwrap();
        invert_phase_marked(&mut v, &all).unwrap();
        assert_close(&v, &[-0.5, -0.5, 0.5, -0.5], 0.0);
        assert_eq!(all.evaluations(), 1);
    }

    #[test]
    fn marked_inversion_checks_width() {
        let o = Oracle::from_marked(3, [2]).unwrap();
        let mut v = AmplitudeVector::uniform_state(2).unwrap();
        assert!(invert_phase_marked(&mut v, &o).is_err());
        assert_eq!(o.evaluations(), 0);
    }

    #[test]
    fn zero_inversion() {
        let mut v = AmplitudeVector::from_real(&[0.5, -0.5, 0.5, 0.5]).unwrap();
        invert_phase_zero(&mut v);
        assert_close(&v, &[-0.5, -0.5, 0.5, 0.5], 0.0);
        invert_phase_zero(&mut v);
        assert_close(&v, &[0.5, -0.5, 0.5, 0.5], 0.0);

        let mut b = AmplitudeVector::basis_state(2, 3).unwrap();
        invert_phase_zero(&mut b);
        assert_eq!(b, AmplitudeVector::basis_state(2, 3).unwrap());
    }
}
