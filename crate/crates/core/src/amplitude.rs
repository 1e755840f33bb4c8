//! The wavefunction and the primitive operations on it.
//!
//! An [`AmplitudeVector`] over `n` qubits is a dense array of `2^n` complex
//! amplitudes indexed directly by the basis state. Bit 0 of a
//! [`BasisIndex`] is the least-significant bit.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// A classical configuration `r` in `[0, 2^n)`.
pub type BasisIndex = usize;

/// Qubit cap used when `GROVERSIM_MAX_QUBITS` is unset.
pub const DEFAULT_MAX_QUBITS: u32 = 24;

/// Environment variable overriding [`DEFAULT_MAX_QUBITS`].
pub const MAX_QUBITS_ENV: &str = "GROVERSIM_MAX_QUBITS";

/// Ceiling on any configured cap; keeps `1 << n` meaningful on 64-bit hosts.
const HARD_MAX_QUBITS: u32 = 40;

/// Unit-norm tolerance checked by constructors and the invariants.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Looser norm tolerance accepted by [`AmplitudeVector::measure`].
pub const MEASURE_NORM_TOLERANCE: f64 = 1e-6;

/// Current qubit cap: `GROVERSIM_MAX_QUBITS` if it parses, otherwise 24.
pub fn qubit_cap() -> u32 {
    std::env::var(MAX_QUBITS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .map(|n| n.clamp(1, HARD_MAX_QUBITS))
        .unwrap_or(DEFAULT_MAX_QUBITS)
}

pub(crate) fn check_qubits(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("qubit count must be at least 1"));
    }
    let cap = qubit_cap();
    if n > cap {
        return Err(Error::resource(format!(
            "{n} qubits exceeds the cap of {cap} (set {MAX_QUBITS_ENV} to raise it)"
        )));
    }
    Ok(())
}

/// Negates `amps[r]` wherever `selector(r)` holds.
pub fn flip_phases<F>(amps: &mut [Complex], selector: F)
where
    F: Fn(BasisIndex) -> bool,
{
    for (r, a) in amps.iter_mut().enumerate() {
        if selector(r) {
            *a = -*a;
        }
    }
}

/// Relabels amplitudes so that `out[p[r]] = amps[r]`.
///
/// Fails if `p` has the wrong length, points outside the vector or maps two
/// inputs to the same target.
pub fn permute(amps: &[Complex], p: &[BasisIndex]) -> Result<Vec<Complex>> {
    if p.len() != amps.len() {
        return Err(Error::domain(format!(
            "permutation has {} entries, vector has {}",
            p.len(),
            amps.len()
        )));
    }
    let mut out = vec![Complex::new(0.0, 0.0); amps.len()];
    let mut seen = vec![false; amps.len()];
    for (r, &target) in p.iter().enumerate() {
        if target >= amps.len() {
            return Err(Error::domain(format!(
                "permutation maps {r} to {target}, outside [0, {})",
                amps.len()
            )));
        }
        if std::mem::replace(&mut seen[target], true) {
            return Err(Error::domain(format!(
                "permutation is not a bijection: {target} is hit twice"
            )));
        }
        out[target] = amps[r];
    }
    Ok(out)
}

fn squared_norm(amps: &[Complex]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

#[derive(Clone, PartialEq)]
pub struct AmplitudeVector {
    n: u32,
    amps: Vec<Complex>,
}

impl AmplitudeVector {
    /// The basis state `|r>`: amplitude 1 at `r`, 0 elsewhere.
    pub fn basis_state(n: u32, r: BasisIndex) -> Result<Self> {
        check_qubits(n)?;
        let len = 1usize << n;
        if r >= len {
            return Err(Error::domain(format!(
                "basis index {r} out of range for {n} qubits (N = {len})"
            )));
        }
        let mut amps = vec![Complex::new(0.0, 0.0); len];
        amps[r] = Complex::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Equal superposition: every amplitude is `1/sqrt(N)`.
    pub fn uniform_state(n: u32) -> Result<Self> {
        check_qubits(n)?;
        let len = 1usize << n;
        let a = 1.0 / (len as f64).sqrt();
        Ok(Self {
            n,
            amps: vec![Complex::new(a, 0.0); len],
        })
    }

    /// Wraps raw amplitudes. The length must be a power of two (at least 2)
    /// and the vector must be finite with unit norm within [`NORM_TOLERANCE`].
    pub fn from_amplitudes(amps: Vec<Complex>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::domain(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let n = len.trailing_zeros();
        check_qubits(n)?;
        if let Some(r) = amps
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::State(format!("amplitude {r} is not finite")));
        }
        let norm = squared_norm(&amps).sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::State(format!("norm {norm} is not 1")));
        }
        Ok(Self { n, amps })
    }

    /// Real-valued convenience over [`from_amplitudes`](Self::from_amplitudes).
    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::from_amplitudes(values.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    pub fn qubits(&self) -> u32 {
        self.n
    }

    /// Number of basis states, `2^n`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex] {
        &mut self.amps
    }

    pub fn amplitude(&self, r: BasisIndex) -> Result<Complex> {
        self.check_index(r)?;
        Ok(self.amps[r])
    }

    /// `|amps[r]|^2`.
    pub fn probability(&self, r: BasisIndex) -> Result<f64> {
        self.check_index(r)?;
        Ok(self.amps[r].norm_sqr())
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        squared_norm(&self.amps).sqrt()
    }

    /// Largest elementwise `|self[r] - other[r]|`; infinite on length mismatch.
    pub fn max_abs_diff(&self, other: &AmplitudeVector) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Observes the full register.
    ///
    /// Draws `r` with probability `|amps[r]|^2` from a single uniform
    /// variate and returns it together with the collapsed state `|r>`.
    /// The same generator state always yields the same outcome.
    pub fn measure<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<(BasisIndex, AmplitudeVector)> {
        let total = squared_norm(&self.amps);
        if !total.is_finite() || (total.sqrt() - 1.0).abs() > MEASURE_NORM_TOLERANCE {
            return Err(Error::State(format!(
                "cannot measure a vector of norm {}",
                total.sqrt()
            )));
        }
        let u: f64 = rng.random::<f64>() * total;
        let mut acc = 0.0;
        let mut outcome = None;
        for (r, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            acc += p;
            outcome = Some(r);
            if u < acc {
                break;
            }
        }
        // round-off can leave u just above the running sum; the last
        // non-zero state absorbs it
        let outcome = outcome.ok_or_else(|| Error::State("all amplitudes are zero".into()))?;
        let collapsed = Self::basis_state(self.n, outcome)?;
        Ok((outcome, collapsed))
    }

    /// Negates the amplitudes selected by `selector`. Probabilities are
    /// unchanged and applying the same flip twice restores the vector.
    pub fn apply_phase_flip<F>(&mut self, selector: F)
    where
        F: Fn(BasisIndex) -> bool,
    {
        flip_phases(&mut self.amps, selector);
    }

    /// Moves the amplitude of `r` to `p[r]`.
    pub fn apply_permutation(&self, p: &[BasisIndex]) -> Result<AmplitudeVector> {
        Ok(Self {
            n: self.n,
            amps: permute(&self.amps, p)?,
        })
    }

    fn check_index(&self, r: BasisIndex) -> Result<()> {
        if r >= self.amps.len() {
            return Err(Error::domain(format!(
                "basis index {r} out of range for {} qubits (N = {})",
                self.n,
                self.amps.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for AmplitudeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AmplitudeVector")
            .field("n", &self.n)
            .field("amps", &self.amps)
            .finish()
    }
}

impl fmt::Display for AmplitudeVector {
    /// `(0.5, 0.5, -0.5, 0.5)`; imaginary parts are shown only when non-zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.amps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if a.im == 0.0 {
                write!(f, "{}", a.re)?;
            } else {
                write!(f, "{}{:+}i", a.re, a.im)?;
            }
        }
        write!(f, ")")
    }
}
