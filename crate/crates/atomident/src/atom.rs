//! First-order atomic responses and their real feature matrices.
//!
//! An atom with pole `k` is the transfer function `A_k(q) = (1 - |k|^2) / (q - k)`:
//! a one-pole filter of unit Hankel norm and relative degree one.  Identified
//! models are sparse combinations `sum_k 2 Re(c_k phi_k)`, which in real
//! arithmetic is the feature matrix `zeta_k = [2 Re(phi_k), -2 Im(phi_k)]`
//! applied to the coefficient pair `gamma_k = [Re c_k, Im c_k]`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pole::Pole;

/// The real N x 2 feature matrix of one atom for a fixed input sequence,
/// stored as two columns.  Column 1 is `2 Re(phi)`, column 2 is `-2 Im(phi)`;
/// for real poles column 2 is identically zero (the group Gram is then
/// singular, which the solver must tolerate).
#[derive(Debug, Clone)]
pub struct AtomicFeature {
    pub pole: Pole,
    pub col1: Vec<f64>,
    pub col2: Vec<f64>,
}

/// Response of the atom at `pole` to input `u` from a zero initial state:
/// `phi(t) = k * phi(t-1) + (1 - |k|^2) * u(t-1)` with `phi(1) = 0`, so the
/// output is strictly causal (relative degree one).
pub fn atom_response(pole: &Pole, u: &[f64]) -> Result<Vec<Complex64>> {
    if u.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(
            "input sequence contains non-finite samples".into(),
        ));
    }
    if u.is_empty() {
        return Err(Error::InvalidInput("input sequence is empty".into()));
    }
    let k = pole.value();
    let gain = pole.gain();
    let mut phi = vec![Complex64::ZERO; u.len()];
    for t in 1..u.len() {
        phi[t] = k * phi[t - 1] + gain * u[t - 1];
    }
    Ok(phi)
}

/// Assemble the real feature matrix `zeta` from the complex atom response.
pub fn build_feature(pole: &Pole, u: &[f64]) -> Result<AtomicFeature> {
    let phi = atom_response(pole, u)?;
    let col1: Vec<f64> = phi.iter().map(|z| 2.0 * z.re).collect();
    let col2: Vec<f64> = if pole.is_real() {
        // Real pole: the response is exactly real; emit literal zeros instead
        // of negated rounding residue.
        vec![0.0; phi.len()]
    } else {
        phi.iter().map(|z| -2.0 * z.im).collect()
    };
    Ok(AtomicFeature {
        pole: *pole,
        col1,
        col2,
    })
}

impl AtomicFeature {
    pub fn len(&self) -> usize {
        self.col1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.col1.is_empty()
    }

    /// `zeta * gamma`: the real output contribution of this atom.
    pub fn apply(&self, gamma: [f64; 2]) -> Vec<f64> {
        self.col1
            .iter()
            .zip(&self.col2)
            .map(|(a, b)| a * gamma[0] + b * gamma[1])
            .collect()
    }

    /// `zeta^T r` for a residual `r`, restricted to `rows` (None = all rows).
    pub fn correlate(&self, r: &[f64], rows: Option<&[usize]>) -> [f64; 2] {
        match rows {
            None => {
                let mut s0 = 0.0;
                let mut s1 = 0.0;
                for t in 0..r.len() {
                    s0 += self.col1[t] * r[t];
                    s1 += self.col2[t] * r[t];
                }
                [s0, s1]
            }
            Some(rows) => {
                let mut s0 = 0.0;
                let mut s1 = 0.0;
                for (j, &t) in rows.iter().enumerate() {
                    s0 += self.col1[t] * r[j];
                    s1 += self.col2[t] * r[j];
                }
                [s0, s1]
            }
        }
    }
}
