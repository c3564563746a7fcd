//! Pole locations for atomic models.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A stable pole `k = alpha * exp(i * beta)` in the closed upper half of the
/// open unit disk.  `alpha` is the radius in `[0, 1)`, `beta` the angle in
/// `[0, pi]` radians; the lower half-plane is covered implicitly by the
/// conjugate of every atom, so only the upper half is ever enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    alpha: f64,
    beta: f64,
}

impl Pole {
    /// Construct a pole, validating the stability and half-disk ranges.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidInput(format!(
                "pole components must be finite, got ({alpha}, {beta})"
            )));
        }
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::InvalidInput(format!(
                "pole radius must lie in [0, 1), got {alpha}"
            )));
        }
        if !(0.0..=std::f64::consts::PI).contains(&beta) {
            return Err(Error::InvalidInput(format!(
                "pole angle must lie in [0, pi], got {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The complex pole value `alpha * exp(i * beta)`.
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.alpha, self.beta)
    }

    /// `1 - |k|^2`, the numerator gain that gives every atom unit Hankel norm.
    pub fn gain(&self) -> f64 {
        1.0 - self.alpha * self.alpha
    }

    /// True when the pole lies on the real axis (angle 0 or pi), in which
    /// case the atom's response is purely real.
    pub fn is_real(&self) -> bool {
        self.beta == 0.0 || self.beta == std::f64::consts::PI
    }

    /// Conjugate-pair multiplicity: real poles count once, interior poles
    /// stand for themselves plus their conjugate.
    pub fn multiplicity(&self) -> usize {
        if self.is_real() {
            1
        } else {
            2
        }
    }

    /// Exact equality of the `(alpha, beta)` representation.
    pub fn same_location(&self, other: &Pole) -> bool {
        self.alpha == other.alpha && self.beta == other.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn ranges_enforced() {
        assert!(Pole::new(0.0, 0.0).is_ok());
        assert!(Pole::new(0.999_999_999, PI).is_ok());
        assert!(Pole::new(1.0, 0.0).is_err());
        assert!(Pole::new(-0.1, 0.0).is_err());
        assert!(Pole::new(0.5, -0.1).is_err());
        assert!(Pole::new(0.5, PI + 1e-9).is_err());
        assert!(Pole::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn complex_value_reproducible() {
        let p = Pole::new(0.73, 1.234).unwrap();
        let k1 = p.value();
        let k2 = Complex64::from_polar(0.73, 1.234);
        assert_eq!(k1.re.to_bits(), k2.re.to_bits());
        assert_eq!(k1.im.to_bits(), k2.im.to_bits());
    }

    #[test]
    fn real_pole_detection_and_multiplicity() {
        assert!(Pole::new(0.5, 0.0).unwrap().is_real());
        assert!(Pole::new(0.5, PI).unwrap().is_real());
        assert!(!Pole::new(0.5, 1.0).unwrap().is_real());
        assert_eq!(Pole::new(0.5, 0.0).unwrap().multiplicity(), 1);
        assert_eq!(Pole::new(0.5, 1.0).unwrap().multiplicity(), 2);
    }
}
