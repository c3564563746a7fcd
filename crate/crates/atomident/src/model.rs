//! Sparse atomic models and their impulse responses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pole::Pole;

/// Coefficient norms below this are treated as inactive.  Solvers return tiny
/// nonzeros where an exact method would return zero, so "nonzero" alone is not
/// a meaningful activity test.
pub const ACTIVITY_THRESHOLD: f64 = 1e-8;

/// The real coefficient pair `[Re c, Im c]` of one atom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupCoefficients {
    pub gamma: [f64; 2],
}

impl GroupCoefficients {
    pub fn zero() -> Self {
        Self { gamma: [0.0, 0.0] }
    }

    pub fn norm(&self) -> f64 {
        self.gamma[0].hypot(self.gamma[1])
    }
}

/// Summary statistics of the solve that produced a model.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct SolverStats {
    pub iterations: usize,
    pub objective: f64,
}

/// A sparse combination of atoms: ordered `(pole, coefficients)` terms, each
/// standing for itself plus its complex conjugate, so the implied transfer
/// function is real-rational.  Poles are pairwise distinct by construction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SparseModel {
    pub terms: Vec<(Pole, GroupCoefficients)>,
    pub lambda_used: f64,
    pub solver_stats: SolverStats,
}

impl SparseModel {
    /// The all-zero model.
    pub fn empty(lambda_used: f64) -> Self {
        Self {
            terms: Vec::new(),
            lambda_used,
            solver_stats: SolverStats::default(),
        }
    }

    /// Build from parallel pole/coefficient lists, rejecting duplicate poles.
    pub fn new(
        poles: &[Pole],
        gammas: &[GroupCoefficients],
        lambda_used: f64,
        solver_stats: SolverStats,
    ) -> Result<Self> {
        if poles.len() != gammas.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} poles vs {} coefficient groups",
                poles.len(),
                gammas.len()
            )));
        }
        for (i, a) in poles.iter().enumerate() {
            for b in poles.iter().skip(i + 1) {
                if a.same_location(b) {
                    return Err(Error::InvalidInput(format!(
                        "duplicate pole ({}, {})",
                        a.alpha(),
                        a.beta()
                    )));
                }
            }
        }
        Ok(Self {
            terms: poles.iter().copied().zip(gammas.iter().copied()).collect(),
            lambda_used,
            solver_stats,
        })
    }

    /// Terms whose coefficient norm exceeds the activity threshold.
    pub fn active_terms(&self) -> impl Iterator<Item = &(Pole, GroupCoefficients)> {
        self.terms
            .iter()
            .filter(|(_, g)| g.norm() > ACTIVITY_THRESHOLD)
    }

    /// Number of active atoms (groups), ignoring conjugate multiplicity.
    pub fn active_count(&self) -> usize {
        self.active_terms().count()
    }

    /// Model order: active atoms counted with conjugate multiplicity
    /// (an interior pole contributes itself and its conjugate).
    pub fn order(&self) -> usize {
        self.active_terms().map(|(p, _)| p.multiplicity()).sum()
    }
}

/// Impulse response of a model over `1..=horizon`.
///
/// Each term contributes `2 * Re(c * (1 - |k|^2) * k^(t-2))` at lag `t >= 2`
/// and exactly zero at `t = 1`; the sum is assembled in real arithmetic (the
/// complex pole power is tracked as a real/imaginary pair), so the output is
/// real by construction rather than by discarding residue.
pub fn model_impulse_response(model: &SparseModel, horizon: usize) -> Result<Vec<f64>> {
    if horizon == 0 {
        return Err(Error::InvalidInput("horizon must be at least 1".into()));
    }
    let mut g = vec![0.0; horizon];
    for (pole, coeff) in &model.terms {
        let gain = pole.gain();
        let (c_re, c_im) = (coeff.gamma[0], coeff.gamma[1]);
        let k = pole.value();
        // k^(t-2) accumulated as (p_re, p_im), starting at k^0 for t = 2.
        let (mut p_re, mut p_im) = (1.0, 0.0);
        for gt in g.iter_mut().skip(1) {
            *gt += 2.0 * gain * (c_re * p_re - c_im * p_im);
            let next_re = p_re * k.re - p_im * k.im;
            let next_im = p_re * k.im + p_im * k.re;
            p_re = next_re;
            p_im = next_im;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::atom_response;
    use crate::rng::Stream;

    #[test]
    fn empty_model_zero_response() {
        let m = SparseModel::empty(0.1);
        let g = model_impulse_response(&m, 8).unwrap();
        assert_eq!(g, vec![0.0; 8]);
        assert_eq!(m.order(), 0);
    }

    #[test]
    fn delay_term_doubled_by_conjugate() {
        let m = SparseModel::new(
            &[Pole::new(0.0, 0.0).unwrap()],
            &[GroupCoefficients { gamma: [1.0, 0.0] }],
            0.0,
            SolverStats::default(),
        )
        .unwrap();
        let g = model_impulse_response(&m, 5).unwrap();
        assert_eq!(g, vec![0.0, 2.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn matches_atom_response_superposition() {
        // Random 3-term model vs. summing each atom's impulse response
        // combined through the complex coefficients.
        let mut s = Stream::new(23, 0);
        let horizon = 50;
        let poles = [
            Pole::new(0.9, 0.7).unwrap(),
            Pole::new(0.5, 0.0).unwrap(),
            Pole::new(0.75, 2.9).unwrap(),
        ];
        let gammas: Vec<GroupCoefficients> = (0..3)
            .map(|_| GroupCoefficients {
                gamma: [s.next_normal(), s.next_normal()],
            })
            .collect();
        let m = SparseModel::new(&poles, &gammas, 0.0, SolverStats::default()).unwrap();
        let g = model_impulse_response(&m, horizon).unwrap();

        let mut impulse = vec![0.0; horizon];
        impulse[0] = 1.0;
        let mut expect = vec![0.0; horizon];
        for (p, c) in poles.iter().zip(&gammas) {
            let phi = atom_response(p, &impulse).unwrap();
            let cc = num_complex::Complex64::new(c.gamma[0], c.gamma[1]);
            for t in 0..horizon {
                expect[t] += 2.0 * (cc * phi[t]).re;
            }
        }
        for t in 0..horizon {
            assert!(
                (g[t] - expect[t]).abs() <= 1e-12 * expect[t].abs().max(1.0),
                "t={t}: {} vs {}",
                g[t],
                expect[t]
            );
        }
    }

    #[test]
    fn duplicate_poles_rejected() {
        let p = Pole::new(0.4, 0.4).unwrap();
        let r = SparseModel::new(
            &[p, p],
            &[GroupCoefficients::zero(), GroupCoefficients::zero()],
            0.1,
            SolverStats::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn order_counts_conjugates() {
        let m = SparseModel::new(
            &[
                Pole::new(0.9, 0.7).unwrap(),  // conjugate pair: 2
                Pole::new(0.5, 0.0).unwrap(),  // real: 1
                Pole::new(0.75, 2.9).unwrap(), // conjugate pair: 2
            ],
            &[
                GroupCoefficients { gamma: [1.0, 0.0] },
                GroupCoefficients { gamma: [0.0, 1e-12] }, // inactive
                GroupCoefficients { gamma: [0.0, 0.5] },
            ],
            0.1,
            SolverStats::default(),
        )
        .unwrap();
        assert_eq!(m.active_count(), 2);
        assert_eq!(m.order(), 4);
    }
}
