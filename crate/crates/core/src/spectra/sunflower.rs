//! Largest Laplacian H-eigenvalue of the sunflower.
//!
//! Even k: `λ(L) = λ(Q) = μ`, the root in `(2, 4)` of
//! `(μ - 2) - (1/(μ-1))^{1/(k-1)} - (1/(μ-1))^{k-1}`, with positive `Q` eigenvector
//! centre `α = (1/(μ-1))^{1/(k-1)}`, anchors 1 and petal pendants `γ = α^{k-1}`.
//! Odd k: `λ(L) = 2`, attained by the indicator of an anchor.

use alloc::vec;
use alloc::vec::Vec;

use super::SpectrumEntry;
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::solvers::{bisect, ScalarFunction, SolverOptions};
use crate::tensor::{pow_sq, EigenPair, TensorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SunflowerFunction {
    pub k: usize,
}

impl ScalarFunction for SunflowerFunction {
    fn eval(&self, mu: f64) -> f64 {
        let t = 1.0 / (mu - 1.0);
        (mu - 2.0) - libm::pow(t, 1.0 / (self.k - 1) as f64) - pow_sq(t, self.k - 1)
    }

    fn domain(&self) -> (f64, f64) {
        (1.0, f64::INFINITY)
    }
}

/// Eigenvector parameters recovered from `μ`, and `μ` rebuilt from the anchor equation
/// `μ = 2 + α + γ^{k-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SunflowerParams {
    pub alpha: f64,
    pub gamma: f64,
    pub mu_reconstructed: f64,
}

pub fn sunflower_parametrization(k: usize, mu: f64) -> SunflowerParams {
    let alpha = libm::pow(1.0 / (mu - 1.0), 1.0 / (k - 1) as f64);
    let gamma = pow_sq(alpha, k - 1);
    SunflowerParams {
        alpha,
        gamma,
        mu_reconstructed: 2.0 + alpha + pow_sq(gamma, k - 1),
    }
}

/// Positive `Q` eigenvector in the canonical numbering: petal `j` is `jk..(j+1)k` with
/// anchor `jk`, centre `(k-1)k`.
fn positive_vector(k: usize, p: &SunflowerParams) -> Vec<f64> {
    let mut x = vec![p.gamma; (k - 1) * k + 1];
    for j in 0..k - 1 {
        x[j * k] = 1.0;
    }
    x[(k - 1) * k] = p.alpha;
    x
}

pub fn sunflower_lambda_max(k: usize, opts: &SolverOptions) -> Result<SpectrumEntry> {
    let h = generate(&FamilySpec::Sunflower { k })?;
    if k % 2 == 1 {
        let mut x = vec![0.0; h.n()];
        x[0] = 1.0;
        let pair = EigenPair::new(&h, TensorKind::Laplacian, 2.0, &x)?;
        return Ok(SpectrumEntry::certified("anchor indicator", pair));
    }
    let mu = bisect(&SunflowerFunction { k }, 2.0, 4.0, opts)?;
    let mut x = positive_vector(k, &sunflower_parametrization(k, mu));
    for v in h.cored_structure().ok_or(Error::NotCored)? {
        x[v] = -x[v];
    }
    let pair = EigenPair::new(&h, TensorKind::Laplacian, mu, &x)?;
    if !pair.is_certified(opts.tol_residual) {
        return Err(Error::CertificationFailed {
            residual: pair.residual,
        });
    }
    Ok(SpectrumEntry::certified(
        "positive Q eigenvector, sign-flipped",
        pair,
    ))
}
