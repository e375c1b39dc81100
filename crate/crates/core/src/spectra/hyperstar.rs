//! Hyperstar spectra. Every eigenvalue `λ ≠ 1` is a real root of
//! `f_r(λ) = (λ - d)(1 - λ)^{k-1} + r` for some `r ∈ 0..=d`, realised by
//! `x_heart = 1 - λ`, pendants of `r` chosen edges at `±1` and every other entry 0.
//! `λ = 1` is realised by any `x` with `x_heart = 0` whose pendant products sum to 0.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{SpectrumEntry, SpectrumReport};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::hypergraph::UniformHypergraph;
use crate::solvers::{all_real_roots, bisect, ScalarFunction, SolverOptions, ROOT_DEDUP};
use crate::tensor::{inf_norm, pow_sq, EigenPair, TensorKind};

/// `f_r(λ) = (λ - d)(1 - λ)^{k-1} + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperstarPolynomial {
    pub k: usize,
    pub d: usize,
    pub r: usize,
}

impl ScalarFunction for HyperstarPolynomial {
    fn eval(&self, l: f64) -> f64 {
        (l - self.d as f64) * pow_sq(1.0 - l, self.k - 1) + self.r as f64
    }

    fn derivative(&self, l: f64) -> f64 {
        let k1 = self.k - 1;
        pow_sq(1.0 - l, k1) - k1 as f64 * (l - self.d as f64) * pow_sq(1.0 - l, k1 - 1)
    }
}

fn check_params(k: usize, d: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidFamilyParameter("k must be at least 3"));
    }
    if d < 2 {
        return Err(Error::InvalidFamilyParameter(
            "hyperstar size d must be at least 2",
        ));
    }
    Ok(())
}

/// Real roots of `f_r` on `[-1, 2d + 1]` other than 1, ascending.
pub fn hyperstar_roots(k: usize, d: usize, r: usize, opts: &SolverOptions) -> Vec<f64> {
    let f = HyperstarPolynomial { k, d, r };
    all_real_roots(&f, -1.0, 2.0 * d as f64 + 1.0, opts)
        .into_iter()
        .filter(|l| (l - 1.0).abs() > ROOT_DEDUP)
        .collect()
}

// Pendants of edge `j` in the canonical numbering.
fn pendants(k: usize, j: usize) -> core::ops::Range<usize> {
    1 + j * (k - 1)..1 + (j + 1) * (k - 1)
}

/// Builds and certifies the eigenvector for a root of `f_r`.
///
/// `chosen` lists `r` distinct 0-based edge indices; `signs` has one entry per vertex and
/// only its values on pendants of chosen edges are read. They must be `±1`, all `+1` for odd
/// `k`, and with an even number of `-1` per edge for even `k`.
pub fn hyperstar_eigenvector(
    k: usize,
    d: usize,
    lambda: f64,
    r: usize,
    chosen: &[usize],
    signs: &[f64],
    opts: &SolverOptions,
) -> Result<EigenPair> {
    check_params(k, d)?;
    if chosen.len() != r {
        return Err(Error::ChoiceCountMismatch {
            expected: r,
            found: chosen.len(),
        });
    }
    let h = generate(&FamilySpec::Hyperstar { k, d })?;
    if signs.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: signs.len(),
        });
    }
    let mut seen = vec![false; d];
    for &j in chosen {
        if j >= d || seen[j] {
            return Err(Error::InvalidFamilyParameter(
                "chosen edges must be distinct indices below d",
            ));
        }
        seen[j] = true;
    }
    let value = HyperstarPolynomial { k, d, r }.eval(lambda);
    if !(value.abs() <= opts.tol_residual) {
        return Err(Error::WrongRootForR { lambda, r, value });
    }
    let mut x = vec![0.0; h.n()];
    x[0] = 1.0 - lambda;
    for &j in chosen {
        let mut negatives = 0;
        for v in pendants(k, j) {
            match signs[v] {
                1.0 => {}
                -1.0 => negatives += 1,
                _ => return Err(Error::InvalidFamilyParameter("signs must be +1 or -1")),
            }
            x[v] = signs[v];
        }
        let allowed = if k % 2 == 1 {
            negatives == 0
        } else {
            negatives % 2 == 0
        };
        if !allowed {
            return Err(Error::SignParityViolation { edge: j + 1 });
        }
    }
    let pair = EigenPair::new(&h, TensorKind::Laplacian, lambda, &x)?;
    if !pair.is_certified(opts.tol_residual) {
        return Err(Error::CertificationFailed {
            residual: pair.residual,
        });
    }
    Ok(pair)
}

/// One all-`+1` eigenvector per `r`-subset of edges, subsets in lexicographic order.
pub fn hyperstar_eigenvectors(
    k: usize,
    d: usize,
    lambda: f64,
    r: usize,
    opts: &SolverOptions,
) -> Result<Vec<EigenPair>> {
    check_params(k, d)?;
    if r > d {
        return Err(Error::InvalidFamilyParameter("r must not exceed d"));
    }
    let signs = vec![1.0; d * (k - 1) + 1];
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..r).collect();
    loop {
        out.push(hyperstar_eigenvector(
            k, d, lambda, r, &subset, &signs, opts,
        )?);
        // advance to the next r-subset of 0..d
        let Some(i) = (0..r).rev().find(|&i| subset[i] < d - r + i) else {
            return Ok(out);
        };
        subset[i] += 1;
        for j in i + 1..r {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// A `λ = 1` eigenvector: heart 0, first edge's pendants 1, second edge's pendants 1
/// except the last at -1.
pub fn hyperstar_lambda1_vector(k: usize, d: usize) -> Vec<f64> {
    let mut x = vec![0.0; d * (k - 1) + 1];
    for v in pendants(k, 0).chain(pendants(k, 1)) {
        x[v] = 1.0;
    }
    x[2 * (k - 1)] = -1.0;
    x
}

fn pendant_product_sum(k: usize, d: usize, x: &[f64]) -> f64 {
    (0..d)
        .map(|j| pendants(k, j).map(|v| x[v]).product::<f64>())
        .sum()
}

/// True iff `x ≠ 0`, `x_heart = 0` and the pendant products of the edges sum to 0, all on
/// the unit-infinity-norm representative within `tol_struct`.
pub fn hyperstar_lambda1_check(k: usize, d: usize, x: &[f64], tol_struct: f64) -> bool {
    if k < 3 || d < 1 || x.len() != d * (k - 1) + 1 {
        return false;
    }
    let m = inf_norm(x);
    if !(m > 0.0) || !m.is_finite() {
        return false;
    }
    let y: Vec<f64> = x.iter().map(|v| v / m).collect();
    let ok = y[0].abs() <= tol_struct && pendant_product_sum(k, d, &y).abs() <= tol_struct;
    if ok {
        debug_assert!(lambda1_residual(k, d, &y) <= 1e-9);
    }
    ok
}

fn lambda1_residual(k: usize, d: usize, x: &[f64]) -> f64 {
    generate(&FamilySpec::Hyperstar { k, d })
        .and_then(|h| crate::tensor::residual(&h, TensorKind::Laplacian, 1.0, x))
        .unwrap_or(f64::INFINITY)
}

/// `λ(L)`: the largest root of `f_d` in `(d, 2d]` for even `k`; `d` for odd `k`, where
/// `f_d > 0` on `(d, ∞)` and the heart indicator gives `λ = d`.
pub fn hyperstar_lambda_max(k: usize, d: usize, opts: &SolverOptions) -> Result<f64> {
    if k < 3 || d < 1 {
        return Err(Error::InvalidFamilyParameter(
            "hyperstar needs k >= 3 and d >= 1",
        ));
    }
    if k % 2 == 1 {
        return Ok(d as f64);
    }
    let f = HyperstarPolynomial { k, d, r: d };
    bisect(&f, d as f64, 2.0 * d as f64, opts)
}

/// Full H-spectrum of the Laplacian with one certified witness per value.
pub fn hyperstar_spectrum(k: usize, d: usize, opts: &SolverOptions) -> Result<SpectrumReport> {
    check_params(k, d)?;
    let spec = FamilySpec::Hyperstar { k, d };
    let h: UniformHypergraph = generate(&spec)?;
    let signs = vec![1.0; h.n()];
    let mut report = SpectrumReport::new(spec, d, "closed");
    for r in 0..=d {
        let chosen: Vec<usize> = (0..r).collect();
        for lambda in hyperstar_roots(k, d, r, opts) {
            let case = format!("f_r root, r={r}");
            report.add(
                match hyperstar_eigenvector(k, d, lambda, r, &chosen, &signs, opts) {
                    Ok(pair) => SpectrumEntry::certified(case, pair),
                    Err(_) => SpectrumEntry::uncertified(lambda, case),
                },
            );
        }
    }
    let one = EigenPair::new(
        &h,
        TensorKind::Laplacian,
        1.0,
        &hyperstar_lambda1_vector(k, d),
    )?;
    report.add(if one.is_certified(opts.tol_residual) {
        SpectrumEntry::certified("lambda=1 cored", one)
    } else {
        SpectrumEntry::uncertified(1.0, "lambda=1 cored")
    });
    Ok(report)
}
