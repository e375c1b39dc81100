//! Closed-form `λ_max(L)` for hypergraphs recognised as a hyperstar, a sunflower, or an
//! odd-uniform connected cored hypergraph of maximum degree 2.

use hyperlap_core::spectra::{hyperstar_lambda_max, odd_family_lambda_max, sunflower_lambda_max};
use hyperlap_core::{
    generate, EigenPair, Error, FamilySpec, SolverOptions, SpectrumEntry, TensorKind,
    UniformHypergraph,
};

use crate::CliError;

/// The vertex shared by every edge when all other vertices have degree 1.
fn hyperstar_heart(h: &UniformHypergraph) -> Option<usize> {
    let deg = h.degrees().degrees;
    let m = h.num_edges();
    let heart = deg.iter().position(|&d| d == m)?;
    deg.iter()
        .enumerate()
        .all(|(v, &d)| v == heart || d == 1)
        .then_some(heart)
}

fn hyperstar_entry(
    h: &UniformHypergraph,
    heart: usize,
    opts: &SolverOptions,
) -> Result<SpectrumEntry, CliError> {
    let (k, d) = (h.k(), h.num_edges());
    let lambda = hyperstar_lambda_max(k, d, opts)?;
    let x: Vec<f64> = if k % 2 == 1 {
        (0..h.n())
            .map(|v| if v == heart { 1.0 } else { 0.0 })
            .collect()
    } else {
        (0..h.n())
            .map(|v| if v == heart { 1.0 - lambda } else { 1.0 })
            .collect()
    };
    let pair = EigenPair::new(h, TensorKind::Laplacian, lambda, &x)?;
    if !pair.is_certified(opts.tol_residual) {
        return Err(Error::CertificationFailed {
            residual: pair.residual,
        }
        .into());
    }
    let case = if k % 2 == 1 {
        "hyperstar, heart indicator"
    } else {
        "hyperstar, largest root of f_d"
    };
    Ok(SpectrumEntry::certified(case, pair))
}

pub(crate) fn closed_lambda_max(
    h: &UniformHypergraph,
    opts: &SolverOptions,
) -> Result<SpectrumEntry, CliError> {
    if let Some(heart) = hyperstar_heart(h) {
        return hyperstar_entry(h, heart, opts);
    }
    let k = h.k();
    if k.is_multiple_of(2)
        && generate(&FamilySpec::Sunflower { k })?.canonicalized() == h.canonicalized()
    {
        return Ok(sunflower_lambda_max(k, opts)?);
    }
    if k % 2 == 1 && h.degrees().max == 2 && h.is_cored() && h.is_connected() {
        return Ok(odd_family_lambda_max(h, opts)?);
    }
    Err(CliError::Input(
        "no closed form known for this hypergraph (hyperstars, even sunflowers in canonical numbering, \
         and odd-uniform connected cored hypergraphs of maximum degree 2 are supported)"
            .into(),
    ))
}
