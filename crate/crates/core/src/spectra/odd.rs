use alloc::format;
use alloc::vec;

use super::SpectrumEntry;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::oracle::multistart_search;
use crate::solvers::SolverOptions;
use crate::tensor::{EigenPair, TensorKind};

/// An oracle eigenvalue above `2 + ORACLE_CLAIM_MARGIN` contradicts `λ(L) = 2`.
pub const ORACLE_CLAIM_MARGIN: f64 = 1e-6;

fn indicator(h: &UniformHypergraph, v: usize, lambda: f64) -> Result<EigenPair> {
    let mut x = vec![0.0; h.n()];
    x[v] = 1.0;
    EigenPair::new(h, TensorKind::Laplacian, lambda, &x)
}

/// `λ(L) = 2` for odd-uniform hypercycles, hyperpaths and sunflowers: the indicator of a
/// degree-2 vertex is the witness, and a multistart search with `opts.restarts` restarts
/// must find nothing above 2.
///
/// Accepts any connected cored hypergraph with odd `k` and maximum degree 2.
pub fn odd_family_lambda_max(h: &UniformHypergraph, opts: &SolverOptions) -> Result<SpectrumEntry> {
    if h.k().is_multiple_of(2) {
        return Err(Error::FamilyMismatch("odd uniformity required"));
    }
    let deg = h.degrees();
    if deg.max != 2 || !h.is_cored() || !h.is_connected() {
        return Err(Error::FamilyMismatch(
            "expected a connected cored hypergraph of maximum degree 2",
        ));
    }
    let junction = deg
        .degrees
        .iter()
        .position(|&d| d == 2)
        .expect("max degree is 2");
    let witness = indicator(h, junction, 2.0)?;
    for f in multistart_search(h, opts)? {
        if f.lambda > 2.0 + ORACLE_CLAIM_MARGIN {
            return Err(Error::ClaimContradicted {
                lambda: f.lambda,
                bound: 2.0,
            });
        }
    }
    let case = format!(
        "max degree (junction indicator); none above 2 in {} restarts",
        opts.restarts
    );
    Ok(SpectrumEntry::certified(case, witness))
}

/// `λ = 1` on a cored hypergraph, witnessed by the indicator of a degree-1 vertex.
pub fn cored_lambda1(h: &UniformHypergraph) -> Result<SpectrumEntry> {
    let cored = h.cored_structure().ok_or(Error::NotCored)?;
    Ok(SpectrumEntry::certified(
        "lambda=1 cored",
        indicator(h, cored[0], 1.0)?,
    ))
}
