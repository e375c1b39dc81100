//! Edge-based contractions `T x^{k-1}` for the adjacency, Laplacian and signless
//! Laplacian tensors, and H-eigenpair residuals.
//!
//! The order-k tensors are never materialised. For the adjacency tensor the `1/(k-1)!`
//! entry weight cancels against the `(k-1)!` orderings of each edge, so
//! `(A x^{k-1})_i = Σ_{e ∋ i} Π_{s ∈ e \ {i}} x_s`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TensorKind {
    Adjacency,
    Laplacian,
    Signless,
}

impl TensorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TensorKind::Adjacency => "adjacency",
            TensorKind::Laplacian => "laplacian",
            TensorKind::Signless => "signless",
        }
    }
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for TensorKind {
    type Err = ();
    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "adjacency" => Ok(TensorKind::Adjacency),
            "laplacian" => Ok(TensorKind::Laplacian),
            "signless" => Ok(TensorKind::Signless),
            _ => Err(()),
        }
    }
}

/// `x^e` by repeated squaring.
pub fn pow_sq(x: f64, mut e: usize) -> f64 {
    let mut base = x;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

fn check_len(h: &UniformHypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    Ok(())
}

/// `(A x^{k-1})_i` for every vertex, using prefix/suffix products inside each edge.
pub fn adjacency_products(h: &UniformHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(h, x)?;
    let k = h.k();
    let mut out = vec![0.0; h.n()];
    let mut prefix = vec![1.0; k + 1];
    for e in h.edges() {
        for (j, &v) in e.iter().enumerate() {
            prefix[j + 1] = prefix[j] * x[v];
        }
        let mut suffix = 1.0;
        for (j, &v) in e.iter().enumerate().rev() {
            out[v] += prefix[j] * suffix;
            suffix *= x[v];
        }
    }
    Ok(out)
}

/// `T x^{k-1}` for the chosen tensor kind.
pub fn apply(h: &UniformHypergraph, kind: TensorKind, x: &[f64]) -> Result<Vec<f64>> {
    let mut a = adjacency_products(h, x)?;
    if kind == TensorKind::Adjacency {
        return Ok(a);
    }
    let deg = h.degrees().degrees;
    for ((ai, &xi), &di) in a.iter_mut().zip(x).zip(&deg) {
        let diag = di as f64 * pow_sq(xi, h.k() - 1);
        *ai = match kind {
            TensorKind::Laplacian => diag - *ai,
            _ => diag + *ai,
        };
    }
    Ok(a)
}

/// Largest absolute entry.
pub fn inf_norm(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// `x / ‖x‖_∞`.
pub fn normalized(x: &[f64]) -> Result<Vec<f64>> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let m = inf_norm(x);
    if m == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(x.iter().map(|v| v / m).collect())
}

/// `max_i |λ x_i^{k-1} - (T x^{k-1})_i|` on the unit-∞-norm representative of `x`.
pub fn residual(h: &UniformHypergraph, kind: TensorKind, lambda: f64, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    let u = normalized(x)?;
    let t = apply(h, kind, &u)?;
    Ok(u.iter()
        .zip(&t)
        .map(|(&ui, &ti)| (lambda * pow_sq(ui, h.k() - 1) - ti).abs())
        .fold(0.0, f64::max))
}

/// An H-eigenpair candidate with its recomputed residual.
///
/// `x` is stored with unit infinity norm.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub lambda: f64,
    pub x: Vec<f64>,
    pub kind: TensorKind,
    pub residual: f64,
}

impl EigenPair {
    pub fn new(h: &UniformHypergraph, kind: TensorKind, lambda: f64, x: &[f64]) -> Result<Self> {
        let residual = residual(h, kind, lambda, x)?;
        Ok(EigenPair {
            lambda,
            x: normalized(x)?,
            kind,
            residual,
        })
    }

    pub fn is_certified(&self, tol_residual: f64) -> bool {
        self.residual <= tol_residual
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn star32() -> UniformHypergraph {
        generate(&FamilySpec::Hyperstar { k: 3, d: 2 }).unwrap()
    }

    #[test]
    fn pow_sq_matches_naive() {
        for e in 0..10 {
            let naive: f64 = (0..e).fold(1.0, |a, _| a * -1.3);
            assert!((pow_sq(-1.3, e) - naive).abs() <= 1e-12 * naive.abs().max(1.0));
        }
    }

    #[test]
    fn laplacian_of_heart_indicator() {
        let h = star32();
        let y = apply(&h, TensorKind::Laplacian, &[1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(y, vec![2.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn laplacian_kills_all_ones_and_signless_doubles_degrees() {
        let h = star32();
        let ones = vec![1.0; 5];
        assert_eq!(
            apply(&h, TensorKind::Laplacian, &ones).unwrap(),
            vec![0.0; 5]
        );
        assert_eq!(
            apply(&h, TensorKind::Signless, &ones).unwrap(),
            vec![4.0, 2.0, 2.0, 2.0, 2.0]
        );
    }

    #[test]
    fn residual_examples() {
        let h = star32();
        let e1 = [1.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(residual(&h, TensorKind::Laplacian, 2.0, &e1).unwrap(), 0.0);
        let x = [0.0, 1.0, 1.0, 1.0, -1.0];
        assert_eq!(residual(&h, TensorKind::Laplacian, 1.0, &x).unwrap(), 0.0);
        assert_eq!(
            residual(&h, TensorKind::Laplacian, 2.0, &[1.0; 5]).unwrap(),
            2.0
        );
    }

    #[test]
    fn residual_errors() {
        let h = star32();
        assert_eq!(
            residual(&h, TensorKind::Laplacian, 1.0, &[0.0; 5]),
            Err(Error::ZeroVector)
        );
        assert_eq!(
            residual(&h, TensorKind::Laplacian, 1.0, &[1.0; 4]),
            Err(Error::DimensionMismatch {
                expected: 5,
                found: 4
            })
        );
        assert_eq!(
            apply(&h, TensorKind::Adjacency, &[1.0; 6]),
            Err(Error::DimensionMismatch {
                expected: 5,
                found: 6
            })
        );
    }

    #[test]
    fn residual_is_scale_invariant() {
        let h = star32();
        let x = [0.3, -0.7, 0.2, 0.9, -0.1];
        let r1 = residual(&h, TensorKind::Signless, 1.7, &x).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| -4.0 * v).collect();
        let r2 = residual(&h, TensorKind::Signless, 1.7, &scaled).unwrap();
        assert!((r1 - r2).abs() <= 1e-14);
    }

    #[test]
    fn regular_signless_row_sums() {
        let h = generate(&FamilySpec::Complete { k: 3, n: 5 }).unwrap();
        let d = h.degrees().max as f64;
        assert_eq!(
            residual(&h, TensorKind::Signless, 2.0 * d, &[1.0; 5]).unwrap(),
            0.0
        );
        assert_eq!(
            residual(&h, TensorKind::Laplacian, 0.0, &[1.0; 5]).unwrap(),
            0.0
        );
    }

    use proptest::prelude::*;

    fn hypergraph_and_vector() -> impl Strategy<Value = (UniformHypergraph, Vec<f64>)> {
        crate::test_support::hypergraph().prop_flat_map(|h| {
            let n = h.n();
            (Just(h), proptest::collection::vec(-2.0f64..2.0, n))
        })
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
    }

    proptest! {
        #[test]
        fn laplacian_and_signless_split_into_diagonal_and_adjacency((h, x) in hypergraph_and_vector()) {
            let a = apply(&h, TensorKind::Adjacency, &x).unwrap();
            let l = apply(&h, TensorKind::Laplacian, &x).unwrap();
            let q = apply(&h, TensorKind::Signless, &x).unwrap();
            let deg = h.degrees().degrees;
            for i in 0..h.n() {
                let diag = deg[i] as f64 * pow_sq(x[i], h.k() - 1);
                prop_assert!(close(l[i], diag - a[i], 1e-12));
                prop_assert!(close(q[i], diag + a[i], 1e-12));
            }
        }

        #[test]
        fn contraction_is_homogeneous((h, x) in hypergraph_and_vector()) {
            for kind in [TensorKind::Adjacency, TensorKind::Laplacian, TensorKind::Signless] {
                let base = apply(&h, kind, &x).unwrap();
                for c in [-1.0, 2.0] {
                    let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
                    let got = apply(&h, kind, &scaled).unwrap();
                    let factor = pow_sq(c, h.k() - 1);
                    for (g, b) in got.iter().zip(&base) {
                        prop_assert!(close(*g, factor * b, 1e-10));
                    }
                }
            }
        }

        #[test]
        fn all_ones_is_a_zero_eigenvector(h in crate::test_support::hypergraph()) {
            prop_assert_eq!(residual(&h, TensorKind::Laplacian, 0.0, &vec![1.0; h.n()]).unwrap(), 0.0);
        }
    }
}
