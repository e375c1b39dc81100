//! Collatz-bracketed power iteration for the largest H-eigenvalue of the signless Laplacian
//! of a connected hypergraph.
//!
//! Each step forms `y = Q x^{k-1}` and moves to `x ← y^{1/(k-1)}` scaled to unit infinity norm.
//! For positive `x` the ratios `y_i / x_i^{k-1}` bracket `λ(Q)`; the bracket never widens.

use alloc::vec;
use alloc::vec::Vec;

use super::SolverOptions;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::tensor::{apply, pow_sq, residual, EigenPair, TensorKind};

/// Collatz bounds `min_i y_i/x_i^{k-1} ≤ λ(Q) ≤ max_i y_i/x_i^{k-1}` of one iterate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

impl Bounds {
    pub fn gap(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Stepwise driver; `x()` is always the iterate whose bounds the last `step` returned.
#[derive(Debug, Clone)]
pub struct PowerIteration<'a> {
    h: &'a UniformHypergraph,
    x: Vec<f64>,
    y: Option<Vec<f64>>,
    iterations: usize,
}

impl<'a> PowerIteration<'a> {
    /// Starts from the all-ones vector.
    pub fn new(h: &'a UniformHypergraph) -> Result<Self> {
        if !h.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(PowerIteration {
            h,
            x: vec![1.0; h.n()],
            y: None,
            iterations: 0,
        })
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn step(&mut self) -> Result<Bounds> {
        let k1 = self.h.k() - 1;
        if let Some(y) = self.y.take() {
            let root = 1.0 / k1 as f64;
            let mut next: Vec<f64> = y.iter().map(|&v| libm::pow(v, root)).collect();
            let m = next.iter().copied().fold(0.0, f64::max);
            for v in &mut next {
                *v /= m;
            }
            if next.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
                return Err(Error::NonPositiveIterate {
                    iteration: self.iterations,
                });
            }
            self.x = next;
        }
        let y = apply(self.h, TensorKind::Signless, &self.x)?;
        let mut bounds = Bounds {
            lower: f64::INFINITY,
            upper: f64::NEG_INFINITY,
        };
        for (&xi, &yi) in self.x.iter().zip(&y) {
            let r = yi / pow_sq(xi, k1);
            bounds.lower = bounds.lower.min(r);
            bounds.upper = bounds.upper.max(r);
        }
        self.y = Some(y);
        self.iterations += 1;
        Ok(bounds)
    }
}

/// `λ(Q)` as the midpoint of the final bracket, with the positive iterate as witness.
pub fn power_iteration_q(h: &UniformHypergraph, opts: &SolverOptions) -> Result<EigenPair> {
    let mut it = PowerIteration::new(h)?;
    let mut last = None;
    while it.iterations() < opts.max_iter {
        let b = it.step()?;
        last = Some(b);
        if b.gap() <= opts.tol_iter {
            let lambda = b.lower + b.gap() / 2.0;
            let res = residual(h, TensorKind::Signless, lambda, it.x())?;
            if res > opts.tol_residual {
                return Err(Error::CertificationFailed { residual: res });
            }
            return EigenPair::new(h, TensorKind::Signless, lambda, it.x());
        }
    }
    let b = last.unwrap_or(Bounds {
        lower: f64::NAN,
        upper: f64::NAN,
    });
    Err(Error::MaxIterations {
        iterations: it.iterations(),
        lower: b.lower,
        upper: b.upper,
    })
}

/// `λ(L)` of an even-uniform cored hypergraph: `λ(Q)` with the sign of each edge's chosen
/// cored vertex flipped in the positive `Q` eigenvector.
pub fn lambda_l_even_cored(h: &UniformHypergraph, opts: &SolverOptions) -> Result<EigenPair> {
    if h.k() % 2 == 1 {
        return Err(Error::OddUniformity { k: h.k() });
    }
    let cored = h.cored_structure().ok_or(Error::NotCored)?;
    let q = power_iteration_q(h, opts)?;
    let mut x = q.x;
    for v in cored {
        x[v] = -x[v];
    }
    let pair = EigenPair::new(h, TensorKind::Laplacian, q.lambda, &x)?;
    if !pair.is_certified(opts.tol_residual) {
        return Err(Error::CertificationFailed {
            residual: pair.residual,
        });
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn regular_hypergraph_converges_immediately() {
        let h = generate(&FamilySpec::Complete { k: 3, n: 5 }).unwrap();
        let q = power_iteration_q(&h, &opts()).unwrap();
        // every vertex has degree C(4,2) = 6
        assert_eq!(q.lambda, 12.0);
        assert!(q.x.iter().all(|&v| v == 1.0));
    }

    #[test]
    fn bounds_are_monotone_and_bracket_lambda() {
        let h = generate(&FamilySpec::Hyperstar { k: 4, d: 3 }).unwrap();
        let lambda = power_iteration_q(&h, &opts()).unwrap().lambda;
        let mut it = PowerIteration::new(&h).unwrap();
        let mut prev = it.step().unwrap();
        for _ in 0..200 {
            let b = it.step().unwrap();
            assert!(b.lower >= prev.lower - 1e-12 && b.upper <= prev.upper + 1e-12);
            assert!(b.lower <= lambda + 1e-10 && lambda <= b.upper + 1e-10);
            prev = b;
        }
        assert!(lambda >= 3.0);
    }

    #[test]
    fn disconnected_is_rejected() {
        let h = UniformHypergraph::new(
            3,
            6,
            alloc::vec![alloc::vec![0, 1, 2], alloc::vec![3, 4, 5]],
        )
        .unwrap();
        assert_eq!(
            power_iteration_q(&h, &opts()).unwrap_err(),
            Error::NotConnected
        );
    }

    #[test]
    fn iteration_cap_reports_bracket() {
        let h = generate(&FamilySpec::Hyperpath { k: 3, d: 4 }).unwrap();
        let o = SolverOptions {
            max_iter: 2,
            ..opts()
        };
        match power_iteration_q(&h, &o) {
            Err(Error::MaxIterations {
                iterations: 2,
                lower,
                upper,
            }) => assert!(lower < upper),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn laplacian_of_even_cored_shares_lambda() {
        let h = generate(&FamilySpec::Hyperstar { k: 4, d: 3 }).unwrap();
        let q = power_iteration_q(&h, &opts()).unwrap();
        let l = lambda_l_even_cored(&h, &opts()).unwrap();
        assert_eq!(q.lambda.to_bits(), l.lambda.to_bits());
        assert_eq!(l.kind, TensorKind::Laplacian);
        assert!(l.residual <= 1e-9);
        let odd = generate(&FamilySpec::Hyperstar { k: 3, d: 3 }).unwrap();
        assert_eq!(
            lambda_l_even_cored(&odd, &opts()).unwrap_err(),
            Error::OddUniformity { k: 3 }
        );
        let complete = generate(&FamilySpec::Complete { k: 4, n: 5 }).unwrap();
        assert_eq!(
            lambda_l_even_cored(&complete, &opts()).unwrap_err(),
            Error::NotCored
        );
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn bracket_is_monotone_and_lambda_is_bounded(h in crate::test_support::power_of_tree()) {
            let q = power_iteration_q(&h, &opts()).unwrap();
            let d = h.degrees().max as f64;
            prop_assert!(q.lambda >= d - 1e-10 && q.lambda <= 2.0 * d + 1e-10);
            prop_assert!(q.residual <= 1e-9);
            let mut it = PowerIteration::new(&h).unwrap();
            let mut prev = it.step().unwrap();
            for _ in 0..50 {
                let b = it.step().unwrap();
                prop_assert!(b.lower >= prev.lower - 1e-12 && b.upper <= prev.upper + 1e-12);
                prev = b;
            }
        }
    }
}
