//! Independent check of the catalogs: multistart damped Newton on the full system
//! `λ x_i^{k-1} = (L x^{k-1})_i`, Newton certification of candidate pairs, and comparison
//! of oracle findings with a catalog.
//!
//! The scale of `x` is fixed by pinning one coordinate at `±1`, which keeps the system
//! square in the remaining coordinates plus `λ`.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::linalg::least_squares;
use crate::solvers::SolverOptions;
use crate::spectra::SpectrumReport;
use crate::tensor::{adjacency_products, inf_norm, pow_sq, residual, EigenPair, TensorKind};

/// Largest admissible `k · |E|`.
pub const MAX_ORACLE_SIZE: usize = 10_000;
pub const MAX_NEWTON_STEPS: usize = 200;
pub const MAX_HALVINGS: usize = 30;
/// Findings closer than this in `λ` and [`VECTOR_DEDUP`] in `x` (up to sign) are one pair.
pub const LAMBDA_DEDUP: f64 = 1e-8;
pub const VECTOR_DEDUP: f64 = 1e-6;
const NEWTON_STOP: f64 = 1e-15;
/// Entries with `|x_i|^{k-1}` below this are invisible to the residual.
const SNAP: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleFinding {
    pub lambda: f64,
    /// Unit infinity norm; the first entry of maximal magnitude is `+1`.
    pub x: Vec<f64>,
    pub residual: f64,
    /// Restarts that converged to this pair.
    pub basin_count: usize,
}

struct Newton<'a> {
    h: &'a UniformHypergraph,
    deg: Vec<f64>,
    fixed: usize,
    free_lambda: bool,
}

impl Newton<'_> {
    // F_i = (λ - d_i) x_i^{k-1} + (A x^{k-1})_i
    fn eval(&self, lambda: f64, x: &[f64]) -> Vec<f64> {
        let k1 = self.h.k() - 1;
        let a = adjacency_products(self.h, x).expect("length checked on entry");
        x.iter()
            .zip(&self.deg)
            .zip(a)
            .map(|((&xi, &di), ai)| (lambda - di) * pow_sq(xi, k1) + ai)
            .collect()
    }

    fn jacobian(&self, lambda: f64, x: &[f64]) -> DMatrix<f64> {
        let n = x.len();
        let k = self.h.k();
        let mut full = DMatrix::<f64>::zeros(n, n);
        for (i, (&xi, &di)) in x.iter().zip(&self.deg).enumerate() {
            full[(i, i)] = (k - 1) as f64 * (lambda - di) * pow_sq(xi, k - 2);
        }
        for e in self.h.edges() {
            for (a, &i) in e.iter().enumerate() {
                for (b, &j) in e.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    let p: f64 = e
                        .iter()
                        .enumerate()
                        .filter(|&(c, _)| c != a && c != b)
                        .map(|(_, &s)| x[s])
                        .product();
                    full[(i, j)] += p;
                }
            }
        }
        let cols = n - 1 + usize::from(self.free_lambda);
        let mut jac = DMatrix::<f64>::zeros(n, cols);
        for (c, j) in (0..n).filter(|&j| j != self.fixed).enumerate() {
            jac.set_column(c, &full.column(j));
        }
        if self.free_lambda {
            for (i, &xi) in x.iter().enumerate() {
                jac[(i, n - 1)] = pow_sq(xi, k - 1);
            }
        }
        jac
    }

    /// Damped Newton (least-squares steps); stops on convergence, step cap, or when no
    /// halving decreases `‖F‖∞`.
    fn run(&self, mut lambda: f64, mut x: Vec<f64>) -> (f64, Vec<f64>) {
        let n = x.len();
        let mut f = self.eval(lambda, &x);
        let mut norm = inf_norm(&f);
        for _ in 0..MAX_NEWTON_STEPS {
            if !(norm > NEWTON_STOP) {
                break;
            }
            let rhs = DVector::from_iterator(n, f.iter().map(|v| -v));
            let Some(delta) = least_squares(self.jacobian(lambda, &x), &rhs) else {
                break;
            };
            let mut t = 1.0;
            let mut accepted = false;
            for _ in 0..=MAX_HALVINGS {
                let mut trial = x.clone();
                for (c, j) in (0..n).filter(|&j| j != self.fixed).enumerate() {
                    trial[j] += t * delta[c];
                }
                let trial_lambda = if self.free_lambda {
                    lambda + t * delta[n - 1]
                } else {
                    lambda
                };
                let tf = self.eval(trial_lambda, &trial);
                let tn = inf_norm(&tf);
                if tn.is_finite() && tn < norm {
                    x = trial;
                    lambda = trial_lambda;
                    f = tf;
                    norm = tn;
                    accepted = true;
                    break;
                }
                t /= 2.0;
            }
            if !accepted {
                break;
            }
        }
        (lambda, x)
    }
}

/// Zeroes entries the residual cannot resolve (`|x_i|^{k-1} ≤ SNAP` on the unit-norm
/// representative) when that keeps the residual within `tol`. Newton converges only linearly
/// towards such zeros, so they otherwise linger at `~SNAP^{1/(k-1)}`.
fn snap_zeros(h: &UniformHypergraph, lambda: f64, x: Vec<f64>, tol: f64) -> Vec<f64> {
    let m = inf_norm(&x);
    if !(m > 0.0) || !m.is_finite() {
        return x;
    }
    let snapped: Vec<f64> = x
        .iter()
        .map(|&v| {
            if pow_sq((v / m).abs(), h.k() - 1) <= SNAP {
                0.0
            } else {
                v
            }
        })
        .collect();
    if snapped == x {
        return x;
    }
    match residual(h, TensorKind::Laplacian, lambda, &snapped) {
        Ok(r) if r <= tol => snapped,
        _ => x,
    }
}

fn argmax_abs(x: &[f64]) -> usize {
    let m = inf_norm(x);
    x.iter()
        .position(|v| v.abs() >= m * (1.0 - 1e-9))
        .unwrap_or(0)
}

/// Scales to unit infinity norm with the first near-maximal entry positive, so `x` and `-x`
/// share one representative.
fn canonical(x: &[f64]) -> Vec<f64> {
    let s = x[argmax_abs(x)];
    x.iter().map(|v| v / s).collect()
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(p, q)| (p - q).abs() <= tol)
}

fn same_pair(f: &OracleFinding, lambda: f64, x: &[f64]) -> bool {
    if (f.lambda - lambda).abs() > LAMBDA_DEDUP {
        return false;
    }
    let neg: Vec<f64> = x.iter().map(|v| -v).collect();
    close(&f.x, x, VECTOR_DEDUP) || close(&f.x, &neg, VECTOR_DEDUP)
}

/// Laplacian eigenpairs reached from `opts.restarts` random starts, ascending by `λ`.
///
/// Restart `r` draws `x ∈ [-1, 1]^n` and `λ ∈ [0, 2d]` from a generator seeded with
/// `seed + r`, so a run with more restarts extends one with fewer.
pub fn multistart_search(
    h: &UniformHypergraph,
    opts: &SolverOptions,
) -> Result<Vec<OracleFinding>> {
    opts.validate()?;
    let size = h.k() * h.num_edges();
    if size > MAX_ORACLE_SIZE {
        return Err(Error::InstanceTooLarge { size });
    }
    let profile = h.degrees();
    let newton_for = |fixed| Newton {
        h,
        deg: profile.degrees.iter().map(|&d| d as f64).collect(),
        fixed,
        free_lambda: true,
    };
    let lambda_hi = 2.0 * profile.max as f64;
    let mut findings: Vec<OracleFinding> = Vec::new();
    for r in 0..opts.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(r as u64));
        let x0: Vec<f64> = (0..h.n()).map(|_| rng.random_range(-1.0..=1.0)).collect();
        let lambda0 = rng.random_range(0.0..=lambda_hi);
        let fixed = argmax_abs(&x0);
        let scale = x0[fixed].abs();
        if !(scale > 0.0) {
            continue;
        }
        let x0: Vec<f64> = x0.iter().map(|v| v / scale).collect();
        let (lambda, x) = newton_for(fixed).run(lambda0, x0);
        if !lambda.is_finite() || x.iter().any(|v| !v.is_finite()) {
            continue;
        }
        let x = canonical(&snap_zeros(h, lambda, x, opts.tol_residual));
        let Ok(res) = residual(h, TensorKind::Laplacian, lambda, &x) else {
            continue;
        };
        if res > opts.tol_residual {
            continue;
        }
        match findings.iter_mut().find(|f| same_pair(f, lambda, &x)) {
            Some(f) => f.basin_count += 1,
            None => findings.push(OracleFinding {
                lambda,
                x,
                residual: res,
                basin_count: 1,
            }),
        }
    }
    findings.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    Ok(findings)
}

/// Refines `x0` by Gauss-Newton with `λ` frozen; `Some` only if the refined pair's residual
/// is within `opts.tol_residual`.
pub fn certify(
    h: &UniformHypergraph,
    lambda: f64,
    x0: &[f64],
    opts: &SolverOptions,
) -> Option<EigenPair> {
    if x0.len() != h.n() || !lambda.is_finite() {
        return None;
    }
    let x0 = canonical_checked(x0)?;
    let newton = Newton {
        h,
        deg: h.degrees().degrees.iter().map(|&d| d as f64).collect(),
        fixed: argmax_abs(&x0),
        free_lambda: false,
    };
    let (_, x) = newton.run(lambda, x0);
    let x = snap_zeros(h, lambda, x, opts.tol_residual);
    let pair = EigenPair::new(h, TensorKind::Laplacian, lambda, &x).ok()?;
    pair.is_certified(opts.tol_residual).then_some(pair)
}

fn canonical_checked(x: &[f64]) -> Option<Vec<f64>> {
    let m = inf_norm(x);
    (m > 0.0 && m.is_finite()).then(|| canonical(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareStatus {
    /// Every oracle eigenvalue is in the catalog.
    OracleSubset,
    /// The oracle certified an eigenvalue the catalog lacks.
    Disagreement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumComparison {
    /// `(catalog λ, oracle λ)` pairs within tolerance.
    pub matched: Vec<(f64, f64)>,
    /// Certified catalog values the oracle never reached.
    pub catalog_only: Vec<f64>,
    /// Distinct oracle values absent from the certified catalog.
    pub oracle_only: Vec<f64>,
    pub status: CompareStatus,
}

/// Compares the certified entries of a catalog with the distinct eigenvalues of a finding list.
pub fn spectrum_compare(
    catalog: &SpectrumReport,
    findings: &[OracleFinding],
    tol: f64,
) -> SpectrumComparison {
    let cat = catalog.certified_lambdas();
    let mut oracle: Vec<f64> = findings.iter().map(|f| f.lambda).collect();
    oracle.sort_by(f64::total_cmp);
    oracle.dedup_by(|next, kept| (*next - *kept).abs() <= tol);
    let near = |a: f64, b: f64| (a - b).abs() <= tol;
    let mut matched = Vec::new();
    let mut catalog_only = Vec::new();
    for &c in &cat {
        match oracle.iter().find(|&&o| near(c, o)) {
            Some(&o) => matched.push((c, o)),
            None => catalog_only.push(c),
        }
    }
    let oracle_only: Vec<f64> = oracle
        .iter()
        .copied()
        .filter(|&o| !cat.iter().any(|&c| near(c, o)))
        .collect();
    let status = if oracle_only.is_empty() {
        CompareStatus::OracleSubset
    } else {
        CompareStatus::Disagreement
    };
    SpectrumComparison {
        matched,
        catalog_only,
        oracle_only,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use alloc::vec;

    fn star32() -> UniformHypergraph {
        generate(&FamilySpec::Hyperstar { k: 3, d: 2 }).unwrap()
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let h = generate(&FamilySpec::Hyperpath { k: 4, d: 2 }).unwrap();
        let newton = Newton {
            h: &h,
            deg: h.degrees().degrees.iter().map(|&d| d as f64).collect(),
            fixed: 2,
            free_lambda: true,
        };
        let x: Vec<f64> = (0..h.n())
            .map(|i| 0.3 + 0.1 * i as f64 * if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect();
        let lambda = 0.7;
        let jac = newton.jacobian(lambda, &x);
        let step = 1e-6;
        let free: Vec<usize> = (0..h.n()).filter(|&j| j != 2).collect();
        for (c, &j) in free.iter().enumerate() {
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[j] += step;
            xm[j] -= step;
            let (fp, fm) = (newton.eval(lambda, &xp), newton.eval(lambda, &xm));
            for i in 0..h.n() {
                let fd = (fp[i] - fm[i]) / (2.0 * step);
                assert!((fd - jac[(i, c)]).abs() < 1e-7, "d F_{i} / d x_{j}");
            }
        }
        let (fp, fm) = (
            newton.eval(lambda + step, &x),
            newton.eval(lambda - step, &x),
        );
        for i in 0..h.n() {
            assert!(((fp[i] - fm[i]) / (2.0 * step) - jac[(i, h.n() - 1)]).abs() < 1e-7);
        }
    }

    #[test]
    fn certify_accepts_true_pairs_and_rejects_others() {
        let h = star32();
        let opts = SolverOptions::default();
        let mut e1 = vec![0.0; 5];
        e1[0] = 1.0;
        let pair = certify(&h, 2.0, &e1, &opts).unwrap();
        assert_eq!(pair.residual, 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x0: Vec<f64> = (0..5).map(|_| rng.random_range(-1.0..=1.0)).collect();
            assert!(certify(&h, 1.5, &x0, &opts).is_none());
        }
        assert!(certify(&h, 2.0, &[0.0; 5], &opts).is_none());
    }

    #[test]
    fn certify_refines_a_perturbed_vector() {
        let h = star32();
        let lambda = 0.245_122_333_753_307_2;
        let x0 = [1.0 - lambda + 1e-4, 1.0, 1.0 - 1e-4, 0.0, 1e-5];
        let pair = certify(&h, lambda, &x0, &SolverOptions::default()).unwrap();
        assert!(pair.residual <= 1e-9);
    }

    #[test]
    fn search_is_deterministic_and_within_bounds() {
        let h = star32();
        let opts = SolverOptions::default().with_restarts(60);
        let a = multistart_search(&h, &opts).unwrap();
        let b = multistart_search(&h, &opts).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
        for f in &a {
            assert!(f.lambda >= -1e-8 && f.lambda <= 4.0 + 1e-8);
            let again = residual(&h, TensorKind::Laplacian, f.lambda, &f.x).unwrap();
            assert!((again - f.residual).abs() <= 1e-12);
            assert!(f.residual <= opts.tol_residual);
        }
    }

    #[test]
    fn too_large_is_rejected() {
        let h = generate(&FamilySpec::Hyperpath { k: 3, d: 5001 }).unwrap();
        assert_eq!(
            multistart_search(&h, &SolverOptions::default()),
            Err(Error::InstanceTooLarge { size: 15003 })
        );
    }

    #[test]
    fn compare_empty() {
        let r = SpectrumReport::new(FamilySpec::Hyperstar { k: 3, d: 2 }, 2, "closed");
        let c = spectrum_compare(&r, &[], 1e-6);
        assert!(c.matched.is_empty() && c.catalog_only.is_empty() && c.oracle_only.is_empty());
        assert_eq!(c.status, CompareStatus::OracleSubset);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(8))]
        #[test]
        fn more_restarts_extend_the_findings(seed in 0u64..1000) {
            let h = star32();
            let small = SolverOptions::default().with_seed(seed).with_restarts(20);
            let large = small.with_restarts(40);
            let a = multistart_search(&h, &small).unwrap();
            let b = multistart_search(&h, &large).unwrap();
            proptest::prop_assert_eq!(&a, &multistart_search(&h, &small).unwrap());
            for f in &a {
                proptest::prop_assert!(b.iter().any(|g| same_pair(g, f.lambda, &f.x)));
                proptest::prop_assert!(f.lambda >= -1e-8);
            }
        }
    }
}
