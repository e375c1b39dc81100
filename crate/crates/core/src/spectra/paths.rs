//! Laplacian spectra of the odd-uniform hyperpath and hypercycle with three edges.
//!
//! Each case fixes which pendant blocks are nonzero. Pendants of one edge then share a
//! value determined by the junction values, and the junction equations reduce to a
//! scalar equation in `λ`. Every real root of every case equation is a candidate; it is
//! reported as certified only once Newton from the case's eigenvector shape (λ frozen)
//! reaches the residual tolerance. Tags spell out the equation that produced the root.
//!
//! Two case equations have competing forms; both are scanned:
//! - hyperpath, both end blocks nonzero with equal junctions: squaring the junction
//!   equation gives `[(λ-2)(1-λ)^{k-1}+1]^2 = (1-λ)^k`; the form with the factor
//!   `(1-λ)^k` on the left is also scanned.
//! - hypercycle, two nonzero pendant blocks: `α = γ = (1/2)^{1/k}` gives
//!   `(λ-2)^2(1-λ)^{k-2} = 2`; the constant `2·4^{1/k}` is also scanned. For `k = 3` the
//!   single pendant of the zero block forces `αγ = 0`, so neither form certifies.
//! - hypercycle, all three blocks nonzero with `s = t`: the forms ending in `(2-λ)+2` and
//!   `2(2-λ)+2` are scanned on both sign branches.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{cored_lambda1, SpectrumEntry, SpectrumReport};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::hypergraph::UniformHypergraph;
use crate::oracle::certify;
use crate::solvers::{all_real_roots, FnScalar, SolverOptions, ROOT_DEDUP};
use crate::tensor::{pow_sq, EigenPair, TensorKind};

fn check_k(k: usize) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::OddUniformityRequired { k });
    }
    Ok(())
}

// Real k-th root (odd k for negative arguments).
fn real_root(v: f64, k: usize) -> f64 {
    libm::copysign(libm::pow(v.abs(), 1.0 / k as f64), v)
}

fn add_case(
    report: &mut SpectrumReport,
    h: &UniformHypergraph,
    tag: &str,
    f: impl Fn(f64) -> f64,
    (lo, hi): (f64, f64),
    starts: impl Fn(f64) -> Vec<Vec<f64>>,
    opts: &SolverOptions,
) {
    let roots = all_real_roots(&FnScalar::on(f, lo, hi), lo, hi, opts);
    for lambda in roots.into_iter().filter(|l| (l - 1.0).abs() > ROOT_DEDUP) {
        let pair = starts(lambda)
            .iter()
            .filter(|x| x.iter().all(|v| v.is_finite()))
            .find_map(|x| certify(h, lambda, x, opts));
        report.add(match pair {
            Some(p) => SpectrumEntry::certified(String::from(tag), p),
            None => SpectrumEntry::uncertified(lambda, String::from(tag)),
        });
    }
}

fn add_common(report: &mut SpectrumReport, h: &UniformHypergraph, junction: usize) -> Result<()> {
    let ones = EigenPair::new(h, TensorKind::Laplacian, 0.0, &vec![1.0; h.n()])?;
    report.add(SpectrumEntry::certified("zero (all-ones)", ones));
    report.add(cored_lambda1(h)?);
    let mut e = vec![0.0; h.n()];
    e[junction] = 1.0;
    let two = EigenPair::new(h, TensorKind::Laplacian, 2.0, &e)?;
    report.add(SpectrumEntry::certified(
        "max degree (junction indicator)",
        two,
    ));
    Ok(())
}

/// Hyperpath `e1 = {0..=k-1}`, `e2 = {k-1..=2k-2}`, `e3 = {2k-2..=3k-3}` with junctions
/// `α = x[k-1]`, `β = x[2k-2]` and pendant blocks `u, v, w`.
fn path_vector(k: usize, u: f64, alpha: f64, v: f64, beta: f64, w: f64) -> Vec<f64> {
    let mut x = vec![0.0; 3 * k - 2];
    x[..k - 1].fill(u);
    x[k - 1] = alpha;
    x[k..2 * k - 2].fill(v);
    x[2 * k - 2] = beta;
    x[2 * k - 1..].fill(w);
    x
}

/// Laplacian spectrum of the hyperpath with three edges, odd `k`.
pub fn hyperpath3_spectrum(k: usize, opts: &SolverOptions) -> Result<SpectrumReport> {
    check_k(k)?;
    let spec = FamilySpec::Hyperpath { k, d: 3 };
    let h = generate(&spec)?;
    let mut report = SpectrumReport::new(spec, 2, "closed+certify");
    add_common(&mut report, &h, k - 1)?;
    let p = |l: f64, e: usize| pow_sq(1.0 - l, e);
    let mirrored = |x: Vec<f64>| {
        let mut y = x.clone();
        y.reverse();
        vec![x, y]
    };

    add_case(
        &mut report,
        &h,
        "one end block: (λ-2)(1-λ)^(k-1) + 1 = 0",
        |l| (l - 2.0) * p(l, k - 1) + 1.0,
        (0.0, 1.0),
        |l| mirrored(path_vector(k, 0.0, 0.0, 0.0, 1.0, 1.0 / (1.0 - l))),
        opts,
    );
    add_case(
        &mut report,
        &h,
        "middle block: (λ-2)^2(1-λ)^(k-2) - 1 = 0",
        |l| pow_sq(l - 2.0, 2) * p(l, k - 2) - 1.0,
        (0.0, 1.0),
        |l| {
            let m = libm::sqrt(1.0 / (1.0 - l));
            vec![
                path_vector(k, 0.0, 1.0, m, 1.0, 0.0),
                path_vector(k, 0.0, 1.0, -m, 1.0, 0.0),
            ]
        },
        opts,
    );
    add_case(
        &mut report,
        &h,
        "middle and end blocks: (λ-2)^2(1-λ)^(k-1) + 2λ - 3 = 0",
        |l| pow_sq(l - 2.0, 2) * p(l, k - 1) + 2.0 * l - 3.0,
        (0.0, 2.0),
        |l| {
            let t = real_root(1.0 / (pow_sq(l - 2.0, 2) * p(l, k - 2)), k);
            let m = libm::sqrt(t / (1.0 - l));
            let mut out = Vec::new();
            for s in [m, -m] {
                out.extend(mirrored(path_vector(k, 0.0, t, s, 1.0, 1.0 / (1.0 - l))));
            }
            out
        },
        opts,
    );
    let symmetric = |l: f64| {
        let c = 1.0 / (1.0 - l);
        let m = libm::sqrt(c);
        vec![
            path_vector(k, c, 1.0, m, 1.0, c),
            path_vector(k, c, 1.0, -m, 1.0, c),
        ]
    };
    add_case(
        &mut report,
        &h,
        "both end blocks, α = β: [(λ-2)(1-λ)^(k-1) + 1]^2 = (1-λ)^k",
        |l| pow_sq((l - 2.0) * p(l, k - 1) + 1.0, 2) - p(l, k),
        (0.0, 1.0),
        symmetric,
        opts,
    );
    add_case(
        &mut report,
        &h,
        "both end blocks, α = β: [(λ-2)(1-λ)^(k-1) + 1]^2 (1-λ)^k = 1",
        |l| pow_sq((l - 2.0) * p(l, k - 1) + 1.0, 2) * p(l, k) - 1.0,
        (0.0, 1.0),
        symmetric,
        opts,
    );
    Ok(report)
}

/// Hypercycle `e1 = {0..=k-1}`, `e2 = {k-1..=2k-2}`, `e3 = {2k-2..=3k-4, 0}` with junctions
/// `α = x[0]`, `β = x[k-1]`, `γ = x[2k-2]` and pendant blocks `p1, p2, p3`.
fn cycle_vector(
    k: usize,
    alpha: f64,
    p1: f64,
    beta: f64,
    p2: f64,
    gamma: f64,
    p3: f64,
) -> Vec<f64> {
    let mut x = vec![0.0; 3 * (k - 1)];
    x[0] = alpha;
    x[1..k - 1].fill(p1);
    x[k - 1] = beta;
    x[k..2 * k - 2].fill(p2);
    x[2 * k - 2] = gamma;
    x[2 * k - 1..].fill(p3);
    x
}

/// Laplacian spectrum of the hypercycle with three edges, odd `k`.
pub fn hypercycle3_spectrum(k: usize, opts: &SolverOptions) -> Result<SpectrumReport> {
    check_k(k)?;
    let spec = FamilySpec::Hypercycle { k, s: 3 };
    let h = generate(&spec)?;
    let mut report = SpectrumReport::new(spec, 2, "closed+certify");
    add_common(&mut report, &h, 0)?;
    let p = |l: f64, e: usize| pow_sq(1.0 - l, e);

    add_case(
        &mut report,
        &h,
        "one block: (λ-2)^2(1-λ)^(k-2) - 1 = 0",
        |l| pow_sq(l - 2.0, 2) * p(l, k - 2) - 1.0,
        (0.0, 1.0),
        |l| {
            let m = libm::sqrt(1.0 / (1.0 - l));
            vec![
                cycle_vector(k, 1.0, m, 1.0, 0.0, 0.0, 0.0),
                cycle_vector(k, 1.0, -m, 1.0, 0.0, 0.0, 0.0),
            ]
        },
        opts,
    );
    let two_blocks = |l: f64| {
        let s = libm::pow(0.5, 1.0 / k as f64);
        let m = libm::sqrt(s / (1.0 - l));
        vec![
            cycle_vector(k, s, m, 1.0, m, s, 0.0),
            cycle_vector(k, s, -m, 1.0, -m, s, 0.0),
        ]
    };
    let quarter_root = libm::pow(4.0, 1.0 / k as f64);
    for (tag, c) in [
        ("two blocks: (λ-2)^2(1-λ)^(k-2) - 2 = 0", 2.0),
        (
            "two blocks: (λ-2)^2(1-λ)^(k-2) - 2·4^(1/k) = 0",
            2.0 * quarter_root,
        ),
    ] {
        add_case(
            &mut report,
            &h,
            tag,
            |l| pow_sq(l - 2.0, 2) * p(l, k - 2) - c,
            (0.0, 1.0),
            two_blocks,
            opts,
        );
    }
    let three_blocks = |l: f64| {
        let s_eq = libm::pow(pow_sq(2.0 - l, 2) * p(l, k - 2) / 4.0, 1.0 / k as f64);
        let s_sum = libm::pow(0.5, 2.0 / k as f64);
        let mut out = Vec::new();
        for s in [s_eq, s_sum] {
            let m = libm::sqrt(s / (1.0 - l));
            let m3 = libm::sqrt(s * s / (1.0 - l));
            for (a, b) in [(m, m3), (m, -m3), (-m, m3), (-m, -m3)] {
                out.push(cycle_vector(k, s, a, 1.0, a, s, b));
            }
        }
        out
    };
    for (branch, sign) in [("+", 1.0), ("-", -1.0)] {
        let term = move |l: f64| pow_sq(sign * libm::sqrt(1.0 - l), k - 2);
        for (form, factor) in [("(2-λ) + 2", 1.0), ("2(2-λ) + 2", 2.0)] {
            let tag = format!(
                "three blocks, s = t, {branch} branch: [(λ-2) + (±√(1-λ))^(k-2)]·{form} = 0"
            );
            add_case(
                &mut report,
                &h,
                &tag,
                |l| ((l - 2.0) + term(l)) * factor * (2.0 - l) + 2.0,
                (0.0, 1.0),
                three_blocks,
                opts,
            );
        }
    }
    Ok(report)
}
