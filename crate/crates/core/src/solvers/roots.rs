use alloc::vec::Vec;

use super::SolverOptions;
use crate::error::{Error, Result};

/// Roots closer than this are reported once.
pub const ROOT_DEDUP: f64 = 1e-8;

const GRID_CELLS: usize = 10_000;
const TANGENT_CANDIDATE: f64 = 1e-6;
const TANGENT_ACCEPT: f64 = 1e-12;

/// A real function of one real variable.
pub trait ScalarFunction {
    fn eval(&self, x: f64) -> f64;

    /// Central difference unless overridden.
    fn derivative(&self, x: f64) -> f64 {
        let h = 6e-6 * x.abs().max(1.0);
        (self.eval(x + h) - self.eval(x - h)) / (2.0 * h)
    }

    /// Interval on which `eval` is finite.
    fn domain(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// Closure adaptor.
pub struct FnScalar<F> {
    f: F,
    domain: (f64, f64),
}

impl<F: Fn(f64) -> f64> FnScalar<F> {
    pub fn new(f: F) -> Self {
        FnScalar {
            f,
            domain: (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn on(f: F, lo: f64, hi: f64) -> Self {
        FnScalar {
            f,
            domain: (lo, hi),
        }
    }
}

impl<F: Fn(f64) -> f64> ScalarFunction for FnScalar<F> {
    fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    fn domain(&self) -> (f64, f64) {
        self.domain
    }
}

fn same_sign(a: f64, b: f64) -> bool {
    (a > 0.0) == (b > 0.0)
}

/// Bisection on a sign-changing bracket followed by a Newton polish that must stay inside
/// the final bracket.
pub fn bisect<F: ScalarFunction + ?Sized>(
    f: &F,
    lo: f64,
    hi: f64,
    opts: &SolverOptions,
) -> Result<f64> {
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f.eval(a);
    let fb = f.eval(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !fa.is_finite() || !fb.is_finite() || same_sign(fa, fb) {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    let mut iterations = 0;
    while b - a > opts.tol_root {
        let m = a + (b - a) / 2.0;
        if m <= a || m >= b {
            break;
        }
        if iterations == opts.max_iter {
            return Err(Error::MaxIterations {
                iterations,
                lower: a,
                upper: b,
            });
        }
        iterations += 1;
        let fm = f.eval(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if same_sign(fm, fa) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let mut x = a + (b - a) / 2.0;
    let mut fx = f.eval(x);
    for _ in 0..8 {
        let d = f.derivative(x);
        if d == 0.0 || !d.is_finite() || fx == 0.0 {
            break;
        }
        let next = x - fx / d;
        if !(a..=b).contains(&next) {
            break;
        }
        let fnext = f.eval(next);
        if fnext.abs() >= fx.abs() {
            break;
        }
        x = next;
        fx = fnext;
    }
    Ok(x)
}

/// Every real root on `[lo, hi]` found by a 10^4-cell sign scan (bisecting each sign change)
/// plus Newton from grid minima of `|f|` below `1e-6` for even-multiplicity roots.
/// Ascending, deduplicated at [`ROOT_DEDUP`].
pub fn all_real_roots<F: ScalarFunction + ?Sized>(
    f: &F,
    lo: f64,
    hi: f64,
    opts: &SolverOptions,
) -> Vec<f64> {
    let step = (hi - lo) / GRID_CELLS as f64;
    let grid: Vec<f64> = (0..=GRID_CELLS).map(|i| lo + i as f64 * step).collect();
    let vals: Vec<f64> = grid.iter().map(|&x| f.eval(x)).collect();
    let mut roots = Vec::new();
    for (i, (&x, &v)) in grid.iter().zip(&vals).enumerate() {
        if v == 0.0 {
            roots.push(x);
            continue;
        }
        if i == GRID_CELLS || !v.is_finite() {
            continue;
        }
        let w = vals[i + 1];
        if w.is_finite() && w != 0.0 && !same_sign(v, w) {
            if let Ok(r) = bisect(f, x, grid[i + 1], opts) {
                roots.push(r);
            }
        }
    }
    for i in 1..GRID_CELLS {
        let (p, v, q) = (vals[i - 1], vals[i], vals[i + 1]);
        if !(p.is_finite() && v.is_finite() && q.is_finite()) || v == 0.0 {
            continue;
        }
        let local_min = v.abs() <= p.abs() && v.abs() <= q.abs() && v.abs() < TANGENT_CANDIDATE;
        if !local_min || !same_sign(p, v) || !same_sign(v, q) {
            continue;
        }
        if let Some(r) = tangent_newton(f, grid[i], grid[i - 1], grid[i + 1]) {
            roots.push(r);
        }
    }
    roots.sort_by(f64::total_cmp);
    dedup_sorted(&mut roots, ROOT_DEDUP);
    roots
}

fn tangent_newton<F: ScalarFunction + ?Sized>(f: &F, start: f64, lo: f64, hi: f64) -> Option<f64> {
    let mut x = start;
    let mut fx = f.eval(x);
    for _ in 0..200 {
        if fx == 0.0 {
            break;
        }
        let d = f.derivative(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - fx / d;
        if !(lo..=hi).contains(&next) || next == x {
            break;
        }
        let fnext = f.eval(next);
        if !fnext.is_finite() || fnext.abs() > fx.abs() {
            break;
        }
        x = next;
        fx = fnext;
    }
    (fx.abs() <= TANGENT_ACCEPT).then_some(x)
}

pub(crate) fn dedup_sorted(xs: &mut Vec<f64>, tol: f64) {
    xs.dedup_by(|next, kept| (*next - *kept).abs() <= tol);
}
