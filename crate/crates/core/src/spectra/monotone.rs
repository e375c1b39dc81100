use alloc::vec::Vec;

use super::hyperstar_lambda_max;
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::solvers::{power_iteration_q, SolverOptions};

/// Consecutive values must drop by more than this, and stay this far above the floor.
pub const STRICTNESS_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneFamily {
    Hyperstar {
        d: usize,
    },
    /// Even `k` only, where `λ(L) = λ(Q)`.
    Hypercycle {
        s: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport {
    pub family: MonotoneFamily,
    /// `(k, λ(L))` in the order requested.
    pub values: Vec<(usize, f64)>,
    /// Maximum degree; a lower bound for every `λ(L)`.
    pub floor: f64,
    pub strictly_decreasing: bool,
    pub above_floor: bool,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.strictly_decreasing && self.above_floor
    }
}

/// `λ(L)` across uniformities for a fixed hyperstar size or hypercycle length.
pub fn monotonicity_check(
    family: MonotoneFamily,
    ks: &[usize],
    opts: &SolverOptions,
) -> Result<MonotonicityReport> {
    if ks.is_empty() || ks.windows(2).any(|w| w[0] >= w[1]) || ks[0] < 3 {
        return Err(Error::InvalidFamilyParameter(
            "k list must be ascending with every k >= 3",
        ));
    }
    let (floor, values) = match family {
        MonotoneFamily::Hyperstar { d } => {
            let vals = ks
                .iter()
                .map(|&k| hyperstar_lambda_max(k, d, opts).map(|l| (k, l)))
                .collect::<Result<Vec<_>>>()?;
            (d as f64, vals)
        }
        MonotoneFamily::Hypercycle { s } => {
            if ks.iter().any(|k| k % 2 == 1) {
                return Err(Error::InvalidFamilyParameter(
                    "hypercycle check needs even k",
                ));
            }
            let vals = ks
                .iter()
                .map(|&k| {
                    let h = generate(&FamilySpec::Hypercycle { k, s })?;
                    Ok((k, power_iteration_q(&h, opts)?.lambda))
                })
                .collect::<Result<Vec<_>>>()?;
            (2.0, vals)
        }
    };
    let strictly_decreasing = values
        .windows(2)
        .all(|w| w[0].1 - w[1].1 > STRICTNESS_MARGIN);
    let above_floor = values.iter().all(|&(_, l)| l - floor > STRICTNESS_MARGIN);
    Ok(MonotonicityReport {
        family,
        values,
        floor,
        strictly_decreasing,
        above_floor,
    })
}
