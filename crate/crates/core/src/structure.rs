//! Structural predicates that Laplacian H-eigenvectors of cored and power hypergraphs
//! must satisfy. They are run against computed pairs as consistency checks.

use alloc::vec::Vec;

use crate::hypergraph::UniformHypergraph;
use crate::tensor::{EigenPair, TensorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralCheck {
    /// λ ≠ 1: cored vertices sharing an edge have equal |x| (equal x for odd k).
    CoredMagnitude,
    /// λ ≥ 1: edge products are nonpositive (for odd k, products over `e \ {i_e}`).
    EdgeSign,
    /// Odd k, λ ≠ 1, edges with one or two intersectional vertices:
    /// `(1-λ) x_s = x_i` or `x_i x_j = (1-λ) x_s²` at a nonzero cored vertex `s`.
    PowerRelation,
    /// Odd k, λ > 1: `x_i x_s < 0` (one intersectional vertex) or `x_i x_j < 0` (two).
    SignAlternation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CheckStatus {
    Passed { worst: f64 },
    Failed { worst: f64, edge: usize },
    NotApplicable(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub check: StructuralCheck,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructuralReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl StructuralReport {
    pub fn all_passed(&self) -> bool {
        !self
            .outcomes
            .iter()
            .any(|o| matches!(o.status, CheckStatus::Failed { .. }))
    }

    pub fn status(&self, check: StructuralCheck) -> Option<CheckStatus> {
        self.outcomes
            .iter()
            .find(|o| o.check == check)
            .map(|o| o.status)
    }
}

// Largest violation over edges; `None` from the closure means the edge is skipped.
fn sweep(
    h: &UniformHypergraph,
    tol: f64,
    mut violation: impl FnMut(usize, &[usize]) -> Option<f64>,
) -> CheckStatus {
    let mut worst = 0.0;
    let mut worst_edge = 0;
    for (idx, e) in h.edges().enumerate() {
        if let Some(v) = violation(idx, e) {
            if v > worst {
                worst = v;
                worst_edge = idx;
            }
        }
    }
    if worst <= tol {
        CheckStatus::Passed { worst }
    } else {
        CheckStatus::Failed {
            worst,
            edge: worst_edge + 1,
        }
    }
}

/// Evaluates every applicable structural predicate on a Laplacian pair.
pub fn structural_checks(
    h: &UniformHypergraph,
    pair: &EigenPair,
    tol_struct: f64,
) -> StructuralReport {
    let mut outcomes = Vec::with_capacity(4);
    let mut push = |check, status| outcomes.push(CheckOutcome { check, status });
    let all = [
        StructuralCheck::CoredMagnitude,
        StructuralCheck::EdgeSign,
        StructuralCheck::PowerRelation,
        StructuralCheck::SignAlternation,
    ];
    if pair.kind != TensorKind::Laplacian || pair.x.len() != h.n() {
        for c in all {
            push(
                c,
                CheckStatus::NotApplicable("not a Laplacian pair of this hypergraph"),
            );
        }
        return StructuralReport { outcomes };
    }
    let k = h.k();
    let odd = k % 2 == 1;
    let x = &pair.x;
    let lambda = pair.lambda;
    let deg = h.degrees().degrees;
    let cored = h.cored_structure();
    let away_from_one = (lambda - 1.0).abs() > tol_struct;

    push(
        StructuralCheck::CoredMagnitude,
        match (&cored, away_from_one) {
            (None, _) => CheckStatus::NotApplicable("hypergraph is not cored"),
            (_, false) => CheckStatus::NotApplicable("lambda = 1"),
            _ => sweep(h, tol_struct, |_, e| {
                let mut cv = e.iter().filter(|&&v| deg[v] == 1).map(|&v| x[v]);
                let first = cv.next()?;
                cv.map(|xv| {
                    if odd {
                        (xv - first).abs()
                    } else {
                        (xv.abs() - first.abs()).abs()
                    }
                })
                .reduce(f64::max)
            }),
        },
    );

    push(
        StructuralCheck::EdgeSign,
        match &cored {
            None => CheckStatus::NotApplicable("hypergraph is not cored"),
            Some(_) if lambda < 1.0 - tol_struct => CheckStatus::NotApplicable("lambda < 1"),
            Some(core) => sweep(h, tol_struct, |idx, e| {
                let p: f64 = e
                    .iter()
                    .filter(|&&v| !odd || v != core[idx])
                    .map(|&v| x[v])
                    .product();
                Some(p)
            }),
        },
    );

    // One or two intersectional vertices per edge, the rest cored.
    let power_like = h.edges().all(|e| {
        let inter = e.iter().filter(|&&v| deg[v] > 1).count();
        inter <= 2 && inter < e.len()
    });
    let power_status = |check: StructuralCheck| {
        if !odd {
            return CheckStatus::NotApplicable("k is even");
        }
        if !power_like {
            return CheckStatus::NotApplicable("not a power hypergraph");
        }
        match check {
            StructuralCheck::PowerRelation if !away_from_one => {
                CheckStatus::NotApplicable("lambda = 1")
            }
            StructuralCheck::SignAlternation if lambda <= 1.0 + tol_struct => {
                CheckStatus::NotApplicable("lambda <= 1")
            }
            _ => sweep(h, tol_struct, |_, e| {
                let inter: Vec<f64> = e.iter().filter(|&&v| deg[v] > 1).map(|&v| x[v]).collect();
                let s = e
                    .iter()
                    .filter(|&&v| deg[v] == 1)
                    .map(|&v| x[v])
                    .fold(0.0, |a: f64, b| if b.abs() > a.abs() { b } else { a });
                if s.abs() <= tol_struct {
                    return None;
                }
                match (check, inter.as_slice()) {
                    (StructuralCheck::PowerRelation, [i]) => Some(((1.0 - lambda) * s - i).abs()),
                    (StructuralCheck::PowerRelation, [i, j]) => {
                        Some((i * j - (1.0 - lambda) * s * s).abs())
                    }
                    (_, [i]) => Some(i * s),
                    (_, [i, j]) => Some(i * j),
                    _ => None,
                }
            }),
        }
    };
    push(
        StructuralCheck::PowerRelation,
        power_status(StructuralCheck::PowerRelation),
    );
    push(
        StructuralCheck::SignAlternation,
        power_status(StructuralCheck::SignAlternation),
    );
    StructuralReport { outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use alloc::vec;

    #[test]
    fn heart_indicator_passes_everything() {
        let h = generate(&FamilySpec::Hyperstar { k: 3, d: 2 }).unwrap();
        let pair =
            EigenPair::new(&h, TensorKind::Laplacian, 2.0, &[1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let rep = structural_checks(&h, &pair, 1e-8);
        assert!(rep.all_passed());
        assert!(matches!(
            rep.status(StructuralCheck::CoredMagnitude),
            Some(CheckStatus::Passed { .. })
        ));
        assert!(matches!(
            rep.status(StructuralCheck::EdgeSign),
            Some(CheckStatus::Passed { .. })
        ));
    }

    #[test]
    fn unequal_cored_values_fail() {
        let h = generate(&FamilySpec::Hyperstar { k: 3, d: 2 }).unwrap();
        let pair = EigenPair {
            lambda: 0.5,
            x: vec![0.5, 1.0, 0.2, 0.0, 0.0],
            kind: TensorKind::Laplacian,
            residual: 0.0,
        };
        let rep = structural_checks(&h, &pair, 1e-8);
        assert!(matches!(
            rep.status(StructuralCheck::CoredMagnitude),
            Some(CheckStatus::Failed { edge: 1, .. })
        ));
    }

    #[test]
    fn not_applicable_classes() {
        let h = generate(&FamilySpec::Complete { k: 3, n: 4 }).unwrap();
        let pair = EigenPair::new(&h, TensorKind::Laplacian, 0.0, &[1.0; 4]).unwrap();
        let rep = structural_checks(&h, &pair, 1e-8);
        assert!(rep
            .outcomes
            .iter()
            .all(|o| matches!(o.status, CheckStatus::NotApplicable(_))));
        let s = generate(&FamilySpec::Sunflower { k: 3 }).unwrap();
        let pair = EigenPair::new(&s, TensorKind::Signless, 4.0, &[1.0; 7]).unwrap();
        assert!(matches!(
            structural_checks(&s, &pair, 1e-8).status(StructuralCheck::EdgeSign),
            Some(CheckStatus::NotApplicable(_))
        ));
    }
}
