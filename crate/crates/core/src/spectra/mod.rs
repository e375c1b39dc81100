//! Closed-form spectrum catalogs for the named families, each entry certified by an
//! explicit eigenvector before it is reported as such.

mod hyperstar;
mod monotone;
mod odd;
mod paths;
mod sunflower;

use alloc::string::String;
use alloc::vec::Vec;

use crate::family::FamilySpec;
use crate::solvers::ROOT_DEDUP;
use crate::tensor::EigenPair;

pub use hyperstar::{
    hyperstar_eigenvector, hyperstar_eigenvectors, hyperstar_lambda1_check,
    hyperstar_lambda1_vector, hyperstar_lambda_max, hyperstar_roots, hyperstar_spectrum,
    HyperstarPolynomial,
};
pub use monotone::{monotonicity_check, MonotoneFamily, MonotonicityReport, STRICTNESS_MARGIN};
pub use odd::{cored_lambda1, odd_family_lambda_max, ORACLE_CLAIM_MARGIN};
pub use paths::{hypercycle3_spectrum, hyperpath3_spectrum};
pub use sunflower::{
    sunflower_lambda_max, sunflower_parametrization, SunflowerFunction, SunflowerParams,
};

/// One eigenvalue with the cases that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub lambda: f64,
    /// `"; "`-separated list of contributing cases.
    pub case: String,
    /// Invariant: `certified` implies `witness` is present and within `tol_residual`.
    pub certified: bool,
    pub witness: Option<EigenPair>,
}

impl SpectrumEntry {
    pub fn certified(case: impl Into<String>, witness: EigenPair) -> Self {
        SpectrumEntry {
            lambda: witness.lambda,
            case: case.into(),
            certified: true,
            witness: Some(witness),
        }
    }

    pub fn uncertified(lambda: f64, case: impl Into<String>) -> Self {
        SpectrumEntry {
            lambda,
            case: case.into(),
            certified: false,
            witness: None,
        }
    }

    fn absorb(&mut self, other: SpectrumEntry) {
        if !self.case.split("; ").any(|c| c == other.case) {
            self.case.push_str("; ");
            self.case.push_str(&other.case);
        }
        if !self.certified && other.certified {
            self.lambda = other.lambda;
            self.certified = true;
            self.witness = other.witness;
        }
    }
}

/// Ascending, deduplicated list of spectrum entries for one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub family: FamilySpec,
    pub k: usize,
    /// Maximum degree of the hypergraph.
    pub d: usize,
    pub method: &'static str,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn new(family: FamilySpec, d: usize, method: &'static str) -> Self {
        SpectrumReport {
            k: family.k(),
            family,
            d,
            method,
            entries: Vec::new(),
        }
    }

    /// Inserts in order, merging into an entry within [`ROOT_DEDUP`].
    pub fn add(&mut self, entry: SpectrumEntry) {
        if let Some(e) = self
            .entries
            .iter_mut()
            .find(|e| (e.lambda - entry.lambda).abs() <= ROOT_DEDUP)
        {
            e.absorb(entry);
            return;
        }
        let at = self.entries.partition_point(|e| e.lambda < entry.lambda);
        self.entries.insert(at, entry);
    }

    pub fn certified_lambdas(&self) -> Vec<f64> {
        self.entries
            .iter()
            .filter(|e| e.certified)
            .map(|e| e.lambda)
            .collect()
    }

    pub fn uncertified(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(|e| !e.certified)
    }

    pub fn max_certified(&self) -> Option<&SpectrumEntry> {
        self.entries.iter().rev().find(|e| e.certified)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_merges_and_sorts() {
        let mut r = SpectrumReport::new(FamilySpec::Hyperstar { k: 3, d: 2 }, 2, "closed");
        r.add(SpectrumEntry::uncertified(2.0, "a"));
        r.add(SpectrumEntry::uncertified(0.5, "b"));
        r.add(SpectrumEntry::uncertified(2.0 + 1e-9, "c"));
        r.add(SpectrumEntry::uncertified(2.0, "a"));
        assert_eq!(r.entries.len(), 2);
        assert_eq!(r.entries[0].lambda, 0.5);
        assert_eq!(r.entries[1].case, "a; c");
        assert!(r.max_certified().is_none());
    }
}
