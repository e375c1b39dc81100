use crate::error::{Error, Result};

/// Tolerances and limits shared by every numerical routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Final bracket width of bisection.
    pub tol_root: f64,
    /// Stop the power iteration once the Collatz bounds are this close.
    pub tol_iter: f64,
    /// Acceptance threshold for eigenpair residuals.
    pub tol_residual: f64,
    /// Tolerance of structural predicates and sign tests.
    pub tol_struct: f64,
    pub max_iter: usize,
    pub seed: u64,
    pub restarts: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol_root: 1e-12,
            tol_iter: 1e-10,
            tol_residual: 1e-9,
            tol_struct: 1e-8,
            max_iter: 100_000,
            seed: 42,
            restarts: 500,
        }
    }
}

impl SolverOptions {
    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let tols = [
            self.tol_root,
            self.tol_iter,
            self.tol_residual,
            self.tol_struct,
        ];
        if tols.iter().any(|t| !(*t > 0.0) || !t.is_finite()) {
            return Err(Error::InvalidOptions(
                "tolerances must be positive and finite",
            ));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidOptions("max_iter must be at least 1"));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidOptions("restarts must be at least 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SolverOptions::default().validate().is_ok());
        let bad = SolverOptions {
            tol_root: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        assert!(SolverOptions::default()
            .with_restarts(0)
            .validate()
            .is_err());
        let bad = SolverOptions {
            max_iter: 0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
