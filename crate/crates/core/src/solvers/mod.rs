//! Numerical kernels: scalar root finding and the signless-Laplacian power iteration.

mod options;
mod power;
mod roots;

pub use options::SolverOptions;
pub use power::{lambda_l_even_cored, power_iteration_q, Bounds, PowerIteration};
pub use roots::{all_real_roots, bisect, FnScalar, ScalarFunction, ROOT_DEDUP};
