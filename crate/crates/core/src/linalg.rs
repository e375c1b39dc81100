use nalgebra::{DMatrix, DVector};

/// Minimum-norm least-squares solution of `a · x = b` through an SVD, dropping singular
/// values below `1e-12 · σ_max`. Returns `None` if the decomposition fails or `a` is zero.
pub(crate) fn least_squares(a: DMatrix<f64>, b: &DVector<f64>) -> Option<DVector<f64>> {
    let svd = a.svd(true, true);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    if !(smax > 0.0) || !smax.is_finite() {
        return None;
    }
    svd.solve(b, 1e-12 * smax).ok()
}
