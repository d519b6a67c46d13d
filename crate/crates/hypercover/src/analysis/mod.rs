//! Test-function construction, Chebyshev machinery, quadrature, transforms.

mod bump;
mod cheby;
mod cutoff;
mod kernel;
mod quad;
mod testfn;
mod transform;

pub use bump::BumpProfile;
pub use cheby::{chebyshev_fit, ck_norm, PolynomialH};
pub use cutoff::{smooth_cutoff, SmoothStep};
pub use kernel::{abel_invert, selberg_kernel, RadialTestFn, SmoothBumpPhi};
pub use quad::{
    adaptive_integral, gauss_legendre, spectral_measure_integral, weyl_integral, weyl_integrand,
    GlRule,
};
pub use testfn::{EvalPoint, TestFunction};
pub use transform::{f_inverse_transform, f_lambda0_inverse_fourier_support, TransformPhi};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("eval_f domain: {0}")]
    Domain(String),
    #[error("adaptive quadrature failed to converge (reached depth {0})")]
    NonConvergent(usize),
    #[error("c0 calibration failed: no c >= {0} satisfies the constraints")]
    CalibrationFailed(f64),
}
