//! The geometric side of the twisted trace formula and its companions:
//! volume term, Weyl-law predictions, hyperbolic distance, and the local
//! pre-trace sum over group elements.

mod geometric;
mod hyperbolic;
mod pretrace;
mod weyl;

pub use geometric::{geometric_side, volume_term, TraceStatistic};
pub use hyperbolic::{hyperbolic_distance, UhpPoint};
pub use pretrace::{lift_identity_check, pretrace_local_sum, PretraceSum};
pub use weyl::{predicted_eigenvalue, weyl_prediction, WeylPrediction};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("catalog cutoff {0} is below the test-function support radius {1}")]
    CatalogTooSmall(f64, f64),
    #[error("kernel support radius {0} exceeds the ball-enumeration scope {1}")]
    RadiusTooLarge(f64, f64),
    #[error("ball enumeration exceeded the node cap {0}")]
    BudgetExceeded(usize),
    #[error(transparent)]
    Analysis(#[from] crate::analysis::AnalysisError),
}
