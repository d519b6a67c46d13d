//! Paper-level experiments: variance decay of the trace statistic, the
//! uniform-bound measurement, Markov-brothers checks, and the exact-moment
//! polynomial pipeline.

mod markov;
mod pipeline;
mod report;
mod uniform;
mod variance;

pub use markov::{markov_brothers_check, MarkovCheck, Poly};
pub use pipeline::{polynomial_method_pipeline, PipelineReport};
pub use report::{prediction_table_csv, statistic_csv_row, variance_csv, variance_summary_json};
pub use uniform::{uniform_bound_measurement, UniformBoundCell, UniformBoundConfig, UniformBoundReport};
pub use variance::{run_variance_experiment, DegreeRow, GeodesicKernel, VarianceConfig, VarianceRun};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("polynomial degree {0} exceeds the declared bound {1}")]
    DegreeTooHigh(usize, usize),
    #[error(transparent)]
    Cover(#[from] crate::covers::CoverError),
    #[error(transparent)]
    Trace(#[from] crate::trace_formula::TraceError),
    #[error(transparent)]
    SurfaceGroup(#[from] crate::surface_group::SurfaceGroupError),
}
