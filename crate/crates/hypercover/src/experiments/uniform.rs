//! Uniform-bound measurement: the ratio `|S_n|^2 / (Λ0^2 ||htilde||^2)`
//! across a grid of polynomial degrees and rescalings must be bounded by a
//! single constant.

use rayon::prelude::*;

use crate::analysis::{PolynomialH, TestFunction, TransformPhi};
use crate::covers::{sample_hom_rejection, SampleBudget};
use crate::rng::stream_rng;
use crate::surface_group::{build_catalog, build_genus2_group};
use crate::trace_formula::geometric_side;

use super::ExperimentError;

#[derive(Debug, Clone)]
pub struct UniformBoundConfig {
    pub qs: Vec<usize>,
    pub lambda0s: Vec<f64>,
    pub degrees: Vec<usize>,
    pub covers_per_degree: usize,
    pub seed: u64,
    pub budget: SampleBudget,
}

#[derive(Debug, Clone)]
pub struct UniformBoundCell {
    pub q: usize,
    pub lambda0: f64,
    pub n: usize,
    pub max_ratio: f64,
}

#[derive(Debug, Clone)]
pub struct UniformBoundReport {
    pub cells: Vec<UniformBoundCell>,
    /// The measured constant: max ratio across the whole grid.
    pub max_ratio: f64,
}

/// Samples covers once per degree and evaluates every `(q, Λ0)` statistic on
/// each; the measured constant is the grid-wide max of
/// `|S_n|^2 / (Λ0^2 ||htilde||^2)`.
pub fn uniform_bound_measurement(
    cfg: &UniformBoundConfig,
) -> Result<UniformBoundReport, ExperimentError> {
    let tf = TestFunction::standard();
    let grid: Vec<(usize, f64, TransformPhi, f64)> = cfg
        .qs
        .iter()
        .flat_map(|&q| cfg.lambda0s.iter().map(move |&l| (q, l)))
        .map(|(q, l)| {
            let h = PolynomialH::oscillatory(q, tf);
            let norm = h.norm_sup();
            (q, l, TransformPhi::new(tf, &h, l), norm)
        })
        .collect();
    let max_radius = grid
        .iter()
        .map(|(_, _, phi, _)| phi.support_radius())
        .fold(0.0f64, f64::max);
    let group = build_genus2_group()?;
    let catalog = build_catalog(&group, max_radius.max(0.5))?;

    let mut cells: Vec<UniformBoundCell> = Vec::new();
    for &n in &cfg.degrees {
        let per_sample: Result<Vec<Vec<f64>>, ExperimentError> = (0..cfg.covers_per_degree)
            .into_par_iter()
            .map(|i| {
                let mut rng = stream_rng(cfg.seed, (n as u64) << 32 | i as u64);
                let (hom, _) = sample_hom_rejection(2, n, &mut rng, cfg.budget)?;
                grid.iter()
                    .map(|(_, lambda0, phi, norm)| {
                        let stat = geometric_side(&catalog, &hom, phi)?;
                        let s = stat.value / n as f64;
                        Ok(s * s / (lambda0 * lambda0 * norm * norm))
                    })
                    .collect()
            })
            .collect();
        let per_sample = per_sample?;
        for (gi, (q, lambda0, _, _)) in grid.iter().enumerate() {
            let max_ratio = per_sample
                .iter()
                .map(|ratios| ratios[gi])
                .fold(0.0f64, f64::max);
            cells.push(UniformBoundCell { q: *q, lambda0: *lambda0, n, max_ratio });
        }
    }
    let max_ratio = cells.iter().map(|c| c.max_ratio).fold(0.0f64, f64::max);
    Ok(UniformBoundReport { cells, max_ratio })
}
