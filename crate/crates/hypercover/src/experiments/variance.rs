//! Monte Carlo measurement of the variance decay of the normalized
//! geometric-side statistic
//!
//! ```text
//! S_n = (1/n) Σ_γ Σ_k  ℓ_γ/(2 sinh(k ℓ_γ/2)) φ(k ℓ_γ) Tr ρ(γ^k)
//! ```
//!
//! over uniform degree-n covers. The statistic is already centered: by the
//! trace formula it equals the spectral average minus the volume term.

use rayon::prelude::*;

use crate::analysis::{PolynomialH, RadialTestFn, SmoothBumpPhi, TestFunction, TransformPhi};
use crate::covers::{sample_hom_rejection, SampleBudget};
use crate::rng::stream_rng;
use crate::surface_group::{build_catalog, build_genus2_group};
use crate::trace_formula::geometric_side;

use super::ExperimentError;

/// Which even test kernel multiplies the geodesic terms.
#[derive(Debug, Clone)]
pub enum GeodesicKernel {
    /// The polynomial spectral window `φ = (h ∘ f_{Λ0})^∨` with
    /// `h(x) = x T_{q-1}(2x/f(i/2) - 1)`.
    PolyWindow { q: usize, lambda0: f64 },
    /// A plain even bump supported on `±[center-width, center+width]`;
    /// exercises the same machinery with a window that can straddle the
    /// length spectrum regardless of the support constraint on `f-check`.
    Bump { center: f64, width: f64 },
}

#[derive(Debug, Clone)]
pub struct VarianceConfig {
    pub genus: u32,
    pub degrees: Vec<usize>,
    pub samples_per_degree: usize,
    pub kernel: GeodesicKernel,
    pub seed: u64,
    pub budget: SampleBudget,
}

#[derive(Debug, Clone)]
pub struct DegreeRow {
    pub n: usize,
    pub samples: usize,
    /// Monte Carlo mean of `S_n^2`.
    pub mean_sq: f64,
    /// `sqrt(Var(S_n^2) / samples)`.
    pub std_err: f64,
    pub mean_s: f64,
    pub var_s: f64,
    pub accepted_trials: u64,
    pub rejected_trials: u64,
}

#[derive(Debug, Clone)]
pub struct VarianceRun {
    pub config: VarianceConfig,
    /// `sup |htilde|` for the polynomial window, 1.0 for bump kernels.
    pub norm_sup: f64,
    pub support_radius: f64,
    pub catalog_entries: usize,
    pub rows: Vec<DegreeRow>,
    /// Log-log slope of `mean_sq` against n over rows with positive mean;
    /// `None` when fewer than two such rows exist (e.g. an identically zero
    /// statistic).
    pub slope: Option<f64>,
    pub slope_std_err: Option<f64>,
}

pub(crate) fn build_kernel(
    kernel: &GeodesicKernel,
) -> (Box<dyn RadialTestFn + Send + Sync>, f64) {
    match kernel {
        GeodesicKernel::PolyWindow { q, lambda0 } => {
            let tf = TestFunction::standard();
            let h = PolynomialH::oscillatory(*q, tf);
            let norm = h.norm_sup();
            (Box::new(TransformPhi::new(tf, &h, *lambda0)), norm)
        }
        GeodesicKernel::Bump { center, width } => {
            (Box::new(SmoothBumpPhi::new(*center, *width, 1.0)), 1.0)
        }
    }
}

/// Runs the experiment. Sampling streams are addressed by
/// `(seed, n << 32 | sample_index)`, so results are reproducible bit-for-bit
/// for any worker count.
pub fn run_variance_experiment(cfg: &VarianceConfig) -> Result<VarianceRun, ExperimentError> {
    assert_eq!(cfg.genus, 2, "v1 experiments run on the genus-2 surface");
    let (phi, norm_sup) = build_kernel(&cfg.kernel);
    let radius = phi.radius();
    let group = build_genus2_group()?;
    let catalog = build_catalog(&group, radius.max(0.5))?;

    let mut rows = Vec::with_capacity(cfg.degrees.len());
    for &n in &cfg.degrees {
        let per_sample: Result<Vec<(f64, u64)>, ExperimentError> = (0..cfg.samples_per_degree)
            .into_par_iter()
            .map(|i| {
                let mut rng = stream_rng(cfg.seed, (n as u64) << 32 | i as u64);
                let (hom, trials) = sample_hom_rejection(2, n, &mut rng, cfg.budget)?;
                let stat = geometric_side(&catalog, &hom, phi.as_ref())?;
                Ok((stat.value / n as f64, trials))
            })
            .collect();
        let per_sample = per_sample?;

        let samples = per_sample.len();
        let total_trials: u64 = per_sample.iter().map(|&(_, t)| t).sum();
        let mean_s = per_sample.iter().map(|&(s, _)| s).sum::<f64>() / samples as f64;
        let var_s = per_sample
            .iter()
            .map(|&(s, _)| (s - mean_s) * (s - mean_s))
            .sum::<f64>()
            / samples as f64;
        let mean_sq = per_sample.iter().map(|&(s, _)| s * s).sum::<f64>() / samples as f64;
        let var_sq = per_sample
            .iter()
            .map(|&(s, _)| (s * s - mean_sq) * (s * s - mean_sq))
            .sum::<f64>()
            / samples as f64;
        rows.push(DegreeRow {
            n,
            samples,
            mean_sq,
            std_err: (var_sq / samples as f64).sqrt(),
            mean_s,
            var_s,
            accepted_trials: samples as u64,
            rejected_trials: total_trials - samples as u64,
        });
    }

    let (slope, slope_std_err) = fit_loglog_slope(&rows);
    Ok(VarianceRun {
        config: cfg.clone(),
        norm_sup,
        support_radius: radius,
        catalog_entries: catalog.entries.len(),
        rows,
        slope,
        slope_std_err,
    })
}

/// OLS slope of `ln mean_sq` against `ln n` over rows with `mean_sq > 0`.
fn fit_loglog_slope(rows: &[DegreeRow]) -> (Option<f64>, Option<f64>) {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.mean_sq > 0.0)
        .map(|r| ((r.n as f64).ln(), r.mean_sq.ln()))
        .collect();
    if pts.len() < 2 {
        return (None, None);
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return (None, None);
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let dof = (pts.len() as f64 - 2.0).max(1.0);
    let ss_res: f64 = pts
        .iter()
        .map(|&(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let se = (ss_res / dof / (sxx - sx * sx / n)).sqrt();
    (Some(slope), Some(se))
}
