//! Plain-text result emission: CSV bodies and the JSON summary. All reals
//! are printed with 17 significant digits so files round-trip doubles.

use std::fmt::Write as _;

use serde::Serialize;

use crate::trace_formula::{predicted_eigenvalue, weyl_prediction, TraceStatistic};

use super::variance::{GeodesicKernel, VarianceRun};

fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn kernel_tag(k: &GeodesicKernel) -> (String, f64, f64) {
    match k {
        GeodesicKernel::PolyWindow { q, lambda0 } => {
            ("variance".to_string(), *q as f64, *lambda0)
        }
        GeodesicKernel::Bump { center, width } => {
            (format!("variance-bump[{center};{width}]"), 0.0, 0.0)
        }
    }
}

/// `experiment,n,samples,mean_sq,std_err,seed` rows.
pub fn variance_csv(run: &VarianceRun) -> String {
    let (tag, _, _) = kernel_tag(&run.config.kernel);
    let mut out = String::from("experiment,n,samples,mean_sq,std_err,seed\n");
    for row in &run.rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            tag,
            row.n,
            row.samples,
            real(row.mean_sq),
            real(row.std_err),
            run.config.seed
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct VarianceSummary {
    slope: Option<f64>,
    slope_ci: Option<(f64, f64)>,
    constants: SummaryConstants,
}

#[derive(Serialize)]
struct SummaryConstants {
    norm_sup: f64,
    support_radius: f64,
    catalog_entries: usize,
    q: f64,
    lambda0: f64,
    seed: u64,
}

/// JSON summary `{slope, slope_ci, constants}`.
pub fn variance_summary_json(run: &VarianceRun) -> String {
    let (_, q, lambda0) = kernel_tag(&run.config.kernel);
    let ci = match (run.slope, run.slope_std_err) {
        (Some(s), Some(se)) => Some((s - 2.0 * se, s + 2.0 * se)),
        _ => None,
    };
    let summary = VarianceSummary {
        slope: run.slope,
        slope_ci: ci,
        constants: SummaryConstants {
            norm_sup: run.norm_sup,
            support_radius: run.support_radius,
            catalog_entries: run.catalog_entries,
            q,
            lambda0,
            seed: run.config.seed,
        },
    };
    serde_json::to_string_pretty(&summary).expect("serializable summary")
}

/// One statistic line `n,seed,value,terms,T,q,Lambda0`.
pub fn statistic_csv_row(stat: &TraceStatistic, seed: u64, q: f64, lambda0: f64) -> String {
    format!(
        "{},{},{},{},{},{},{}\n",
        stat.degree,
        seed,
        real(stat.value),
        stat.term_count,
        real(stat.support_radius),
        real(q),
        real(lambda0)
    )
}

/// Prediction table `j,n,lambda_j` (with the Weyl roundtrip as a check
/// column).
pub fn prediction_table_csv(js: &[u64], n: u64, genus: u32) -> String {
    let mut out = String::from("j,n,lambda_j,weyl_roundtrip_minus_j\n");
    for &j in js {
        let lambda = predicted_eigenvalue(j, n, genus);
        let roundtrip = weyl_prediction(lambda, n, genus).count - j as f64;
        writeln!(out, "{},{},{},{}", j, n, real(lambda), real(roundtrip)).unwrap();
    }
    out
}
