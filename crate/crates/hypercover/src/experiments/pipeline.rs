//! Demonstrative polynomial-method pipeline on exact moment data: fit the
//! moments as a polynomial in 1/n, form `x^2 p(x)`, bound its derivative on
//! a shrinking interval, and compare against the Markov-brothers bound.

use crate::covers::{rational_fit, PolyFit};

use super::markov::{markov_brothers_check, poly_sup_abs, MarkovCheck, Poly};
use super::ExperimentError;

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub fit: PolyFit,
    pub x2p: Poly,
    /// `sup |(x^2 p)'|` over `[0, 1/(2 q^kappa)]`.
    pub sup_deriv: f64,
    pub interval_end: f64,
    pub markov: MarkovCheck,
}

/// `moments` are exact `(n, value)` pairs from the enumeration oracle.
pub fn polynomial_method_pipeline(
    moments: &[(u32, f64)],
    max_deg: usize,
    q: usize,
    kappa: f64,
) -> Result<PipelineReport, ExperimentError> {
    let fit = rational_fit(moments, max_deg)
        .map_err(ExperimentError::Cover)?;
    let p = Poly::new(fit.coeffs.clone());
    let x2p = p.shift_up(2);
    let interval_end = 1.0 / (2.0 * (q as f64).powf(kappa));
    let sup_deriv = poly_sup_abs(&x2p.derivative(), 0.0, interval_end);
    let q_eff = q.max(x2p.degree());
    let markov = markov_brothers_check(&x2p, q_eff, 1, (q_eff * q_eff) as u64 * 16)?;
    Ok(PipelineReport { fit, x2p, sup_deriv, interval_end, markov })
}
