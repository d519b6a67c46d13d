//! Deterministic eigenvalue predictions and the Weyl-law main term.

use crate::analysis::weyl_integral;

/// The Weyl-law main-term count at threshold `lambda` for a degree-n cover.
#[derive(Debug, Clone)]
pub struct WeylPrediction {
    pub lambda: f64,
    pub n: u64,
    pub genus: u32,
    pub count: f64,
    /// The rigidity error term, reported symbolically, never as a number.
    pub error_order: &'static str,
}

/// Solves `∫_0^{sqrt(λ_j - 1/4)} r tanh(pi r) dr = j / (n(2g-2))` for the
/// predicted j-th eigenvalue; exactly 1/4 at j = 0.
pub fn predicted_eigenvalue(j: u64, n: u64, genus: u32) -> f64 {
    assert!(n >= 1 && genus >= 2);
    if j == 0 {
        return 0.25;
    }
    let target = j as f64 / (n as f64 * (2 * genus - 2) as f64);
    // G(R) = R^2/2 - 1/24 + (exp small), so R ~ sqrt(2 target + 1/12)
    let mut r = (2.0 * target + 1.0 / 12.0).sqrt().max(1e-6);
    // Newton with the exact derivative r tanh(pi r); G is increasing and
    // convex for r > 0 so this converges from any positive start
    for _ in 0..80 {
        let g = weyl_integral(r) - target;
        let dg = r * (std::f64::consts::PI * r).tanh();
        if dg == 0.0 {
            break;
        }
        let step = g / dg;
        r -= step;
        if r <= 0.0 {
            r = 1e-12;
        }
        if step.abs() <= 1e-15 * r.max(1.0) {
            break;
        }
    }
    0.25 + r * r
}

/// Main term of the eigenvalue counting function,
/// `(2g-2) n ∫_0^{sqrt(Λ-1/4)} r tanh(pi r) dr`.
pub fn weyl_prediction(lambda: f64, n: u64, genus: u32) -> WeylPrediction {
    assert!(lambda >= 0.25);
    let r = (lambda - 0.25).max(0.0).sqrt();
    let count = (2 * genus - 2) as f64 * n as f64 * weyl_integral(r);
    WeylPrediction {
        lambda,
        n,
        genus,
        count,
        error_order: "O(n^(1-alpha) * Lambda^(1/2+eps))",
    }
}
