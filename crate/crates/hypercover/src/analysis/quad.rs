//! Gauss-Legendre rules, adaptive quadrature, and the hyperbolic spectral
//! measure integrals.

use super::AnalysisError;

/// Gauss-Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GlRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Nodes by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> GlRule {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GlRule { nodes, weights }
}

impl GlRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }

    /// Composite integration over `panels` equal panels.
    pub fn integrate_panels<F: Fn(f64) -> f64>(&self, a: f64, b: f64, panels: usize, f: F) -> f64 {
        let step = (b - a) / panels as f64;
        (0..panels)
            .map(|i| self.integrate(a + i as f64 * step, a + (i + 1) as f64 * step, &f))
            .sum()
    }
}

/// Adaptive bisection comparing nested 15/31-point rules. Panels are
/// accepted at the requested tolerance or at the roundoff floor of their
/// own L1 mass, whichever is larger.
pub fn adaptive_integral<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, AnalysisError> {
    let lo = gauss_legendre(15);
    let hi = gauss_legendre(31);
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        tol: f64,
        lo: &GlRule,
        hi: &GlRule,
        depth: usize,
    ) -> Result<f64, AnalysisError> {
        let coarse = lo.integrate(a, b, f);
        let fine = hi.integrate(a, b, f);
        let mass = hi.integrate(a, b, |x| f(x).abs());
        // the 15/31 difference bottoms out at a few ulps of the L1 mass, so
        // requesting less than ~1e-14 * mass only recurses into roundoff
        if (fine - coarse).abs() <= tol.max(8e-15 * mass.abs()) {
            return Ok(fine);
        }
        if depth >= 48 {
            return Err(AnalysisError::NonConvergent(depth));
        }
        let mid = 0.5 * (a + b);
        Ok(rec(f, a, mid, tol / 2.0, lo, hi, depth + 1)?
            + rec(f, mid, b, tol / 2.0, lo, hi, depth + 1)?)
    }
    rec(f, a, b, tol, &lo, &hi, 0)
}

/// `∫_0^∞ psi(r) r tanh(pi r) dr` to absolute tolerance 1e-10.
///
/// The integrand must decay fast enough that doubling segments eventually
/// contribute below 1e-13; otherwise the cutoff search errors out.
pub fn spectral_measure_integral<F: Fn(f64) -> f64>(psi: F) -> Result<f64, AnalysisError> {
    let g = |r: f64| psi(r) * r * (std::f64::consts::PI * r).tanh();
    let mut total = adaptive_integral(&g, 0.0, 2.0, 1e-11)?;
    let mut a = 2.0;
    let mut quiet = 0;
    while quiet < 2 {
        let b = a * 2.0;
        if b > 2_097_152.0 {
            return Err(AnalysisError::NonConvergent(0));
        }
        let seg = adaptive_integral(&g, a, b, 1e-11)?;
        total += seg;
        if seg.abs() < 1e-13 * total.abs().max(1.0) {
            quiet += 1;
        } else {
            quiet = 0;
        }
        a = b;
    }
    Ok(total)
}

/// Closed form of `∫_0^R r tanh(pi r) dr`:
/// `R²/2 + (R/π) ln(1+e^{-2πR}) - Li₂(-e^{-2πR})/(2π²) - 1/24`.
pub fn weyl_integral(r: f64) -> f64 {
    assert!(r >= 0.0);
    let pi = std::f64::consts::PI;
    let y = (-2.0 * pi * r).exp();
    r * r / 2.0 + r / pi * y.ln_1p() - dilog_neg(y) / (2.0 * pi * pi) - 1.0 / 24.0
}

/// Derivative of [`weyl_integral`], `r tanh(pi r)`.
pub fn weyl_integrand(r: f64) -> f64 {
    r * (std::f64::consts::PI * r).tanh()
}

/// `Li₂(-y)` for `y in [0, 1]`, by series with a Landen transform near 1.
fn dilog_neg(y: f64) -> f64 {
    assert!((0.0..=1.0 + 1e-15).contains(&y));
    if y <= 0.5 {
        return dilog_series(-y);
    }
    // Li2(-y) = -Li2(y/(1+y)) - ln(1+y)^2 / 2
    let w = y / (1.0 + y);
    -dilog_series(w) - 0.5 * y.ln_1p().powi(2)
}

fn dilog_series(z: f64) -> f64 {
    debug_assert!(z.abs() <= 0.5 + 1e-12);
    let mut term = z;
    let mut acc = z;
    for k in 2..200 {
        term *= z;
        let add = term / ((k * k) as f64);
        acc += add;
        if add.abs() < 1e-18 * acc.abs().max(1e-300) {
            break;
        }
    }
    acc
}
