//! The even smooth bump profile behind the test function.

use super::quad::{gauss_legendre, GlRule};

/// `phi0(xi) = N exp(-1/(1-(2 xi)^2))` on `|xi| < 1/2`, zero outside,
/// normalized to unit integral. Smooth, even, nonnegative, all derivatives
/// vanish at the support boundary.
#[derive(Debug, Clone)]
pub struct BumpProfile {
    pub half_width: f64,
    pub normalization: f64,
    rule: GlRule,
}

impl BumpProfile {
    pub fn standard() -> Self {
        let rule = gauss_legendre(320);
        let mut raw = BumpProfile { half_width: 0.5, normalization: 1.0, rule };
        let z = raw.integral();
        raw.normalization = 1.0 / z;
        raw
    }

    pub fn eval(&self, xi: f64) -> f64 {
        let u = 2.0 * xi;
        if u.abs() >= 1.0 {
            return 0.0;
        }
        self.normalization * (-1.0 / (1.0 - u * u)).exp()
    }

    fn integral(&self) -> f64 {
        self.quadrature(|x| self.eval(x))
    }

    /// `∫ phi0(xi) g(xi) dxi` over the support.
    pub fn quadrature<G: Fn(f64) -> f64>(&self, g: G) -> f64 {
        self.rule.integrate(-self.half_width, self.half_width, g)
    }

    /// Past this frequency the transform of the bump sits far below any
    /// tolerance in play (the decay is faster than every inverse power),
    /// while an under-resolved rule would return oscillation junk. Treated
    /// as exactly zero.
    const FREQ_CUTOFF: f64 = 6000.0;

    /// Cosine transform `∫ phi0(xi) cos(x xi) dxi` (real x).
    ///
    /// For large |x| the oscillation outruns the cached rule, so a denser
    /// one is built on the fly.
    pub fn cosine_transform(&self, x: f64) -> f64 {
        if x.abs() > Self::FREQ_CUTOFF {
            return 0.0;
        }
        let needed = (0.6 * x.abs()) as usize + 64;
        if needed <= self.rule.nodes.len() {
            self.quadrature(|xi| self.eval(xi) * (x * xi).cos())
        } else {
            let rule = gauss_legendre(needed);
            rule.integrate(-self.half_width, self.half_width, |xi| {
                self.eval(xi) * (x * xi).cos()
            })
        }
    }

    /// `∫ phi0(xi) xi sin(x xi) dxi`, the derivative of the cosine transform
    /// up to sign.
    pub fn sine_moment_transform(&self, x: f64) -> f64 {
        if x.abs() > Self::FREQ_CUTOFF {
            return 0.0;
        }
        let needed = (0.6 * x.abs()) as usize + 64;
        if needed <= self.rule.nodes.len() {
            self.quadrature(|xi| self.eval(xi) * xi * (x * xi).sin())
        } else {
            let rule = gauss_legendre(needed);
            rule.integrate(-self.half_width, self.half_width, |xi| {
                self.eval(xi) * xi * (x * xi).sin()
            })
        }
    }

    /// Hyperbolic-cosine transform, the analytic continuation to `x = i t`.
    pub fn cosh_transform(&self, t: f64) -> f64 {
        self.quadrature(|xi| self.eval(xi) * (t * xi).cosh())
    }

    /// `(phi0 ⋆ phi0)(xi)`, supported in `[-1, 1]`.
    pub fn self_convolution(&self, xi: f64) -> f64 {
        let a = (-self.half_width).max(xi - self.half_width);
        let b = self.half_width.min(xi + self.half_width);
        if a >= b {
            return 0.0;
        }
        let rule = gauss_legendre(200);
        rule.integrate(a, b, |eta| self.eval(eta) * self.eval(xi - eta))
    }
}
