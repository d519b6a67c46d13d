//! Smooth step functions with measured derivative constants.

/// `exp(-1/y)` continued by zero.
fn sigma(y: f64) -> f64 {
    if y <= 0.0 {
        0.0
    } else {
        (-1.0 / y).exp()
    }
}

/// Smooth transition: 0 on `(-inf, a]`, 1 on `[b, inf)`.
#[derive(Debug, Clone, Copy)]
pub struct SmoothStep {
    pub a: f64,
    pub b: f64,
}

/// The standard two-sided exp-based partition step.
pub fn smooth_cutoff(a: f64, b: f64) -> SmoothStep {
    assert!(a < b, "need a < b");
    SmoothStep { a, b }
}

impl SmoothStep {
    pub fn eval(&self, x: f64) -> f64 {
        let u = (x - self.a) / (self.b - self.a);
        if u <= 0.0 {
            return 0.0;
        }
        if u >= 1.0 {
            return 1.0;
        }
        let s = sigma(u);
        s / (s + sigma(1.0 - u))
    }

    /// Measured `C_j` with `sup |psi^{(j)}| = C_j / (b-a)^j`, for j = 1, 2,
    /// from central differences on a dense grid of the unit profile.
    pub fn measured_derivative_constants(&self) -> (f64, f64) {
        let profile = |u: f64| {
            let s = sigma(u);
            if u <= 0.0 {
                0.0
            } else if u >= 1.0 {
                1.0
            } else {
                s / (s + sigma(1.0 - u))
            }
        };
        let h = 1e-5;
        let mut c1 = 0.0f64;
        let mut c2 = 0.0f64;
        for i in 1..20_000 {
            let u = i as f64 / 20_000.0;
            let d1 = (profile(u + h) - profile(u - h)) / (2.0 * h);
            let d2 = (profile(u + h) - 2.0 * profile(u) + profile(u - h)) / (h * h);
            c1 = c1.max(d1.abs());
            c2 = c2.max(d2.abs());
        }
        (c1, c2)
    }
}
