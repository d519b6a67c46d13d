//! Inverse Fourier transforms of `h ∘ f_{Λ0}` and support bookkeeping.
//!
//! With `f_{Λ0}(x) = f(s x)`, `s = c0 Λ0^{-1/2}`, every transform reduces to
//! the Λ0-independent integrals `∫ g(f(u)) cos(u τ) du` on a fixed grid of
//! `f` values, so the grid of `f(u)` is precomputed once per test function
//! and shared across polynomials and rescalings.

use super::cheby::PolynomialH;
use super::kernel::RadialTestFn;
use super::quad::gauss_legendre;
use super::testfn::{EvalPoint, TestFunction};

/// Quadrature nodes on `u in [0, u_max]` with cached `f(u)` values.
#[derive(Debug)]
pub(crate) struct CosGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    f_vals: Vec<f64>,
}

impl CosGrid {
    /// Panel width 0.4 resolves oscillations `cos(u tau)` up to `tau ~ 60`
    /// with 24-point panels; `u_max = 700` puts the truncated tail of `f`
    /// below 1e-17.
    pub(crate) fn build(tf: &TestFunction) -> CosGrid {
        let rule = gauss_legendre(24);
        let u_max = 700.0;
        let panel = 0.4;
        let n_panels = (u_max / panel) as usize;
        let mut nodes = Vec::with_capacity(n_panels * rule.nodes.len());
        let mut weights = Vec::with_capacity(nodes.capacity());
        for p in 0..n_panels {
            let (a, b) = (p as f64 * panel, (p + 1) as f64 * panel);
            let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
            for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                nodes.push(mid + half * x);
                weights.push(w * half);
            }
        }
        let f_vals = nodes
            .iter()
            .map(|&u| tf.eval_f(EvalPoint::Real(u)).expect("real axis"))
            .collect();
        CosGrid { nodes, weights, f_vals }
    }

    /// `(1/pi) ∫_0^∞ g(f(u)) cos(u tau) du` for precomputed `g(f(u))`.
    fn cos_integral(&self, gvals: &[f64], tau: f64) -> f64 {
        let mut acc = 0.0;
        for ((&u, &w), &g) in self.nodes.iter().zip(&self.weights).zip(gvals) {
            acc += w * g * (u * tau).cos();
        }
        acc / std::f64::consts::PI
    }

    fn sin_moment_integral(&self, gvals: &[f64], tau: f64) -> f64 {
        let mut acc = 0.0;
        for ((&u, &w), &g) in self.nodes.iter().zip(&self.weights).zip(gvals) {
            acc += w * g * u * (u * tau).sin();
        }
        acc / std::f64::consts::PI
    }
}

/// Guaranteed support interval of `(h ∘ f_{Λ0})^∨` for a degree-q `h`:
/// `[-c0 q Λ0^{-1/2}, c0 q Λ0^{-1/2}]` (q = 1 gives the bare rescaled f).
pub fn f_lambda0_inverse_fourier_support(
    tf: &TestFunction,
    lambda0: f64,
    q: usize,
) -> (f64, f64) {
    assert!(lambda0 >= 0.25, "Λ0 ranges over [1/4, ∞)");
    let r = tf.c0() * q as f64 / lambda0.sqrt();
    (-r, r)
}

/// `(h ∘ f_{Λ0})^∨` as an evaluatable even function with exact support
/// enforcement.
#[derive(Debug, Clone)]
pub struct TransformPhi {
    hvals: std::sync::Arc<Vec<f64>>,
    s: f64,
    radius: f64,
    tf_handle: TestFunction,
}

impl TransformPhi {
    pub fn new(tf: &TestFunction, h: &PolynomialH, lambda0: f64) -> TransformPhi {
        assert!(lambda0 >= 0.25, "Λ0 ranges over [1/4, ∞)");
        let s = tf.c0() / lambda0.sqrt();
        let radius = s * h.degree_q() as f64;
        let grid = tf.cos_grid();
        let hvals: Vec<f64> = grid.f_vals.iter().map(|&fv| h.eval_h(fv)).collect();
        TransformPhi { hvals: std::sync::Arc::new(hvals), s, radius, tf_handle: tf.clone() }
    }

    /// The rescaling factor `s = c0 Λ0^{-1/2}`.
    pub fn scale(&self) -> f64 {
        self.s
    }

    /// Support radius `c0 q Λ0^{-1/2}`.
    pub fn support_radius(&self) -> f64 {
        self.radius
    }

    /// Plain quadrature value, no support enforcement (used to verify that
    /// the numeric transform respects the support theorem).
    pub fn eval_raw(&self, t: f64) -> f64 {
        let grid = self.tf_handle.cos_grid();
        grid.cos_integral(&self.hvals, t.abs() / self.s) / self.s
    }

    fn deriv_raw(&self, t: f64) -> f64 {
        let grid = self.tf_handle.cos_grid();
        let d = -grid.sin_moment_integral(&self.hvals, t.abs() / self.s) / (self.s * self.s);
        if t < 0.0 {
            -d
        } else {
            d
        }
    }
}

impl RadialTestFn for TransformPhi {
    fn eval(&self, t: f64) -> f64 {
        if t.abs() >= self.radius {
            0.0
        } else {
            self.eval_raw(t)
        }
    }

    fn deriv(&self, t: f64) -> f64 {
        if t.abs() >= self.radius {
            0.0
        } else {
            self.deriv_raw(t)
        }
    }

    fn radius(&self) -> f64 {
        self.radius
    }
}

/// `f-check` by inverse transform of `f` itself — equals `phi0 ⋆ phi0`.
pub fn f_inverse_transform(tf: &TestFunction, xi: f64) -> f64 {
    let grid = tf.cos_grid();
    grid.cos_integral(&grid.f_vals, xi.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::quad::adaptive_integral;

    #[test]
    fn support_interval_examples() {
        let tf = TestFunction::standard();
        let c0 = tf.c0();
        let (a, b) = f_lambda0_inverse_fourier_support(tf, 0.25, 1);
        assert!((b - 2.0 * c0).abs() < 1e-15 && (a + 2.0 * c0).abs() < 1e-15);
        let (_, b3) = f_lambda0_inverse_fourier_support(tf, 0.25, 3);
        assert!((b3 - 3.0 * b).abs() < 1e-15);
    }

    #[test]
    fn transform_vanishes_outside_support() {
        let tf = TestFunction::standard();
        let h = PolynomialH::oscillatory(2, tf);
        let phi = TransformPhi::new(tf, &h, 0.25);
        let r = phi.support_radius();
        assert_eq!(phi.eval(r), 0.0);
        assert_eq!(phi.eval(r * 2.0), 0.0);
        // raw quadrature honors the support theorem numerically
        for factor in [1.05, 1.5, 3.0, 20.0] {
            let leak = phi.eval_raw(r * factor).abs();
            assert!(leak < 1e-10, "leak {leak} at {factor} radii");
        }
    }

    #[test]
    fn transform_even_and_nontrivial_inside() {
        let tf = TestFunction::standard();
        let h = PolynomialH::oscillatory(2, tf);
        let phi = TransformPhi::new(tf, &h, 0.25);
        let r = phi.support_radius();
        assert!(phi.eval(0.0).abs() > 1e-6);
        assert!((phi.eval(0.3 * r) - phi.eval(-0.3 * r)).abs() < 1e-14);
    }

    #[test]
    fn f_check_matches_bump_convolution() {
        // the Fourier bookkeeping: f-inverse must equal phi0 ⋆ phi0
        let tf = TestFunction::standard();
        for xi in [0.0, 0.2, 0.5, 0.8, 0.97] {
            let via_transform = f_inverse_transform(tf, xi);
            let via_convolution = tf.profile().self_convolution(xi);
            assert!(
                (via_transform - via_convolution).abs() < 1e-7,
                "xi={xi}: {via_transform} vs {via_convolution}"
            );
        }
    }

    #[test]
    fn f_check_supported_in_unit_interval() {
        let tf = TestFunction::standard();
        for xi in [1.01, 1.1, 1.5, 3.0] {
            assert!(f_inverse_transform(tf, xi).abs() < 1e-10, "xi={xi}");
        }
    }

    #[test]
    fn gaussian_fourier_convention_pair() {
        // f-hat(xi) = ∫ f e^{-i x xi} dx with f = exp(-x^2/2) gives
        // sqrt(2 pi) exp(-xi^2/2); the inverse carries the 1/(2 pi).
        let g = |x: f64| (-0.5 * x * x).exp();
        let sqrt_two_pi = (2.0 * std::f64::consts::PI).sqrt();
        for xi in [0.0, 0.7, 1.3, 2.5] {
            let ghat =
                2.0 * adaptive_integral(&|x: f64| g(x) * (x * xi).cos(), 0.0, 40.0, 1e-12)
                    .unwrap();
            assert!((ghat - sqrt_two_pi * g(xi)).abs() < 1e-10);
        }
        // roundtrip: (1/2pi) ∫ ghat(xi) cos(x xi) dxi = g(x)
        let x0 = 0.9;
        let back = adaptive_integral(
            &|xi: f64| sqrt_two_pi * g(xi) * (x0 * xi).cos(),
            0.0,
            40.0,
            1e-12,
        )
        .unwrap()
            / std::f64::consts::PI;
        assert!((back - g(x0)).abs() < 1e-10);
    }
}
