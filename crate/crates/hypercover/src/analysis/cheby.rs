//! Chebyshev expansions of the polynomial factor `h(x) = x * htilde(x)`.
//!
//! `htilde` is held in the basis `T_j(2 x / M - 1)` on `[0, M]` with
//! `M = f(i/2)`; `h` then has degree `q = deg(htilde) + 1`.

use super::testfn::TestFunction;

#[derive(Debug, Clone)]
pub struct PolynomialH {
    /// Chebyshev coefficients of htilde on [0, M].
    coeffs: Vec<f64>,
    /// Domain right end, `f(i/2)`.
    domain_max: f64,
    /// `sup |htilde|` over the 10^4-point grid on [0, M].
    norm_sup: f64,
}

impl PolynomialH {
    pub fn from_cheb_coeffs(coeffs: Vec<f64>, domain_max: f64) -> Self {
        assert!(!coeffs.is_empty() && domain_max > 0.0);
        let mut p = PolynomialH { coeffs, domain_max, norm_sup: 0.0 };
        p.norm_sup = p.grid_sup(0);
        p
    }

    /// The oscillatory default for degree-q experiments:
    /// `htilde = T_{q-1}(2x/M - 1)`, so `h(x) = x htilde(x)` has degree q and
    /// unit `norm_sup`.
    pub fn oscillatory(q: usize, tf: &TestFunction) -> Self {
        assert!(q >= 1);
        let mut coeffs = vec![0.0; q];
        coeffs[q - 1] = 1.0;
        PolynomialH::from_cheb_coeffs(coeffs, tf.f_i_half())
    }

    /// Degree of `h = x * htilde`.
    pub fn degree_q(&self) -> usize {
        self.coeffs.len()
    }

    pub fn domain_max(&self) -> f64 {
        self.domain_max
    }

    pub fn cheb_coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `sup_{[0, M]} |htilde|` (10^4-point grid, per the norm convention).
    pub fn norm_sup(&self) -> f64 {
        self.norm_sup
    }

    /// Clenshaw evaluation of htilde at `x in [0, M]`.
    pub fn eval_htilde(&self, x: f64) -> f64 {
        let u = 2.0 * x / self.domain_max - 1.0;
        clenshaw(&self.coeffs, u)
    }

    /// `h(x) = x * htilde(x)`.
    pub fn eval_h(&self, x: f64) -> f64 {
        x * self.eval_htilde(x)
    }

    /// Coefficients of `d^k htilde / dx^k` in the same basis.
    pub fn derivative_coeffs(&self, k: usize) -> Vec<f64> {
        let mut c = self.coeffs.clone();
        for _ in 0..k {
            c = cheb_derivative(&c);
        }
        // chain rule for u = 2x/M - 1
        let scale = (2.0 / self.domain_max).powi(k as i32);
        c.iter_mut().for_each(|v| *v *= scale);
        c
    }

    fn grid_sup(&self, deriv_order: usize) -> f64 {
        let c = self.derivative_coeffs(deriv_order);
        let mut sup = 0.0f64;
        for i in 0..=10_000 {
            let x = self.domain_max * i as f64 / 10_000.0;
            let u = 2.0 * x / self.domain_max - 1.0;
            sup = sup.max(clenshaw(&c, u).abs());
        }
        sup
    }
}

/// Collocation fit of `g` on `[0, M]` at Chebyshev points; exact to rounding
/// for polynomials of degree <= `degree`.
pub fn chebyshev_fit<G: Fn(f64) -> f64>(g: G, domain_max: f64, degree: usize) -> Vec<f64> {
    let n = degree + 1;
    let samples: Vec<f64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::PI * (k as f64 + 0.5) / n as f64;
            let x = domain_max * 0.5 * (theta.cos() + 1.0);
            g(x)
        })
        .collect();
    (0..n)
        .map(|j| {
            let s: f64 = samples
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    v * (std::f64::consts::PI * j as f64 * (k as f64 + 0.5) / n as f64).cos()
                })
                .sum();
            s * if j == 0 { 1.0 } else { 2.0 } / n as f64
        })
        .collect()
}

/// `C^k` norm of htilde: `sum_{j<=k} sup |d^j htilde|`, sups over the
/// 10^4-point grid refined by the critical points of each derivative.
pub fn ck_norm(p: &PolynomialH, k: usize) -> f64 {
    (0..=k)
        .map(|j| {
            let cj = p.derivative_coeffs(j);
            let cnext = cheb_derivative_scaled(&cj, p.domain_max);
            sup_with_critical_points(&cj, &cnext, p.domain_max)
        })
        .sum()
}

fn sup_with_critical_points(coeffs: &[f64], deriv: &[f64], domain_max: f64) -> f64 {
    let eval = |x: f64| clenshaw(coeffs, 2.0 * x / domain_max - 1.0);
    let dval = |x: f64| clenshaw(deriv, 2.0 * x / domain_max - 1.0);
    let grid = 10_000;
    let mut sup = 0.0f64;
    let mut prev_d = dval(0.0);
    for i in 0..=grid {
        let x = domain_max * i as f64 / grid as f64;
        sup = sup.max(eval(x).abs());
        // bracket a critical point and polish by bisection
        if i > 0 {
            let d = dval(x);
            if prev_d * d < 0.0 {
                let (mut a, mut b) = (domain_max * (i - 1) as f64 / grid as f64, x);
                for _ in 0..60 {
                    let m = 0.5 * (a + b);
                    if dval(a) * dval(m) <= 0.0 {
                        b = m;
                    } else {
                        a = m;
                    }
                }
                sup = sup.max(eval(0.5 * (a + b)).abs());
            }
            prev_d = d;
        }
    }
    sup
}

fn cheb_derivative_scaled(coeffs: &[f64], domain_max: f64) -> Vec<f64> {
    let mut d = cheb_derivative(coeffs);
    d.iter_mut().for_each(|v| *v *= 2.0 / domain_max);
    d
}

/// Derivative in the Chebyshev basis (with respect to the u variable).
fn cheb_derivative(c: &[f64]) -> Vec<f64> {
    let n = c.len();
    if n <= 1 {
        return vec![0.0];
    }
    let mut d = vec![0.0; n - 1];
    let mut acc_next = 0.0; // d[j+2]
    let mut acc = 0.0; // d[j+1] placeholder during the downward sweep
    for j in (0..n - 1).rev() {
        let val = acc_next + 2.0 * (j as f64 + 1.0) * c[j + 1];
        d[j] = val;
        acc_next = acc;
        acc = val;
    }
    d[0] /= 2.0;
    d
}

fn clenshaw(c: &[f64], u: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().rev() {
        let b0 = 2.0 * u * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    b1 - u * b2
}
