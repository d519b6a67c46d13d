//! The Markov brothers' inequality in its reciprocal-integer-points form:
//! for a real polynomial `P` of degree at most q and `k >= 1`,
//!
//! ```text
//! sup_{[0, 1/(2q^2)]} |P^(k)| <= (2^{2k+1} q^{4k} / (2k-1)!!) sup_{n >= q^2} |P(1/n)|
//! ```

use super::ExperimentError;

/// A dense polynomial in the monomial basis (ascending coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Poly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|&c| c != 0.0)
            .unwrap_or(0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![0.0]);
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    /// Multiply by `x^k` (used to form `x^2 p(x)`).
    pub fn shift_up(&self, k: usize) -> Poly {
        let mut coeffs = vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(coeffs)
    }
}

/// `sup |p|` over `[a, b]`: a 10^4-point grid refined by the critical points
/// of `p` (sign changes of `p'` polished by bisection).
pub(crate) fn poly_sup_abs(p: &Poly, a: f64, b: f64) -> f64 {
    let d = p.derivative();
    let grid = 10_000;
    let mut sup = 0.0f64;
    let mut prev_d = d.eval(a);
    for i in 0..=grid {
        let x = a + (b - a) * i as f64 / grid as f64;
        sup = sup.max(p.eval(x).abs());
        if i > 0 {
            let dv = d.eval(x);
            if prev_d * dv < 0.0 {
                let (mut lo, mut hi) = (a + (b - a) * (i - 1) as f64 / grid as f64, x);
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if d.eval(lo) * d.eval(mid) <= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                sup = sup.max(p.eval(0.5 * (lo + hi)).abs());
            }
            prev_d = dv;
        }
    }
    sup
}

#[derive(Debug, Clone)]
pub struct MarkovCheck {
    pub q: usize,
    pub k: u32,
    /// `sup |P^(k)|` over `[0, 1/(2 q^2)]`.
    pub left: f64,
    /// `(2^{2k+1} q^{4k} / (2k-1)!!) * sup_{n >= q^2} |P(1/n)|`.
    pub right: f64,
    pub satisfied: bool,
}

/// Evaluates both sides. The right-hand sup scans integers from `q^2`,
/// doubling the scan end past `n_max` until the result moves by less than
/// 1e-12, and includes the limit `|P(0)|`.
pub fn markov_brothers_check(
    p: &Poly,
    q: usize,
    k: u32,
    n_max: u64,
) -> Result<MarkovCheck, ExperimentError> {
    assert!(k >= 1 && q >= 1);
    if p.degree() > q {
        return Err(ExperimentError::DegreeTooHigh(p.degree(), q));
    }
    let mut dk = p.clone();
    for _ in 0..k {
        dk = dk.derivative();
    }
    let interval_end = 1.0 / (2.0 * (q * q) as f64);
    let left = poly_sup_abs(&dk, 0.0, interval_end);

    let start = (q * q) as u64;
    let mut end = n_max.max(start + 1);
    let mut sup = p.eval(0.0).abs();
    let mut n = start;
    loop {
        while n <= end {
            sup = sup.max(p.eval(1.0 / n as f64).abs());
            n += 1;
        }
        // extend the scan until it stops changing the sup (P(1/n) -> P(0)
        // monotonically in the tail, so stalls are conclusive)
        let before = sup;
        let next_end = end * 2;
        while n <= next_end {
            sup = sup.max(p.eval(1.0 / n as f64).abs());
            n += 1;
        }
        if (sup - before).abs() < 1e-12 {
            break;
        }
        end = next_end;
        if end > 1 << 32 {
            break;
        }
    }

    let double_fact: f64 = (1..=k).map(|j| (2 * j - 1) as f64).product();
    let factor = 2f64.powi(2 * k as i32 + 1) * (q as f64).powi(4 * k as i32) / double_fact;
    let right = factor * sup;
    Ok(MarkovCheck { q, k, left, right, satisfied: left <= right + 1e-9 * right })
}
