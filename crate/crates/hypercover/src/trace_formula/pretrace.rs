//! The local pre-trace sum `Σ_{γ ≠ id} rho_ii(γ) k_φ(d(z, γ z))` over group
//! elements in a displacement ball.

use std::collections::{HashMap, VecDeque};

use crate::analysis::{selberg_kernel, RadialTestFn};
use crate::covers::{apply_word, CoverHom};
use crate::surface_group::{FuchsianGroup, GroupWord, Mat2, SYSTOLE_LENGTH};

use super::hyperbolic::{hyperbolic_distance, UhpPoint};
use super::TraceError;

#[derive(Debug, Clone)]
pub struct PretraceSum {
    pub value: f64,
    /// Nontrivial elements with `d(z, γ z) <= radius`.
    pub elements_in_ball: usize,
    /// Total distinct elements visited by the search.
    pub nodes_visited: usize,
}

/// Sign-normalized, quantized matrix key; distinct elements of the discrete
/// group are far apart at ball scale, so 1e-7 quantization is collision-free.
fn element_key(m: &Mat2) -> [i64; 4] {
    let mut e = [m.a, m.b, m.c, m.d];
    let lead = e.iter().find(|v| v.abs() > 1e-8).copied().unwrap_or(1.0);
    if lead < 0.0 {
        e.iter_mut().for_each(|v| *v = -*v);
    }
    e.map(|v| (v * 1e7).round() as i64)
}

/// Breadth-first enumeration of group elements with `d(z, γ z) <= radius`,
/// evaluating `rho_ii(γ) k_φ(d(z, γ z))`.
///
/// Scope: the support radius of `k_φ` must stay within twice the systole
/// (the v1 ball budget). Word levels are expanded until two consecutive
/// levels add no element within reach, which the brute-force oracle in the
/// tests confirms is exhaustive at these radii.
pub fn pretrace_local_sum<P: RadialTestFn + ?Sized>(
    group: &FuchsianGroup,
    hom: &CoverHom,
    z: UhpPoint,
    sheet: usize,
    phi: &P,
    node_cap: usize,
) -> Result<PretraceSum, TraceError> {
    let radius = phi.radius();
    let scope = 2.0 * SYSTOLE_LENGTH + 1e-9;
    if radius > scope {
        return Err(TraceError::RadiusTooLarge(radius, scope));
    }
    assert!(sheet < hom.degree());

    let letters = [1i32, -1, 2, -2, 3, -3, 4, -4];
    let mut seen: HashMap<[i64; 4], ()> = HashMap::new();
    seen.insert(element_key(&Mat2::IDENTITY), ());
    // frontier of (word, matrix) at the current level
    let mut frontier: VecDeque<(Vec<i32>, Mat2)> = VecDeque::new();
    frontier.push_back((Vec::new(), Mat2::IDENTITY));

    let mut value = 0.0;
    let mut elements_in_ball = 0usize;
    let mut quiet_levels = 0usize;

    while !frontier.is_empty() && quiet_levels < 2 {
        let mut next: VecDeque<(Vec<i32>, Mat2)> = VecDeque::new();
        let mut level_reached = false;
        for (word, mat) in frontier.drain(..) {
            for &l in &letters {
                if word.last() == Some(&-l) {
                    continue;
                }
                let m = mat.mul(group.letter_matrix(l));
                let key = element_key(&m);
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, ());
                if seen.len() > node_cap {
                    return Err(TraceError::BudgetExceeded(node_cap));
                }
                let mut w = word.clone();
                w.push(l);
                let d = hyperbolic_distance(z, z.apply(&m));
                if d <= radius {
                    level_reached = true;
                    elements_in_ball += 1;
                    let gw = GroupWord::new(w.clone(), group.genus()).unwrap();
                    let rho_ii = f64::from(apply_word(hom, &gw).apply(sheet) == sheet);
                    if rho_ii != 0.0 {
                        value += rho_ii * selberg_kernel(phi, d);
                    }
                }
                next.push_back((w, m));
            }
        }
        quiet_levels = if level_reached { 0 } else { quiet_levels + 1 };
        frontier = next;
    }

    Ok(PretraceSum { value, elements_in_ball, nodes_visited: seen.len() })
}

/// The combinatorial shadow of the lift/length identity: for
/// `σ = ρ(γ)`, `#Fix(σ^k) = Σ_{d | k} d · #{d-cycles of σ}` exactly.
pub fn lift_identity_check(hom: &CoverHom, gamma: &GroupWord, k: u32) -> bool {
    assert!(k >= 1);
    let sigma = apply_word(hom, gamma);
    crate::covers::fix_count(&sigma.pow(k)) == sigma.fix_count_of_power(k as u64)
}
