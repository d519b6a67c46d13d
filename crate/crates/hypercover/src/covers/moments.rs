//! Exact moments of permutation characters over the uniform cover model, and
//! polynomial fits of their 1/n dependence.

use rayon::prelude::*;

use crate::surface_group::GroupWord;

use super::enumerate::ENUM_MAX_DEGREE;
use super::hom::{apply_word, CoverHom};
use super::perm::{fix_count, Permutation};
use super::witten::hom_count_exact;
use super::CoverError;

/// What to average: the product over `words` of `Tr rho(w)` (fixed-point
/// counts), or with `diagonal = Some(i)` the product of the diagonal matrix
/// entries `rho_ii(w)` (indicators that `i` is fixed).
#[derive(Debug, Clone)]
pub struct MomentSpec {
    pub words: Vec<GroupWord>,
    pub diagonal: Option<usize>,
}

/// Exact expectation over `Hom(Γ, S_n)` by full enumeration.
pub fn moment_exact(
    genus: u32,
    n: usize,
    words: &[GroupWord],
    diagonal: Option<usize>,
) -> Result<f64, CoverError> {
    let spec = MomentSpec { words: words.to_vec(), diagonal };
    Ok(moment_exact_batch(genus, n, &[spec])?[0])
}

/// Evaluates several moments in a single sweep of the enumeration.
pub fn moment_exact_batch(
    genus: u32,
    n: usize,
    specs: &[MomentSpec],
) -> Result<Vec<f64>, CoverError> {
    assert_eq!(genus, 2, "exact moments are genus-2 only");
    if n > ENUM_MAX_DEGREE {
        return Err(CoverError::TooLarge(n, ENUM_MAX_DEGREE));
    }
    let perms = all_perms_sorted(n);
    let m = perms.len();

    let sums: Vec<u128> = (0..m)
        .into_par_iter()
        .map(|i1| {
            let mut local = vec![0u128; specs.len()];
            let mut scan = |hom: &CoverHom| {
                for (acc, spec) in local.iter_mut().zip(specs.iter()) {
                    let mut prod: u128 = 1;
                    for w in &spec.words {
                        let img = apply_word(hom, w);
                        let term = match spec.diagonal {
                            None => fix_count(&img) as u128,
                            Some(i) => u128::from(img.apply(i) == i),
                        };
                        prod *= term;
                        if prod == 0 {
                            break;
                        }
                    }
                    *acc += prod;
                }
            };
            scan_tuples_with_first(&perms, i1, &mut scan);
            local
        })
        .reduce(
            || vec![0u128; specs.len()],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    let count: u128 = hom_count_exact(2, n)
        .try_into()
        .expect("count fits u128 for enumerable degrees");
    Ok(sums.iter().map(|&s| s as f64 / count as f64).collect())
}

fn all_perms_sorted(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut cur = Vec::with_capacity(n);
    fn rec(
        n: usize,
        cur: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if cur.len() == n {
            out.push(Permutation::from_images(cur.clone()).unwrap());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u32);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Iterate relation-satisfying tuples with fixed first generator index.
fn scan_tuples_with_first<F: FnMut(&CoverHom)>(perms: &[Permutation], i1: usize, visit: &mut F) {
    let m = perms.len();
    let n = perms[0].degree();
    let invs: Vec<Permutation> = perms.iter().map(|p| p.inverse()).collect();
    for i2 in 0..m {
        for i3 in 0..m {
            for i4 in 0..m {
                let (g1, g2, g3, g4) = (&perms[i1], &perms[i2], &perms[i3], &perms[i4]);
                let (v1, v2) = (&invs[i1], &invs[i2]);
                let ok = (0..n).all(|k| {
                    let rhs = g4.apply(g3.apply(k));
                    let lhs =
                        g1.apply(g2.apply(v1.apply(v2.apply(g3.apply(g4.apply(k))))));
                    lhs == rhs
                });
                if ok {
                    let hom = CoverHom::new(
                        2,
                        vec![g1.clone(), g2.clone(), g3.clone(), g4.clone()],
                    )
                    .expect("relation verified");
                    visit(&hom);
                }
            }
        }
    }
}

/// Least-squares polynomial fit in `t = 1/n`.
#[derive(Debug, Clone)]
pub struct PolyFit {
    /// Coefficients in ascending powers of t.
    pub coeffs: Vec<f64>,
    /// Per-point residuals `value - fit(1/n)`.
    pub residuals: Vec<f64>,
    /// Fitted value at t = 0, the n -> infinity limit.
    pub value_at_zero: f64,
}

impl PolyFit {
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn max_abs_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0f64, |a, r| a.max(r.abs()))
    }
}

/// Fits `value ~ p(1/n)` with `deg p <= max_deg` by least squares.
pub fn rational_fit(points: &[(u32, f64)], max_deg: usize) -> Result<PolyFit, CoverError> {
    let mut ns: Vec<u32> = points.iter().map(|p| p.0).collect();
    ns.sort_unstable();
    ns.dedup();
    if ns.len() < max_deg + 1 {
        return Err(CoverError::Underdetermined(max_deg + 1, ns.len()));
    }
    let k = max_deg + 1;
    // normal equations A^T A c = A^T y on the Vandermonde in t = 1/n
    let mut ata = vec![vec![0.0f64; k]; k];
    let mut aty = vec![0.0f64; k];
    for &(n, y) in points {
        let t = 1.0 / n as f64;
        let mut pows = Vec::with_capacity(k);
        let mut p = 1.0;
        for _ in 0..k {
            pows.push(p);
            p *= t;
        }
        for i in 0..k {
            aty[i] += pows[i] * y;
            for j in 0..k {
                ata[i][j] += pows[i] * pows[j];
            }
        }
    }
    let coeffs = solve_dense(&mut ata, &mut aty)?;
    let residuals: Vec<f64> = points
        .iter()
        .map(|&(n, y)| {
            let t = 1.0 / n as f64;
            y - coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
        })
        .collect();
    Ok(PolyFit { value_at_zero: coeffs[0], coeffs, residuals })
}

/// Gaussian elimination with partial pivoting on a small dense system.
fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64]) -> Result<Vec<f64>, CoverError> {
    let k = b.len();
    for col in 0..k {
        let piv = (col..k)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[piv][col].abs() < 1e-14 {
            return Err(CoverError::Underdetermined(k, col));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..k {
            let f = a[row][col] / a[col][col];
            for j in col..k {
                a[row][j] -= f * a[col][j];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; k];
    for col in (0..k).rev() {
        let mut s = b[col];
        for j in col + 1..k {
            s -= a[col][j] * x[j];
        }
        x[col] = s / a[col][col];
    }
    Ok(x)
}
