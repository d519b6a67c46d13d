//! The geodesic-side sum of the twisted trace formula.

use crate::analysis::{spectral_measure_integral, RadialTestFn};
use crate::covers::{apply_word, CoverHom};
use crate::surface_group::GeodesicCatalog;

use super::TraceError;

/// An evaluated geometric-side sum
/// `Σ_γ Σ_k  ℓ_γ / (2 sinh(k ℓ_γ / 2)) · φ(k ℓ_γ) · Tr ρ(γ^k)`.
#[derive(Debug, Clone)]
pub struct TraceStatistic {
    pub value: f64,
    /// Number of (γ, k) pairs with `k ℓ_γ <= support_radius`.
    pub term_count: usize,
    pub support_radius: f64,
    pub max_k: u64,
    pub degree: usize,
}

/// Evaluates the sum over the catalog and all powers `k` with
/// `k ℓ_γ <= radius(phi)`. Terms are accumulated smallest magnitude first so
/// reruns are bit-stable.
pub fn geometric_side<P: RadialTestFn + ?Sized>(
    catalog: &GeodesicCatalog,
    hom: &CoverHom,
    phi: &P,
) -> Result<TraceStatistic, TraceError> {
    let radius = phi.radius();
    if catalog.length_cutoff < radius {
        return Err(TraceError::CatalogTooSmall(catalog.length_cutoff, radius));
    }
    let mut terms: Vec<f64> = Vec::new();
    let mut term_count = 0usize;
    let mut max_k = 0u64;
    for entry in &catalog.entries {
        let ell = entry.length;
        if ell > radius {
            break; // entries are sorted by length
        }
        let sigma = apply_word(hom, entry.class.canonical());
        let cycle_counts = sigma.cycle_counts();
        let kmax = (radius / ell).floor() as u64;
        for k in 1..=kmax {
            let t = k as f64 * ell;
            if t > radius {
                break;
            }
            term_count += 1;
            max_k = max_k.max(k);
            let fix: usize = cycle_counts
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(d, _)| k % *d as u64 == 0)
                .map(|(d, &c)| d * c)
                .sum();
            let coef = ell / (2.0 * (t / 2.0).sinh());
            terms.push(coef * phi.eval(t) * fix as f64);
        }
    }
    terms.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
    let value = terms.iter().sum();
    Ok(TraceStatistic {
        value,
        term_count,
        support_radius: radius,
        max_k,
        degree: hom.degree(),
    })
}

/// The identity-term of the trace formula:
/// `n Vol(X) / (2π) ∫ psi_hat(r) r tanh(pi r) dr` with
/// `Vol(X) = 2π(2g-2)` by Gauss-Bonnet.
pub fn volume_term<F: Fn(f64) -> f64>(
    psi_hat: F,
    n: usize,
    genus: u32,
) -> Result<f64, TraceError> {
    let integral = spectral_measure_integral(psi_hat)?;
    Ok((2 * genus - 2) as f64 * n as f64 * integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::SmoothBumpPhi;
    use crate::covers::sample_hom_rejection;
    use crate::covers::SampleBudget;
    use crate::rng::stream_rng;
    use crate::surface_group::{build_catalog, build_genus2_group, SYSTOLE_LENGTH};

    fn systole_catalog() -> GeodesicCatalog {
        build_catalog(&build_genus2_group().unwrap(), 3.5).unwrap()
    }

    #[test]
    fn below_systole_support_is_empty_sum() {
        let cat = systole_catalog();
        let hom = CoverHom::trivial(2, 3);
        let phi = SmoothBumpPhi::new(0.0, 2.0, 1.0); // support [-2, 2]
        let stat = geometric_side(&cat, &hom, &phi).unwrap();
        assert_eq!(stat.value, 0.0);
        assert_eq!(stat.term_count, 0);
    }

    #[test]
    fn catalog_too_small_is_hard_error() {
        let cat = systole_catalog();
        let hom = CoverHom::trivial(2, 2);
        let phi = SmoothBumpPhi::new(0.0, 4.0, 1.0);
        assert!(matches!(
            geometric_side(&cat, &hom, &phi),
            Err(TraceError::CatalogTooSmall(_, _))
        ));
    }

    #[test]
    fn trivial_cover_scales_degree_one_value() {
        let cat = systole_catalog();
        let phi = SmoothBumpPhi::new(3.1, 0.3, 1.0);
        let base = geometric_side(&cat, &CoverHom::trivial(2, 1), &phi).unwrap();
        assert!(base.value != 0.0);
        for n in [2usize, 5, 9] {
            let stat = geometric_side(&cat, &CoverHom::trivial(2, n), &phi).unwrap();
            assert!(
                (stat.value - n as f64 * base.value).abs() <= 1e-12 * stat.value.abs(),
                "n={n}"
            );
            assert_eq!(stat.term_count, base.term_count);
        }
    }

    #[test]
    fn golden_degree_one_systole_sum() {
        // all 24 systolic classes contribute phi(l) * l / (2 sinh(l/2))
        let cat = systole_catalog();
        let phi = SmoothBumpPhi::new(3.1, 0.3, 1.0);
        let stat = geometric_side(&cat, &CoverHom::trivial(2, 1), &phi).unwrap();
        assert_eq!(stat.term_count, 24);
        let l = SYSTOLE_LENGTH;
        let expected = 24.0 * l / (2.0 * (l / 2.0).sinh()) * phi.eval(l);
        assert!((stat.value - expected).abs() < 1e-12 * expected.abs());
    }

    #[test]
    fn independent_summation_oracle() {
        // naive-order accumulation agrees with the magnitude-sorted one
        let cat = build_catalog(&build_genus2_group().unwrap(), 5.0).unwrap();
        let mut rng = stream_rng(7, 0);
        let (hom, _) = sample_hom_rejection(2, 4, &mut rng, SampleBudget::default()).unwrap();
        let phi = SmoothBumpPhi::new(4.0, 1.0, 1.3);
        let stat = geometric_side(&cat, &hom, &phi).unwrap();
        let mut naive = 0.0;
        for e in &cat.entries {
            let sigma = apply_word(&hom, e.class.canonical());
            let mut k = 1u64;
            while k as f64 * e.length <= phi.radius() {
                let t = k as f64 * e.length;
                naive += e.length / (2.0 * (t / 2.0).sinh())
                    * phi.eval(t)
                    * sigma.fix_count_of_power(k) as f64;
                k += 1;
            }
        }
        assert!((stat.value - naive).abs() < 1e-12 * naive.abs().max(1.0));
    }

    #[test]
    fn truncation_exactness_larger_catalog() {
        // enlarging the catalog cutoff beyond the support changes nothing
        let g = build_genus2_group().unwrap();
        let small = build_catalog(&g, 3.5).unwrap();
        let large = build_catalog(&g, 5.0).unwrap();
        let mut rng = stream_rng(8, 1);
        let (hom, _) = sample_hom_rejection(2, 5, &mut rng, SampleBudget::default()).unwrap();
        let phi = SmoothBumpPhi::new(3.1, 0.3, 1.0);
        let a = geometric_side(&small, &hom, &phi).unwrap();
        let b = geometric_side(&large, &hom, &phi).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.term_count, b.term_count);
    }

    #[test]
    fn volume_term_zero_and_linearity() {
        assert_eq!(volume_term(|_| 0.0, 5, 2).unwrap(), 0.0);
        let v1 = volume_term(|r: f64| (-r * r).exp(), 1, 2).unwrap();
        let v2 = volume_term(|r: f64| (-r * r).exp(), 2, 2).unwrap();
        assert!((v2 - 2.0 * v1).abs() < 1e-12 * v1.abs());
    }

    #[test]
    fn volume_term_matches_refinement_oracle() {
        let psi = |r: f64| (-r * r).exp();
        let v = volume_term(psi, 1, 2).unwrap();
        let n = 1_000_000;
        let h = 12.0 / n as f64;
        let mut oracle = 0.0;
        for i in 0..=n {
            let r = i as f64 * h;
            let g = psi(r) * r * (std::f64::consts::PI * r).tanh();
            oracle += if i == 0 || i == n { 0.5 * g } else { g };
        }
        oracle *= h * 2.0; // genus 2: 2g-2 = 2
        assert!((v - oracle).abs() < 1e-9);
    }
}
