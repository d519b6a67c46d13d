//! Acceptance gate: one test per criterion, each printing a PASS line with
//! the measured quantities (visible with `--nocapture` or on failure).
//!
//! The heavy criterion is the seeded Monte Carlo decay run (a6), dominated
//! by rejection sampling at degree 10.

use hypercover::analysis::{abel_invert, selberg_kernel, RadialTestFn, SmoothBumpPhi};
use hypercover::covers::{
    cycle_orbit_identity_check, enumerate_homs, hom_count_exact, hom_enumeration_count,
    sample_hom_rejection, Permutation, SampleBudget,
};
use hypercover::experiments::{
    markov_brothers_check, run_variance_experiment, uniform_bound_measurement, variance_csv,
    variance_summary_json, GeodesicKernel, Poly, UniformBoundConfig, VarianceConfig,
};
use hypercover::rng::stream_rng;
use hypercover::surface_group::{
    build_catalog, build_genus2_group, dehn_cyclic_reduce, GroupWord,
};
use hypercover::trace_formula::{predicted_eigenvalue, weyl_prediction};
use rand::Rng;

fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut buf: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        buf.swap(i, j);
    }
    Permutation::from_images(buf).unwrap()
}

#[test]
fn a1_lift_orbit_identity() {
    let mut rng = stream_rng(0xA1, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=50);
        let k = rng.gen_range(1..=20);
        let sigma = random_permutation(&mut rng, n);
        assert!(
            cycle_orbit_identity_check(&sigma, k),
            "identity failed at n={n} k={k}"
        );
    }
    println!("A1 PASS: #Fix(sigma^k) = sum_d d*(#d-cycles) on 1000 random (sigma, k)");
}

#[test]
fn a2_hom_counting_matches_witten_zeta() {
    let expected: [u64; 5] = [1, 16, 486, 34176, 3858240];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let enumerated = hom_enumeration_count(2, n).unwrap();
        let formula: u64 = hom_count_exact(2, n).try_into().unwrap();
        assert_eq!(enumerated, want, "enumeration at n={n}");
        assert_eq!(formula, want, "Witten-zeta formula at n={n}");
    }
    println!("A2 PASS: enumeration = (n!)^3 zeta(2;S_n) = 1, 16, 486, 34176, 3858240");
}

#[test]
fn a3_sampler_uniformity_chi_square() {
    let homs = enumerate_homs(2, 3).unwrap();
    assert_eq!(homs.len(), 486);
    let index: std::collections::HashMap<Vec<u32>, usize> = homs
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let key: Vec<u32> = h
                .generators()
                .iter()
                .flat_map(|p| p.images().iter().copied())
                .collect();
            (key, i)
        })
        .collect();

    let accepted = 100_000usize;
    let mut counts = vec![0u64; 486];
    let mut total_trials = 0u64;
    for i in 0..accepted {
        let mut rng = stream_rng(0xA3, i as u64);
        let (hom, trials) =
            sample_hom_rejection(2, 3, &mut rng, SampleBudget::default()).unwrap();
        total_trials += trials;
        let key: Vec<u32> = hom
            .generators()
            .iter()
            .flat_map(|p| p.images().iter().copied())
            .collect();
        counts[index[&key]] += 1;
    }

    let expect = accepted as f64 / 486.0;
    let chi2: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expect;
            d * d / expect
        })
        .sum();
    // 99.9% chi-square quantile for 485 dof via Wilson-Hilferty
    let df = 485.0f64;
    let z = 3.090_232_306_167_813; // standard normal 0.999 quantile
    let quantile = df * (1.0 - 2.0 / (9.0 * df) + z * (2.0 / (9.0 * df)).sqrt()).powi(3);
    assert!(chi2 < quantile, "chi2 {chi2} >= {quantile}");

    let acc_rate = accepted as f64 / total_trials as f64;
    let p = 0.375;
    let se = (p * (1.0 - p) / total_trials as f64).sqrt();
    assert!(
        (acc_rate - p).abs() <= 4.0 * se,
        "acceptance {acc_rate} vs 0.375 +- {}",
        4.0 * se
    );
    println!(
        "A3 PASS: chi2 = {chi2:.1} < {quantile:.1}; acceptance {acc_rate:.5} within 4se of 0.375"
    );
}

#[test]
fn a4_selberg_transform_roundtrip() {
    let cases = [
        SmoothBumpPhi::new(0.0, 1.0, 1.0),
        SmoothBumpPhi::new(0.8, 0.6, 0.7),
        SmoothBumpPhi::new(2.0, 1.5, 1.3),
    ];
    for (ci, phi) in cases.iter().enumerate() {
        let radius = phi.radius();
        let k = |t: f64| selberg_kernel(phi, t);
        let mut sup_err = 0.0f64;
        for i in 0..=60 {
            let u = 0.98 * radius * i as f64 / 60.0;
            let rec = abel_invert(&k, u, radius);
            sup_err = sup_err.max((rec - phi.eval(u)).abs());
        }
        assert!(sup_err <= 1e-6, "case {ci}: sup error {sup_err}");
        println!("A4 case {ci}: Abel roundtrip sup error {sup_err:.2e}");
    }
    println!("A4 PASS: kernel transform inverts within 1e-6 on three test functions");
}

#[test]
fn a5_prediction_consistency() {
    assert_eq!(predicted_eigenvalue(0, 1, 2), 0.25);
    let mut rng = stream_rng(0xA5, 1);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let j = rng.gen_range(0..=1_000_000u64);
        let n = rng.gen_range(1..=1000u64);
        let lambda = predicted_eigenvalue(j, n, 2);
        let err = (weyl_prediction(lambda, n, 2).count - j as f64).abs();
        worst = worst.max(err);
    }
    assert!(worst <= 1e-8, "worst roundtrip error {worst}");
    // quadrature vs the closed-form antiderivative
    let quad = hypercover::analysis::adaptive_integral(
        &hypercover::analysis::weyl_integrand,
        0.0,
        7.3,
        1e-12,
    )
    .unwrap();
    let closed = hypercover::analysis::weyl_integral(7.3);
    assert!((quad - closed).abs() <= 1e-9);
    println!(
        "A5 PASS: lambda_0 = 1/4; roundtrip worst {worst:.2e}; quadrature-antiderivative {:.2e}",
        (quad - closed).abs()
    );
}

/// The pinned decay experiment plus a nondegenerate demonstration.
///
/// With q = 2, Λ0 = 1/4 the support radius of `(h∘f_{Λ0})-check` is
/// `4 c0 ≈ 0.158`, far below the systole 3.0571, so the statistic vanishes
/// identically: every sampled mean is exactly zero and the variance bound
/// holds vacuously (constant 0). The bump-kernel run exercises genuine decay
/// through the very same geometric-side machinery and must show a log-log
/// slope <= -0.5.
#[test]
fn a6_variance_decay_seed42() {
    let degrees = vec![4usize, 6, 8, 10];
    let samples = 10_000usize;

    let pinned = run_variance_experiment(&VarianceConfig {
        genus: 2,
        degrees: degrees.clone(),
        samples_per_degree: samples,
        kernel: GeodesicKernel::PolyWindow { q: 2, lambda0: 0.25 },
        seed: 42,
        budget: SampleBudget::default(),
    })
    .unwrap();

    // monotone nonincreasing up to 2 standard errors
    for w in pinned.rows.windows(2) {
        assert!(
            w[1].mean_sq <= w[0].mean_sq + 2.0 * (w[0].std_err + w[1].std_err),
            "mean(S^2) increased from n={} to n={}",
            w[0].n,
            w[1].n
        );
    }
    match pinned.slope {
        Some(s) => assert!(s <= -0.5, "pinned-window slope {s} > -0.5"),
        None => {
            // the identically-zero case: every sample of every degree gave
            // exactly 0, so the decay bound holds with constant 0
            for row in &pinned.rows {
                assert_eq!(row.mean_sq, 0.0, "n={} nonzero mean without slope", row.n);
                assert_eq!(row.std_err, 0.0);
            }
            println!(
                "A6 note: q=2, Λ0=1/4 gives support radius {:.4} < systole 3.0571; \
                 the statistic is identically zero and the bound is vacuous",
                pinned.support_radius
            );
        }
    }

    let demo = run_variance_experiment(&VarianceConfig {
        genus: 2,
        degrees: vec![4, 6, 8],
        samples_per_degree: 4000,
        kernel: GeodesicKernel::Bump { center: 3.1, width: 0.3 },
        seed: 42,
        budget: SampleBudget::default(),
    })
    .unwrap();
    let slope = demo.slope.expect("bump demo has positive means");
    for w in demo.rows.windows(2) {
        assert!(w[1].mean_sq <= w[0].mean_sq + 2.0 * (w[0].std_err + w[1].std_err));
    }
    assert!(slope <= -0.5, "demo slope {slope} > -0.5");
    println!(
        "A6 PASS: pinned-window run (q=2, Λ0=1/4, seed 42) means {:?} (vacuously decaying); \
         bump-kernel demo slope {slope:.3} <= -0.5",
        pinned.rows.iter().map(|r| r.mean_sq).collect::<Vec<_>>()
    );
}

#[test]
fn a7_markov_brothers_fuzz() {
    let mut rng = stream_rng(0xA7, 0);
    for _ in 0..1000 {
        let q = rng.gen_range(1..=8usize);
        let k = rng.gen_range(1..=3u32);
        let deg = rng.gen_range(0..=q);
        let coeffs: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let check = markov_brothers_check(&Poly::new(coeffs), q, k, (q * q) as u64 * 16)
            .unwrap();
        assert!(check.satisfied, "violation at q={q} k={k}");
    }
    println!("A7 PASS: zero Markov-brothers violations over 1000 random polynomials");
}

#[test]
fn a8_uniform_bound_shadow() {
    let base = UniformBoundConfig {
        qs: vec![1, 2, 3, 4],
        lambda0s: vec![0.25, 1.0, 4.0],
        degrees: vec![2, 4, 6, 8],
        covers_per_degree: 250,
        seed: 42,
        budget: SampleBudget::default(),
    };
    let fam_a = uniform_bound_measurement(&base).unwrap();
    let mut cfg_b = base.clone();
    cfg_b.seed = 1042;
    let fam_b = uniform_bound_measurement(&cfg_b).unwrap();

    // every ratio is bounded by the measured grid constant
    let constant = fam_a.max_ratio.max(fam_b.max_ratio);
    for cell in fam_a.cells.iter().chain(&fam_b.cells) {
        assert!(cell.max_ratio <= constant + 1e-15);
    }
    // stability across disjoint seed families within 20%
    let spread = (fam_a.max_ratio - fam_b.max_ratio).abs();
    assert!(
        spread <= 0.2 * constant.max(1e-300),
        "families differ: {} vs {}",
        fam_a.max_ratio,
        fam_b.max_ratio
    );
    if constant == 0.0 {
        println!(
            "A8 note: every grid cell has support radius below the systole, \
             so all ratios are exactly zero (bound holds with constant 0)"
        );
    }
    println!(
        "A8 PASS: measured constant {constant:.3e}, stable across seed families ({} vs {})",
        fam_a.max_ratio, fam_b.max_ratio
    );
}

#[test]
fn a9_catalog_stability_and_systole() {
    let group = build_genus2_group().unwrap();
    // build_catalog errors out unless the word-bound and bound+2 runs agree
    let cat = build_catalog(&group, 3.2).unwrap();
    assert!(!cat.entries.is_empty());
    let oracle = 2.0 * (1.0 + std::f64::consts::SQRT_2).acosh();
    for e in &cat.entries {
        assert!(
            (e.length - oracle).abs() < 1e-9,
            "entry length {} differs from 2 arccosh(1+sqrt2)",
            e.length
        );
    }

    // class-function fuzz: canonical forms and traces invariant under
    // conjugation on 500 samples
    let mut rng = stream_rng(0xA9, 0);
    let rand_word = |rng: &mut rand_chacha::ChaCha8Rng, len: usize| {
        let letters: Vec<i32> = (0..len)
            .map(|_| rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        GroupWord::genus2(&letters)
    };
    for _ in 0..500 {
        let wlen = rng.gen_range(1..=8);
        let clen = rng.gen_range(1..=4);
        let w = rand_word(&mut rng, wlen);
        let c = rand_word(&mut rng, clen);
        let conj = w.conjugated_by(&c);
        assert_eq!(
            dehn_cyclic_reduce(&w).canonical(),
            dehn_cyclic_reduce(&conj).canonical()
        );
        let t1 = group.word_matrix(&w).trace().abs();
        let t2 = group.word_matrix(&conj).trace().abs();
        // 1e-8 absolute, relative once traces outgrow the representable
        // absolute resolution (8-letter words reach traces ~1e12)
        assert!((t1 - t2).abs() < 1e-8 * t1.max(1.0));
    }
    println!(
        "A9 PASS: stable catalog with {} systolic entries of length {oracle:.9}",
        cat.entries.len()
    );
}

#[test]
fn a10_reproducibility_across_threads() {
    let cfg = VarianceConfig {
        genus: 2,
        degrees: vec![2, 3, 4],
        samples_per_degree: 200,
        kernel: GeodesicKernel::Bump { center: 3.1, width: 0.3 },
        seed: 31337,
        budget: SampleBudget::default(),
    };
    let base = run_variance_experiment(&cfg).unwrap();
    let base_csv = variance_csv(&base);
    let base_json = variance_summary_json(&base);
    for threads in [1usize, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let run = pool.install(|| run_variance_experiment(&cfg).unwrap());
        assert_eq!(variance_csv(&run), base_csv, "CSV differs at {threads} threads");
        assert_eq!(
            variance_summary_json(&run),
            base_json,
            "summary differs at {threads} threads"
        );
    }
    println!("A10 PASS: byte-identical outputs at 1, 2, 4 worker threads");
}
