//! Exact uniform sampling of `Hom(Γ, S_n)` by rejection.
//!
//! Draw `2g` independent uniform permutations (inside-out Fisher-Yates) and
//! accept exactly when the surface relation holds. Acceptance probability is
//! `zeta(2g-2; S_n) / (n!)` for genus g = 2, so the scheme is practical up to
//! n around 12 with generous budgets.

use rand::RngCore;

use super::hom::CoverHom;
use super::perm::Permutation;
use super::CoverError;

/// Per-sample cap on rejection trials.
#[derive(Debug, Clone, Copy)]
pub struct SampleBudget(pub u64);

impl Default for SampleBudget {
    fn default() -> Self {
        SampleBudget(10_000_000_000)
    }
}

/// Scratch buffers reused across trials.
struct Scratch {
    gens: [Vec<u32>; 4],
    inv1: Vec<u32>,
    inv2: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            gens: [vec![0; n], vec![0; n], vec![0; n], vec![0; n]],
            inv1: vec![0; n],
            inv2: vec![0; n],
        }
    }
}

/// Unbiased bounded integer by Lemire's multiply-and-reject method; one
/// widening multiply per draw on the accept path.
#[inline]
fn lemire_bounded(rng: &mut impl RngCore, bound: u32) -> u32 {
    debug_assert!(bound >= 1);
    let mut m = u64::from(rng.next_u32()) * u64::from(bound);
    let mut lo = m as u32;
    if lo < bound {
        let threshold = bound.wrapping_neg() % bound;
        while lo < threshold {
            m = u64::from(rng.next_u32()) * u64::from(bound);
            lo = m as u32;
        }
    }
    (m >> 32) as u32
}

#[inline]
fn fill_uniform_perm(rng: &mut impl RngCore, buf: &mut [u32]) {
    // inside-out Fisher-Yates: uniform without pre-initialization
    buf[0] = 0;
    for i in 1..buf.len() {
        let j = lemire_bounded(rng, (i + 1) as u32) as usize;
        buf[i] = buf[j];
        buf[j] = i as u32;
    }
}

/// `[s1,s2][s3,s4] = id`, checked as `s1 s2 s1^-1 s2^-1 s3 s4 = s4 s3`
/// pointwise with early exit. Only two inverse tables are needed.
#[inline]
fn genus2_relation_holds(s: &mut Scratch) -> bool {
    let n = s.gens[0].len();
    for i in 0..n {
        s.inv1[s.gens[0][i] as usize] = i as u32;
        s.inv2[s.gens[1][i] as usize] = i as u32;
    }
    let (g1, g2, g3, g4) = (&s.gens[0], &s.gens[1], &s.gens[2], &s.gens[3]);
    for k in 0..n {
        let rhs = g4[g3[k] as usize];
        let mut v = g4[k] as usize;
        v = g3[v] as usize;
        v = s.inv2[v] as usize;
        v = s.inv1[v] as usize;
        v = g2[v] as usize;
        v = g1[v] as usize;
        if v as u32 != rhs {
            return false;
        }
    }
    true
}

/// Uniform sample from `Hom(Γ, S_n)`; returns the hom and the trial count.
pub fn sample_hom_rejection(
    genus: u32,
    n: usize,
    rng: &mut impl RngCore,
    budget: SampleBudget,
) -> Result<(CoverHom, u64), CoverError> {
    assert!(genus >= 2 && n >= 1);
    if genus == 2 {
        return sample_genus2(n, rng, budget);
    }
    // General genus: same rejection, via the validating constructor.
    let mut trials = 0u64;
    loop {
        trials += 1;
        if trials > budget.0 {
            return Err(CoverError::BudgetExceeded(budget.0, n));
        }
        let gens: Vec<Permutation> = (0..2 * genus as usize)
            .map(|_| {
                let mut buf = vec![0u32; n];
                fill_uniform_perm(rng, &mut buf);
                Permutation::from_images(buf).unwrap()
            })
            .collect();
        if let Ok(hom) = CoverHom::new(genus, gens) {
            return Ok((hom, trials));
        }
    }
}

fn sample_genus2(
    n: usize,
    rng: &mut impl RngCore,
    budget: SampleBudget,
) -> Result<(CoverHom, u64), CoverError> {
    let mut s = Scratch::new(n);
    let mut trials = 0u64;
    loop {
        trials += 1;
        if trials > budget.0 {
            return Err(CoverError::BudgetExceeded(budget.0, n));
        }
        for g in s.gens.iter_mut() {
            fill_uniform_perm(rng, g);
        }
        if genus2_relation_holds(&mut s) {
            let gens = s
                .gens
                .iter()
                .map(|g| Permutation::from_images(g.clone()).unwrap())
                .collect();
            let hom = CoverHom::new(2, gens).expect("relation verified");
            return Ok((hom, trials));
        }
    }
}
