//! Exact enumeration of `Hom(Γ, S_n)` for small n.

use rayon::prelude::*;

use super::hom::CoverHom;
use super::perm::Permutation;
use super::CoverError;

/// Exact enumeration is limited to degrees where `(n!)^{2g}` relation checks
/// stay at desk scale: `(5!)^4 ≈ 2.1e8` for genus 2.
pub const ENUM_MAX_DEGREE: usize = 5;

/// All permutations of `{0,..,n-1}` in lexicographic order of image lists.
fn all_perms(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
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

struct Tables {
    perms: Vec<Vec<u32>>,
    invs: Vec<Vec<u32>>,
    n: usize,
}

impl Tables {
    fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let invs = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u32; n];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u32;
                }
                inv
            })
            .collect();
        Tables { perms, invs, n }
    }

    /// `[s1,s2][s3,s4] = id`, pointwise with early exit.
    #[inline]
    fn relation_holds(&self, i1: usize, i2: usize, i3: usize, i4: usize) -> bool {
        let (g1, g2, g3, g4) = (&self.perms[i1], &self.perms[i2], &self.perms[i3], &self.perms[i4]);
        let (v1, v2) = (&self.invs[i1], &self.invs[i2]);
        for k in 0..self.n {
            let rhs = g4[g3[k] as usize];
            let mut v = g4[k] as usize;
            v = g3[v] as usize;
            v = v2[v] as usize;
            v = v1[v] as usize;
            v = g2[v] as usize;
            v = g1[v] as usize;
            if v as u32 != rhs {
                return false;
            }
        }
        true
    }
}

/// Visits every element of `Hom(Γ, S_n)` (genus 2) exactly once, in
/// lexicographic order of the generator tuple.
pub fn for_each_hom<F: FnMut(&CoverHom)>(
    genus: u32,
    n: usize,
    mut visit: F,
) -> Result<(), CoverError> {
    assert_eq!(genus, 2, "exact enumeration is genus-2 only");
    if n > ENUM_MAX_DEGREE {
        return Err(CoverError::TooLarge(n, ENUM_MAX_DEGREE));
    }
    let t = Tables::new(n);
    let m = t.perms.len();
    for i1 in 0..m {
        for i2 in 0..m {
            for i3 in 0..m {
                for i4 in 0..m {
                    if t.relation_holds(i1, i2, i3, i4) {
                        let gens = vec![
                            Permutation::from_images(t.perms[i1].clone()).unwrap(),
                            Permutation::from_images(t.perms[i2].clone()).unwrap(),
                            Permutation::from_images(t.perms[i3].clone()).unwrap(),
                            Permutation::from_images(t.perms[i4].clone()).unwrap(),
                        ];
                        let hom = CoverHom::new(2, gens).expect("relation verified");
                        visit(&hom);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Materialized enumeration; use only for n <= 3 sized problems.
pub fn enumerate_homs(genus: u32, n: usize) -> Result<Vec<CoverHom>, CoverError> {
    let mut out = Vec::new();
    for_each_hom(genus, n, |h| out.push(h.clone()))?;
    Ok(out)
}

/// `#Hom(Γ, S_n)` by enumeration, parallel over the outer generator.
pub fn hom_enumeration_count(genus: u32, n: usize) -> Result<u64, CoverError> {
    assert_eq!(genus, 2);
    if n > ENUM_MAX_DEGREE {
        return Err(CoverError::TooLarge(n, ENUM_MAX_DEGREE));
    }
    let t = Tables::new(n);
    let m = t.perms.len();
    let count = (0..m)
        .into_par_iter()
        .map(|i1| {
            let mut c = 0u64;
            for i2 in 0..m {
                for i3 in 0..m {
                    for i4 in 0..m {
                        if t.relation_holds(i1, i2, i3, i4) {
                            c += 1;
                        }
                    }
                }
            }
            c
        })
        .sum();
    Ok(count)
}
