use super::CoverError;

/// A permutation of `{0, ..., n-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, CoverError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return Err(CoverError::NotAPermutation(images));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// From cycles, e.g. `from_cycles(5, &[&[0,1,2],&[3,4]])` = (0 1 2)(3 4).
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cyc in cycles {
            for i in 0..cyc.len() {
                images[cyc[i] as usize] = cyc[(i + 1) % cyc.len()];
            }
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` composed k times with itself.
    pub fn pow(&self, k: u32) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k {
            out = perm_compose(self, &out).expect("same degree");
        }
        out
    }

    /// Number of cycles of each length: `counts[l]` = cycles of length l.
    pub fn cycle_counts(&self) -> Vec<usize> {
        let n = self.degree();
        let mut counts = vec![0usize; n + 1];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            counts[len] += 1;
        }
        counts
    }

    /// Fixed points of the k-th power, computed from the cycle type:
    /// a d-cycle contributes d fixed points to sigma^k exactly when d | k.
    pub fn fix_count_of_power(&self, k: u64) -> usize {
        let counts = self.cycle_counts();
        counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(d, _)| k % *d as u64 == 0)
            .map(|(d, &c)| d * c)
            .sum()
    }
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn perm_compose(a: &Permutation, b: &Permutation) -> Result<Permutation, CoverError> {
    if a.degree() != b.degree() {
        return Err(CoverError::DegreeMismatch(a.degree(), b.degree()));
    }
    let images = b.images.iter().map(|&i| a.images[i as usize]).collect();
    Ok(Permutation { images })
}

/// Number of fixed points; the trace of the standard permutation matrix.
pub fn fix_count(p: &Permutation) -> usize {
    p.images
        .iter()
        .enumerate()
        .filter(|(i, &v)| *i as u32 == v)
        .count()
}

/// Verifies `#Fix(p^k) = sum_{d | k} d * (#d-cycles of p)` exactly.
pub fn cycle_orbit_identity_check(p: &Permutation, k: u32) -> bool {
    assert!(k >= 1);
    fix_count(&p.pow(k)) == p.fix_count_of_power(k as u64)
}
