use crate::surface_group::GroupWord;

use super::perm::{perm_compose, Permutation};
use super::CoverError;

/// A point of the cover model: `2g` permutations of degree `n` satisfying the
/// surface relation `[s1,s2][s3,s4]...[s_{2g-1},s_{2g}] = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverHom {
    genus: u32,
    degree: usize,
    gens: Vec<Permutation>,
}

impl CoverHom {
    /// Validates the relation exactly (permutation equality, no tolerance).
    pub fn new(genus: u32, gens: Vec<Permutation>) -> Result<Self, CoverError> {
        assert!(genus >= 2, "genus must be >= 2");
        assert_eq!(gens.len(), 2 * genus as usize, "need 2g generators");
        let degree = gens[0].degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(CoverError::DegreeMismatch(degree, g.degree()));
            }
        }
        let hom = CoverHom { genus, degree, gens };
        if !hom.relation_holds() {
            return Err(CoverError::RelationViolated);
        }
        Ok(hom)
    }

    /// The trivial homomorphism (every generator the identity).
    pub fn trivial(genus: u32, degree: usize) -> Self {
        CoverHom {
            genus,
            degree,
            gens: (0..2 * genus as usize)
                .map(|_| Permutation::identity(degree))
                .collect(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn relation_holds(&self) -> bool {
        let rel: Vec<i32> = (0..self.genus as i32)
            .flat_map(|i| {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                [a, b, -a, -b]
            })
            .collect();
        let w = GroupWord::new(rel, self.genus).unwrap();
        apply_word(self, &w).is_identity()
    }

    /// Image of a single letter.
    pub fn letter_image(&self, l: i32) -> Permutation {
        debug_assert!(l != 0 && l.unsigned_abs() <= 2 * self.genus);
        if l > 0 {
            self.gens[(l - 1) as usize].clone()
        } else {
            self.gens[(-l - 1) as usize].inverse()
        }
    }
}

/// Image of a word under the homomorphism: the product of generator images in
/// written order (leftmost letter outermost), identity for the empty word.
pub fn apply_word(h: &CoverHom, w: &GroupWord) -> Permutation {
    let mut out = Permutation::identity(h.degree);
    // Right-to-left so that the leftmost letter is applied last.
    for &l in w.letters().iter().rev() {
        let img = h.letter_image(l);
        out = perm_compose(&img, &out).expect("same degree");
    }
    out
}
