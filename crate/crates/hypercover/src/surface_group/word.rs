use super::SurfaceGroupError;

/// A word in the surface-group generators.
///
/// Letters are nonzero signed indices: `k` stands for the generator `a_k`,
/// `-k` for its inverse, `1 <= |k| <= 2*genus`. Words are not reduced on
/// construction; see [`free_reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<i32>,
    genus: u32,
}

impl GroupWord {
    pub fn new(letters: Vec<i32>, genus: u32) -> Result<Self, SurfaceGroupError> {
        let bound = 2 * genus as i32;
        for &l in &letters {
            if l == 0 || l.abs() > bound {
                return Err(SurfaceGroupError::BadLetter(l, genus));
            }
        }
        Ok(GroupWord { letters, genus })
    }

    /// Genus-2 convenience constructor; panics on a bad letter.
    pub fn genus2(letters: &[i32]) -> Self {
        GroupWord::new(letters.to_vec(), 2).expect("valid genus-2 letters")
    }

    pub fn empty(genus: u32) -> Self {
        GroupWord { letters: Vec::new(), genus }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
            genus: self.genus,
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters, genus: self.genus.max(other.genus) }
    }

    /// `c * self * c^{-1}`.
    pub fn conjugated_by(&self, c: &GroupWord) -> Self {
        c.concat(self).concat(&c.inverse())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    /// Letter order used for canonical forms: a1 < a1^-1 < a2 < a2^-1 < ...
    #[inline]
    pub(crate) fn letter_key(l: i32) -> i32 {
        2 * (l.abs() - 1) + i32::from(l < 0)
    }
}

/// Free reduction: repeatedly cancel adjacent `x x^{-1}` pairs.
pub fn free_reduce(w: &GroupWord) -> GroupWord {
    let mut out: Vec<i32> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    GroupWord { letters: out, genus: w.genus }
}

/// Compare two letter slices in the canonical letter order.
pub(crate) fn lex_less(a: &[i32], b: &[i32]) -> bool {
    for (&x, &y) in a.iter().zip(b.iter()) {
        let (kx, ky) = (GroupWord::letter_key(x), GroupWord::letter_key(y));
        if kx != ky {
            return kx < ky;
        }
    }
    a.len() < b.len()
}
