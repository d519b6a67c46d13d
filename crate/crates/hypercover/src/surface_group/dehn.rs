//! Dehn's algorithm for conjugacy canonical forms.
//!
//! The genus-g surface relator `[a1,a2]...[a_{2g-1},a_{2g}]` gives a Dehn
//! presentation: a cyclically reduced word is geodesic once it contains no
//! cyclic subword longer than half the relator (as a subword of some cyclic
//! rotation of the relator or its inverse). Geodesic cyclic words in the same
//! conjugacy class differ only by rotations and by replacing a subword that
//! is *exactly* half a relator with the inverse complement. The canonical
//! form is the lexicographic minimum over that whole equivalence orbit.

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use super::word::{lex_less, GroupWord};

/// A canonical conjugacy-class representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicClass {
    canonical: GroupWord,
    primitive: bool,
    power_root: Option<(Box<CyclicClass>, u32)>,
}

impl CyclicClass {
    pub fn canonical(&self) -> &GroupWord {
        &self.canonical
    }

    /// Word length of the canonical representative (0 for the identity).
    pub fn word_length(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_identity(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// `Some((root, k))` when the class is a k-th power (k >= 2) of `root`.
    pub fn power_root(&self) -> Option<(&CyclicClass, u32)> {
        self.power_root.as_ref().map(|(c, k)| (c.as_ref(), *k))
    }
}

/// Precomputed relator rotation tables for one genus.
pub struct Canonicalizer {
    genus: u32,
    rlen: usize,
    half: usize,
    /// All cyclic rotations of the relator and of its inverse.
    rotations: Vec<Vec<i32>>,
    /// Rotation indices grouped by first letter (letter_key-indexed).
    by_first: Vec<Vec<usize>>,
}

fn surface_relator(genus: u32) -> Vec<i32> {
    let mut r = Vec::with_capacity(4 * genus as usize);
    for i in 0..genus as i32 {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        r.extend_from_slice(&[a, b, -a, -b]);
    }
    r
}

impl Canonicalizer {
    pub fn new(genus: u32) -> Self {
        let r = surface_relator(genus);
        let rlen = r.len();
        let inv: Vec<i32> = r.iter().rev().map(|l| -l).collect();
        let mut rotations = Vec::with_capacity(2 * rlen);
        for base in [&r, &inv] {
            for s in 0..rlen {
                let mut rot = Vec::with_capacity(rlen);
                rot.extend_from_slice(&base[s..]);
                rot.extend_from_slice(&base[..s]);
                rotations.push(rot);
            }
        }
        let mut by_first = vec![Vec::new(); 4 * genus as usize];
        for (i, rot) in rotations.iter().enumerate() {
            by_first[GroupWord::letter_key(rot[0]) as usize].push(i);
        }
        Canonicalizer { genus, rlen, half: rlen / 2, rotations, by_first }
    }

    pub fn relator_word(&self) -> GroupWord {
        GroupWord::new(surface_relator(self.genus), self.genus).unwrap()
    }

    /// Canonicalize the conjugacy class of `w`.
    pub fn reduce(&self, w: &GroupWord) -> CyclicClass {
        assert_eq!(w.genus(), self.genus, "word genus mismatch");
        let v = self.fully_reduce(w.letters().to_vec());
        self.class_of_geodesic(v)
    }

    /// Cyclic geodesic form (length-minimal, rotation not yet chosen).
    pub(crate) fn geodesic_form(&self, letters: Vec<i32>) -> Vec<i32> {
        self.fully_reduce(letters)
    }

    /// Finish canonicalization of an already geodesic cyclic word.
    pub(crate) fn class_of_geodesic(&self, mut v: Vec<i32>) -> CyclicClass {
        // Orbit closure under exact-half relator swaps; restart if a swap
        // exposes a shorter form.
        let (best, orbit) = loop {
            match self.half_swap_orbit(&v) {
                Ok(pair) => break pair,
                Err(shorter) => v = shorter,
            }
        };

        let canonical = GroupWord::new(best.clone(), self.genus).unwrap();
        let (primitive, power_root) = self.power_structure(&orbit, best.len());
        CyclicClass { canonical, primitive, power_root }
    }

    /// Cyclic free reduction plus greedy longest-match/leftmost replacement of
    /// any cyclic subword longer than half the relator.
    fn fully_reduce(&self, mut v: Vec<i32>) -> Vec<i32> {
        loop {
            v = cyclic_free_reduce(v);
            if v.len() <= self.half {
                return v;
            }
            match self.find_over_half(&v) {
                Some((start, p, rot)) => {
                    v = self.replace(&v, start, p, rot);
                }
                None => return v,
            }
        }
    }

    /// Longest (then leftmost, then lowest rotation index) cyclic subword of
    /// `v` matching more than half of a relator rotation. One pass: at each
    /// position only the rotations starting with that letter are scanned.
    fn find_over_half(&self, v: &[i32]) -> Option<(usize, usize, usize)> {
        let m = v.len();
        let pmax = m.min(self.rlen);
        let mut best: Option<(usize, usize, usize)> = None;
        let mut best_p = self.half;
        for start in 0..m {
            for &ri in &self.by_first[GroupWord::letter_key(v[start]) as usize] {
                let rot = &self.rotations[ri];
                let mut p = 0;
                while p < pmax && v[(start + p) % m] == rot[p] {
                    p += 1;
                }
                if p > best_p {
                    best_p = p;
                    best = Some((start, p, ri));
                }
            }
        }
        best
    }

    /// Replace the cyclic subword `v[start..start+p]` (matching the first `p`
    /// letters of relator rotation `ri`) by the inverse of the complement.
    fn replace(&self, v: &[i32], start: usize, p: usize, ri: usize) -> Vec<i32> {
        let m = v.len();
        let rot = &self.rotations[ri];
        let mut out: Vec<i32> = rot[p..].iter().rev().map(|l| -l).collect();
        for i in p..m {
            out.push(v[(start + i) % m]);
        }
        out
    }

    /// Explore the orbit of `v` under rotations and exact-half swaps.
    ///
    /// Returns `(lex-min element, orbit set of min-rotation forms)`, or
    /// `Err(shorter)` when a swap admits further reduction (meaning `v` was
    /// not geodesic after all).
    #[allow(clippy::type_complexity)]
    fn half_swap_orbit(&self, v: &[i32]) -> Result<(Vec<i32>, BTreeSet<Vec<i32>>), Vec<i32>> {
        let m = v.len();
        let start = min_rotation(v);
        if m < self.half || !self.has_half_match(v) {
            let mut orbit = BTreeSet::new();
            orbit.insert(start.clone());
            return Ok((start, orbit));
        }
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        let mut best = start.clone();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            if lex_less(&cur, &best) {
                best = cur.clone();
            }
            for s in 0..m {
                for &ri in &self.by_first[GroupWord::letter_key(cur[s]) as usize] {
                    let rot = &self.rotations[ri];
                    if (1..self.half).all(|i| cur[(s + i) % m] == rot[i]) {
                        let mut variant: Vec<i32> =
                            rot[self.half..].iter().rev().map(|l| -l).collect();
                        for i in self.half..m {
                            variant.push(cur[(s + i) % m]);
                        }
                        let variant = self.fully_reduce(variant);
                        if variant.len() < m {
                            return Err(variant);
                        }
                        let key = min_rotation(&variant);
                        if seen.insert(key.clone()) {
                            queue.push_back(key);
                        }
                    }
                }
            }
        }
        Ok((best, seen))
    }

    fn has_half_match(&self, v: &[i32]) -> bool {
        let m = v.len();
        (0..m).any(|s| {
            self.by_first[GroupWord::letter_key(v[s]) as usize]
                .iter()
                .any(|&ri| {
                    let rot = &self.rotations[ri];
                    (1..self.half).all(|i| v[(s + i) % m] == rot[i])
                })
        })
    }

    /// Repetition test across the orbit: the class is a proper power exactly
    /// when some geodesic representative is a d-periodic cyclic word.
    fn power_structure(
        &self,
        orbit: &BTreeSet<Vec<i32>>,
        m: usize,
    ) -> (bool, Option<(Box<CyclicClass>, u32)>) {
        if m == 0 {
            return (false, None);
        }
        for d in 1..m {
            if m % d != 0 {
                continue;
            }
            for v in orbit {
                if (0..m).all(|i| v[i] == v[(i + d) % m]) {
                    let root = GroupWord::new(v[..d].to_vec(), self.genus).unwrap();
                    let root_class = self.reduce(&root);
                    return (false, Some((Box::new(root_class), (m / d) as u32)));
                }
            }
        }
        (true, None)
    }
}

fn cyclic_free_reduce(v: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(v.len());
    for l in v {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    let mut lo = 0;
    let mut hi = out.len();
    while hi - lo >= 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

fn min_rotation(v: &[i32]) -> Vec<i32> {
    let m = v.len();
    if m <= 1 {
        return v.to_vec();
    }
    let mut best: Vec<i32> = v.to_vec();
    let mut buf = Vec::with_capacity(m);
    for s in 1..m {
        buf.clear();
        buf.extend_from_slice(&v[s..]);
        buf.extend_from_slice(&v[..s]);
        if lex_less(&buf, &best) {
            best.clone_from(&buf);
        }
    }
    best
}

static GENUS2: OnceLock<Canonicalizer> = OnceLock::new();

pub(crate) fn genus2_canonicalizer() -> &'static Canonicalizer {
    GENUS2.get_or_init(|| Canonicalizer::new(2))
}

/// Canonicalize the conjugacy class of a genus-2 word using the standard
/// relator `[a1,a2][a3,a4]`.
pub fn dehn_cyclic_reduce(w: &GroupWord) -> CyclicClass {
    genus2_canonicalizer().reduce(w)
}
