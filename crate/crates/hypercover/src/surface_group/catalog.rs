//! Primitive-geodesic catalogs: enumeration, stability check, persistence.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::dehn::{genus2_canonicalizer, CyclicClass};
use super::fuchsian::{geodesic_length, FuchsianGroup};
use super::word::GroupWord;
use super::SurfaceGroupError;

/// One oriented primitive conjugacy class surviving the length cutoff.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub class: CyclicClass,
    pub length: f64,
}

/// Catalog of primitive oriented closed geodesics with length <= cutoff.
#[derive(Debug, Clone)]
pub struct GeodesicCatalog {
    pub surface_id: String,
    pub length_cutoff: f64,
    /// Sorted by (length, canonical word).
    pub entries: Vec<CatalogEntry>,
    pub word_bound_used: u32,
    /// `(K1, K2)` least-squares fit of `|gamma| <= K1 * length + K2`,
    /// shifted so it covers every entry.
    pub empirical_k1_k2: (f64, f64),
}

const BOOTSTRAP_BOUND: u32 = 4;
const MAX_WORD_BOUND: u32 = 12;

/// Enumerates primitive classes up to `length_cutoff`.
///
/// The word-length bound is bootstrapped: classes found at a small fixed
/// bound give a provisional fit `|gamma| ~ K1' * length + K2'`, the real pass
/// runs at 1.5x that estimate, and the result must be identical to a pass at
/// bound + 2 (otherwise the bound was too small and the catalog errors out).
pub fn build_catalog(
    group: &FuchsianGroup,
    length_cutoff: f64,
) -> Result<GeodesicCatalog, SurfaceGroupError> {
    assert!(length_cutoff > 0.0, "length cutoff must be positive");
    let boot = collect_classes(group, BOOTSTRAP_BOUND, f64::INFINITY);
    let (k1p, k2p) = fit_word_bound(&boot);
    let bound = ((1.5 * (k1p * length_cutoff + k2p)).ceil() as u32).max(BOOTSTRAP_BOUND);
    if bound + 2 > MAX_WORD_BOUND {
        return Err(SurfaceGroupError::CatalogBudget(bound + 2, MAX_WORD_BOUND));
    }

    let at_bound = collect_classes(group, bound, length_cutoff);
    let at_bound_plus = collect_classes(group, bound + 2, length_cutoff);
    if !same_entries(&at_bound, &at_bound_plus) {
        return Err(SurfaceGroupError::CatalogUnstable(
            bound,
            bound + 2,
            at_bound.len(),
            at_bound_plus.len(),
        ));
    }

    let mut entries: Vec<CatalogEntry> = at_bound_plus
        .into_iter()
        .map(|(_, e)| e)
        .collect();
    entries.sort_by(|x, y| {
        x.length
            .partial_cmp(&y.length)
            .unwrap()
            .then_with(|| x.class.canonical().cmp(y.class.canonical()))
    });
    let fit_data: BTreeMap<GroupWord, CatalogEntry> = entries
        .iter()
        .map(|e| (e.class.canonical().clone(), e.clone()))
        .collect();
    let empirical_k1_k2 = fit_word_bound(&fit_data);

    Ok(GeodesicCatalog {
        surface_id: "bolza-genus2".to_string(),
        length_cutoff,
        entries,
        word_bound_used: bound,
        empirical_k1_k2,
    })
}

/// All primitive classes with length in (0, cutoff], keyed by canonical word,
/// found among cyclically reduced words of length <= bound.
fn collect_classes(
    group: &FuchsianGroup,
    bound: u32,
    cutoff: f64,
) -> BTreeMap<GroupWord, CatalogEntry> {
    let canon = genus2_canonicalizer();
    let letters = [1i32, -1, 2, -2, 3, -3, 4, -4];
    let maps: Vec<BTreeMap<GroupWord, CatalogEntry>> = letters
        .par_iter()
        .map(|&first| {
            let mut found = BTreeMap::new();
            let mut stack = vec![first];
            descend(group, canon, &mut stack, bound as usize, cutoff, &mut found);
            found
        })
        .collect();
    let mut merged = BTreeMap::new();
    for m in maps {
        merged.extend(m);
    }
    merged
}

fn descend(
    group: &FuchsianGroup,
    canon: &super::dehn::Canonicalizer,
    word: &mut Vec<i32>,
    bound: usize,
    cutoff: f64,
    found: &mut BTreeMap<GroupWord, CatalogEntry>,
) {
    // Words that cancel cyclically or are not the lexicographic minimum among
    // their rotations reach classes already covered by other enumerated
    // words; full canonicalization is run only for words that survive both
    // filters and are already geodesic.
    let (first, last) = (*word.first().unwrap(), *word.last().unwrap());
    if first != -last && is_min_rotation(word) {
        let reduced = canon.geodesic_form(word.clone());
        if reduced.len() == word.len() {
            let class = canon.class_of_geodesic(reduced);
            if !class.is_identity()
                && class.is_primitive()
                && !found.contains_key(class.canonical())
            {
                let m = group.word_matrix(class.canonical());
                let length = geodesic_length(&m).unwrap_or(0.0);
                if length > 0.0 && length <= cutoff {
                    found.insert(
                        class.canonical().clone(),
                        CatalogEntry { class: class.clone(), length },
                    );
                }
            }
        }
    }
    if word.len() == bound {
        return;
    }
    let last = *word.last().unwrap();
    for l in [1i32, -1, 2, -2, 3, -3, 4, -4] {
        if l == -last {
            continue;
        }
        word.push(l);
        descend(group, canon, word, bound, cutoff, found);
        word.pop();
    }
}

/// Is `v` lexicographically minimal among its own rotations?
fn is_min_rotation(v: &[i32]) -> bool {
    let m = v.len();
    'rot: for s in 1..m {
        for i in 0..m {
            let a = GroupWord::letter_key(v[(s + i) % m]);
            let b = GroupWord::letter_key(v[i]);
            if a < b {
                return false;
            }
            if a > b {
                continue 'rot;
            }
        }
    }
    true
}

fn same_entries(
    a: &BTreeMap<GroupWord, CatalogEntry>,
    b: &BTreeMap<GroupWord, CatalogEntry>,
) -> bool {
    a.len() == b.len() && a.keys().zip(b.keys()).all(|(x, y)| x == y)
}

/// Least-squares fit of `|gamma| = K1 * length + K2`, then shift K2 up so the
/// bound covers every data point.
fn fit_word_bound(classes: &BTreeMap<GroupWord, CatalogEntry>) -> (f64, f64) {
    let pts: Vec<(f64, f64)> = classes
        .values()
        .map(|e| (e.length, e.class.word_length() as f64))
        .collect();
    if pts.len() < 2 {
        return (1.0, 1.0);
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    let k1 = if denom.abs() < 1e-12 { 0.0 } else { (n * sxy - sx * sy) / denom };
    let k1 = k1.max(0.0);
    let k2 = (sy - k1 * sx) / n;
    let lift = pts
        .iter()
        .map(|&(x, y)| y - (k1 * x + k2))
        .fold(0.0f64, f64::max);
    (k1, k2 + lift)
}

impl GeodesicCatalog {
    /// Serializes to the line-oriented v1 format. Reread is bit-exact.
    pub fn to_file_string(&self) -> String {
        let mut body = String::new();
        for e in &self.entries {
            let word = e
                .class
                .canonical()
                .letters()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",");
            writeln!(body, "word={} len={:.16e} primitive=1", word, e.length).unwrap();
        }
        let sha = hex_digest(&body);
        format!(
            "#hypercover-catalog v1 surface={} cutoff={:.16e} wordbound={} sha={}\n{}",
            self.surface_id, self.length_cutoff, self.word_bound_used, sha, body
        )
    }

    pub fn from_file_string(s: &str) -> Result<GeodesicCatalog, SurfaceGroupError> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| SurfaceGroupError::Parse("empty file".into()))?;
        let rest = header
            .strip_prefix("#hypercover-catalog v1 ")
            .ok_or_else(|| SurfaceGroupError::Parse("bad header magic".into()))?;
        let mut surface_id = None;
        let mut cutoff = None;
        let mut wordbound = None;
        let mut sha = None;
        for field in rest.split_whitespace() {
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| SurfaceGroupError::Parse(format!("bad header field {field}")))?;
            match k {
                "surface" => surface_id = Some(v.to_string()),
                "cutoff" => {
                    cutoff = Some(v.parse::<f64>().map_err(|e| {
                        SurfaceGroupError::Parse(format!("bad cutoff: {e}"))
                    })?)
                }
                "wordbound" => {
                    wordbound = Some(v.parse::<u32>().map_err(|e| {
                        SurfaceGroupError::Parse(format!("bad wordbound: {e}"))
                    })?)
                }
                "sha" => sha = Some(v.to_string()),
                other => {
                    return Err(SurfaceGroupError::Parse(format!("unknown header key {other}")))
                }
            }
        }
        let (surface_id, length_cutoff, word_bound_used, sha) = match
            (surface_id, cutoff, wordbound, sha)
        {
            (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
            _ => return Err(SurfaceGroupError::Parse("missing header field".into())),
        };

        let body_start = s
            .find('\n')
            .map(|i| i + 1)
            .ok_or_else(|| SurfaceGroupError::Parse("missing body".into()))?;
        let body = &s[body_start..];
        if hex_digest(body) != sha {
            return Err(SurfaceGroupError::Parse("sha mismatch".into()));
        }

        let mut entries = Vec::new();
        for line in body.lines() {
            let mut word = None;
            let mut len = None;
            for field in line.split_whitespace() {
                let (k, v) = field
                    .split_once('=')
                    .ok_or_else(|| SurfaceGroupError::Parse(format!("bad entry field {field}")))?;
                match k {
                    "word" => {
                        let letters: Result<Vec<i32>, _> =
                            v.split(',').map(|x| x.parse::<i32>()).collect();
                        word = Some(letters.map_err(|e| {
                            SurfaceGroupError::Parse(format!("bad word: {e}"))
                        })?);
                    }
                    "len" => {
                        len = Some(v.parse::<f64>().map_err(|e| {
                            SurfaceGroupError::Parse(format!("bad len: {e}"))
                        })?)
                    }
                    "primitive" => {
                        if v != "1" {
                            return Err(SurfaceGroupError::Parse(
                                "non-primitive entry in catalog".into(),
                            ));
                        }
                    }
                    other => {
                        return Err(SurfaceGroupError::Parse(format!("unknown entry key {other}")))
                    }
                }
            }
            let letters =
                word.ok_or_else(|| SurfaceGroupError::Parse("entry missing word".into()))?;
            let length =
                len.ok_or_else(|| SurfaceGroupError::Parse("entry missing len".into()))?;
            let w = GroupWord::new(letters, 2)?;
            let class = genus2_canonicalizer().reduce(&w);
            entries.push(CatalogEntry { class, length });
        }

        let fit_data: BTreeMap<GroupWord, CatalogEntry> = entries
            .iter()
            .map(|e| (e.class.canonical().clone(), e.clone()))
            .collect();
        let empirical_k1_k2 = fit_word_bound(&fit_data);
        Ok(GeodesicCatalog {
            surface_id,
            length_cutoff,
            entries,
            word_bound_used,
            empirical_k1_k2,
        })
    }
}

fn hex_digest(body: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(body.as_bytes());
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
