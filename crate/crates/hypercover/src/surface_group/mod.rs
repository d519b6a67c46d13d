//! The genus-2 surface group, its Fuchsian realization, and the
//! primitive-geodesic catalog.
//!
//! Words are sequences of signed generator indices in `{±1, …, ±2g}`
//! (negative = inverse). Conjugacy classes are canonicalized by Dehn's
//! algorithm for the standard one-relator surface presentation
//! `[a1,a2][a3,a4] = 1`, followed by a lexicographically minimal rotation.

mod catalog;
mod dehn;
mod fuchsian;
mod word;

pub use catalog::{build_catalog, CatalogEntry, GeodesicCatalog};
pub use dehn::{dehn_cyclic_reduce, Canonicalizer, CyclicClass};
pub use fuchsian::{
    build_genus2_group, geodesic_length, FuchsianGroup, Mat2, SYSTOLE_LENGTH, SYSTOLE_TRACE,
};
pub use word::{free_reduce, GroupWord};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurfaceGroupError {
    #[error("letter {0} outside ±1..=±{1} or zero")]
    BadLetter(i32, u32),
    #[error("group construction failed: {0}")]
    Construction(String),
    #[error("matrix is not hyperbolic: |trace| = {0} <= 2 + 1e-9")]
    NonHyperbolic(f64),
    #[error("catalog unstable: word bounds {0} and {1} disagree ({2} vs {3} entries)")]
    CatalogUnstable(u32, u32, usize, usize),
    #[error("catalog word bound {0} exceeds enumeration budget (max {1})")]
    CatalogBudget(u32, u32),
    #[error("catalog parse error: {0}")]
    Parse(String),
}
