//! The uniform random cover model `Hom(Γ, S_n)`.
//!
//! A degree-n cover of the base surface is encoded by a homomorphism from the
//! surface group to the symmetric group, i.e. a tuple of `2g` permutations
//! satisfying the surface relation. The model is the uniform measure over
//! that finite set; this module provides exact enumeration (small n), exact
//! rejection sampling (moderate n), permutation characters, and the
//! Witten-zeta count of the set itself.

mod enumerate;
mod hom;
mod moments;
mod perm;
mod sample;
mod witten;

pub use enumerate::{enumerate_homs, for_each_hom, hom_enumeration_count, ENUM_MAX_DEGREE};
pub use hom::{apply_word, CoverHom};
pub use moments::{moment_exact, moment_exact_batch, rational_fit, MomentSpec, PolyFit};
pub use perm::{cycle_orbit_identity_check, fix_count, perm_compose, Permutation};
pub use sample::{sample_hom_rejection, SampleBudget};
pub use witten::{hom_count_exact, hom_count_f64, log_factorial, witten_zeta, PartitionTable};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: image list {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("surface relation violated by generator tuple")]
    RelationViolated,
    #[error("rejection budget of {0} trials exceeded at degree {1}")]
    BudgetExceeded(u64, usize),
    #[error("degree {0} too large for exact enumeration (max {1})")]
    TooLarge(usize, usize),
    #[error("rational fit needs at least {0} points, got {1}")]
    Underdetermined(usize, usize),
}
