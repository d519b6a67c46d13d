//! Random degree-n covers of a compact genus-2 hyperbolic surface.
//!
//! The crate provides four layers:
//!
//! * [`surface_group`] — the genus-2 surface group with an explicit Fuchsian
//!   realization (Bolza-type), word reduction, conjugacy canonical forms and
//!   the primitive-geodesic catalog with hyperbolic lengths.
//! * [`covers`] — the uniform random cover model `Hom(Γ, S_n)`: exact
//!   enumeration, rejection sampling, permutation characters and
//!   Witten-zeta counting.
//! * [`analysis`] — the smooth test function, Chebyshev polynomial machinery,
//!   smooth cutoffs, quadrature and the radial kernel transform.
//! * [`trace_formula`] / [`experiments`] — the geometric side of the twisted
//!   trace formula, Weyl-law predictions, and the Monte Carlo experiments
//!   built on top of them.

pub mod analysis;
pub mod covers;
pub mod experiments;
pub mod rng;
pub mod surface_group;
pub mod trace_formula;

pub use surface_group::{
    build_genus2_group, CyclicClass, FuchsianGroup, GeodesicCatalog, GroupWord,
};
