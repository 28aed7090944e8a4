//! Exact slope calculus for vector bundles on the Fargues-Fontaine curve over
//! a geometric point, with the ℓ-dimension formulas built on it.
//!
//! - [`bundle`]: bundles as split HN decompositions, truncations, duals,
//!   twists, tensor products, HN polygons and their dominance order.
//! - [`banach_colmez`]: smoothness and ℓ-dimension of `H^0`, `H^1`, two-term
//!   complexes, Picard v-groupoids and torsion Hom/Ext spaces.
//! - [`moduli`]: `Bun_G`, `Bun_P^ν`, Laumon strata and relative-position
//!   strata for `GL_n`.
//! - [`weyl`]: lengths, Bruhat order and parabolic double cosets in `S_n`.
//!
//! Everything is integer or rational arithmetic; no floating point.

pub mod banach_colmez;
pub mod bundle;
pub mod error;
pub mod moduli;
pub mod slope;
pub mod torsion;
pub mod weyl;
pub mod wire;

pub use banach_colmez::{
    complex_h_dims, ext1_torsion_bundle_dim, h0_dim, h1_dim, picard_dim, section_is_smooth_point,
    torsion_h0_dim, torsion_hom_ext_dims, ComplexDims, HomExtDims, SmoothDim, TwoTermComplex,
};
pub use bundle::{Bundle, Cut, HnPolygon, Summand};
pub use error::{Error, Result};
pub use moduli::{
    bun_g_dim, bun_p_stratum_dim, d_nu, d_nu_pairing, filtered_end_degree, laumon_stratum_dim,
    relpos_stratum_dim, validate_bifiltration, BifiltrationData, Composition, DegreeVector,
    GradedFlagData, Violation,
};
pub use slope::Slope;
pub use torsion::TorsionSheaf;
pub use weyl::{WeylElement, YoungSubgroup};
