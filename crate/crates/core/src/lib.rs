//! Exact topological invariants of links of weighted homogeneous
//! singularities, and branched covers realizing rational homology 5-spheres
//! with `|H₂| = k²`.
//!
//! The pipeline runs from a [`WeightSystem`] through its
//! [`OrlikDivisor`](divisor::OrlikDivisor) to [`LinkInvariants`]; covers
//! `z₀^k + f₃` are built by [`build_cover`], and [`realize`] picks a
//! genus-one base for any `k`.

pub mod cover;
pub mod divisor;
pub mod error;
pub mod milnor_orlik;
pub mod oracle;
pub mod poly;
pub mod primes;
pub mod realization;
pub mod smale;
pub mod verify;
pub mod weights;

pub use cover::{build_cover, build_cover_with, cover_divisor, cover_weights, CoverLink, CoverOptions};
pub use divisor::{AtOne, OrlikDivisor};
pub use error::{Error, Result};
pub use milnor_orlik::{
    betti_from_divisor, char_poly_from_divisor, link_invariants, link_invariants_with,
    milnor_orlik_divisor, LinkInvariants, LinkOptions,
};
pub use oracle::{oracle_expand, UnityRootMultiset};
pub use poly::CharPolynomial;
pub use primes::primes_4l_minus_1;
pub use realization::{
    family_member, realize, realize_with, search_weight_systems, Determination, FamilyMember,
    RealizationCertificate,
};
pub use smale::{is_unique_realization, smale_decompositions, SmaleManifold};
pub use weights::{WeightSystem, WeightedCurve};
