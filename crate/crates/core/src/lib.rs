//! Exact computations with Fano polygons.
//!
//! A Fano polygon is a convex lattice polygon whose vertices are primitive and
//! which contains the origin in its interior. Its face fan defines a toric log
//! del Pezzo surface. This crate computes duals, barycenters, the
//! Kähler–Einstein criterion (vanishing barycenter of the dual), automorphism
//! groups inside `GL(2, Z)`, cyclic quotient singularities and surface
//! invariants, all in exact arithmetic, and classifies polygons that fit in a
//! box by exhaustive enumeration.

pub mod census;
pub mod error;
pub mod families;
pub mod invariants;
pub mod kernel;
pub mod polygon;
pub mod symmetry;

pub use error::{FanoError, Result};
pub use kernel::{
    normalize_cone_basis, ord, ConeNormalForm, LatticePoint, Rational, RationalPoint,
    UnimodularMap,
};
pub use polygon::{FanoPolygon, PolygonFile, RationalPolygon};
pub use families::{KeTriangleParams, SmnParams};
pub use invariants::{SingularityType, SurfaceInvariants};
pub use symmetry::{AutGroup, GroupStructure};
pub use census::{CensusConfig, PolygonReport, VerificationReport};
