//! Exact rank of three-row A-hypergeometric systems.
//!
//! The rank jumps over the normalized volume are computed from the ranking
//! lattices of the configuration and the reduced homology of their order
//! complexes, with closed-form cross-checks where they apply.

pub mod ehrhart;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod rank;
pub mod semigroup;

pub use error::{ConfigError, EhrhartError, GeometryError, RankError};
pub use geometry::{faces, hull_with_origin, validate_config, Face, LatticePolytope, PointedConfig};
pub use linalg::{IVec3, IntMatrix, Lattice, Rational};
