//! Lattice polytopes in dimension three and the face structure of a
//! configuration's cone.

mod config;
mod face;
mod polytope;
pub mod vec;

pub use config::{hull_with_origin, validate_config, PointedConfig};
pub use face::{faces, meet, pyramid_face, Face};
pub use polytope::{convex_hull_2d, edge_lattice_length, Halfspace, LatticePolytope};

/// `L(b1, b2, b3)`: three segments of heights `b_i` over a unimodular triangle.
pub fn lawrence_prism_points(b: [i64; 3]) -> Vec<crate::linalg::IVec3> {
    vec![
        [0, 0, 0],
        [0, 0, b[0]],
        [1, 0, 0],
        [1, 0, b[1]],
        [0, 1, 0],
        [0, 1, b[2]],
    ]
}
