//! Configurations shared by the benchmarks.

use gkzrank::geometry::lawrence_prism_points;
use gkzrank::{IVec3, PointedConfig};

pub fn lawrence(b: [i64; 3]) -> PointedConfig {
    let cols: Vec<IVec3> = lawrence_prism_points(b).into_iter().filter(|p| *p != [0, 0, 0]).collect();
    PointedConfig::from_columns(&cols).expect("lawrence prism is a valid configuration")
}

pub fn pyramid() -> PointedConfig {
    PointedConfig::from_columns(&[[1, 0, 0], [0, 1, 0], [1, 2, 0], [0, 0, 1]]).expect("valid")
}

pub fn tetrahedron_vol9() -> PointedConfig {
    PointedConfig::from_columns(&[[3, 0, 0], [0, 3, 0], [0, 0, 1], [1, 0, 0], [0, 1, 0]]).expect("valid")
}
