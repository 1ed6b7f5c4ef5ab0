#![allow(dead_code)]

use gkzrank::geometry::vec::det3;
use gkzrank::{IVec3, PointedConfig};
use rand::Rng;

/// Random 3x3 integer matrix of determinant ±1, as a product of elementary moves.
pub fn random_unimodular(rng: &mut impl Rng) -> [IVec3; 3] {
    let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..6 {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        let q = rng.gen_range(-2..=2);
        for k in 0..3 {
            m[i][k] += q * m[j][k];
        }
        if rng.gen_bool(0.3) {
            m.swap(i, j);
        }
    }
    assert_eq!(det3(m[0], m[1], m[2]).abs(), 1);
    m
}

pub fn apply(m: &[IVec3; 3], v: IVec3) -> IVec3 {
    gkzrank::geometry::vec::mat_vec(m, v)
}

/// Rejection sample of a pointed full-lattice configuration with entries in `[0, e]`.
pub fn random_config(rng: &mut impl Rng, n_max: usize, e: i64, vol_cap: u64) -> PointedConfig {
    loop {
        let n = rng.gen_range(3..=n_max);
        let cols: Vec<IVec3> = (0..n)
            .map(|_| [rng.gen_range(0..=e), rng.gen_range(0..=e), rng.gen_range(0..=e)])
            .collect();
        if let Ok(c) = PointedConfig::from_columns(&cols) {
            if c.hull_with_origin().normalized_volume().is_ok_and(|v| v <= vol_cap) {
                return c;
            }
        }
    }
}

pub fn config(cols: &[IVec3]) -> PointedConfig {
    PointedConfig::from_columns(cols).expect("valid configuration")
}

pub fn identity() -> PointedConfig {
    config(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
}

/// Lawrence configurations, matrices given by rows.
pub fn from_rows(rows: [&[i64]; 3]) -> PointedConfig {
    let cols: Vec<IVec3> = (0..rows[0].len()).map(|j| [rows[0][j], rows[1][j], rows[2][j]]).collect();
    config(&cols)
}

pub fn lawrence_vol2() -> PointedConfig {
    from_rows([&[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 1, 0, 1]])
}

pub fn lawrence_vol3() -> PointedConfig {
    from_rows([&[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 2, 0, 1]])
}

pub fn pyramid() -> PointedConfig {
    config(&[[1, 0, 0], [1, 1, 0], [1, 3, 0], [1, 4, 0], [0, 0, 1]])
}

/// Hull of at most 8 random points of `[0,4]^3`, redrawn until full dimensional.
pub fn random_polytope(rng: &mut impl Rng) -> gkzrank::LatticePolytope {
    loop {
        let n = rng.gen_range(4..=8);
        let pts: Vec<IVec3> = (0..n)
            .map(|_| [rng.gen_range(0..=4), rng.gen_range(0..=4), rng.gen_range(0..=4)])
            .collect();
        if let Ok(p) = gkzrank::LatticePolytope::from_points(&pts) {
            if p.dim == 3 {
                return p;
            }
        }
    }
}
