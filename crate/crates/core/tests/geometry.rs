mod common;

use common::*;
use gkzrank::ehrhart::ehrhart_polynomial;
use gkzrank::geometry::{edge_lattice_length, faces, lawrence_prism_points, meet, pyramid_face, vec::dot};
use gkzrank::{ConfigError, IVec3, IntMatrix, LatticePolytope, PointedConfig, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Distinct supporting planes through at least three affinely independent
/// points, by brute force over all triples.
fn brute_facets(pts: &[IVec3]) -> Vec<(IVec3, i64)> {
    use gkzrank::geometry::vec::{cross, primitive, sub};
    let mut out: Vec<(IVec3, i64)> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let n = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if n == [0, 0, 0] {
                    continue;
                }
                let n = primitive(n);
                let c = dot(n, pts[i]);
                for (n, c) in [(n, c), ([-n[0], -n[1], -n[2]], -c)] {
                    if pts.iter().all(|&p| dot(n, p) <= c) && !out.contains(&(n, c)) {
                        out.push((n, c));
                    }
                }
            }
        }
    }
    out
}

fn brute_vertices(pts: &[IVec3]) -> usize {
    let facets = brute_facets(pts);
    let mut uniq: Vec<IVec3> = pts.to_vec();
    uniq.sort();
    uniq.dedup();
    uniq.iter()
        .filter(|&&p| {
            let tight: Vec<IVec3> = facets.iter().filter(|(n, c)| dot(*n, p) == *c).map(|f| f.0).collect();
            gkzrank::geometry::vec::rank_of(&tight) == 3
        })
        .count()
}

#[test]
fn validation() {
    let lawrence = IntMatrix::from_rows(&[[1, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]);
    let cfg = gkzrank::validate_config(&lawrence).unwrap();
    assert!(cfg.columns().iter().all(|&a| dot(cfg.grading(), a) > 0));
    assert!(gkzrank::validate_config(&IntMatrix::identity(3)).is_ok());
    assert!(matches!(
        PointedConfig::from_columns(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        Err(ConfigError::NotPointed)
    ));
    assert!(matches!(
        PointedConfig::from_columns(&[[2, 0, 0], [0, 1, 0], [0, 0, 1]]),
        Err(ConfigError::NotFullLattice(_))
    ));
    assert!(matches!(
        PointedConfig::from_columns(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, 0]]),
        Err(ConfigError::DuplicateColumn(_))
    ));
    assert!(matches!(
        PointedConfig::from_columns(&[[1, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 1]]),
        Err(ConfigError::NotPointed)
    ));
}

#[test]
fn hull_examples() {
    let t = identity().hull_with_origin();
    assert_eq!(t.vertices.len(), 4);
    assert_eq!(t.halfspaces.len(), 4);
    assert_eq!(t.normalized_volume().unwrap(), 1);

    let cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]];
    let prism = config(&cols).hull_with_origin();
    let mut pts = cols.to_vec();
    pts.push([0, 0, 0]);
    assert_eq!(prism.vertices.len(), 6);
    assert_eq!(brute_vertices(&pts), 6);
    assert_eq!(prism.halfspaces.len(), brute_facets(&pts).len());
    assert_eq!(prism.halfspaces.len(), 5);
}

#[test]
fn volume_examples() {
    for b1 in 0..=4 {
        for b2 in 0..=4 {
            for b3 in 0..=4 {
                if b1 + b2 + b3 == 0 {
                    continue;
                }
                let p = LatticePolytope::from_points(&lawrence_prism_points([b1, b2, b3])).unwrap();
                assert_eq!(p.normalized_volume().unwrap(), (b1 + b2 + b3) as u64, "L({b1},{b2},{b3})");
            }
        }
    }
    let t9 = LatticePolytope::from_points(&[[0, 0, 0], [3, 0, 0], [0, 3, 0], [0, 0, 1]]).unwrap();
    assert_eq!(t9.normalized_volume().unwrap(), 9);
    let flat = LatticePolytope::from_points(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]]).unwrap();
    assert!(flat.normalized_volume().is_err());
}

#[test]
fn face_lattice_of_identity() {
    let fs = faces(&identity());
    assert_eq!(fs.len(), 8);
    let by_dim: Vec<usize> = (0..=3).map(|d| fs.iter().filter(|f| f.dim == d).count()).collect();
    assert_eq!(by_dim, vec![1, 3, 3, 1]);
    let empty = &fs[0];
    assert!(empty.columns.is_empty());
    assert_eq!(empty.codim(), 3);
    assert_eq!(empty.vol_zf, 1);
    assert!(fs.iter().all(|f| f.index == 1 && f.vol_zf == 1));
}

#[test]
fn lawrence_rays_at_origin() {
    let cfg = lawrence_vol2();
    let fs = faces(&cfg);
    let rays: Vec<_> = fs.iter().filter(|f| f.dim == 1).collect();
    assert_eq!(rays.len(), 4);
    assert!(rays.iter().all(|r| r.vol_zf == 1 && r.vol_sat == 1));
    let hull = cfg.hull_with_origin();
    let o = hull.vertex_index([0, 0, 0]).unwrap();
    let at_origin: Vec<_> = hull.edges().into_iter().filter(|&(a, b)| a == o || b == o).collect();
    assert_eq!(at_origin.len(), 4);
    for (a, b) in at_origin {
        assert_eq!(edge_lattice_length(hull.vertices[a], hull.vertices[b]), 1);
    }
}

#[test]
fn edge_lengths() {
    assert_eq!(edge_lattice_length([0, 0, 0], [2, 0, 0]), 2);
    assert_eq!(edge_lattice_length([0, 0, 0], [1, 1, 1]), 1);
    // Lattice points of the box [0,2]^3 lying on the segment to (2,2,0).
    let mut on = 0u64;
    for x in 0..=2i64 {
        for y in 0..=2i64 {
            for z in 0..=2i64 {
                if gkzrank::geometry::vec::cross([x, y, z], [2, 2, 0]) == [0, 0, 0] {
                    on += 1;
                }
            }
        }
    }
    assert_eq!(edge_lattice_length([0, 0, 0], [2, 2, 0]), on - 1);
}

fn pyramid_condition(cfg: &PointedConfig, support: IVec3, codim: usize) -> bool {
    let pts = cfg.hull_with_origin().lattice_points_of_dilate(1, false);
    let on = pts.iter().filter(|&&p| dot(support, p) == 0).count();
    pts.len() == on + codim
}

#[test]
fn pyramid_faces() {
    let cfg = pyramid();
    let fs = faces(&cfg);
    let f = pyramid_face(&cfg, &fs).expect("pyramid over the planar face");
    assert_eq!(fs[f].columns, vec![0, 1, 2, 3]);
    assert!(pyramid_condition(&cfg, fs[f].support, fs[f].codim()));

    let id = identity();
    let fs = faces(&id);
    for f in fs.iter().filter(|f| f.dim == 2) {
        assert!(pyramid_condition(&id, f.support, 1));
    }
    assert!(pyramid_face(&id, &fs).is_some());

    let l = config(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]]);
    let fs = faces(&l);
    assert!(fs.iter().filter(|f| f.dim < 3).all(|f| !pyramid_condition(&l, f.support, f.codim())));
    assert_eq!(pyramid_face(&l, &fs), None);
}

#[test]
fn random_configs_face_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let cfg = random_config(&mut rng, 7, 4, 60);
        let hull = cfg.hull_with_origin();
        let vol = hull.normalized_volume().unwrap();
        let g = ehrhart_polynomial(&hull).unwrap();
        assert_eq!(Rational::from_integer(vol.into()), &g[3] * Rational::from_integer(6.into()));

        let fs = faces(&cfg);
        for a in 0..fs.len() {
            for b in 0..fs.len() {
                let m = meet(&fs, a, b);
                let common: Vec<usize> =
                    fs[a].columns.iter().copied().filter(|c| fs[b].columns.contains(c)).collect();
                assert_eq!(fs[m].columns, common);
            }
            let f = &fs[a];
            assert!(f.lattice.is_sublattice_of(&f.saturation));
            if f.dim > 0 {
                assert!(fs.iter().any(|g| g.dim + 1 == f.dim && f.contains_face(g)), "graded");
            }
        }

        let u = random_unimodular(&mut rng);
        let moved: Vec<IVec3> = cfg.columns().iter().map(|&c| apply(&u, c)).collect();
        let moved_cfg = config(&moved);
        assert_eq!(moved_cfg.hull_with_origin().normalized_volume().unwrap(), vol);
        let gs = faces(&moved_cfg);
        assert_eq!(gs.len(), fs.len());
        for f in &fs {
            let g = gs.iter().find(|g| g.columns == f.columns).expect("same combinatorics");
            assert_eq!((g.index, g.vol_zf, g.vol_sat), (f.index, f.vol_zf, f.vol_sat));
        }
    }
}
