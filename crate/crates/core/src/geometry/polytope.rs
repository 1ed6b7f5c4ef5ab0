use std::collections::BTreeSet;

use super::vec::{cross, det3, dot, is_zero, primitive, rank_of, scale, sub};
use crate::error::GeometryError;
use crate::linalg::IVec3;

/// `normal . x <= offset`, normal primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: IVec3,
    pub offset: i64,
}

impl Halfspace {
    pub fn slack(&self, x: IVec3) -> i64 {
        self.offset - dot(self.normal, x)
    }
}

/// Convex hull of finitely many lattice points.
///
/// `halfspaces` are the facets relative to the affine hull; `equations`
/// cut out the affine hull (empty when `dim == 3`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    pub vertices: Vec<IVec3>,
    pub halfspaces: Vec<Halfspace>,
    pub equations: Vec<Halfspace>,
    pub dim: usize,
    /// Vertex indices on each halfspace, in cyclic order when `dim == 3`.
    pub facet_vertices: Vec<Vec<usize>>,
}

impl LatticePolytope {
    pub fn from_points(points: &[IVec3]) -> Result<Self, GeometryError> {
        let pts: Vec<IVec3> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let Some(&p0) = pts.first() else {
            return Err(GeometryError::Empty);
        };
        let diffs: Vec<IVec3> = pts.iter().map(|&p| sub(p, p0)).collect();
        Ok(match rank_of(&diffs) {
            0 => point_polytope(p0),
            1 => segment(&pts),
            2 => polygon(&pts),
            _ => solid(&pts),
        })
    }

    pub fn contains(&self, x: IVec3) -> bool {
        self.contains_dilate(x, 1)
    }

    /// `x` in `k P`.
    pub fn contains_dilate(&self, x: IVec3, k: i64) -> bool {
        self.equations.iter().all(|e| dot(e.normal, x) == k * e.offset)
            && self.halfspaces.iter().all(|h| dot(h.normal, x) <= k * h.offset)
    }

    /// `x` in the relative interior of `k P`.
    pub fn interior_of_dilate(&self, x: IVec3, k: i64) -> bool {
        self.equations.iter().all(|e| dot(e.normal, x) == k * e.offset)
            && self.halfspaces.iter().all(|h| dot(h.normal, x) < k * h.offset)
    }

    /// Axis-aligned bounding box of `k P`.
    pub fn bounding_box(&self, k: i64) -> (IVec3, IVec3) {
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for v in &self.vertices {
            let v = scale(k, *v);
            for i in 0..3 {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        (lo, hi)
    }

    /// Lattice points of `k P` (all of them, or the relative interior).
    pub fn lattice_points_of_dilate(&self, k: i64, interior: bool) -> Vec<IVec3> {
        let (lo, hi) = self.bounding_box(k);
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = [x, y, z];
                    let inside = if interior {
                        self.interior_of_dilate(p, k)
                    } else {
                        self.contains_dilate(p, k)
                    };
                    if inside {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Six times the Euclidean volume.
    pub fn normalized_volume(&self) -> Result<u64, GeometryError> {
        if self.dim < 3 {
            return Err(GeometryError::DimensionTooLow(self.dim));
        }
        let v0 = self.vertices[0];
        let mut total = 0u64;
        for (h, fv) in self.halfspaces.iter().zip(&self.facet_vertices) {
            if h.slack(v0) == 0 {
                continue;
            }
            let f0 = sub(self.vertices[fv[0]], v0);
            for w in fv[1..].windows(2) {
                let a = sub(self.vertices[w[0]], v0);
                let b = sub(self.vertices[w[1]], v0);
                total += det3(f0, a, b).unsigned_abs();
            }
        }
        Ok(total)
    }

    /// Edges as vertex index pairs `(i, j)`, `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        match self.dim {
            0 => Vec::new(),
            1 => vec![(0, 1)],
            _ => {
                let mut out = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let shared = self
                            .facet_vertices
                            .iter()
                            .filter(|f| f.contains(&i) && f.contains(&j))
                            .count();
                        if shared >= self.dim - 1 {
                            out.push((i, j));
                        }
                    }
                }
                out
            }
        }
    }

    pub fn vertex_index(&self, v: IVec3) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

fn point_polytope(p: IVec3) -> LatticePolytope {
    let equations = (0..3)
        .map(|i| {
            let mut n = [0; 3];
            n[i] = 1;
            Halfspace {
                normal: n,
                offset: p[i],
            }
        })
        .collect();
    LatticePolytope {
        vertices: vec![p],
        halfspaces: Vec::new(),
        equations,
        dim: 0,
        facet_vertices: Vec::new(),
    }
}

fn segment(pts: &[IVec3]) -> LatticePolytope {
    let d = primitive(sub(pts[1], pts[0]));
    let lo = *pts.iter().min_by_key(|&&p| dot(d, p)).unwrap();
    let hi = *pts.iter().max_by_key(|&&p| dot(d, p)).unwrap();
    let n1 = (0..3)
        .map(|i| {
            let mut e = [0; 3];
            e[i] = 1;
            primitive(cross(d, e))
        })
        .find(|n| !is_zero(*n))
        .unwrap();
    let n2 = primitive(cross(d, n1));
    LatticePolytope {
        vertices: vec![lo, hi],
        halfspaces: vec![
            Halfspace {
                normal: [-d[0], -d[1], -d[2]],
                offset: -dot(d, lo),
            },
            Halfspace {
                normal: d,
                offset: dot(d, hi),
            },
        ],
        equations: vec![
            Halfspace {
                normal: n1,
                offset: dot(n1, lo),
            },
            Halfspace {
                normal: n2,
                offset: dot(n2, lo),
            },
        ],
        dim: 1,
        facet_vertices: vec![vec![0], vec![1]],
    }
}

/// Index of the coordinate to drop when projecting a plane with normal `n`.
fn drop_axis(n: IVec3) -> usize {
    (0..3).max_by_key(|&i| n[i].abs()).unwrap()
}

fn project(p: IVec3, axis: usize) -> [i64; 2] {
    match axis {
        0 => [p[1], p[2]],
        1 => [p[0], p[2]],
        _ => [p[0], p[1]],
    }
}

/// Strict convex hull of planar points: indices in counter-clockwise order,
/// collinear boundary points dropped.
pub fn convex_hull_2d(pts: &[[i64; 2]]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| pts[i]);
    idx.dedup_by_key(|i| pts[*i]);
    if idx.len() < 3 {
        return idx;
    }
    let turn = |o: [i64; 2], a: [i64; 2], b: [i64; 2]| -> i64 {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 {
            idx.clone()
        } else {
            idx.iter().rev().copied().collect()
        };
        for &i in &seq {
            while hull.len() >= start + 2
                && turn(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

fn polygon(pts: &[IVec3]) -> LatticePolytope {
    let p0 = pts[0];
    let a = pts.iter().map(|&p| sub(p, p0)).find(|v| !is_zero(*v)).unwrap();
    let b = pts
        .iter()
        .map(|&p| sub(p, p0))
        .find(|v| !is_zero(cross(a, *v)))
        .unwrap();
    let n = primitive(cross(a, b));
    let axis = drop_axis(n);
    let proj: Vec<[i64; 2]> = pts.iter().map(|&p| project(p, axis)).collect();
    let order = convex_hull_2d(&proj);
    let vertices: Vec<IVec3> = order.iter().map(|&i| pts[i]).collect();
    let m = vertices.len();
    let mut halfspaces = Vec::new();
    let mut facet_vertices = Vec::new();
    for i in 0..m {
        let u = vertices[i];
        let v = vertices[(i + 1) % m];
        let mut e = primitive(cross(n, sub(v, u)));
        let mut off = dot(e, u);
        if vertices.iter().any(|&w| dot(e, w) > off) {
            e = [-e[0], -e[1], -e[2]];
            off = -off;
        }
        halfspaces.push(Halfspace {
            normal: e,
            offset: off,
        });
        facet_vertices.push(vec![i, (i + 1) % m]);
    }
    LatticePolytope {
        vertices,
        halfspaces,
        equations: vec![Halfspace {
            normal: n,
            offset: dot(n, p0),
        }],
        dim: 2,
        facet_vertices,
    }
}

/// Exhaustive search over point triples for supporting planes.
fn solid(pts: &[IVec3]) -> LatticePolytope {
    let n = pts.len();
    let mut planes: BTreeSet<Halfspace> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if is_zero(nrm) {
                    continue;
                }
                let nrm = primitive(nrm);
                let c = dot(nrm, pts[i]);
                let (mut above, mut below) = (false, false);
                for &p in pts {
                    let s = dot(nrm, p) - c;
                    above |= s > 0;
                    below |= s < 0;
                }
                if above && below {
                    continue;
                }
                let h = if above {
                    Halfspace {
                        normal: [-nrm[0], -nrm[1], -nrm[2]],
                        offset: -c,
                    }
                } else {
                    Halfspace {
                        normal: nrm,
                        offset: c,
                    }
                };
                planes.insert(h);
            }
        }
    }
    let halfspaces: Vec<Halfspace> = planes.into_iter().collect();
    let vertices: Vec<IVec3> = pts
        .iter()
        .copied()
        .filter(|&p| {
            let tight: Vec<IVec3> = halfspaces
                .iter()
                .filter(|h| h.slack(p) == 0)
                .map(|h| h.normal)
                .collect();
            rank_of(&tight) == 3
        })
        .collect();
    let facet_vertices = halfspaces
        .iter()
        .map(|h| {
            let on: Vec<usize> = (0..vertices.len()).filter(|&i| h.slack(vertices[i]) == 0).collect();
            let axis = drop_axis(h.normal);
            let proj: Vec<[i64; 2]> = on.iter().map(|&i| project(vertices[i], axis)).collect();
            convex_hull_2d(&proj).into_iter().map(|t| on[t]).collect()
        })
        .collect();
    LatticePolytope {
        vertices,
        halfspaces,
        equations: Vec::new(),
        dim: 3,
        facet_vertices,
    }
}

/// Number of lattice points on the segment minus one.
pub fn edge_lattice_length(a: IVec3, b: IVec3) -> u64 {
    super::vec::content(sub(b, a)).unsigned_abs()
}
