use std::collections::BTreeMap;

use rustc_hash::FxHashSet;

use super::{Parameter, RankingContext};
use crate::geometry::vec::{cross, dot, is_zero, primitive, sub};
use crate::linalg::IVec3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StratumOrigin {
    /// `b + QF` for a hole `b` of `N A + Z F` in the window.
    Hole,
    /// Crossing point of two hole lines.
    Crossing,
}

/// Affine subspace `base + Q·directions` together with a generic point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub base: Parameter,
    /// Face whose span gives the directions; the empty face for points.
    pub face: usize,
    pub directions: Vec<IVec3>,
    pub witness: Parameter,
    pub origin: StratumOrigin,
    /// Normals `n` with `n . x = n . base` cutting out the subspace.
    equations: Vec<IVec3>,
}

impl Stratum {
    fn new(base: Parameter, face: usize, directions: Vec<IVec3>, origin: StratumOrigin) -> Self {
        let equations = complement_normals(&directions);
        Stratum {
            base,
            face,
            directions,
            witness: base,
            origin,
            equations,
        }
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn contains_point(&self, x: &Parameter) -> bool {
        self.equations.iter().all(|&n| {
            let (a, da) = x.dot_frac(n);
            let (b, db) = self.base.dot_frac(n);
            a as i128 * db as i128 == b as i128 * da as i128
        })
    }

    pub fn contains_stratum(&self, other: &Stratum) -> bool {
        other
            .directions
            .iter()
            .all(|&d| self.equations.iter().all(|&n| dot(n, d) == 0))
            && self.contains_point(&other.base)
    }
}

/// Integer normals spanning the orthogonal complement of `dirs`.
fn complement_normals(dirs: &[IVec3]) -> Vec<IVec3> {
    match dirs.len() {
        0 => vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        1 => {
            let d = dirs[0];
            let n1 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
                .into_iter()
                .map(|e| primitive(cross(d, e)))
                .find(|n| !is_zero(*n))
                .unwrap();
            vec![n1, primitive(cross(d, n1))]
        }
        2 => vec![primitive(cross(dirs[0], dirs[1]))],
        _ => Vec::new(),
    }
}

/// Window `[-w, w]^3` on which holes are collected.
fn window(w: i64) -> impl Iterator<Item = IVec3> {
    (-w..=w).flat_map(move |x| (-w..=w).flat_map(move |y| (-w..=w).map(move |z| [x, y, z])))
}

/// Candidate strata of the exceptional set inside the window `[-w, w]^3`.
///
/// Collects the hole points, hole lines `b + QR` for rays `R` and hole planes
/// `b + QF` for facets, then adds the crossing points of hole lines inside
/// the window. Each stratum gets a witness of the form
/// `base + (t / 7) d` avoiding every stratum that does not contain it.
pub fn candidate_strata(ctx: &RankingContext, w: i64) -> Vec<Stratum> {
    assert!(w >= 1, "window must be at least 1");
    let faces = ctx.faces();
    let mut out: Vec<Stratum> = Vec::new();
    let mut points: FxHashSet<Parameter> = FxHashSet::default();

    for b in window(w) {
        if !ctx.semigroup_contains(b) {
            let p = Parameter::integer(b);
            points.insert(p);
            out.push(Stratum::new(p, 0, Vec::new(), StratumOrigin::Hole));
        }
    }

    let mut lines_by_ray: BTreeMap<usize, Vec<IVec3>> = BTreeMap::new();
    for f in faces.iter().filter(|f| f.dim == 1 || f.dim == 2) {
        let mut seen: FxHashSet<IVec3> = FxHashSet::default();
        let dirs = f.saturation.basis().to_vec();
        for b in window(w) {
            let key = f.saturation.reduce(b);
            if seen.contains(&key) {
                continue;
            }
            if !ctx.quotient_contains(f.id, b) {
                seen.insert(key);
                out.push(Stratum::new(Parameter::integer(key), f.id, dirs.clone(), StratumOrigin::Hole));
                if f.dim == 1 {
                    lines_by_ray.entry(f.id).or_default().push(key);
                }
            }
        }
    }

    let rays: Vec<usize> = lines_by_ray.keys().copied().collect();
    for (i, &r1) in rays.iter().enumerate() {
        for &r2 in &rays[i + 1..] {
            let d1 = faces[r1].saturation.basis()[0];
            let d2 = faces[r2].saturation.basis()[0];
            let n = primitive(cross(d1, d2));
            let mut by_level: BTreeMap<i64, Vec<IVec3>> = BTreeMap::new();
            for &q in &lines_by_ray[&r2] {
                by_level.entry(dot(n, q)).or_default().push(q);
            }
            let denom = dot(cross(d1, d2), n);
            for &p in &lines_by_ray[&r1] {
                let Some(qs) = by_level.get(&dot(n, p)) else { continue };
                for &q in qs {
                    // p + s d1 = q + t d2
                    let s_num = dot(cross(sub(q, p), d2), n);
                    let x = Parameter::integer(p).add_scaled(s_num, denom, d1);
                    if x.within_box(w) && points.insert(x) {
                        out.push(Stratum::new(x, 0, Vec::new(), StratumOrigin::Crossing));
                    }
                }
            }
        }
    }

    assign_witnesses(&mut out);
    out
}

fn assign_witnesses(strata: &mut [Stratum]) {
    let snapshot: Vec<Stratum> = strata.to_vec();
    for s in strata.iter_mut() {
        if s.dim() == 0 {
            continue;
        }
        let blockers: Vec<&Stratum> = snapshot
            .iter()
            .filter(|t| !t.contains_stratum(s) && t.dim() <= 2)
            .collect();
        let mut found = None;
        'search: for den in [7i64, 11, 13, 17, 19, 23] {
            for t in 1..den {
                let mut cand = s.base.add_scaled(t, den, s.directions[0]);
                if s.dim() == 2 {
                    cand = cand.add_scaled((t * t + 1) % den, den, s.directions[1]);
                }
                if blockers.iter().all(|b| !b.contains_point(&cand)) {
                    found = Some(cand);
                    break 'search;
                }
            }
        }
        s.witness = found.expect("no generic witness found for stratum");
    }
}
