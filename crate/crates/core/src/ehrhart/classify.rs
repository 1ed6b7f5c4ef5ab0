use super::EhrhartData;
use crate::error::EhrhartError;
use crate::geometry::vec::{add, content, cross, det3, dot, primitive, sub};
use crate::geometry::LatticePolytope;
use crate::linalg::IVec3;

/// Normal forms of lattice 3-polytopes whose h*-polynomial has degree <= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeOneClass {
    /// Unimodular simplex, vertices as witness.
    BasicSimplex { witness: [IVec3; 4] },
    /// Pyramid of height one over twice a unimodular triangle.
    /// Witness `[e0, e1, e2, apex]` with vertices `e0, 2e1 - e0, 2e2 - e0, apex`.
    ExceptionalSimplex { witness: [IVec3; 4] },
    /// Three parallel segments over a unimodular triangle, heights ascending.
    /// Witness `[e0, e1, e2, e0 + w]`, segment `i` starting at `e_i`.
    LawrencePrism { heights: [u64; 3], witness: [IVec3; 4] },
    NotDegreeLeOne,
}

impl DegreeOneClass {
    pub fn tag(&self) -> &'static str {
        match self {
            DegreeOneClass::BasicSimplex { .. } => "basic-simplex",
            DegreeOneClass::ExceptionalSimplex { .. } => "exceptional-simplex",
            DegreeOneClass::LawrencePrism { .. } => "lawrence-prism",
            DegreeOneClass::NotDegreeLeOne => "degree-at-least-two",
        }
    }
}

pub fn classify_degree_le_one(p: &LatticePolytope) -> Result<DegreeOneClass, EhrhartError> {
    let data = EhrhartData::compute(p)?;
    classify_with(p, &data)
}

pub(crate) fn classify_with(p: &LatticePolytope, data: &EhrhartData) -> Result<DegreeOneClass, EhrhartError> {
    if data.degree >= 2 {
        return Ok(DegreeOneClass::NotDegreeLeOne);
    }
    let v = &p.vertices;
    if data.degree == 0 {
        if v.len() == 4 && data.volume == 1 {
            return Ok(DegreeOneClass::BasicSimplex {
                witness: [v[0], v[1], v[2], v[3]],
            });
        }
        return Err(EhrhartError::ClassificationFailed);
    }
    if let Some(witness) = exceptional(p, data.volume) {
        return Ok(DegreeOneClass::ExceptionalSimplex { witness });
    }
    if let Some((heights, witness)) = lawrence(p) {
        return Ok(DegreeOneClass::LawrencePrism { heights, witness });
    }
    Err(EhrhartError::ClassificationFailed)
}

fn exceptional(p: &LatticePolytope, vol: u64) -> Option<[IVec3; 4]> {
    let v = &p.vertices;
    if v.len() != 4 || vol != 4 {
        return None;
    }
    for apex in 0..4 {
        let tri: Vec<usize> = (0..4).filter(|&i| i != apex).collect();
        for c in 0..3 {
            let e0 = v[tri[c]];
            let d1 = sub(v[tri[(c + 1) % 3]], e0);
            let d2 = sub(v[tri[(c + 2) % 3]], e0);
            if content(d1) % 2 != 0 || content(d2) % 2 != 0 {
                continue;
            }
            let h1 = [d1[0] / 2, d1[1] / 2, d1[2] / 2];
            let h2 = [d2[0] / 2, d2[1] / 2, d2[2] / 2];
            if det3(h1, h2, sub(v[apex], e0)).abs() == 1 {
                return Some([e0, add(e0, h1), add(e0, h2), v[apex]]);
            }
        }
    }
    None
}

fn lawrence(p: &LatticePolytope) -> Option<([u64; 3], [IVec3; 4])> {
    let v = &p.vertices;
    let mut dirs: Vec<IVec3> = Vec::new();
    for (a, b) in p.edges() {
        let mut w = primitive(sub(v[b], v[a]));
        if w < [0, 0, 0] {
            w = [-w[0], -w[1], -w[2]];
        }
        if !dirs.contains(&w) {
            dirs.push(w);
        }
    }
    for w in dirs {
        let mut lines: Vec<(IVec3, IVec3, IVec3)> = Vec::new();
        for &x in v {
            let key = cross(w, x);
            match lines.iter_mut().find(|l| l.0 == key) {
                Some(l) => {
                    if dot(w, x) < dot(w, l.1) {
                        l.1 = x;
                    }
                    if dot(w, x) > dot(w, l.2) {
                        l.2 = x;
                    }
                }
                None => lines.push((key, x, x)),
            }
        }
        if lines.len() != 3 {
            continue;
        }
        let [p0, p1, p2] = [lines[0].1, lines[1].1, lines[2].1];
        if det3(sub(p1, p0), sub(p2, p0), w).abs() != 1 {
            continue;
        }
        let mut segs: Vec<(u64, IVec3)> = lines
            .iter()
            .map(|l| (content(sub(l.2, l.1)).unsigned_abs(), l.1))
            .collect();
        segs.sort();
        let heights = [segs[0].0, segs[1].0, segs[2].0];
        let e0 = segs[0].1;
        return Some((heights, [e0, segs[1].1, segs[2].1, add(e0, w)]));
    }
    None
}
