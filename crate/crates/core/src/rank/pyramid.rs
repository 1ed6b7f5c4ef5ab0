use crate::geometry::pyramid_face;
use crate::geometry::vec::{add, det3, dot, scale};
use crate::linalg::{unimodular_inverse, IVec3, IntMatrix, Lattice};
use crate::semigroup::{Parameter, QuotientMembership, RankingContext};

/// Rank through the reduction to the base of a pyramid.
///
/// If `A` is a pyramid over a face `F` with apex columns completing a basis
/// of `ZF` to one of `Z^3`, the rank at `β` equals the rank of `F` at the
/// projection of `β` onto `QF` along the apexes. Bases of dimension at most
/// one never jump; a planar base jumps by one exactly at integral points
/// outside `NF` that lie in `NF + ZR` for both rays `R` of `F`.
#[derive(Debug)]
pub struct PyramidRoute {
    pub face: usize,
    /// Rows of the inverse of `[basis of ZF | apexes]`.
    coords: [IVec3; 3],
    basis: Vec<IVec3>,
    base_semigroup: Option<QuotientMembership>,
    ray_quotients: Vec<QuotientMembership>,
    base_volume: u64,
}

impl PyramidRoute {
    pub fn new(ctx: &RankingContext) -> Option<Self> {
        let cfg = ctx.config();
        let faces = ctx.faces();
        let fid = pyramid_face(cfg, faces)?;
        let f = &faces[fid];
        let apexes: Vec<IVec3> = (0..cfg.len())
            .filter(|k| f.columns.binary_search(k).is_err())
            .map(|k| cfg.columns()[k])
            .collect();
        if apexes.len() != f.codim() {
            return None;
        }
        let basis = f.lattice.basis().to_vec();
        let mut cols = basis.clone();
        cols.extend_from_slice(&apexes);
        if det3(cols[0], cols[1], cols[2]).abs() != 1 {
            return None;
        }
        let inv = unimodular_inverse(&IntMatrix::from_columns(&cols));
        let rows = inv.to_i64_rows().expect("small inverse");
        let coords = [
            [rows[0][0], rows[0][1], rows[0][2]],
            [rows[1][0], rows[1][1], rows[1][2]],
            [rows[2][0], rows[2][1], rows[2][2]],
        ];
        let (base_semigroup, ray_quotients) = if f.dim == 2 {
            let gens: Vec<IVec3> = f.columns.iter().map(|&k| cfg.columns()[k]).collect();
            let base = QuotientMembership::new(gens.clone(), Lattice::zero(), cfg.grading(), Vec::new());
            let rays = faces
                .iter()
                .filter(|r| r.dim == 1 && f.contains_face(r))
                .map(|r| {
                    let g: Vec<IVec3> = f
                        .columns
                        .iter()
                        .filter(|k| r.columns.binary_search(k).is_err())
                        .map(|&k| cfg.columns()[k])
                        .collect();
                    QuotientMembership::new(g, r.lattice.clone(), r.support, Vec::new())
                })
                .collect();
            (Some(base), rays)
        } else {
            (None, Vec::new())
        };
        Some(PyramidRoute {
            face: fid,
            coords,
            basis,
            base_semigroup,
            ray_quotients,
            base_volume: f.vol_zf,
        })
    }

    /// Projection of `β` onto `QF` along the apex columns.
    pub fn project(&self, beta: &Parameter) -> Parameter {
        let num = beta.num();
        let mut p = [0i64; 3];
        for (i, &b) in self.basis.iter().enumerate() {
            p = add(p, scale(dot(self.coords[i], num), b));
        }
        Parameter::new(p, beta.den())
    }

    pub fn rank(&self, _ctx: &RankingContext, beta: &Parameter) -> u64 {
        match self.basis.len() {
            0 => 1,
            1 => self.base_volume,
            _ => {
                let Some(b) = self.project(beta).as_integer() else {
                    return self.base_volume;
                };
                let base = self.base_semigroup.as_ref().unwrap();
                let jump = !base.contains(b) && self.ray_quotients.iter().all(|q| q.contains(b));
                self.base_volume + u64::from(jump)
            }
        }
    }
}
