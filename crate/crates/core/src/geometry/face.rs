use super::config::PointedConfig;
use super::polytope::convex_hull_2d;
use super::vec::{add, cross, dot, is_zero, primitive, scale};
use crate::linalg::{smith_normal_form, to_i64, unimodular_inverse, IVec3, IntMatrix, Lattice};

/// Face of the cone spanned by a configuration, recorded by the columns on it.
#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    /// Sorted column indices.
    pub columns: Vec<usize>,
    pub dim: usize,
    /// `ZF`.
    pub lattice: Lattice,
    /// `Z^3 ∩ QF`.
    pub saturation: Lattice,
    /// `[Z^3 ∩ QF : ZF]`.
    pub index: u64,
    /// Normalized volume of `conv(0 ∪ F)` in `ZF`.
    pub vol_zf: u64,
    /// Normalized volume of `conv(0 ∪ F)` in the saturated lattice.
    pub vol_sat: u64,
    /// Nonnegative on the cone, zero exactly on `QF ∩ cone`.
    pub support: IVec3,
    /// Facet ids containing this face (the face itself if it is a facet).
    pub facets_above: Vec<usize>,
    /// Primitive inner normal, for facets.
    pub normal: Option<IVec3>,
    /// Rows of `L` with `L M R` diagonal, `M` the generator matrix of `ZF`.
    pub(crate) snf_rows: [IVec3; 3],
    /// Columns of `L^-1`.
    pub(crate) snf_basis: [IVec3; 3],
    /// Coset representatives of `(Z^3 ∩ QF) / ZF`.
    pub(crate) coset_reps: Vec<IVec3>,
}

impl Face {
    pub fn codim(&self) -> usize {
        3 - self.dim
    }

    pub fn contains_face(&self, other: &Face) -> bool {
        other.columns.iter().all(|c| self.columns.binary_search(c).is_ok())
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// An integer point of `beta + QF`, for `beta = num / den`.
    pub fn integral_point_on(&self, num: IVec3, den: i64) -> Option<IVec3> {
        let mut p = [0i64; 3];
        for i in self.dim..3 {
            let c = dot(self.snf_rows[i], num);
            if c % den != 0 {
                return None;
            }
            p = add(p, scale(c / den, self.snf_basis[i]));
        }
        Some(p)
    }

    pub fn coset_reps(&self) -> &[IVec3] {
        &self.coset_reps
    }
}

/// All faces of the cone over a configuration, including the empty face and
/// the whole configuration. Ids follow `(dim, columns)` order, so id 0 is the
/// empty face and the last id is the full face.
pub fn faces(cfg: &PointedConfig) -> Vec<Face> {
    let cols = cfg.columns();
    let n = cols.len();

    let mut facets: Vec<(IVec3, Vec<usize>)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = cross(cols[i], cols[j]);
            if is_zero(c) {
                continue;
            }
            let mut nrm = primitive(c);
            if cols.iter().all(|&a| dot(nrm, a) <= 0) {
                nrm = [-nrm[0], -nrm[1], -nrm[2]];
            } else if !cols.iter().all(|&a| dot(nrm, a) >= 0) {
                continue;
            }
            if facets.iter().any(|(m, _)| *m == nrm) {
                continue;
            }
            let on: Vec<usize> = (0..n).filter(|&k| dot(nrm, cols[k]) == 0).collect();
            facets.push((nrm, on));
        }
    }

    let mut rays: Vec<Vec<usize>> = Vec::new();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            let common: Vec<usize> = facets[a]
                .1
                .iter()
                .copied()
                .filter(|k| facets[b].1.contains(k))
                .collect();
            if !common.is_empty() && !rays.contains(&common) {
                rays.push(common);
            }
        }
    }

    let mut specs: Vec<(usize, Vec<usize>, Option<IVec3>)> = Vec::new();
    specs.push((0, Vec::new(), None));
    specs.extend(rays.into_iter().map(|r| (1, r, None)));
    specs.extend(facets.iter().map(|(nrm, on)| (2, on.clone(), Some(*nrm))));
    specs.push((3, (0..n).collect(), None));
    specs.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let facet_ids: Vec<(usize, IVec3)> = specs
        .iter()
        .enumerate()
        .filter_map(|(id, s)| s.2.map(|nrm| (id, nrm)))
        .collect();

    let vol = cfg.hull_with_origin().normalized_volume().expect("configuration is full dimensional");

    specs
        .iter()
        .enumerate()
        .map(|(id, (dim, columns, normal))| {
            let gens: Vec<IVec3> = columns.iter().map(|&k| cols[k]).collect();
            let facets_above: Vec<usize> = facet_ids
                .iter()
                .filter(|(fid, _)| specs[*fid].1.iter().filter(|k| columns.contains(k)).count() == columns.len())
                .map(|(fid, _)| *fid)
                .collect();
            let support = match dim {
                0 => cfg.grading(),
                3 => [0, 0, 0],
                _ => facets_above
                    .iter()
                    .map(|fid| specs[*fid].2.unwrap())
                    .fold([0, 0, 0], add),
            };
            build_face(id, *dim, columns.clone(), &gens, support, facets_above, *normal, vol)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn build_face(
    id: usize,
    dim: usize,
    columns: Vec<usize>,
    gens: &[IVec3],
    support: IVec3,
    facets_above: Vec<usize>,
    normal: Option<IVec3>,
    vol: u64,
) -> Face {
    let lattice = Lattice::from_generators(gens);
    let saturation = lattice.saturation();
    let index = lattice.saturation_index();
    let (snf_rows, snf_basis, diag) = if gens.is_empty() {
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], Vec::new())
    } else {
        let snf = smith_normal_form(&IntMatrix::from_columns(gens));
        let inv = unimodular_inverse(&snf.left);
        let row = |i: usize| {
            let r = snf.left.row(i);
            [to_i64(&r[0]), to_i64(&r[1]), to_i64(&r[2])]
        };
        let col = |j: usize| {
            let c = inv.column(j);
            [to_i64(&c[0]), to_i64(&c[1]), to_i64(&c[2])]
        };
        let diag: Vec<i64> = snf.diagonal[..snf.rank()].iter().map(to_i64).collect();
        ([row(0), row(1), row(2)], [col(0), col(1), col(2)], diag)
    };
    assert_eq!(diag.len(), dim, "face generators have the wrong rank");

    let mut coset_reps = vec![[0i64; 3]];
    for (i, &d) in diag.iter().enumerate() {
        coset_reps = coset_reps
            .iter()
            .flat_map(|&r| (0..d).map(move |k| add(r, scale(k, snf_basis[i]))))
            .collect();
    }
    let coset_reps: Vec<IVec3> = coset_reps.into_iter().map(|r| lattice.reduce(r)).collect();

    let (vol_zf, vol_sat) = match dim {
        0 => (1, 1),
        1 => {
            let r = primitive(gens[0]);
            let k = (0..3).find(|&t| r[t] != 0).unwrap();
            let mults: Vec<i64> = gens.iter().map(|g| g[k] / r[k]).collect();
            let max = *mults.iter().max().unwrap();
            let g = mults.iter().fold(0i64, |a, &b| num_integer::Integer::gcd(&a, &b));
            ((max / g) as u64, max as u64)
        }
        2 => {
            let sat = saturated_area(gens, normal.unwrap());
            assert_eq!(sat % index, 0);
            (sat / index, sat)
        }
        _ => (vol, vol),
    };

    Face {
        id,
        columns,
        dim,
        lattice,
        saturation,
        index,
        vol_zf,
        vol_sat,
        support,
        facets_above,
        normal,
        snf_rows,
        snf_basis,
        coset_reps,
    }
}

/// Normalized area of `conv(0 ∪ pts)` for points on a plane through 0,
/// measured in the saturated plane lattice.
fn saturated_area(pts: &[IVec3], normal: IVec3) -> u64 {
    let axis = (0..3).max_by_key(|&i| normal[i].abs()).unwrap();
    let mut all = vec![[0i64; 3]];
    all.extend_from_slice(pts);
    let proj: Vec<[i64; 2]> = all
        .iter()
        .map(|p| match axis {
            0 => [p[1], p[2]],
            1 => [p[0], p[2]],
            _ => [p[0], p[1]],
        })
        .collect();
    let hull = convex_hull_2d(&proj);
    let v0 = all[hull[0]];
    let mut total = 0u64;
    for w in hull[1..].windows(2) {
        let a = super::vec::sub(all[w[0]], v0);
        let b = super::vec::sub(all[w[1]], v0);
        total += super::vec::content(cross(a, b)).unsigned_abs();
    }
    total
}

/// Lowest dimensional proper face `F` with
/// `|Δ ∩ Z^3| - |Δ_F ∩ Z^3| - codim F = 0`, where `Δ = conv(0 ∪ A)`.
pub fn pyramid_face(cfg: &PointedConfig, faces: &[Face]) -> Option<usize> {
    let hull = cfg.hull_with_origin();
    let pts = hull.lattice_points_of_dilate(1, false);
    let total = pts.len();
    faces.iter().filter(|f| f.dim < 3).find_map(|f| {
        let on = pts.iter().filter(|&&p| dot(f.support, p) == 0).count();
        (total == on + f.codim()).then_some(f.id)
    })
}

/// Face containing exactly the columns common to both.
pub fn meet(faces: &[Face], a: usize, b: usize) -> usize {
    let common: Vec<usize> = faces[a]
        .columns
        .iter()
        .copied()
        .filter(|c| faces[b].columns.binary_search(c).is_ok())
        .collect();
    faces
        .iter()
        .position(|f| f.columns == common)
        .expect("face set is closed under intersection")
}
