use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::polytope::{Halfspace, LatticePolytope};
use super::vec::{cross, dot, is_zero, primitive};
use crate::error::ConfigError;
use crate::linalg::{combinations, gcd_of_maximal_minors, to_i64, IVec3, IntMatrix};

/// Validated configuration: distinct nonzero columns spanning `Z^3`, all on
/// the positive side of `grading`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedConfig {
    columns: Vec<IVec3>,
    grading: IVec3,
    /// Column triples whose determinants have gcd one.
    full_lattice_witness: Vec<([usize; 3], i64)>,
}

impl PointedConfig {
    pub fn columns(&self) -> &[IVec3] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn grading(&self) -> IVec3 {
        self.grading
    }

    pub fn full_lattice_witness(&self) -> &[([usize; 3], i64)] {
        &self.full_lattice_witness
    }

    pub fn from_columns(columns: &[IVec3]) -> Result<Self, ConfigError> {
        if columns.iter().any(|c| is_zero(*c)) {
            return Err(ConfigError::NotPointed);
        }
        for (j, c) in columns.iter().enumerate() {
            if columns[..j].contains(c) {
                return Err(ConfigError::DuplicateColumn(j));
            }
        }
        let m = IntMatrix::from_columns(columns);
        let g = if columns.len() < 3 {
            BigInt::zero()
        } else {
            gcd_of_maximal_minors(&m)
        };
        if !g.is_one() {
            return Err(ConfigError::NotFullLattice(g.to_string()));
        }
        let grading = find_grading(columns).ok_or(ConfigError::NotPointed)?;
        let full_lattice_witness = lattice_witness(columns);
        Ok(PointedConfig {
            columns: columns.to_vec(),
            grading,
            full_lattice_witness,
        })
    }

    /// `conv({0} ∪ A)`.
    pub fn hull_with_origin(&self) -> LatticePolytope {
        hull_with_origin(self)
    }

    /// Whether every column lies on `grading . x = 1`.
    pub fn is_homogeneous(&self) -> bool {
        self.columns.iter().all(|&c| dot(self.grading, c) == 1)
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.columns)
    }
}

pub fn validate_config(matrix: &IntMatrix) -> Result<PointedConfig, ConfigError> {
    if matrix.rows() != 3 {
        return Err(ConfigError::WrongShape(matrix.rows()));
    }
    let columns: Vec<IVec3> = (0..matrix.cols())
        .map(|j| {
            let c = matrix.column(j);
            [to_i64(&c[0]), to_i64(&c[1]), to_i64(&c[2])]
        })
        .collect();
    PointedConfig::from_columns(&columns)
}

pub fn hull_with_origin(cfg: &PointedConfig) -> LatticePolytope {
    let mut pts = vec![[0, 0, 0]];
    pts.extend_from_slice(cfg.columns());
    LatticePolytope::from_points(&pts).expect("point set is nonempty")
}

/// Positive functional on all columns, or `None` if the cone is not pointed.
///
/// Tries a few small candidates, then the sum of all supporting normals of
/// planes through two columns, which is positive exactly when the cone is
/// pointed and full dimensional.
fn find_grading(columns: &[IVec3]) -> Option<IVec3> {
    let positive = |h: IVec3| columns.iter().all(|&c| dot(h, c) > 0);
    for h in [[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        if positive(h) {
            return Some(h);
        }
    }
    let mut normals: Vec<Halfspace> = Vec::new();
    for i in 0..columns.len() {
        for j in i + 1..columns.len() {
            let n = cross(columns[i], columns[j]);
            if is_zero(n) {
                continue;
            }
            let n = primitive(n);
            let n = if columns.iter().all(|&c| dot(n, c) >= 0) {
                n
            } else if columns.iter().all(|&c| dot(n, c) <= 0) {
                [-n[0], -n[1], -n[2]]
            } else {
                continue;
            };
            let h = Halfspace {
                normal: n,
                offset: 0,
            };
            if !normals.contains(&h) {
                normals.push(h);
            }
        }
    }
    let mut h = [0i64; 3];
    for n in &normals {
        for k in 0..3 {
            h[k] += n.normal[k];
        }
    }
    let h = primitive(h);
    (!is_zero(h) && positive(h)).then_some(h)
}

fn lattice_witness(columns: &[IVec3]) -> Vec<([usize; 3], i64)> {
    let mut g = 0i64;
    let mut out = Vec::new();
    for idx in combinations(columns.len(), 3) {
        let d = super::vec::det3(columns[idx[0]], columns[idx[1]], columns[idx[2]]);
        if d == 0 || (g != 0 && g.gcd(&d) == g) {
            continue;
        }
        g = g.gcd(&d);
        out.push(([idx[0], idx[1], idx[2]], d));
        if g == 1 {
            break;
        }
    }
    out
}
