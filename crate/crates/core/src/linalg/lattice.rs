use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix};

/// Index `[L1 : L2]` of a sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(v) => Some(v),
            LatticeIndex::Infinite => None,
        }
    }
}

/// Index of the lattice spanned by the columns of `sub` in the lattice spanned
/// by the columns of `sup`. Panics unless `sub` lies in `sup`.
pub fn lattice_index(sup: &IntMatrix, sub: &IntMatrix) -> LatticeIndex {
    assert_eq!(sup.rows(), sub.rows(), "lattices live in different spaces");
    let (h_sup, _) = hermite_normal_form(&sup.transpose());
    let mut both = sup.transpose();
    for j in 0..sub.cols() {
        both = stack(&both, &sub.column(j));
    }
    let (h_both, _) = hermite_normal_form(&both);
    assert_eq!(h_sup, h_both, "sublattice is not contained in superlattice");

    let s_sup = smith_normal_form(sup);
    let s_sub = smith_normal_form(sub);
    if s_sup.rank() != s_sub.rank() {
        return LatticeIndex::Infinite;
    }
    let cov = |d: &[BigInt]| -> BigInt { d.iter().filter(|x| !x.is_zero()).product() };
    LatticeIndex::Finite(cov(&s_sub.diagonal) / cov(&s_sup.diagonal))
}

fn stack(m: &IntMatrix, row: &[BigInt]) -> IntMatrix {
    let mut data: Vec<BigInt> = (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect();
    data.extend(row.iter().cloned());
    IntMatrix::from_big(m.rows() + 1, row.len(), data)
}

pub type IVec3 = [i64; 3];

/// Sublattice of `Z^3` stored by its row Hermite basis. Equal lattices have
/// equal values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: Vec<IVec3>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn zero() -> Self {
        Lattice {
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full() -> Self {
        Lattice {
            basis: vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            pivots: vec![0, 1, 2],
        }
    }

    pub fn from_generators(gens: &[IVec3]) -> Self {
        if gens.iter().all(|g| *g == [0, 0, 0]) {
            return Self::zero();
        }
        let (h, pivots) = hermite_normal_form(&IntMatrix::from_rows(gens));
        let basis = (0..h.rows())
            .map(|i| {
                let r = h.row(i);
                [to_i64(&r[0]), to_i64(&r[1]), to_i64(&r[2])]
            })
            .collect();
        Lattice { basis, pivots }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IVec3] {
        &self.basis
    }

    /// Canonical representative of `x` modulo the lattice.
    pub fn reduce(&self, mut x: IVec3) -> IVec3 {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let q = x[p].div_euclid(b[p]);
            if q != 0 {
                for k in 0..3 {
                    x[k] -= q * b[k];
                }
            }
        }
        x
    }

    pub fn contains(&self, x: IVec3) -> bool {
        self.reduce(x) == [0, 0, 0]
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        let mut g = self.basis.clone();
        g.extend_from_slice(&other.basis);
        Lattice::from_generators(&g)
    }

    pub fn intersection(&self, other: &Lattice) -> Lattice {
        if self.rank() == 0 || other.rank() == 0 {
            return Lattice::zero();
        }
        // kernel of [B1 | -B2] pairs up common vectors
        let mut cols: Vec<Vec<i64>> = self.basis.iter().map(|b| b.to_vec()).collect();
        cols.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let m = IntMatrix::from_columns(&cols);
        let gens: Vec<IVec3> = integer_kernel(&m)
            .into_iter()
            .map(|k| {
                let mut v = [0i64; 3];
                for (i, b) in self.basis.iter().enumerate() {
                    let c = to_i64(&k[i]);
                    for t in 0..3 {
                        v[t] += c * b[t];
                    }
                }
                v
            })
            .collect();
        Lattice::from_generators(&gens)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    /// Lattice points of the rational span, `Q L ∩ Z^3`.
    pub fn saturation(&self) -> Lattice {
        if self.rank() == 0 {
            return Lattice::zero();
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(&self.basis).transpose());
        let inv = unimodular_inverse(&snf.left);
        let gens: Vec<IVec3> = (0..snf.rank())
            .map(|j| {
                let c = inv.column(j);
                [to_i64(&c[0]), to_i64(&c[1]), to_i64(&c[2])]
            })
            .collect();
        Lattice::from_generators(&gens)
    }

    /// `[saturation : self]`.
    pub fn saturation_index(&self) -> u64 {
        if self.rank() == 0 {
            return 1;
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(&self.basis).transpose());
        snf.diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .product::<BigInt>()
            .to_u64()
            .expect("lattice index overflows u64")
    }
}

pub(crate) fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("integer does not fit in i64")
}

/// Inverse of a unimodular matrix, via the adjugate.
pub fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let det = m.determinant();
    assert!(det.is_one() || (-&det).is_one(), "matrix is not unimodular");
    let mut inv = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let mut minor = IntMatrix::zeros(n - 1, n - 1);
            for (a, &r) in rows.iter().enumerate() {
                for (b, &c) in cols.iter().enumerate() {
                    minor.set(a, b, m.get(r, c).clone());
                }
            }
            let mut v = minor.determinant();
            if (i + j) % 2 == 1 {
                v = -v;
            }
            inv.set(i, j, v * &det);
        }
    }
    inv
}
