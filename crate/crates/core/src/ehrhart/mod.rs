//! Ehrhart polynomial, h*-vector and degree of lattice 3-polytopes.
//!
//! Counts are taken by enumeration over bounding boxes; the polynomial is
//! interpolated from dilates 0..=3 and checked against dilate 4.

mod classify;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub use classify::{classify_degree_le_one, DegreeOneClass};

use crate::error::EhrhartError;
use crate::geometry::vec::{content, cross, sub};
use crate::geometry::{edge_lattice_length, LatticePolytope};
use crate::linalg::{IVec3, Rational};

/// `|k P ∩ Z^3|`.
pub fn count_points(p: &LatticePolytope, k: i64) -> u64 {
    p.lattice_points_of_dilate(k, false).len() as u64
}

/// `|k P° ∩ Z^3|`, interior relative to the affine hull.
pub fn count_interior_points(p: &LatticePolytope, k: i64) -> u64 {
    p.lattice_points_of_dilate(k, true).len() as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartData {
    /// Coefficients of the Ehrhart polynomial, constant term first.
    pub g_coeffs: [Rational; 4],
    pub h_star: [i64; 4],
    pub degree: usize,
    /// `g(0), g(1), g(2), g(3)` and the check value `g(4)`.
    pub counts: [u64; 5],
    /// `|k P° ∩ Z^3|` for `k = 1..=4`.
    pub interior_counts: [u64; 4],
    pub volume: u64,
}

impl EhrhartData {
    pub fn compute(p: &LatticePolytope) -> Result<Self, EhrhartError> {
        let volume = p.normalized_volume()?;
        let mut counts = [0u64; 5];
        for (k, c) in counts.iter_mut().enumerate() {
            *c = count_points(p, k as i64);
        }
        let g_coeffs = interpolate(&counts)?;
        let h_star = h_star_from_counts(&counts)?;
        let mut interior_counts = [0u64; 4];
        for (k, c) in interior_counts.iter_mut().enumerate() {
            *c = count_interior_points(p, k as i64 + 1);
        }
        Ok(EhrhartData {
            g_coeffs,
            h_star,
            degree: degree_of(&h_star),
            counts,
            interior_counts,
            volume,
        })
    }

    /// `g(t)` at an integer.
    pub fn eval(&self, t: i64) -> Rational {
        eval_poly(&self.g_coeffs, t)
    }

    /// Degree read off from the first dilate with an interior point.
    pub fn degree_from_interior(&self) -> usize {
        let first = (0..4).find(|&i| self.interior_counts[i] > 0).expect("4P has an interior point");
        3 - first
    }
}

/// The Ehrhart polynomial, constant term first.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> Result<[Rational; 4], EhrhartError> {
    let counts: Vec<u64> = (0..5).map(|k| count_points(p, k)).collect();
    interpolate(&[counts[0], counts[1], counts[2], counts[3], counts[4]])
}

pub fn h_star_vector(p: &LatticePolytope) -> Result<[i64; 4], EhrhartError> {
    let counts: Vec<u64> = (0..4).map(|k| count_points(p, k)).collect();
    h_star_from_counts(&[counts[0], counts[1], counts[2], counts[3], 0])
}

/// Largest index of a nonzero h* entry.
pub fn degree(p: &LatticePolytope) -> Result<usize, EhrhartError> {
    Ok(degree_of(&h_star_vector(p)?))
}

fn degree_of(h: &[i64; 4]) -> usize {
    (0..4).rev().find(|&j| h[j] != 0).unwrap_or(0)
}

fn eval_poly(c: &[Rational; 4], t: i64) -> Rational {
    let t = Rational::from_integer(BigInt::from(t));
    c.iter().rev().fold(Rational::zero(), |acc, a| acc * &t + a)
}

/// Lagrange interpolation through `(k, counts[k])` for `k = 0..=3`,
/// verified at `k = 4`.
fn interpolate(counts: &[u64; 5]) -> Result<[Rational; 4], EhrhartError> {
    let mut coeffs: [Rational; 4] = Default::default();
    for j in 0..4i64 {
        // basis polynomial prod_{m != j} (t - m) / (j - m)
        let mut basis = vec![Rational::from_integer(BigInt::from(1))];
        let mut denom = BigInt::from(1);
        for m in 0..4i64 {
            if m == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * Rational::from_integer(BigInt::from(m));
            }
            basis = next;
            denom *= BigInt::from(j - m);
        }
        let scale = Rational::new(BigInt::from(counts[j as usize]), denom);
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += b * &scale;
        }
    }
    let predicted = eval_poly(&coeffs, 4);
    if predicted != Rational::from_integer(BigInt::from(counts[4])) {
        return Err(EhrhartError::InterpolationMismatch {
            predicted: predicted.to_string(),
            counted: counts[4],
        });
    }
    Ok(coeffs)
}

/// `h_j = sum_{i <= j} (-1)^i C(4, i) g(j - i)`.
fn h_star_from_counts(counts: &[u64; 5]) -> Result<[i64; 4], EhrhartError> {
    const BINOM4: [i64; 5] = [1, 4, 6, 4, 1];
    let mut h = [0i64; 4];
    for (j, hj) in h.iter_mut().enumerate() {
        let mut s = 0i64;
        for i in 0..=j {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            s += sign * BINOM4[i] * counts[j - i] as i64;
        }
        if s < 0 {
            return Err(EhrhartError::NegativeHStar {
                index: j,
                value: s.to_string(),
            });
        }
        *hj = s;
    }
    Ok(h)
}

/// `(k, |k P° ∩ Z^3|, -g(-k))` for `k = 1..=4`.
pub fn reciprocity_check(p: &LatticePolytope) -> Result<Vec<(i64, u64, Rational)>, EhrhartError> {
    let data = EhrhartData::compute(p)?;
    Ok((1..=4)
        .map(|k| (k, data.interior_counts[k as usize - 1], -data.eval(-k)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaaseRow {
    pub vertex: IVec3,
    /// Sum of lattice lengths of the edges at the vertex.
    pub edge_sum: u64,
    /// `vol + 2`.
    pub bound: u64,
    pub holds: bool,
    pub equality: bool,
    /// Equality and the polytope is a simplex with a unimodular facet.
    pub equality_explained: bool,
}

/// Edge-length bound at every vertex of a 3-polytope.
pub fn haase_check(p: &LatticePolytope) -> Result<Vec<HaaseRow>, EhrhartError> {
    let vol = p.normalized_volume()?;
    let edges = p.edges();
    let unimodular_facet = p.vertices.len() == 4
        && p.facet_vertices.iter().any(|f| {
            let [a, b, c] = [f[0], f[1], f[2]].map(|i| p.vertices[i]);
            content(cross(sub(b, a), sub(c, a))) == 1
        });
    Ok(p.vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let edge_sum = edges
                .iter()
                .filter(|(a, b)| *a == i || *b == i)
                .map(|&(a, b)| edge_lattice_length(p.vertices[a], p.vertices[b]))
                .sum();
            let bound = vol + 2;
            let equality = edge_sum == bound;
            HaaseRow {
                vertex: v,
                edge_sum,
                bound,
                holds: edge_sum <= bound,
                equality,
                equality_explained: equality && unimodular_facet,
            }
        })
        .collect())
}

/// Integer value of a rational, if it is one and fits.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}
