use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{smith_normal_form, IntMatrix, Rational};

/// Solution set `particular + span(nullspace)` of a rational linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSolution {
    pub particular: Vec<Rational>,
    pub nullspace: Vec<Vec<Rational>>,
}

/// Solves `m x = rhs` over Q. `None` if the system is inconsistent.
pub fn solve_rational(m: &IntMatrix, rhs: &[Rational]) -> Option<RationalSolution> {
    assert_eq!(rhs.len(), m.rows(), "right-hand side has wrong length");
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rational> = m
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..=cols {
                let v = &f * &a[r][j];
                a[i][j] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }

    let mut particular = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = a[i][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -a[i][f].clone();
            }
            v
        })
        .collect();
    Some(RationalSolution {
        particular,
        nullspace,
    })
}

/// Gcd of all maximal minors; zero if the matrix is rank deficient.
///
/// For a `d x n` matrix with `d <= n` this equals the index of the column
/// lattice in `Z^d` when it is finite.
pub fn gcd_of_maximal_minors(m: &IntMatrix) -> BigInt {
    use num_integer::Integer;
    let k = m.rows().min(m.cols());
    let mut g = BigInt::zero();
    if m.rows() <= m.cols() {
        for idx in combinations(m.cols(), k) {
            g = g.gcd(&m.select_columns(&idx).determinant());
        }
    } else {
        let t = m.transpose();
        for idx in combinations(t.cols(), k) {
            g = g.gcd(&t.select_columns(&idx).determinant());
        }
    }
    g
}

/// Product of the invariant factors; equals `gcd_of_maximal_minors`.
pub fn invariant_factor_product(m: &IntMatrix) -> BigInt {
    let snf = smith_normal_form(m);
    snf.diagonal.iter().product()
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
