//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `left * input * right == diagonal form`, with `left`, `right` unimodular
/// and the nonzero diagonal entries positive, each dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The diagonal as a full `rows x cols` matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.rows());
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let n = rows.min(cols);

    'outer: for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = a.get(i, j);
                    if v.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / a.get(t, t));
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / a.get(t, t));
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = a.get(t, t).clone();
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal: Vec<BigInt> = (0..n).map(|i| a.get(i, i).clone()).collect();
    let out = SmithDecomposition {
        left,
        right,
        diagonal,
    };
    let check = &(&out.left * m) * &out.right;
    assert_eq!(
        check,
        out.diagonal_matrix(),
        "Smith decomposition failed to reproduce its input"
    );
    out
}

/// Basis (as columns) of the integer kernel `{x in Z^cols : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols()).map(|j| snf.right.column(j)).collect()
}
