use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form of the lattice generated by the rows of `m`.
///
/// Returns the nonzero rows only, in echelon order, with positive pivots and
/// every entry above a pivot reduced into `[0, pivot)`. Two generating sets
/// give the same output iff they generate the same lattice.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut p = 0;
    for c in 0..cols {
        if p == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in p..rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                if best.map_or(true, |b| a.get(i, c).abs() < a.get(b, c).abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(p, b);
            let mut done = true;
            for i in p + 1..rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let q = -a.get(i, c).div_floor(a.get(p, c));
                a.add_row_multiple(i, p, &q);
                if !a.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(p, c).is_zero() {
            continue;
        }
        if a.get(p, c).is_negative() {
            a.negate_row(p);
        }
        for i in 0..p {
            let q = -a.get(i, c).div_floor(a.get(p, c));
            a.add_row_multiple(i, p, &q);
        }
        pivots.push(c);
        p += 1;
    }
    let data: Vec<BigInt> = (0..p).flat_map(|i| a.row(i).to_vec()).collect();
    (IntMatrix::from_big(p, cols, data), pivots)
}
