use gkzrank::linalg::{
    gcd_of_maximal_minors, hermite_normal_form, integer_kernel, invariant_factor_product, lattice_index,
    smith_normal_form, solve_rational, LatticeIndex,
};
use gkzrank::{IntMatrix, Lattice, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn diagonal(m: &IntMatrix) -> Vec<i64> {
    smith_normal_form(m).diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
}

#[test]
fn smith_examples() {
    assert_eq!(diagonal(&IntMatrix::identity(3)), vec![1, 1, 1]);
    assert_eq!(diagonal(&IntMatrix::from_rows(&[[2, 0], [0, 3]])), vec![1, 6]);
    assert_eq!(diagonal(&IntMatrix::zeros(2, 2)), vec![0, 0]);
}

#[test]
fn index_examples() {
    let z2 = IntMatrix::identity(2);
    assert_eq!(lattice_index(&z2, &z2), LatticeIndex::Finite(1.into()));
    let sub = IntMatrix::from_columns(&[[2, 0], [0, 3]]);
    // Brute force: points of [0,2)x[0,3) are distinct modulo the sublattice.
    let reps = (0..2).flat_map(|x| (0..3).map(move |y| (x, y))).count();
    assert_eq!(lattice_index(&z2, &sub), LatticeIndex::Finite(BigInt::from(reps)));
    let ray = IntMatrix::from_columns(&[[1, 0]]);
    assert_eq!(lattice_index(&z2, &ray), LatticeIndex::Infinite);
}

#[test]
fn solve_examples() {
    let s = solve_rational(&IntMatrix::identity(3), &[q(1, 2), q(3, 1), q(-1, 1)]).unwrap();
    assert_eq!(s.particular, vec![q(1, 2), q(3, 1), q(-1, 1)]);
    assert!(s.nullspace.is_empty());

    let m = IntMatrix::from_rows(&[[1, 1]]);
    let s = solve_rational(&m, &[q(5, 1)]).unwrap();
    assert_eq!(&s.particular[0] + &s.particular[1], q(5, 1));
    assert_eq!(s.nullspace.len(), 1);
    let n = &s.nullspace[0];
    assert_eq!(&n[0] + &n[1], q(0, 1));
    assert_ne!(n[0], q(0, 1));

    assert!(solve_rational(&IntMatrix::from_rows(&[[1], [1]]), &[q(0, 1), q(1, 1)]).is_none());
}

#[test]
fn minor_gcd_examples() {
    let id = IntMatrix::identity(3);
    assert_eq!(gcd_of_maximal_minors(&id), 1.into());
    assert_eq!(invariant_factor_product(&id), 1.into());
    let lawrence = IntMatrix::from_rows(&[[1, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]);
    // Explicit minors over all column triples.
    let cols = [[1, 0, 0], [1, 0, 1], [0, 1, 0], [0, 1, 1]];
    let mut g = 0i64;
    for a in 0..4 {
        for b in a + 1..4 {
            for c in b + 1..4 {
                g = num_integer::gcd(g, gkzrank::geometry::vec::det3(cols[a], cols[b], cols[c]));
            }
        }
    }
    assert_eq!(g, 1);
    assert_eq!(gcd_of_maximal_minors(&lawrence), 1.into());
    assert_eq!(gcd_of_maximal_minors(&IntMatrix::from_rows(&[[2, 0], [0, 2]])), 4.into());
    assert_eq!(gcd_of_maximal_minors(&IntMatrix::from_rows(&[[1, 2], [2, 4]])), 0.into());
}

#[test]
fn hermite_is_reduced_echelon() {
    let m = IntMatrix::from_rows(&[[4, 6, 2], [2, 3, 7], [6, 9, 9]]);
    let (h, pivots) = hermite_normal_form(&m);
    assert_eq!(h.rows(), 2);
    assert_eq!(pivots, vec![0, 2]);
    for (r, &p) in pivots.iter().enumerate() {
        let piv = h.get(r, p).clone();
        assert!(piv > 0.into());
        for above in 0..r {
            let e = h.get(above, p);
            assert!(*e >= 0.into() && *e < piv);
        }
    }
}

#[test]
fn kernel_vectors_are_annihilated() {
    let m = IntMatrix::from_rows(&[[1, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]);
    let k = integer_kernel(&m);
    assert_eq!(k.len(), 1);
    assert!(m.mul_vec(&k[0]).iter().all(|x| *x == 0.into()));
}

#[test]
fn lattice_operations() {
    let a = Lattice::from_generators(&[[2, 0, 0], [0, 1, 0]]);
    let b = Lattice::from_generators(&[[3, 0, 0], [0, 0, 1]]);
    assert_eq!(a.intersection(&b).basis(), &[[6, 0, 0]]);
    assert_eq!(a.sum(&b).rank(), 3);
    assert!(a.sum(&b).contains([1, 5, -2]));
    assert_eq!(a.saturation_index(), 2);
    assert!(a.is_sublattice_of(&a.saturation()));
    assert!(!a.contains([1, 0, 0]));
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

proptest! {
    #[test]
    fn smith_reassembles(rows in matrix_strategy(3, 4)) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.left * &m) * &s.right, s.diagonal_matrix());
        for w in s.diagonal.windows(2) {
            if w[1] != 0.into() {
                prop_assert!((&w[1] % &w[0]) == 0.into());
            }
        }
    }

    #[test]
    fn index_is_multiplicative(
        l1 in matrix_strategy(3, 3),
        t2 in matrix_strategy(3, 3),
        t3 in matrix_strategy(3, 3),
    ) {
        let l1 = IntMatrix::from_rows(&l1);
        let l2 = &l1 * &IntMatrix::from_rows(&t2);
        let l3 = &l2 * &IntMatrix::from_rows(&t3);
        prop_assume!(l3.determinant() != 0.into());
        let i12 = lattice_index(&l1, &l2);
        let i23 = lattice_index(&l2, &l3);
        let i13 = lattice_index(&l1, &l3);
        prop_assert_eq!(i12.finite().unwrap() * i23.finite().unwrap(), i13.finite().unwrap().clone());
    }

    #[test]
    fn solutions_substitute(rows in matrix_strategy(2, 4), x in prop::collection::vec(-5i64..=5, 4), d in 1i64..6) {
        let m = IntMatrix::from_rows(&rows);
        let xs: Vec<Rational> = x.iter().map(|&v| q(v, d)).collect();
        let apply = |v: &[Rational]| -> Vec<Rational> {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| Rational::from_integer(m.get(i, j).clone()) * &v[j]).sum())
                .collect()
        };
        let rhs = apply(&xs);
        let s = solve_rational(&m, &rhs).expect("consistent by construction");
        prop_assert_eq!(apply(&s.particular), rhs);
        for n in &s.nullspace {
            prop_assert!(apply(n).iter().all(|c| *c == q(0, 1)));
        }
        prop_assert_eq!(s.nullspace.len(), 4 - m.rank());
    }

    #[test]
    fn minor_gcd_matches_invariant_factors(rows in matrix_strategy(3, 5)) {
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(gcd_of_maximal_minors(&m), invariant_factor_product(&m));
    }
}
