mod common;

use common::random_polytope;
use gkzrank::ehrhart::{
    classify_degree_le_one, count_interior_points, count_points, degree, ehrhart_polynomial, h_star_vector,
    haase_check, reciprocity_check, DegreeOneClass, EhrhartData,
};
use gkzrank::geometry::lawrence_prism_points;
use gkzrank::geometry::vec::{add, scale, sub};
use gkzrank::{IVec3, LatticePolytope, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(pts: &[IVec3]) -> LatticePolytope {
    LatticePolytope::from_points(pts).unwrap()
}

fn unit() -> LatticePolytope {
    poly(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
}

fn t9() -> LatticePolytope {
    poly(&[[0, 0, 0], [3, 0, 0], [0, 3, 0], [0, 0, 1]])
}

fn exceptional() -> LatticePolytope {
    poly(&[[0, 0, 0], [1, 0, 0], [1, 2, 0], [1, 0, 2]])
}

fn lawrence(b: [i64; 3]) -> LatticePolytope {
    poly(&lawrence_prism_points(b))
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Points of `kP` by brute force over a generous box, using only the vertex
/// description through barycentric feasibility on each simplex of a fan.
fn brute_count(p: &LatticePolytope, k: i64) -> u64 {
    let pts = p.lattice_points_of_dilate(k, false);
    // Independent recount through the H-description scaled by k.
    let (lo, hi) = p.bounding_box(k);
    let mut n = 0;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                if p.halfspaces.iter().all(|h| h.normal[0] * x + h.normal[1] * y + h.normal[2] * z <= k * h.offset) {
                    n += 1;
                }
            }
        }
    }
    assert_eq!(n, pts.len() as u64);
    n
}

#[test]
fn counts() {
    let t = unit();
    assert_eq!((0..4).map(|k| count_points(&t, k)).collect::<Vec<_>>(), vec![1, 4, 10, 20]);
    for k in 0..4 {
        // C(k+3, 3)
        assert_eq!(brute_count(&t, k), ((k + 1) * (k + 2) * (k + 3) / 6) as u64);
    }
    assert_eq!(count_points(&t9(), 1), 11);
    assert_eq!(count_points(&exceptional(), 0), 1);
}

#[test]
fn polynomial() {
    let g = ehrhart_polynomial(&unit()).unwrap();
    assert_eq!(g, [r(1, 1), r(11, 6), r(1, 1), r(1, 6)]);
    let g = ehrhart_polynomial(&lawrence([1, 1, 1])).unwrap();
    assert_eq!(g[3], r(3, 6));
    let d = EhrhartData::compute(&t9()).unwrap();
    assert_eq!(d.eval(4), Rational::from_integer(count_points(&t9(), 4).into()));
}

#[test]
fn h_star() {
    assert_eq!(h_star_vector(&unit()).unwrap(), [1, 0, 0, 0]);
    let h = h_star_vector(&exceptional()).unwrap();
    assert_eq!(h.iter().sum::<i64>(), 4);
    assert_eq!(degree(&exceptional()).unwrap(), 1);
    assert_eq!(h_star_vector(&t9()).unwrap().iter().sum::<i64>(), 9);
}

#[test]
fn degrees() {
    assert_eq!(degree(&unit()).unwrap(), 0);
    assert_eq!(degree(&lawrence([1, 0, 0])).unwrap(), 0);
    assert_eq!(degree(&lawrence([1, 1, 0])).unwrap(), 1);
    assert_eq!(degree(&lawrence([1, 1, 1])).unwrap(), 1);
    let cube: Vec<IVec3> = (0..8).map(|i| [2 * (i & 1), (i & 2), (i & 4) / 2]).collect();
    let cube = poly(&cube);
    assert_eq!(count_interior_points(&cube, 1), 1);
    assert_eq!(degree(&cube).unwrap(), 3);
}

#[test]
fn reciprocity() {
    let rows = reciprocity_check(&unit()).unwrap();
    assert_eq!(rows[0], (1, 0, r(0, 1)));
    assert_eq!(rows[3], (4, 1, r(1, 1)));
    assert_eq!(count_interior_points(&t9(), 1), 0);
}

#[test]
fn haase_examples() {
    for row in haase_check(&unit()).unwrap() {
        assert_eq!((row.edge_sum, row.bound), (3, 3));
        assert!(row.equality && row.equality_explained);
    }
    let at = |p: &LatticePolytope| haase_check(p).unwrap().into_iter().find(|r| r.vertex == [0, 0, 0]).unwrap();
    let l = at(&lawrence([1, 1, 1]));
    assert!(l.edge_sum <= 5);
    assert_eq!(l.edge_sum, 3);
    let t = at(&t9());
    assert_eq!((t.edge_sum, t.bound), (7, 11));
}

#[test]
fn edge_bound_tight_on_square_pyramid() {
    // L(0,1,1) is the unimodular square pyramid: equality at the apex without
    // being a simplex.
    let p = lawrence([0, 1, 1]);
    assert_eq!(p.vertices.len(), 5);
    let apex = haase_check(&p).unwrap().into_iter().find(|r| r.vertex == [0, 0, 0]).unwrap();
    assert_eq!((apex.edge_sum, apex.bound), (4, 4));
    assert!(apex.equality && !apex.equality_explained);
}

fn check_witness(p: &LatticePolytope, c: &DegreeOneClass) {
    let mut expect: Vec<IVec3> = match c {
        DegreeOneClass::BasicSimplex { witness } => witness.to_vec(),
        DegreeOneClass::ExceptionalSimplex { witness: [e0, e1, e2, apex] } => {
            vec![*e0, sub(scale(2, *e1), *e0), sub(scale(2, *e2), *e0), *apex]
        }
        DegreeOneClass::LawrencePrism { heights, witness: [e0, e1, e2, top] } => {
            let w = sub(*top, *e0);
            let mut v = Vec::new();
            for (e, &b) in [e0, e1, e2].into_iter().zip(heights) {
                v.push(*e);
                if b > 0 {
                    v.push(add(*e, scale(b as i64, w)));
                }
            }
            v
        }
        DegreeOneClass::NotDegreeLeOne => return,
    };
    let mut got = p.vertices.clone();
    expect.sort();
    expect.dedup();
    got.sort();
    assert_eq!(got, expect, "witness reproduces the vertex set");
}

#[test]
fn classification() {
    let e = poly(&[[0, 0, 0], [1, 0, 0], [1, 2, 0], [1, 0, 2]]);
    let c = classify_degree_le_one(&e).unwrap();
    assert_eq!(c.tag(), "exceptional-simplex");
    check_witness(&e, &c);

    let cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]];
    let mut pts = cols.to_vec();
    pts.push([0, 0, 0]);
    let l = poly(&pts);
    let c = classify_degree_le_one(&l).unwrap();
    assert!(matches!(c, DegreeOneClass::LawrencePrism { heights: [1, 1, 1], .. }));
    check_witness(&l, &c);

    assert_eq!(classify_degree_le_one(&unit()).unwrap().tag(), "basic-simplex");
    assert_eq!(classify_degree_le_one(&t9()).unwrap().tag(), "degree-at-least-two");
}

fn check_invariants(p: &LatticePolytope) {
    let d = EhrhartData::compute(p).unwrap();
    let h = d.h_star;
    let n = count_points(p, 1);
    assert_eq!(d.g_coeffs[0], r(1, 1));
    assert_eq!(d.eval(1), Rational::from_integer(n.into()));
    assert_eq!(h[0], 1);
    assert!(h.iter().all(|&x| x >= 0));
    assert_eq!(h.iter().sum::<i64>() as u64, d.volume);
    assert_eq!(h[1], n as i64 - 4);
    if d.degree >= 1 {
        assert_eq!(h[d.degree] as u64, count_interior_points(p, 4 - d.degree as i64));
    }
    assert_eq!(d.degree, d.degree_from_interior());
    for (k, interior, neg) in reciprocity_check(p).unwrap() {
        assert_eq!(Rational::from_integer(interior.into()), neg, "reciprocity at {k}");
    }
    assert_eq!(d.eval(4), Rational::from_integer(count_points(p, 4).into()));

    let rows = haase_check(p).unwrap();
    for row in &rows {
        assert!(row.holds);
        assert_eq!(row.bound, d.volume + 2);
        if row.equality {
            // Tightness forces both inequalities of the chain to be equalities.
            assert!(d.degree <= 1);
            assert_eq!(row.edge_sum + 1, n);
            if row.equality_explained {
                assert_eq!(p.vertices.len(), 4);
            }
        }
    }
    let origin_sum = rows.iter().find(|r| r.vertex == p.vertices[0]).unwrap().edge_sum;
    assert!(origin_sum + 1 <= n);
    assert!(n <= d.volume + 3);

    let c = classify_degree_le_one(p).unwrap();
    assert_eq!(matches!(c, DegreeOneClass::NotDegreeLeOne), d.degree >= 2);
    assert_eq!(matches!(c, DegreeOneClass::BasicSimplex { .. }), d.degree == 0);
    if let DegreeOneClass::LawrencePrism { heights, .. } = &c {
        assert_eq!(heights.iter().sum::<u64>(), d.volume);
    }
    check_witness(p, &c);
}

#[test]
fn seeded_random_polytopes() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        check_invariants(&random_polytope(&mut rng));
    }
}

#[test]
fn lawrence_family() {
    for b1 in 0..=3 {
        for b2 in 0..=3 {
            for b3 in 0..=3 {
                if b1 + b2 + b3 > 0 {
                    check_invariants(&lawrence([b1, b2, b3]));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_polytope_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        check_invariants(&random_polytope(&mut rng));
    }
}
