mod common;

use std::collections::HashSet;

use common::*;
use gkzrank::geometry::vec::{add, dot, scale};
use gkzrank::semigroup::{candidate_strata, quotient_contains, semigroup_contains, Parameter, RankingContext, RankingPair};
use gkzrank::{faces, IVec3, PointedConfig};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fid(ctx: &RankingContext, cols: &[usize]) -> usize {
    ctx.faces().iter().position(|f| f.columns == cols).expect("face exists")
}

/// Elements of NA of grading level at most `level`, by breadth-first search.
fn brute_semigroup(cfg: &PointedConfig, level: i64) -> HashSet<IVec3> {
    let h = cfg.grading();
    let mut seen: HashSet<IVec3> = HashSet::from([[0, 0, 0]]);
    let mut frontier = vec![[0, 0, 0]];
    while let Some(x) = frontier.pop() {
        for &a in cfg.columns() {
            let y = add(x, a);
            if dot(h, y) <= level && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

#[test]
fn semigroup_examples() {
    let cfg = pyramid();
    for &a in cfg.columns() {
        assert!(semigroup_contains(&cfg, a));
    }
    assert!(!semigroup_contains(&cfg, [1, 2, 0]));
    // level-one elements in the plane are exactly the columns
    let level_one: Vec<IVec3> = brute_semigroup(&cfg, 3).into_iter().filter(|p| p[2] == 0 && p[0] == 1).collect();
    assert!(!level_one.contains(&[1, 2, 0]));
    let total = cfg.columns().iter().fold([0, 0, 0], |s, &a| add(s, a));
    assert!(semigroup_contains(&cfg, total));
}

#[test]
fn quotient_examples() {
    let cfg = identity();
    let fs = faces(&cfg);
    let ray = fs.iter().position(|f| f.columns == [0]).unwrap();
    assert!(!quotient_contains(&cfg, &fs, ray, [0, -1, 0]));
    assert!(quotient_contains(&cfg, &fs, ray, [-7, 0, 3]));
    let full = fs.len() - 1;
    assert!(quotient_contains(&cfg, &fs, full, [-3, -5, -8]));
    for b in [[0, 0, 0], [1, 2, 0], [-1, 0, 0], [2, 2, 2]] {
        assert_eq!(quotient_contains(&cfg, &fs, 0, b), semigroup_contains(&cfg, b));
    }
}

#[test]
fn translates_examples() {
    let cfg = identity();
    let ctx = RankingContext::new(&cfg);
    let e1 = fid(&ctx, &[0]);
    assert_eq!(ctx.ranking_translates(e1, &Parameter::integer([0, -1, 0])), vec![[0, -1, 0]]);
    let deep = Parameter::integer([1, 1, 1]);
    for f in 0..ctx.faces().len() {
        assert!(ctx.ranking_translates(f, &deep).is_empty());
    }
    assert!(ctx.ranking_translates(ctx.full_face(), &Parameter::integer([-1, -1, -1])).is_empty());
}

#[test]
fn identity_pairs() {
    let ctx = RankingContext::new(&identity());
    let pairs = ctx.ranking_pairs(&Parameter::integer([0, -1, 0]));
    let got: Vec<(Vec<usize>, IVec3)> =
        pairs.iter().map(|p| (ctx.face(p.face).columns.clone(), p.rep)).collect();
    assert_eq!(
        got,
        vec![
            (vec![], [0, -1, 0]),
            (vec![0], [0, -1, 0]),
            (vec![2], [0, -1, 0]),
            (vec![0, 2], [0, -1, 0]),
        ]
    );
    assert_eq!(ctx.is_simple(&pairs), Some(fid(&ctx, &[0, 2])));
    let generic: Parameter = "-1/2 0 0".parse().unwrap();
    assert!(ctx.ranking_pairs(&generic).is_empty());
    assert_eq!(ctx.is_simple(&[]), None);
}

#[test]
fn pyramid_pairs() {
    let ctx = RankingContext::new(&pyramid());
    let pairs = ctx.ranking_pairs(&Parameter::integer([1, 2, 0]));
    let max = ctx.maximal_pairs(&pairs);
    let ray = fid(&ctx, &[4]);
    assert_eq!(max, vec![RankingPair { face: ray, rep: [1, 2, 0] }]);
    assert_eq!(ctx.is_simple(&pairs), Some(ray));
}

#[test]
fn strata_examples() {
    let ctx = RankingContext::new(&identity());
    let strata = candidate_strata(&ctx, 2);
    assert!(!strata.is_empty());
    let line = Parameter::integer([0, -1, 0]);
    assert!(strata.iter().any(|s| s.face == fid(&ctx, &[0]) && s.contains_point(&line)));
    for s in &strata {
        assert!(s.contains_point(&s.witness));
        for t in &strata {
            if !t.contains_stratum(s) {
                assert!(!t.contains_point(&s.witness));
            }
        }
    }
}

fn random_int(rng: &mut impl Rng, w: i64) -> IVec3 {
    [rng.gen_range(-w..=w), rng.gen_range(-w..=w), rng.gen_range(-w..=w)]
}

fn check_config(cfg: &PointedConfig, rng: &mut impl Rng) {
    let ctx = RankingContext::new(cfg);
    let h = cfg.grading();

    // brute-force oracle for N A
    let level = 12;
    let na = brute_semigroup(cfg, level);
    for _ in 0..60 {
        let b = random_int(rng, 4);
        if dot(h, b) <= level {
            assert_eq!(ctx.semigroup_contains(b), na.contains(&b), "membership of {b:?}");
        }
    }

    for _ in 0..6 {
        let beta = if rng.gen_bool(0.5) {
            Parameter::integer(random_int(rng, 3))
        } else {
            let d = rng.gen_range(2..5);
            let z = random_int(rng, 3);
            // a point on a random ray translate
            let ray = ctx.faces().iter().find(|f| f.dim == 1).unwrap();
            Parameter::integer(z).add_scaled(1, d, cfg.columns()[ray.columns[0]])
        };
        let pairs = ctx.ranking_pairs(&beta);
        for f in 0..ctx.faces().len() {
            let n = pairs.iter().filter(|p| p.face == f).count() as u64;
            assert!(n <= ctx.face(f).index);
        }
        for p in &pairs {
            let face = ctx.face(p.face);
            assert!(!ctx.quotient_contains(p.face, p.rep));
            for _ in 0..10 {
                let coeffs: Vec<i64> = face.lattice.basis().iter().map(|_| rng.gen_range(-5..=5)).collect();
                let f = face.lattice.basis().iter().zip(&coeffs).fold([0, 0, 0], |s, (&g, &c)| add(s, scale(c, g)));
                assert!(!ctx.quotient_contains(p.face, add(p.rep, f)));
            }
            // pairs on faces containing F are unchanged by a shift along ZF
            let basis = face.lattice.basis();
            if let Some(&g) = basis.first() {
                let shifted = beta.add_integer(scale(rng.gen_range(-3..=3), g));
                let above = |ps: &[RankingPair]| -> Vec<RankingPair> {
                    ps.iter().filter(|q| ctx.face(q.face).contains_face(face)).copied().collect()
                };
                assert_eq!(above(&ctx.ranking_pairs(&shifted)), above(&pairs));
            }
        }
    }

    // generic parameters: no facet plane through an integer point
    let normals: Vec<IVec3> = ctx.faces().iter().filter_map(|f| f.normal).collect();
    let generic = loop {
        let b = Parameter::new(random_int(rng, 300), 101);
        if normals.iter().all(|&n| {
            let (num, den) = b.dot_frac(n);
            num % den != 0
        }) {
            break b;
        }
    };
    assert!(ctx.ranking_pairs(&generic).is_empty());
    assert!(candidate_strata(&ctx, 2).iter().all(|s| !s.contains_point(&generic)));
}

#[test]
fn seeded_configs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for cfg in [identity(), pyramid(), lawrence_vol2(), lawrence_vol3()] {
        check_config(&cfg, &mut rng);
    }
    for _ in 0..25 {
        let cfg = random_config(&mut rng, 6, 3, 30);
        check_config(&cfg, &mut rng);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_config_properties(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = random_config(&mut rng, 6, 3, 30);
        check_config(&cfg, &mut rng);
    }
}
