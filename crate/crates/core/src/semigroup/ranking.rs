use super::membership::QuotientMembership;
use super::Parameter;
use crate::geometry::vec::{add, sub};
use crate::geometry::{faces, meet, Face, PointedConfig};
use crate::linalg::{IVec3, Lattice};

/// A translate `rep + ZF` with `rep ∈ β + QF` and `rep ∉ N A + Z F`.
/// `rep` is the canonical representative modulo `ZF`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankingPair {
    pub face: usize,
    pub rep: IVec3,
}

/// Faces, membership oracles and pairwise lattice data of one configuration.
#[derive(Debug)]
pub struct RankingContext {
    cfg: PointedConfig,
    faces: Vec<Face>,
    members: Vec<QuotientMembership>,
    /// `ZF + ZG` for each pair of faces.
    sums: Vec<Vec<Lattice>>,
    /// `QF ∩ QG` is larger than `Q(F ∩ G)`.
    detached: Vec<Vec<bool>>,
    meets: Vec<Vec<usize>>,
}

impl RankingContext {
    pub fn new(cfg: &PointedConfig) -> Self {
        let faces = faces(cfg);
        let members = faces.iter().map(|f| QuotientMembership::for_face(cfg, f, &faces)).collect();
        let n = faces.len();
        let mut sums = vec![Vec::with_capacity(n); n];
        let mut detached = vec![vec![false; n]; n];
        let mut meets = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s = faces[i].lattice.sum(&faces[j].lattice);
                let m = meet(&faces, i, j);
                let common_dim = faces[i].dim + faces[j].dim - s.rank();
                detached[i][j] = common_dim > faces[m].dim;
                meets[i][j] = m;
                sums[i].push(s);
            }
        }
        RankingContext {
            cfg: cfg.clone(),
            faces,
            members,
            sums,
            detached,
            meets,
        }
    }

    pub fn config(&self) -> &PointedConfig {
        &self.cfg
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn empty_face(&self) -> usize {
        0
    }

    pub fn full_face(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meets[a][b]
    }

    pub fn sum_lattice(&self, a: usize, b: usize) -> &Lattice {
        &self.sums[a][b]
    }

    pub fn membership(&self, face: usize) -> &QuotientMembership {
        &self.members[face]
    }

    /// `b ∈ N A + Z F`.
    pub fn quotient_contains(&self, face: usize, b: IVec3) -> bool {
        self.members[face].contains(b)
    }

    pub fn semigroup_contains(&self, b: IVec3) -> bool {
        self.members[0].contains(b)
    }

    /// Canonical representatives of the translates of `ZF` on `β + QF`
    /// that miss `N A + Z F`.
    pub fn ranking_translates(&self, face: usize, beta: &Parameter) -> Vec<IVec3> {
        let f = &self.faces[face];
        if f.dim == 3 {
            return Vec::new();
        }
        let Some(p0) = f.integral_point_on(beta.num(), beta.den()) else {
            return Vec::new();
        };
        let mut out: Vec<IVec3> = f
            .coset_reps()
            .iter()
            .map(|&r| f.lattice.reduce(add(p0, r)))
            .filter(|&b| !self.members[face].contains(b))
            .collect();
        out.sort();
        out
    }

    /// All ranking pairs at `β`, ordered by face id then representative.
    pub fn ranking_pairs(&self, beta: &Parameter) -> Vec<RankingPair> {
        (0..self.faces.len())
            .flat_map(|face| {
                self.ranking_translates(face, beta)
                    .into_iter()
                    .map(move |rep| RankingPair { face, rep })
            })
            .collect()
    }

    /// `p.rep + Z F_p ⊆ q.rep + Z F_q`.
    pub fn pair_contained(&self, p: &RankingPair, q: &RankingPair) -> bool {
        self.faces[q.face].contains_face(&self.faces[p.face])
            && self.faces[q.face].lattice.contains(sub(p.rep, q.rep))
    }

    /// Whether two ranking translates share a lattice point on `β + Q(F ∩ G)`.
    ///
    /// When `QF ∩ QG` is spanned by `F ∩ G` this is `b - c ∈ ZF + ZG`. For
    /// faces whose spans meet beyond their common face (opposite facets of a
    /// cone) the common point must itself sit on `β + Q(F ∩ G)`.
    pub fn related(&self, p: &RankingPair, q: &RankingPair, beta: &Parameter) -> bool {
        let (f, g) = (p.face, q.face);
        if !self.detached[f][g] {
            return self.sums[f][g].contains(sub(p.rep, q.rep));
        }
        let m = self.meets[f][g];
        // points of (b + ZF) ∩ (c + ZG) lying on β + Q(F ∩ G)
        match self.faces[m].integral_point_on(beta.num(), beta.den()) {
            None => false,
            Some(x0) => {
                let fm = &self.faces[m];
                fm.coset_reps().iter().any(|&r| {
                    let x = add(x0, r);
                    self.faces[f].lattice.contains(sub(x, p.rep)) && self.faces[g].lattice.contains(sub(x, q.rep))
                })
            }
        }
    }

    /// Pairs not contained in another pair.
    pub fn maximal_pairs(&self, pairs: &[RankingPair]) -> Vec<RankingPair> {
        pairs
            .iter()
            .filter(|p| !pairs.iter().any(|q| q != *p && self.pair_contained(p, q)))
            .copied()
            .collect()
    }

    /// The face `G` when every maximal pair lives on `G`.
    pub fn is_simple(&self, pairs: &[RankingPair]) -> Option<usize> {
        let max = self.maximal_pairs(pairs);
        let g = max.first()?.face;
        max.iter().all(|p| p.face == g).then_some(g)
    }
}
