//! Rank of `M_A(β)` from the ranking lattices.
//!
//! The main route partitions the ranking pairs into classes, builds the
//! order complex of each class and reads the jump off its reduced homology.
//! The closed forms for simple parameters and for two-face ranking lattices,
//! the ray-volume bound and the pyramid reduction are evaluated alongside
//! whenever they apply and recorded as cross-checks.

mod homology;
mod pyramid;
mod sweep;

use std::sync::Mutex;

use rustc_hash::FxHashMap;

pub use homology::{reduced_homology, HomologyProfile, OrderComplex};
pub use pyramid::PyramidRoute;
pub use sweep::{bound_sweep, SweepReport, SweepRow};

use crate::error::RankError;
use crate::geometry::vec::sub;
use crate::geometry::PointedConfig;
use crate::semigroup::{Parameter, RankingContext, RankingPair};

/// One equivalence class of ranking pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankingClass {
    pub pairs: Vec<RankingPair>,
    /// Nonempty faces carrying a pair of the class, ascending.
    pub faces: Vec<usize>,
    pub complex: OrderComplex,
    pub homology: HomologyProfile,
    pub jump: u64,
    /// Faces met by more than one translate inside this class.
    pub repeated_faces: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossChecks {
    /// Rank from the simple-parameter formula.
    pub simple: Option<u64>,
    /// Rank from the two-face formula.
    pub two_face: Option<i64>,
    /// Rank through the pyramid reduction.
    pub pyramid: Option<u64>,
    /// Upper bound on the jump from ray volumes.
    pub jump_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub beta: Parameter,
    pub vol: u64,
    pub pairs: Vec<RankingPair>,
    pub classes: Vec<RankingClass>,
    pub total_jump: u64,
    pub rank: u64,
    pub simple_face: Option<usize>,
    pub cross_checks: CrossChecks,
}

impl RankReport {
    /// `rank / vol` as a reduced fraction.
    pub fn ratio(&self) -> (u64, u64) {
        let g = num_integer::gcd(self.rank, self.vol);
        (self.rank / g, self.vol / g)
    }

    pub fn ratio_below_two(&self) -> bool {
        self.rank < 2 * self.vol
    }

    /// Descriptions of every cross-check that disagrees with the main route.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let c = &self.cross_checks;
        if let Some(s) = c.simple {
            if s != self.rank {
                out.push(format!("simple formula gives {s}, classes give {} at {}", self.rank, self.beta));
            }
        }
        if let Some(t) = c.two_face {
            if t != self.rank as i64 {
                out.push(format!("two-face formula gives {t}, classes give {} at {}", self.rank, self.beta));
            }
        }
        if let Some(p) = c.pyramid {
            if p != self.rank {
                out.push(format!("pyramid reduction gives {p}, classes give {} at {}", self.rank, self.beta));
            }
        }
        if self.total_jump > c.jump_bound {
            out.push(format!("jump {} exceeds ray bound {} at {}", self.total_jump, c.jump_bound, self.beta));
        }
        if !self.ratio_below_two() {
            out.push(format!("rank {} reaches twice the volume {} at {}", self.rank, self.vol, self.beta));
        }
        out
    }
}

/// Rank computations for one configuration, with memoized membership and
/// homology.
#[derive(Debug)]
pub struct RankEngine {
    ctx: RankingContext,
    vol: u64,
    jump_bound: u64,
    pyramid: Option<PyramidRoute>,
    homology_cache: Mutex<FxHashMap<Vec<usize>, (OrderComplex, HomologyProfile)>>,
}

impl RankEngine {
    pub fn new(cfg: &PointedConfig) -> Self {
        let ctx = RankingContext::new(cfg);
        let vol = ctx.face(ctx.full_face()).vol_zf;
        let jump_bound = jump_upper_bound(&ctx);
        let pyramid = PyramidRoute::new(&ctx);
        RankEngine {
            ctx,
            vol,
            jump_bound,
            pyramid,
            homology_cache: Mutex::new(FxHashMap::default()),
        }
    }

    pub fn context(&self) -> &RankingContext {
        &self.ctx
    }

    pub fn volume(&self) -> u64 {
        self.vol
    }

    pub fn jump_bound(&self) -> u64 {
        self.jump_bound
    }

    pub fn pyramid(&self) -> Option<&PyramidRoute> {
        self.pyramid.as_ref()
    }

    /// Classes of `pairs` under the intersection relation, ordered by their
    /// smallest pair.
    pub fn equivalence_classes(&self, pairs: &[RankingPair], beta: &Parameter) -> Vec<Vec<RankingPair>> {
        let n = pairs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..n {
            for j in i + 1..n {
                if find(&mut parent, i) != find(&mut parent, j) && self.ctx.related(&pairs[i], &pairs[j], beta) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<RankingPair>> = Vec::new();
        let mut root_pos: FxHashMap<usize, usize> = FxHashMap::default();
        for i in 0..n {
            let r = find(&mut parent, i);
            let pos = *root_pos.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[pos].push(pairs[i]);
        }
        groups
    }

    /// Order complex on the nonempty faces of a class.
    pub fn order_complex(&self, faces: &[usize]) -> OrderComplex {
        self.complex_and_homology(faces).0
    }

    fn complex_and_homology(&self, faces: &[usize]) -> (OrderComplex, HomologyProfile) {
        if let Some(v) = self.homology_cache.lock().unwrap().get(faces) {
            return v.clone();
        }
        let fs = self.ctx.faces();
        let k = OrderComplex::from_poset(faces.to_vec(), |i, j| {
            faces[i] != faces[j] && fs[faces[j]].contains_face(&fs[faces[i]])
        });
        let h = reduced_homology(&k);
        self.homology_cache
            .lock()
            .unwrap()
            .insert(faces.to_vec(), (k.clone(), h));
        (k, h)
    }

    /// Jump contributed by one class.
    pub fn class_jump(&self, faces: &[usize], h: &HomologyProfile) -> u64 {
        let fs = self.ctx.faces();
        if faces.is_empty() {
            return 2;
        }
        let b = &h.betti;
        if b[0] == 0 && b[2] == 0 && b[3] == 0 && b[1] > 0 {
            let m = b[1] + 1;
            let rays: u64 = faces
                .iter()
                .filter(|&&f| fs[f].dim == 1)
                .map(|&f| fs[f].vol_zf - 1)
                .sum();
            return rays + m - 1;
        }
        if h.is_acyclic() && faces.len() == 1 && fs[faces[0]].dim == 1 {
            return fs[faces[0]].vol_zf;
        }
        0
    }

    pub fn rank(&self, beta: &Parameter) -> RankReport {
        let pairs = self.ctx.ranking_pairs(beta);
        self.rank_from_pairs(beta, pairs)
    }

    fn rank_from_pairs(&self, beta: &Parameter, pairs: Vec<RankingPair>) -> RankReport {
        let mut classes = Vec::new();
        for group in self.equivalence_classes(&pairs, beta) {
            let mut faces: Vec<usize> = group.iter().map(|p| p.face).filter(|&f| f != 0).collect();
            faces.sort_unstable();
            let mut repeated_faces: Vec<usize> = faces.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
            repeated_faces.dedup();
            faces.dedup();
            let (complex, homology) = self.complex_and_homology(&faces);
            let jump = self.class_jump(&faces, &homology);
            classes.push(RankingClass {
                pairs: group,
                faces,
                complex,
                homology,
                jump,
                repeated_faces,
            });
        }
        let total_jump: u64 = classes.iter().map(|c| c.jump).sum();
        let rank = self.vol + total_jump;
        let simple_face = self.ctx.is_simple(&pairs);
        let simple = simple_face.map(|g| self.simple_rank(&pairs, g).expect("face was reported simple"));
        let two_face = self
            .two_face_candidate(&pairs)
            .map(|(f1, f2)| self.two_face_rank(&pairs, f1, f2).expect("shape was detected"));
        let pyramid = self.pyramid.as_ref().map(|p| p.rank(&self.ctx, beta));
        RankReport {
            beta: *beta,
            vol: self.vol,
            pairs,
            classes,
            total_jump,
            rank,
            simple_face,
            cross_checks: CrossChecks {
                simple,
                two_face,
                pyramid,
                jump_bound: self.jump_bound,
            },
        }
    }

    /// `vol + |B_G| (codim G - 1) vol_ZG(G)`.
    pub fn simple_rank(&self, pairs: &[RankingPair], g: usize) -> Result<u64, RankError> {
        if self.ctx.is_simple(pairs) != Some(g) {
            return Err(RankError::NotSimple);
        }
        let f = self.ctx.face(g);
        let b = pairs.iter().filter(|p| p.face == g).count() as u64;
        Ok(self.vol + b * (f.codim() as u64 - 1) * f.vol_zf)
    }

    /// Incomparable faces `(F1, F2)` when the pairs have the two-face shape:
    /// every pair lies on `F1`, `F2` or `G = F1 ∩ F2`, and either no pair
    /// lies on `G`, or each of the three faces carries exactly one translate
    /// and the `G` translate is the full intersection of the other two.
    pub fn two_face_candidate(&self, pairs: &[RankingPair]) -> Option<(usize, usize)> {
        let mut faces: Vec<usize> = pairs.iter().map(|p| p.face).collect();
        faces.dedup();
        let fs = self.ctx.faces();
        let incomparable = |a: usize, b: usize| !fs[a].contains_face(&fs[b]) && !fs[b].contains_face(&fs[a]);
        match faces.len() {
            2 => incomparable(faces[0], faces[1]).then_some((faces[0], faces[1])),
            3 => {
                for (x, y, z) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                    let (f1, f2, g) = (faces[x], faces[y], faces[z]);
                    if !incomparable(f1, f2) || self.ctx.meet(f1, f2) != g {
                        continue;
                    }
                    let single = |f: usize| {
                        let mut it = pairs.iter().filter(|p| p.face == f);
                        let first = it.next();
                        if it.next().is_some() {
                            None
                        } else {
                            first.copied()
                        }
                    };
                    let (Some(p1), Some(p2), Some(pg)) = (single(f1), single(f2), single(g)) else {
                        return None;
                    };
                    let common = fs[f1].lattice.intersection(&fs[f2].lattice);
                    let exact = common == fs[g].lattice
                        && fs[f1].lattice.contains(sub(pg.rep, p1.rep))
                        && fs[f2].lattice.contains(sub(pg.rep, p2.rep));
                    return exact.then_some((f1, f2));
                }
                None
            }
            _ => None,
        }
    }

    /// Rank from the two-face closed form.
    pub fn two_face_rank(&self, pairs: &[RankingPair], f1: usize, f2: usize) -> Result<i64, RankError> {
        let cand = self.two_face_candidate(pairs);
        if cand != Some((f1, f2)) && cand != Some((f2, f1)) {
            return Err(RankError::NotTwoFace);
        }
        let fs = self.ctx.faces();
        let g = self.ctx.meet(f1, f2);
        let count = |f: usize| pairs.iter().filter(|p| p.face == f).count() as i64;
        let codim_sum = 3 - self.ctx.sum_lattice(f1, f2).rank();
        let c = two_face_constant(fs[g].codim(), fs[f1].codim(), fs[f2].codim(), codim_sum);
        let mut jump = count(g) * c * fs[g].vol_zf as i64;
        for f in [f1, f2] {
            jump += count(f) * (fs[f].codim() as i64 - 1) * fs[f].vol_zf as i64;
        }
        Ok(self.vol as i64 + jump)
    }
}

/// `C(c_G, 2) - c_G + 1 - C(c_1, 2) - C(c_2, 2) + C(c_12, 2)` with `c_12`
/// the codimension of `CF1 + CF2`.
pub fn two_face_constant(codim_g: usize, codim_f1: usize, codim_f2: usize, codim_sum: usize) -> i64 {
    let binom2 = |n: usize| (n * n.saturating_sub(1) / 2) as i64;
    binom2(codim_g) - codim_g as i64 + 1 - binom2(codim_f1) - binom2(codim_f2) + binom2(codim_sum)
}

/// `sum over rays of vol_{Z^3 ∩ QR}(R) - 1`.
pub fn jump_upper_bound(ctx: &RankingContext) -> u64 {
    let s: u64 = ctx.faces().iter().filter(|f| f.dim == 1).map(|f| f.vol_sat).sum();
    s.saturating_sub(1)
}

/// Rank at one parameter; builds a fresh engine.
pub fn rank(cfg: &PointedConfig, beta: &Parameter) -> RankReport {
    RankEngine::new(cfg).rank(beta)
}
