use std::sync::Mutex;

use rustc_hash::FxHashMap;

use crate::geometry::vec::{dot, sub};
use crate::geometry::{Face, PointedConfig};
use crate::linalg::{IVec3, Lattice};

/// Decides `x ∈ N·generators + L` for a lattice `L` on which `support`
/// vanishes while `support` is positive on every generator.
///
/// Depth-first search on the support level with memoization of canonical
/// residues modulo `L`. `prune` lists functionals that are nonnegative on the
/// whole semigroup, vanish on `L`, and cut off hopeless residues early.
#[derive(Debug)]
pub struct QuotientMembership {
    generators: Vec<IVec3>,
    lattice: Lattice,
    support: IVec3,
    prune: Vec<IVec3>,
    everything: bool,
    cache: Mutex<FxHashMap<IVec3, bool>>,
}

impl QuotientMembership {
    pub fn new(generators: Vec<IVec3>, lattice: Lattice, support: IVec3, prune: Vec<IVec3>) -> Self {
        debug_assert!(generators.iter().all(|&g| dot(support, g) > 0));
        debug_assert!(lattice.basis().iter().all(|&b| dot(support, b) == 0));
        QuotientMembership {
            generators,
            lattice,
            support,
            prune,
            everything: false,
            cache: Mutex::new(FxHashMap::default()),
        }
    }

    /// `N A + Z F` for a face of the cone over `cfg`.
    pub fn for_face(cfg: &PointedConfig, face: &Face, faces: &[Face]) -> Self {
        let generators: Vec<IVec3> = (0..cfg.len())
            .filter(|k| face.columns.binary_search(k).is_err())
            .map(|k| cfg.columns()[k])
            .collect();
        let prune = face
            .facets_above
            .iter()
            .map(|&f| faces[f].normal.expect("facet has a normal"))
            .collect();
        let mut m = QuotientMembership::new(generators, face.lattice.clone(), face.support, prune);
        m.everything = face.dim == 3;
        m
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn contains(&self, x: IVec3) -> bool {
        if self.everything {
            return true;
        }
        self.search(self.lattice.reduce(x))
    }

    fn search(&self, x: IVec3) -> bool {
        if x == [0, 0, 0] {
            return true;
        }
        if dot(self.support, x) <= 0 || self.prune.iter().any(|&n| dot(n, x) < 0) {
            return false;
        }
        if let Some(&v) = self.cache.lock().unwrap().get(&x) {
            return v;
        }
        let v = self
            .generators
            .iter()
            .any(|&a| self.search(self.lattice.reduce(sub(x, a))));
        self.cache.lock().unwrap().insert(x, v);
        v
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

/// `b ∈ N A`.
pub fn semigroup_contains(cfg: &PointedConfig, b: IVec3) -> bool {
    QuotientMembership::new(cfg.columns().to_vec(), Lattice::zero(), cfg.grading(), Vec::new()).contains(b)
}

/// `b ∈ N A + Z F`.
pub fn quotient_contains(cfg: &PointedConfig, faces: &[Face], face: usize, b: IVec3) -> bool {
    QuotientMembership::for_face(cfg, &faces[face], faces).contains(b)
}
