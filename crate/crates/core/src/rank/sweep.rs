use rustc_hash::FxHashSet;

use super::{RankEngine, RankReport};
use crate::semigroup::{candidate_strata, Parameter, StratumOrigin};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub beta: Parameter,
    /// Face giving the stratum directions; `None` for window grid points
    /// outside every stratum.
    pub face: Option<usize>,
    pub origin: Option<StratumOrigin>,
    pub rank: u64,
    pub jump: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub window: i64,
    pub vol: u64,
    pub strata: usize,
    pub evaluated: usize,
    /// Evaluations with a positive jump, in evaluation order.
    pub jumps: Vec<SweepRow>,
    pub max_rank: u64,
    pub max_witness: Parameter,
    pub simple_checks: usize,
    pub two_face_checks: usize,
    pub pyramid_checks: usize,
    pub repeated_face_events: usize,
    pub violations: Vec<String>,
}

impl SweepReport {
    /// `max_rank / vol` as a reduced fraction.
    pub fn max_ratio(&self) -> (u64, u64) {
        let g = num_integer::gcd(self.max_rank, self.vol);
        (self.max_rank / g, self.vol / g)
    }
}

/// Evaluates the rank at every integer point of `[-w, w]^3` and at the
/// witness of every candidate stratum, tracking the largest ratio and every
/// cross-check disagreement.
pub fn bound_sweep(engine: &RankEngine, w: i64) -> SweepReport {
    let strata = candidate_strata(engine.context(), w);
    let mut seen: FxHashSet<Parameter> = FxHashSet::default();
    let mut report = SweepReport {
        window: w,
        vol: engine.volume(),
        strata: strata.len(),
        evaluated: 0,
        jumps: Vec::new(),
        max_rank: engine.volume(),
        max_witness: Parameter::integer([0, 0, 0]),
        simple_checks: 0,
        two_face_checks: 0,
        pyramid_checks: 0,
        repeated_face_events: 0,
        violations: Vec::new(),
    };

    let mut visit = |beta: Parameter, face: Option<usize>, origin: Option<StratumOrigin>, report: &mut SweepReport| {
        if !seen.insert(beta) {
            return;
        }
        let r: RankReport = engine.rank(&beta);
        report.evaluated += 1;
        let c = &r.cross_checks;
        report.simple_checks += usize::from(c.simple.is_some());
        report.two_face_checks += usize::from(c.two_face.is_some());
        report.pyramid_checks += usize::from(c.pyramid.is_some());
        report.repeated_face_events += r.classes.iter().filter(|k| !k.repeated_faces.is_empty()).count();
        report.violations.extend(r.violations());
        if r.rank > report.max_rank {
            report.max_rank = r.rank;
            report.max_witness = beta;
        }
        if r.total_jump > 0 {
            report.jumps.push(SweepRow {
                beta,
                face,
                origin,
                rank: r.rank,
                jump: r.total_jump,
            });
        }
    };

    for s in &strata {
        visit(s.witness, Some(s.face), Some(s.origin), &mut report);
    }
    for x in -w..=w {
        for y in -w..=w {
            for z in -w..=w {
                visit(Parameter::integer([x, y, z]), None, None, &mut report);
            }
        }
    }
    report
}
