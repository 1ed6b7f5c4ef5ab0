use gkzrank::rank::{bound_sweep, RankEngine};
use gkzrank::PointedConfig;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::input::rows_of;
use crate::report::ratio_string;
use crate::sampler::SamplerSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignRow {
    pub index: usize,
    pub source: String,
    pub matrix: Vec<Vec<i64>>,
    pub volume: u64,
    pub max_rank: u64,
    pub max_ratio: String,
    pub max_witness: Vec<String>,
    pub jump_bound: u64,
    pub evaluated: usize,
    pub jumps: usize,
    pub simple_checks: usize,
    pub two_face_checks: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub tool_version: String,
    pub sampler: SamplerSpec,
    pub window: i64,
    pub max_ratio: String,
    pub max_ratio_config: usize,
    pub ratio_below_two: bool,
    pub evaluated: usize,
    pub simple_checks: usize,
    pub two_face_checks: usize,
    pub violation_count: usize,
    pub configs: Vec<CampaignRow>,
}

impl CampaignReport {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("campaign report serializes")
    }

    /// Largest ratio as `(rank, vol)`.
    pub fn max_ratio_pair(&self) -> (u64, u64) {
        let r = &self.configs[self.max_ratio_config];
        (r.max_rank, r.volume)
    }
}

/// Sweeps every configuration (in parallel) and merges the rows in input
/// order, so the report does not depend on scheduling.
pub fn run_campaign(sampler: &SamplerSpec, configs: &[(String, PointedConfig)], window: i64) -> CampaignReport {
    let rows: Vec<CampaignRow> = configs
        .par_iter()
        .enumerate()
        .map(|(index, (source, cfg))| {
            let engine = RankEngine::new(cfg);
            let s = bound_sweep(&engine, window);
            let (p, q) = s.max_ratio();
            CampaignRow {
                index,
                source: source.clone(),
                matrix: rows_of(cfg.columns()),
                volume: s.vol,
                max_rank: s.max_rank,
                max_ratio: ratio_string(p, q),
                max_witness: s.max_witness.coordinate_strings().to_vec(),
                jump_bound: engine.jump_bound(),
                evaluated: s.evaluated,
                jumps: s.jumps.len(),
                simple_checks: s.simple_checks,
                two_face_checks: s.two_face_checks,
                violations: s.violations,
            }
        })
        .collect();

    let mut best = 0;
    for (i, r) in rows.iter().enumerate() {
        let b = &rows[best];
        if (r.max_rank as u128) * (b.volume as u128) > (b.max_rank as u128) * (r.volume as u128) {
            best = i;
        }
    }
    let (p, q) = if rows.is_empty() {
        (0, 1)
    } else {
        let g = num_gcd(rows[best].max_rank, rows[best].volume);
        (rows[best].max_rank / g, rows[best].volume / g)
    };
    CampaignReport {
        tool_version: crate::report::TOOL_VERSION.to_string(),
        sampler: sampler.clone(),
        window,
        max_ratio: ratio_string(p, q),
        max_ratio_config: best,
        ratio_below_two: rows.iter().all(|r| r.max_rank < 2 * r.volume),
        evaluated: rows.iter().map(|r| r.evaluated).sum(),
        simple_checks: rows.iter().map(|r| r.simple_checks).sum(),
        two_face_checks: rows.iter().map(|r| r.two_face_checks).sum(),
        violation_count: rows.iter().map(|r| r.violations.len()).sum(),
        configs: rows,
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        num_gcd(b, a % b)
    }
}
