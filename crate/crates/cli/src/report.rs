use gkzrank::ehrhart::{classify_degree_le_one, haase_check, DegreeOneClass, EhrhartData};
use gkzrank::rank::{bound_sweep, RankEngine, RankReport, SweepReport};
use gkzrank::semigroup::{Parameter, StratumOrigin};
use gkzrank::{IVec3, PointedConfig};
use serde::{Deserialize, Serialize};

use crate::input::rows_of;
use crate::sampler::{parameter_rng, random_parameter};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

fn frac(p: u64, q: u64) -> String {
    if q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

/// Full analysis of one configuration. Every number is an exact integer or
/// a `p/q` string, so the document round-trips without loss.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool_version: String,
    #[serde(with = "crate::sampler::seed_string")]
    pub seed: u64,
    pub window: i64,
    pub matrix: Vec<Vec<i64>>,
    pub grading: IVec3,
    pub homogeneous: bool,
    pub volume: u64,
    pub lattice_points: u64,
    pub ehrhart: EhrhartSection,
    pub classification: ClassificationSection,
    pub haase: Vec<HaaseEntry>,
    pub faces: Vec<FaceEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pyramid_face: Option<usize>,
    pub jump_bound: u64,
    pub sweep: SweepSection,
    pub samples: Vec<SampleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartSection {
    /// Coefficients, constant term first.
    pub coefficients: Vec<String>,
    pub h_star: Vec<i64>,
    pub degree: usize,
    pub degree_from_interior: usize,
    pub counts: Vec<u64>,
    pub interior_counts: Vec<u64>,
    pub reciprocity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSection {
    pub tag: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub heights: Option<Vec<u64>>,
    pub witness: Vec<IVec3>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HaaseEntry {
    pub vertex: IVec3,
    pub edge_sum: u64,
    pub bound: u64,
    pub holds: bool,
    pub equality: bool,
    pub equality_explained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub id: usize,
    pub dim: usize,
    pub columns: Vec<usize>,
    pub index: u64,
    pub vol_zf: u64,
    pub vol_saturated: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSection {
    pub strata: usize,
    pub evaluated: usize,
    pub max_rank: u64,
    pub max_ratio: String,
    pub max_witness: Vec<String>,
    pub simple_checks: usize,
    pub two_face_checks: usize,
    pub pyramid_checks: usize,
    pub repeated_face_events: usize,
    pub violations: Vec<String>,
    pub jumps: Vec<JumpEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpEntry {
    pub beta: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub face: Option<usize>,
    pub origin: String,
    pub rank: u64,
    pub jump: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleEntry {
    pub beta: Vec<String>,
    pub rank: u64,
}

impl SweepSection {
    pub fn from_sweep(s: &SweepReport) -> Self {
        let (p, q) = s.max_ratio();
        SweepSection {
            strata: s.strata,
            evaluated: s.evaluated,
            max_rank: s.max_rank,
            max_ratio: frac(p, q),
            max_witness: s.max_witness.coordinate_strings().to_vec(),
            simple_checks: s.simple_checks,
            two_face_checks: s.two_face_checks,
            pyramid_checks: s.pyramid_checks,
            repeated_face_events: s.repeated_face_events,
            violations: s.violations.clone(),
            jumps: s
                .jumps
                .iter()
                .map(|r| JumpEntry {
                    beta: r.beta.coordinate_strings().to_vec(),
                    face: r.face,
                    origin: match r.origin {
                        Some(StratumOrigin::Hole) => "hole",
                        Some(StratumOrigin::Crossing) => "crossing",
                        None => "grid",
                    }
                    .to_string(),
                    rank: r.rank,
                    jump: r.jump,
                })
                .collect(),
        }
    }
}

impl ClassificationSection {
    pub fn from_class(c: &DegreeOneClass) -> Self {
        let (heights, witness) = match c {
            DegreeOneClass::BasicSimplex { witness } | DegreeOneClass::ExceptionalSimplex { witness } => {
                (None, witness.to_vec())
            }
            DegreeOneClass::LawrencePrism { heights, witness } => (Some(heights.to_vec()), witness.to_vec()),
            DegreeOneClass::NotDegreeLeOne => (None, Vec::new()),
        };
        ClassificationSection {
            tag: c.tag().to_string(),
            heights,
            witness,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub window: i64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            window: 6,
            seed: 0,
            samples: 20,
        }
    }
}

impl AnalysisReport {
    pub fn build(cfg: &PointedConfig, opts: AnalyzeOptions) -> Result<Self, String> {
        let hull = cfg.hull_with_origin();
        let data = EhrhartData::compute(&hull).map_err(|e| e.to_string())?;
        let class = classify_degree_le_one(&hull).map_err(|e| e.to_string())?;
        let haase = haase_check(&hull).map_err(|e| e.to_string())?;
        let engine = RankEngine::new(cfg);
        let sweep = bound_sweep(&engine, opts.window);
        let mut rng = parameter_rng(opts.seed);
        let samples = (0..opts.samples)
            .map(|_| {
                let b = random_parameter(&mut rng);
                SampleEntry {
                    beta: b.coordinate_strings().to_vec(),
                    rank: engine.rank(&b).rank,
                }
            })
            .collect();
        let reciprocity_holds = (1..=4).all(|k| {
            let lhs = gkzrank::Rational::from_integer(data.interior_counts[k as usize - 1].into());
            lhs == -data.eval(-k)
        });
        Ok(AnalysisReport {
            tool_version: TOOL_VERSION.to_string(),
            seed: opts.seed,
            window: opts.window,
            matrix: rows_of(cfg.columns()),
            grading: cfg.grading(),
            homogeneous: cfg.is_homogeneous(),
            volume: data.volume,
            lattice_points: data.counts[1],
            ehrhart: EhrhartSection {
                coefficients: data.g_coeffs.iter().map(|c| c.to_string()).collect(),
                h_star: data.h_star.to_vec(),
                degree: data.degree,
                degree_from_interior: data.degree_from_interior(),
                counts: data.counts.to_vec(),
                interior_counts: data.interior_counts.to_vec(),
                reciprocity_holds,
            },
            classification: ClassificationSection::from_class(&class),
            haase: haase
                .iter()
                .map(|h| HaaseEntry {
                    vertex: h.vertex,
                    edge_sum: h.edge_sum,
                    bound: h.bound,
                    holds: h.holds,
                    equality: h.equality,
                    equality_explained: h.equality_explained,
                })
                .collect(),
            faces: engine
                .context()
                .faces()
                .iter()
                .map(|f| FaceEntry {
                    id: f.id,
                    dim: f.dim,
                    columns: f.columns.clone(),
                    index: f.index,
                    vol_zf: f.vol_zf,
                    vol_saturated: f.vol_sat,
                })
                .collect(),
            pyramid_face: engine.pyramid().map(|p| p.face),
            jump_bound: engine.jump_bound(),
            sweep: SweepSection::from_sweep(&sweep),
            samples,
        })
    }

    /// Property violations recorded anywhere in the report.
    pub fn violations(&self) -> Vec<String> {
        let mut v = self.sweep.violations.clone();
        if !self.ehrhart.reciprocity_holds {
            v.push("Ehrhart reciprocity fails".into());
        }
        if self.ehrhart.degree != self.ehrhart.degree_from_interior {
            v.push("degree disagrees with the first interior dilate".into());
        }
        for h in &self.haase {
            if !h.holds {
                v.push(format!("edge bound fails at {:?}", h.vertex));
            }
        }
        v
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("report serializes")
    }

    pub fn from_toml(s: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(s)
    }
}

/// Output of the `rank` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOutput {
    pub beta: Vec<String>,
    pub volume: u64,
    pub rank: u64,
    pub jump: u64,
    pub ratio: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simple_face: Option<usize>,
    pub classes: Vec<ClassEntry>,
    pub checks: CheckEntry,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub faces: Vec<usize>,
    pub pairs: Vec<PairEntry>,
    /// Reduced Betti numbers in degrees -1, 0, 1, 2.
    pub betti: Vec<u64>,
    pub jump: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub face: usize,
    pub rep: IVec3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simple: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub two_face: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pyramid: Option<u64>,
    pub jump_bound: u64,
}

impl RankOutput {
    pub fn from_report(r: &RankReport) -> Self {
        let (p, q) = r.ratio();
        RankOutput {
            beta: r.beta.coordinate_strings().to_vec(),
            volume: r.vol,
            rank: r.rank,
            jump: r.total_jump,
            ratio: frac(p, q),
            simple_face: r.simple_face,
            classes: r
                .classes
                .iter()
                .map(|c| ClassEntry {
                    faces: c.faces.clone(),
                    pairs: c.pairs.iter().map(|p| PairEntry { face: p.face, rep: p.rep }).collect(),
                    betti: c.homology.betti.to_vec(),
                    jump: c.jump,
                })
                .collect(),
            checks: CheckEntry {
                simple: r.cross_checks.simple,
                two_face: r.cross_checks.two_face,
                pyramid: r.cross_checks.pyramid,
                jump_bound: r.cross_checks.jump_bound,
            },
            violations: r.violations(),
        }
    }
}

pub fn parameter_strings(p: &Parameter) -> Vec<String> {
    p.coordinate_strings().to_vec()
}

pub(crate) fn ratio_string(p: u64, q: u64) -> String {
    frac(p, q)
}
