use std::path::Path;

use gkzrank::ehrhart::{classify_degree_le_one, EhrhartData};
use gkzrank::rank::{bound_sweep, RankEngine};
use gkzrank::semigroup::Parameter;
use serde::{Deserialize, Serialize};

use crate::input::{config_from_rows, InputError};
use crate::sampler::{parameter_rng, random_parameter};

/// A configuration together with the values it must reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default = "default_window")]
    pub window: i64,
    #[serde(default)]
    pub expect: Expectation,
}

fn default_window() -> i64 {
    6
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub volume: Option<u64>,
    pub lattice_points: Option<u64>,
    pub degree: Option<usize>,
    pub classification: Option<String>,
    /// Largest rank over the window sweep.
    pub max_rank: Option<u64>,
    /// No jump anywhere in the window sweep.
    pub no_jumps: Option<bool>,
    pub pyramid_face_dim: Option<usize>,
    #[serde(default)]
    pub rank: Vec<RankExpectation>,
    pub random_rank: Option<RandomRankExpectation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankExpectation {
    pub beta: Vec<String>,
    pub rank: u64,
}

/// The rank at `count` seeded random rational parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomRankExpectation {
    pub seed: u64,
    pub count: usize,
    pub rank: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl FixtureOutcome {
    pub fn line(&self) -> String {
        if self.passed {
            format!("PASS {}", self.name)
        } else {
            format!("FAIL {}: {}", self.name, self.failures.join("; "))
        }
    }
}

pub fn parse_fixture(text: &str) -> Result<Fixture, InputError> {
    toml::from_str(text).map_err(|e| InputError::Other(format!("fixture: {e}")))
}

/// Fixtures shipped with the crate.
pub fn builtin_corpus() -> Vec<Fixture> {
    const FILES: [&str; 11] = [
        include_str!("../corpus/exceptional-ii-101-111.toml"),
        include_str!("../corpus/exceptional-ii-110-101.toml"),
        include_str!("../corpus/exceptional-ii-110-111.toml"),
        include_str!("../corpus/exceptional-ii-all.toml"),
        include_str!("../corpus/identity.toml"),
        include_str!("../corpus/lawrence-111.toml"),
        include_str!("../corpus/lawrence-vol2.toml"),
        include_str!("../corpus/lawrence-vol3.toml"),
        include_str!("../corpus/pyramid-over-planar-face.toml"),
        include_str!("../corpus/tetrahedron-vol9.toml"),
        include_str!("../corpus/unimodular-square.toml"),
    ];
    FILES
        .iter()
        .map(|t| parse_fixture(t).expect("shipped fixture parses"))
        .collect()
}

/// Every `*.toml` fixture in `dir`, sorted by file name. An empty corpus is
/// an error.
pub fn load_corpus(dir: &Path) -> Result<Vec<Fixture>, InputError> {
    let io = |source| InputError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(InputError::Other(format!("no fixtures in {}", dir.display())));
    }
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|source| InputError::Io {
                path: p.display().to_string(),
                source,
            })?;
            parse_fixture(&text).map_err(|e| InputError::Other(format!("{}: {e}", p.display())))
        })
        .collect()
}

pub fn run_fixture(f: &Fixture) -> FixtureOutcome {
    let failures = check(f).unwrap_or_else(|e| vec![e]);
    FixtureOutcome {
        name: f.name.clone(),
        passed: failures.is_empty(),
        failures,
    }
}

fn want(failures: &mut Vec<String>, what: &str, expected: Option<String>, got: String) {
    if let Some(x) = expected {
        if x != got {
            failures.push(format!("{what}: expected {x}, got {got}"));
        }
    }
}

fn check(f: &Fixture) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let cfg = config_from_rows(&f.matrix).map_err(|e| e.to_string())?;
    let e = &f.expect;
    let hull = cfg.hull_with_origin();
    let data = EhrhartData::compute(&hull).map_err(|e| e.to_string())?;
    want(&mut out, "volume", e.volume.map(|v| v.to_string()), data.volume.to_string());
    want(&mut out, "lattice points", e.lattice_points.map(|v| v.to_string()), data.counts[1].to_string());
    want(&mut out, "degree", e.degree.map(|v| v.to_string()), data.degree.to_string());
    if e.classification.is_some() {
        let c = classify_degree_le_one(&hull).map_err(|e| e.to_string())?;
        want(&mut out, "classification", e.classification.clone(), c.tag().to_string());
    }
    let engine = RankEngine::new(&cfg);
    if e.pyramid_face_dim.is_some() {
        let dim = engine.pyramid().map(|p| engine.context().face(p.face).dim);
        want(&mut out, 
            "pyramid face dimension",
            e.pyramid_face_dim.map(|d| d.to_string()),
            dim.map_or("none".into(), |d| d.to_string()),
        );
    }
    for r in &e.rank {
        let beta: Parameter = r.beta.join(" ").parse().map_err(|e: gkzrank::semigroup::ParseParameterError| e.to_string())?;
        let got = engine.rank(&beta);
        want(&mut out, &format!("rank at {beta}"), Some(r.rank.to_string()), got.rank.to_string());
        for v in got.violations() {
            out.push(v);
        }
    }
    if let Some(rr) = &e.random_rank {
        let mut rng = parameter_rng(rr.seed);
        for _ in 0..rr.count {
            let beta = random_parameter(&mut rng);
            let got = engine.rank(&beta).rank;
            if got != rr.rank {
                out.push(format!("rank at {beta}: expected {}, got {got}", rr.rank));
                break;
            }
        }
    }
    if e.max_rank.is_some() || e.no_jumps.is_some() {
        let s = bound_sweep(&engine, f.window);
        want(&mut out, "max rank", e.max_rank.map(|v| v.to_string()), s.max_rank.to_string());
        if e.no_jumps == Some(true) && !s.jumps.is_empty() {
            let j = &s.jumps[0];
            out.push(format!("{} jumping parameters, first {} with jump {}", s.jumps.len(), j.beta, j.jump));
        }
        for v in s.violations.iter().take(5) {
            out.push(v.clone());
        }
    }
    Ok(out)
}
