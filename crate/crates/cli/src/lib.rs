//! Harness around the `gkzrank` library: report documents, the random
//! configuration sampler, bound campaigns and fixture corpora.

pub mod campaign;
pub mod corpus;
pub mod input;
pub mod report;
pub mod sampler;

use std::path::Path;

use gkzrank::rank::RankEngine;
use gkzrank::semigroup::{parse_rational, Parameter};

use crate::campaign::run_campaign;
use crate::report::{AnalysisReport, AnalyzeOptions, RankOutput};
use crate::sampler::SamplerSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// What a subcommand printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        CommandOutput {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn done(stdout: String, violations: &[String]) -> Self {
        let stderr: String = violations.iter().map(|v| format!("violation: {v}\n")).collect();
        CommandOutput {
            code: if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION },
            stdout,
            stderr,
        }
    }
}

pub fn cmd_analyze(path: &Path, opts: AnalyzeOptions) -> CommandOutput {
    let cfg = match input::read_config(path) {
        Ok(c) => c,
        Err(e) => return CommandOutput::input_error(e),
    };
    if opts.window < 1 {
        return CommandOutput::input_error("window must be at least 1");
    }
    match AnalysisReport::build(&cfg, opts) {
        Ok(r) => CommandOutput::done(r.to_toml(), &r.violations()),
        Err(e) => CommandOutput {
            code: EXIT_VIOLATION,
            stdout: String::new(),
            stderr: format!("violation: {e}\n"),
        },
    }
}

pub fn cmd_rank(path: &Path, coords: &[String]) -> CommandOutput {
    let cfg = match input::read_config(path) {
        Ok(c) => c,
        Err(e) => return CommandOutput::input_error(e),
    };
    if coords.len() != 3 {
        return CommandOutput::input_error(format!("expected 3 coordinates, got {}", coords.len()));
    }
    let mut c = Vec::new();
    for s in coords {
        match parse_rational(s) {
            Ok(r) => c.push(r),
            Err(e) => return CommandOutput::input_error(e),
        }
    }
    let Some(beta) = Parameter::from_rationals(&[c[0].clone(), c[1].clone(), c[2].clone()]) else {
        return CommandOutput::input_error("coordinates too large");
    };
    let report = RankEngine::new(&cfg).rank(&beta);
    let out = RankOutput::from_report(&report);
    CommandOutput::done(toml::to_string(&out).expect("rank output serializes"), &out.violations)
}

/// Shipped fixture configurations that `verify-bound --with-fixtures` prepends to the sample.
pub fn fixture_configs() -> Vec<(String, gkzrank::PointedConfig)> {
    corpus::builtin_corpus()
        .into_iter()
        .map(|f| {
            let cfg = input::config_from_rows(&f.matrix).expect("shipped fixture is valid");
            (format!("fixture:{}", f.name), cfg)
        })
        .collect()
}

pub fn cmd_verify_bound(spec: &SamplerSpec, window: i64, with_fixtures: bool) -> CommandOutput {
    if window < 1 {
        return CommandOutput::input_error("window must be at least 1");
    }
    let sampled = match spec.sample() {
        Ok(s) => s,
        Err(e) => return CommandOutput::input_error(e),
    };
    let mut configs = if with_fixtures { fixture_configs() } else { Vec::new() };
    configs.extend(sampled.into_iter().enumerate().map(|(i, c)| (format!("random:{i}"), c)));
    let report = run_campaign(spec, &configs, window);
    let mut violations: Vec<String> = report
        .configs
        .iter()
        .flat_map(|r| r.violations.iter().map(move |v| format!("{}: {v}", r.source)))
        .collect();
    if !report.ratio_below_two {
        violations.push(format!("ratio {} is not below 2", report.max_ratio));
    }
    let mut out = CommandOutput::done(report.to_toml(), &violations);
    out.stderr.push_str(&format!(
        "{} configurations, {} evaluations, max ratio {}\n",
        report.configs.len(),
        report.evaluated,
        report.max_ratio
    ));
    out
}

pub fn cmd_corpus(dir: Option<&Path>) -> CommandOutput {
    let fixtures = match dir {
        Some(d) => match corpus::load_corpus(d) {
            Ok(f) => f,
            Err(e) => return CommandOutput::input_error(e),
        },
        None => corpus::builtin_corpus(),
    };
    let outcomes: Vec<corpus::FixtureOutcome> = {
        use rayon::prelude::*;
        fixtures.par_iter().map(corpus::run_fixture).collect()
    };
    let mut stdout: String = outcomes.iter().map(|o| o.line() + "\n").collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    stdout.push_str(&format!("SUMMARY {} passed, {} failed\n", outcomes.len() - failed, failed));
    let violations: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.clone()).collect();
    CommandOutput::done(stdout, &violations)
}
