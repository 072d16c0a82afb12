//! Deterministic CSV and JSON output.
//!
//! Numbers are written with a fixed format, so identical runs give
//! identical bytes. Negative populations above −1e-12 are roundoff and are
//! written as zero; the trajectories themselves are left untouched.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::config::{ConfigFile, ScenarioConfig};
use super::run::{ModeInfo, ScenarioRun, StateInfo};
use crate::error::{Error, Result};
use crate::modes::N_MOLECULES;
use crate::rates::RegimeSpec;
use crate::units::{UnitSystem, UNITS};

const CLAMP_BELOW: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::validation(format!(
                "unknown format '{other}' (expected csv or json)"
            ))),
        }
    }
}

fn clamp(v: f64) -> f64 {
    if v < 0.0 && v > -CLAMP_BELOW {
        0.0
    } else {
        v + 0.0
    }
}

/// Hex SHA-256 over the effective configs of all runs, in order.
pub fn runs_fingerprint(runs: &[ScenarioRun]) -> String {
    let files: Vec<ConfigFile> = runs.iter().map(|r| r.config.to_file()).collect();
    let canonical = serde_json::to_vec(&files).expect("configs serialize");
    hex::encode(Sha256::digest(&canonical))
}

fn check_runs(runs: &[ScenarioRun]) -> Result<()> {
    let first = runs
        .first()
        .ok_or_else(|| Error::validation("nothing to export"))?;
    if runs
        .iter()
        .any(|r| r.trajectory.times() != first.trajectory.times())
    {
        return Err(Error::validation("runs do not share a time grid"));
    }
    Ok(())
}

/// CSV with a `# config_fingerprint=` comment line, a header and one row
/// per time. Columns after `time_ps` are per-state populations, then the
/// molecule count `N[φ]` and fraction `frac[φ]` of each species. With more
/// than one run every column name is prefixed by `<run name>:`.
pub fn render_csv(runs: &[ScenarioRun]) -> Result<String> {
    check_runs(runs)?;
    let prefix = |r: &ScenarioRun| {
        if runs.len() > 1 {
            format!("{}:", r.name)
        } else {
            String::new()
        }
    };
    let mut out = String::new();
    writeln!(out, "# config_fingerprint={}", runs_fingerprint(runs)).unwrap();
    out.push_str("time_ps");
    for r in runs {
        let p = prefix(r);
        for s in &r.states {
            write!(out, ",{p}p[{}]", s.label).unwrap();
        }
        for l in &r.trajectory.species_labels {
            write!(out, ",{p}N[{l}],{p}frac[{l}]").unwrap();
        }
    }
    out.push('\n');
    let times = runs[0].trajectory.times();
    for (k, t) in times.iter().enumerate() {
        write!(out, "{t:.9e}").unwrap();
        for r in runs {
            for v in &r.trajectory.state_populations[k] {
                write!(out, ",{:.12e}", clamp(*v)).unwrap();
            }
            for n in &r.trajectory.species_populations[k] {
                let n = clamp(*n);
                write!(out, ",{:.12e},{:.12e}", n, n / N_MOLECULES as f64).unwrap();
            }
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpeciesSeries {
    pub label: String,
    pub raw: Vec<f64>,
    pub normalized: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
struct RunRecord<'a> {
    name: &'a str,
    fingerprint: String,
    config: ConfigFile,
    regime: &'a RegimeSpec,
    mixing_angle: f64,
    modes: &'a [ModeInfo],
    states: &'a [StateInfo],
    time_ps: &'a [f64],
    state_populations: Vec<Vec<f64>>,
    species: Vec<SpeciesSeries>,
}

#[derive(Debug, Clone, Serialize)]
struct Document<'a> {
    generator: &'static str,
    version: &'static str,
    fingerprint: String,
    units: UnitSystem,
    runs: Vec<RunRecord<'a>>,
}

pub fn render_json(runs: &[ScenarioRun]) -> Result<String> {
    check_runs(runs)?;
    let records = runs
        .iter()
        .map(|r| {
            let tr = &r.trajectory;
            let species = tr
                .species_labels
                .iter()
                .enumerate()
                .map(|(s, l)| {
                    let raw: Vec<f64> = tr
                        .species_populations
                        .iter()
                        .map(|row| clamp(row[s]))
                        .collect();
                    SpeciesSeries {
                        label: l.clone(),
                        normalized: raw.iter().map(|n| n / N_MOLECULES as f64).collect(),
                        raw,
                    }
                })
                .collect();
            RunRecord {
                name: &r.name,
                fingerprint: r.config.fingerprint(),
                config: r.config.to_file(),
                regime: &r.regime,
                mixing_angle: r.mixing_angle,
                modes: &r.modes,
                states: &r.states,
                time_ps: tr.times(),
                state_populations: tr
                    .state_populations
                    .iter()
                    .map(|row| row.iter().map(|v| clamp(*v)).collect())
                    .collect(),
                species,
            }
        })
        .collect();
    let doc = Document {
        generator: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        fingerprint: runs_fingerprint(runs),
        units: UNITS,
        runs: records,
    };
    let mut text = serde_json::to_string_pretty(&doc)
        .map_err(|e| Error::numerical(format!("cannot serialize output: {e}")))?;
    text.push('\n');
    Ok(text)
}

pub fn render(runs: &[ScenarioRun], format: Format) -> Result<String> {
    match format {
        Format::Csv => render_csv(runs),
        Format::Json => render_json(runs),
    }
}

pub fn export(runs: &[ScenarioRun], format: Format, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = render(runs, format)?;
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Effective configs recorded in a JSON export, in run order.
pub fn configs_from_json(text: &str) -> Result<Vec<ScenarioConfig>> {
    #[derive(Deserialize)]
    struct Run {
        config: ConfigFile,
    }
    #[derive(Deserialize)]
    struct Doc {
        runs: Vec<Run>,
    }
    let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: "<export>".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.runs
        .into_iter()
        .map(|r| r.config.into_config())
        .collect()
}
