//! JSON scenario configuration.
//!
//! ```json
//! {
//!   "energy_unit": "hbar_omega_v",
//!   "omega_v": 2000.0,
//!   "species": [{"label": "A", "energy": 0.0, "displacement": 0.0}, ...],
//!   "couplings": [{"pair": ["A", "B"], "j": 0.01, "lambda_s": 0.08}],
//!   "reactant": "A",
//!   "regime": "vsc",
//!   "cavity": {"omega_c": 1.0, "g": 0.0212, "kappa": 1.0},
//!   "bath": {"gamma": 0.01, "eta": 0.001, "omega_cut": 0.1, "temperature": 298.0},
//!   "grid": {"spacing": "log", "t_start": 0.1, "t_end": 50000.0, "points": 400},
//!   "method": "pade"
//! }
//! ```
//!
//! `omega_v` is always in cm⁻¹. Species and coupling energies, `omega_c`,
//! `g` and `omega_cut` are in `energy_unit`. Rates are in ps⁻¹ and times in
//! ps. Every block except `species`, `couplings` and `reactant` may be
//! omitted, field by field.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::modes::CavitySpec;
use crate::network::{CouplingSpec, ReactionNetwork, SpeciesSpec};
use crate::propagate::{Method, Spacing, TimeGrid};
use crate::rates::{BathSpec, RegimeKind};

pub const DEFAULT_OMEGA_V: f64 = 2000.0;
pub const DEFAULT_TEMPERATURE: f64 = 298.0;
pub const DEFAULT_GAMMA: f64 = 0.01;
pub const DEFAULT_KAPPA: f64 = 1.0;
pub const DEFAULT_ETA: f64 = 0.001;
/// ω_cut as a fraction of ω_v.
pub const DEFAULT_CUTOFF_FRACTION: f64 = 0.1;
/// g√2 as a fraction of ω_v, i.e. g = 0.03 ω_v/√2.
pub const DEFAULT_COLLECTIVE_FRACTION: f64 = 0.03;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum EnergyUnit {
    #[default]
    #[serde(rename = "cm-1")]
    Wavenumber,
    #[serde(rename = "hbar_omega_v")]
    VibrationalQuanta,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CavityBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_cut: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temperature: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spacing: Option<Spacing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_end: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<GridPoints>,
}

/// Either a point count for log/linear grids or explicit times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridPoints {
    Count(usize),
    Times(Vec<f64>),
}

/// The config file as written, before defaults and unit conversion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub energy_unit: EnergyUnit,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_v: Option<f64>,
    pub species: Vec<SpeciesSpec>,
    #[serde(default)]
    pub couplings: Vec<CouplingSpec>,
    pub reactant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<RegimeKind>,
    #[serde(default)]
    pub cavity: CavityBlock,
    #[serde(default)]
    pub bath: BathBlock,
    #[serde(default)]
    pub grid: GridBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
}

/// A validated scenario with every energy in cm⁻¹.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub omega_v: f64,
    pub network: ReactionNetwork,
    pub reactant: String,
    /// Strong-coupling cavity; the regime decides how much of `g` is used.
    pub cavity: CavitySpec,
    pub bath: BathSpec,
    pub regime: RegimeKind,
    pub grid: TimeGrid,
    pub method: Method,
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::validation(format!("{name} must be > 0, got {v}")))
    }
}

impl ConfigFile {
    pub fn into_config(self) -> Result<ScenarioConfig> {
        let omega_v = positive("omega_v", self.omega_v.unwrap_or(DEFAULT_OMEGA_V))?;
        let scale = match self.energy_unit {
            EnergyUnit::Wavenumber => 1.0,
            EnergyUnit::VibrationalQuanta => omega_v,
        };
        let species = self
            .species
            .into_iter()
            .map(|s| SpeciesSpec {
                energy: s.energy * scale,
                ..s
            })
            .collect();
        let couplings = self
            .couplings
            .into_iter()
            .map(|c| CouplingSpec {
                j: c.j * scale,
                lambda_s: c.lambda_s * scale,
                ..c
            })
            .collect();
        let network = ReactionNetwork::new(species, couplings)?;
        if network.species_index(&self.reactant).is_none() {
            return Err(Error::validation(format!(
                "reactant '{}' is not a declared species",
                self.reactant
            )));
        }
        let cavity = CavitySpec::new(
            self.cavity.omega_c.map_or(omega_v, |w| w * scale),
            self.cavity
                .g
                .map_or(DEFAULT_COLLECTIVE_FRACTION * omega_v / 2f64.sqrt(), |g| {
                    g * scale
                }),
            self.cavity.kappa.unwrap_or(DEFAULT_KAPPA),
        )?;
        let bath = BathSpec {
            gamma: self.bath.gamma.unwrap_or(DEFAULT_GAMMA),
            eta: self.bath.eta.unwrap_or(DEFAULT_ETA),
            omega_cut: self
                .bath
                .omega_cut
                .map_or(DEFAULT_CUTOFF_FRACTION * omega_v, |w| w * scale),
            temperature: self.bath.temperature.unwrap_or(DEFAULT_TEMPERATURE),
        };
        bath.validate()?;
        let grid = self.grid.build()?;
        Ok(ScenarioConfig {
            omega_v,
            network,
            reactant: self.reactant,
            cavity,
            bath,
            regime: self.regime.unwrap_or(RegimeKind::Vsc),
            grid,
            method: self.method.unwrap_or_default(),
        })
    }
}

impl GridBlock {
    fn build(&self) -> Result<TimeGrid> {
        let spacing = self.spacing.unwrap_or(Spacing::Log);
        match (&self.points, spacing) {
            (Some(GridPoints::Times(t)), Spacing::Explicit) => {
                if self.t_start.is_some() || self.t_end.is_some() {
                    return Err(Error::validation(
                        "explicit grids take their bounds from the listed times",
                    ));
                }
                TimeGrid::from_points(t.clone())
            }
            (Some(GridPoints::Times(_)), _) => Err(Error::validation(
                "a list of grid times requires spacing \"explicit\"",
            )),
            (_, Spacing::Explicit) => Err(Error::validation(
                "spacing \"explicit\" requires a list of grid times",
            )),
            (count, spacing) => {
                let n = match count {
                    Some(GridPoints::Count(n)) => *n,
                    _ => TimeGrid::DEFAULT_POINTS,
                };
                let t0 = self.t_start.unwrap_or(match spacing {
                    Spacing::Linear => 0.0,
                    _ => TimeGrid::DEFAULT_START,
                });
                let t1 = self.t_end.unwrap_or(TimeGrid::DEFAULT_END);
                match spacing {
                    Spacing::Linear => TimeGrid::linear(t0, t1, n),
                    _ => TimeGrid::log(t0, t1, n),
                }
            }
        }
    }
}

impl ScenarioConfig {
    /// Fully explicit file form in cm⁻¹; loading it reproduces `self`.
    pub fn to_file(&self) -> ConfigFile {
        let points = self.grid.points();
        let grid = match self.grid.spacing() {
            Spacing::Explicit => GridBlock {
                spacing: Some(Spacing::Explicit),
                t_start: None,
                t_end: None,
                points: Some(GridPoints::Times(points.to_vec())),
            },
            s => GridBlock {
                spacing: Some(s),
                t_start: Some(points[0]),
                t_end: Some(self.grid.t_end()),
                points: Some(GridPoints::Count(points.len())),
            },
        };
        ConfigFile {
            energy_unit: EnergyUnit::Wavenumber,
            omega_v: Some(self.omega_v),
            species: self.network.species().to_vec(),
            couplings: self.network.couplings().to_vec(),
            reactant: self.reactant.clone(),
            regime: Some(self.regime),
            cavity: CavityBlock {
                omega_c: Some(self.cavity.omega_c),
                g: Some(self.cavity.g),
                kappa: Some(self.cavity.kappa),
            },
            bath: BathBlock {
                gamma: Some(self.bath.gamma),
                eta: Some(self.bath.eta),
                omega_cut: Some(self.bath.omega_cut),
                temperature: Some(self.bath.temperature),
            },
            grid,
            method: Some(self.method),
        }
    }

    /// Hex SHA-256 of the canonical effective config.
    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_vec(&self.to_file()).expect("config serializes");
        hex::encode(Sha256::digest(&canonical))
    }

    pub fn from_json_str(text: &str, origin: &Path) -> Result<Self> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            path: origin.to_path_buf(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        file.into_config()
    }
}

pub fn load_config(path: impl AsRef<Path>) -> Result<ScenarioConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    ScenarioConfig::from_json_str(&text, path)
}
