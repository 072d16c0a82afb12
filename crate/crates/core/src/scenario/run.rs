//! Scenario orchestration: one regime, several regimes side by side, or a
//! one-parameter family.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::config::ScenarioConfig;
use crate::error::{Error, Result};
use crate::modes::{CavitySpec, ModeBasis};
use crate::propagate::{propagate_with, Trajectory};
use crate::rates::{assemble_rate_matrix, RateMatrix, RegimeKind, RegimeSpec};
use crate::states::{enumerate_states, initial_distribution, StateSpace};

/// Everything needed to propagate one scenario.
#[derive(Debug, Clone)]
pub struct Simulation {
    pub regime: RegimeSpec,
    /// Cavity with the regime's effective coupling.
    pub cavity: CavitySpec,
    pub basis: ModeBasis,
    pub space: StateSpace,
    pub rates: RateMatrix,
    pub initial: Vec<f64>,
}

pub fn build_simulation(config: &ScenarioConfig) -> Result<Simulation> {
    let regime = RegimeSpec::new(config.regime, config.cavity.g);
    let cavity = CavitySpec {
        g: regime.g_effective,
        ..config.cavity
    };
    let basis = ModeBasis::for_kind(config.regime.basis_kind(), &cavity, config.omega_v)?;
    let space = enumerate_states(&config.network, &basis, &cavity)?;
    let rates = assemble_rate_matrix(
        &space,
        &config.network,
        &basis,
        &cavity,
        &config.bath,
        &regime,
    )?;
    let initial = initial_distribution(&space, &config.reactant, config.bath.temperature)?;
    Ok(Simulation {
        regime,
        cavity,
        basis,
        space,
        rates,
        initial,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StateInfo {
    pub label: String,
    /// cm⁻¹.
    pub energy: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModeInfo {
    pub label: String,
    /// cm⁻¹.
    pub frequency: f64,
}

/// One propagated scenario and the quantities that produced it.
#[derive(Debug, Clone)]
pub struct ScenarioRun {
    pub name: String,
    pub config: ScenarioConfig,
    pub regime: RegimeSpec,
    pub mixing_angle: f64,
    pub modes: Vec<ModeInfo>,
    pub states: Vec<StateInfo>,
    pub trajectory: Trajectory,
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioRun> {
    run_named(config, config.regime.name().to_string())
}

fn run_named(config: &ScenarioConfig, name: String) -> Result<ScenarioRun> {
    let sim = build_simulation(config)?;
    let populations = propagate_with(config.method, &sim.rates, &sim.initial, &config.grid)?;
    let trajectory = Trajectory::from_states(&sim.space, config.grid.clone(), populations)?;
    let modes = sim
        .basis
        .labels
        .iter()
        .zip(sim.basis.frequencies.iter())
        .map(|(l, &f)| ModeInfo {
            label: l.symbol().to_string(),
            frequency: f,
        })
        .collect();
    let states = sim
        .space
        .states()
        .iter()
        .map(|s| StateInfo {
            label: sim.space.label(s.index),
            energy: s.energy,
        })
        .collect();
    Ok(ScenarioRun {
        name,
        config: config.clone(),
        regime: sim.regime,
        mixing_angle: sim.basis.mixing_angle,
        modes,
        states,
        trajectory,
    })
}

/// The same scenario in each regime, on the config's grid, in list order.
pub fn run_comparison(config: &ScenarioConfig, regimes: &[RegimeKind]) -> Result<Vec<ScenarioRun>> {
    if regimes.is_empty() {
        return Err(Error::validation("regime list is empty"));
    }
    for (k, r) in regimes.iter().enumerate() {
        if regimes[..k].contains(r) {
            return Err(Error::validation(format!(
                "regime '{}' listed twice",
                r.name()
            )));
        }
    }
    regimes
        .par_iter()
        .map(|&r| {
            let c = ScenarioConfig {
                regime: r,
                ..config.clone()
            };
            run_scenario(&c)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParameter {
    /// Cavity decay rate, ps⁻¹.
    Kappa,
    /// Anharmonic bath coupling, dimensionless.
    Eta,
    /// Vibrational decay rate, ps⁻¹.
    Gamma,
    /// Single-molecule light-matter coupling, cm⁻¹.
    G,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::Kappa => "kappa",
            SweepParameter::Eta => "eta",
            SweepParameter::Gamma => "gamma",
            SweepParameter::G => "g",
        }
    }

    /// Copy of `base` with this parameter set to `value`, validated.
    pub fn apply(self, base: &ScenarioConfig, value: f64) -> Result<ScenarioConfig> {
        let mut c = base.clone();
        match self {
            SweepParameter::Kappa => c.cavity.kappa = value,
            SweepParameter::Eta => c.bath.eta = value,
            SweepParameter::Gamma => c.bath.gamma = value,
            SweepParameter::G => c.cavity.g = value,
        }
        c.cavity.validate()?;
        c.bath.validate()?;
        Ok(c)
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "kappa" => Ok(SweepParameter::Kappa),
            "eta" => Ok(SweepParameter::Eta),
            "gamma" => Ok(SweepParameter::Gamma),
            "g" => Ok(SweepParameter::G),
            other => Err(Error::validation(format!(
                "unknown sweep parameter '{other}' (expected kappa, eta, gamma or g)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
    pub base: ScenarioConfig,
}

/// One run per value, returned in the order of `values`. Runs are
/// evaluated concurrently but each is deterministic.
pub fn run_sweep(sweep: &SweepSpec) -> Result<Vec<ScenarioRun>> {
    if sweep.values.is_empty() {
        return Err(Error::validation("sweep value list is empty"));
    }
    for (k, v) in sweep.values.iter().enumerate() {
        if sweep.values[..k].contains(v) {
            return Err(Error::validation(format!("sweep value {v} listed twice")));
        }
    }
    let configs = sweep
        .values
        .iter()
        .map(|&v| sweep.parameter.apply(&sweep.base, v))
        .collect::<Result<Vec<_>>>()?;
    configs
        .par_iter()
        .zip(sweep.values.par_iter())
        .map(|(c, v)| run_named(c, format!("{}={v}", sweep.parameter.name())))
        .collect()
}
