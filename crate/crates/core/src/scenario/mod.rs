//! Configuration ingestion, scenario orchestration and export.

mod config;
mod export;
mod run;

pub use config::{
    load_config, BathBlock, CavityBlock, ConfigFile, EnergyUnit, GridBlock, GridPoints,
    ScenarioConfig, DEFAULT_COLLECTIVE_FRACTION, DEFAULT_CUTOFF_FRACTION, DEFAULT_ETA,
    DEFAULT_GAMMA, DEFAULT_KAPPA, DEFAULT_OMEGA_V, DEFAULT_TEMPERATURE,
};
pub use export::{
    configs_from_json, export, render, render_csv, render_json, runs_fingerprint, Format,
    SpeciesSeries,
};
pub use run::{
    build_simulation, run_comparison, run_scenario, run_sweep, ModeInfo, ScenarioRun, Simulation,
    StateInfo, SweepParameter, SweepSpec,
};
