//! Transition rates of the master equation and assembly of its generator.

mod dissipation;
mod franck_condon;
mod matrix;
mod reactive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modes::BasisKind;

pub use dissipation::{
    bose_einstein, exchange_rate, gain_rate, loss_rate_bare, loss_rate_vsc, ohmic_spectral_density,
    purcell_exchange_rate, vibrational_overlap,
};
pub use franck_condon::{
    displacement_matrix_element, franck_condon_bare, franck_condon_vsc, laguerre,
};
pub use matrix::{assemble_rate_matrix, RateLaw, RateMatrix, Transition};
pub use reactive::{mlj_rate, reacting_molecule, reactive_rate};

/// Dissipative environment of the cavity-vibrational modes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathSpec {
    /// Bare vibrational decay rate γ, ps⁻¹.
    pub gamma: f64,
    /// Dimensionless anharmonic system-bath coupling η.
    pub eta: f64,
    /// Cutoff of the Ohmic spectral density, cm⁻¹.
    pub omega_cut: f64,
    /// Kelvin.
    pub temperature: f64,
}

impl BathSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite();
        if !ok(self.gamma) || self.gamma < 0.0 {
            return Err(Error::validation(format!(
                "gamma must be >= 0, got {}",
                self.gamma
            )));
        }
        if !ok(self.eta) || self.eta < 0.0 {
            return Err(Error::validation(format!(
                "eta must be >= 0, got {}",
                self.eta
            )));
        }
        if !ok(self.omega_cut) || self.omega_cut <= 0.0 {
            return Err(Error::validation(format!(
                "omega_cut must be > 0, got {}",
                self.omega_cut
            )));
        }
        if !ok(self.temperature) || self.temperature <= 0.0 {
            return Err(Error::validation(format!(
                "temperature must be > 0, got {}",
                self.temperature
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegimeKind {
    /// No light-matter coupling.
    Bare,
    /// Perturbative coupling at 1% of the strong-coupling value.
    Weak,
    /// Vibrational strong coupling.
    Vsc,
}

impl RegimeKind {
    pub const ALL: [RegimeKind; 3] = [RegimeKind::Bare, RegimeKind::Weak, RegimeKind::Vsc];

    pub fn name(self) -> &'static str {
        match self {
            RegimeKind::Bare => "bare",
            RegimeKind::Weak => "weak",
            RegimeKind::Vsc => "vsc",
        }
    }

    pub fn basis_kind(self) -> BasisKind {
        match self {
            RegimeKind::Vsc => BasisKind::Vsc,
            RegimeKind::Bare | RegimeKind::Weak => BasisKind::Bare,
        }
    }
}

impl std::str::FromStr for RegimeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bare" => Ok(RegimeKind::Bare),
            "weak" => Ok(RegimeKind::Weak),
            "vsc" | "strong" => Ok(RegimeKind::Vsc),
            other => Err(Error::validation(format!(
                "unknown regime '{other}' (expected bare, weak or vsc)"
            ))),
        }
    }
}

/// Ratio of the weak-coupling g to the strong-coupling g.
pub const WEAK_COUPLING_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeSpec {
    pub kind: RegimeKind,
    /// Light-matter coupling actually used, cm⁻¹.
    pub g_effective: f64,
}

impl RegimeSpec {
    /// Regime derived from the strong-coupling value `g`.
    pub fn new(kind: RegimeKind, g: f64) -> Self {
        let g_effective = match kind {
            RegimeKind::Vsc => g,
            RegimeKind::Weak => g * WEAK_COUPLING_FRACTION,
            RegimeKind::Bare => 0.0,
        };
        RegimeSpec { kind, g_effective }
    }
}
