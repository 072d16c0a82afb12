//! Physical constants and unit conversions.
//!
//! Canonical internal units: energies and mode frequencies in cm⁻¹
//! (wavenumbers), time in ps, rates in ps⁻¹, temperature in K. Angular
//! frequencies (rad/ps) appear only where a rate law needs them.
//!
//! All constants derive from the exact SI values fixed by CODATA 2018.

use serde::Serialize;

use crate::error::{Error, Result};

/// Speed of light, cm/s (exact).
pub const SPEED_OF_LIGHT_CM_PER_S: f64 = 29_979_245_800.0;
/// Planck constant, J·s (exact).
pub const PLANCK_J_S: f64 = 6.626_070_15e-34;
/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN_J_PER_K: f64 = 1.380_649e-23;

/// Speed of light, cm/ps.
pub const SPEED_OF_LIGHT_CM_PER_PS: f64 = SPEED_OF_LIGHT_CM_PER_S * 1e-12;
/// Boltzmann constant, cm⁻¹/K (≈ 0.695 034 80).
pub const BOLTZMANN_CM_PER_K: f64 = BOLTZMANN_J_PER_K / (PLANCK_J_S * SPEED_OF_LIGHT_CM_PER_S);
/// Angular frequency (rad/ps) of one wavenumber: 2πc.
pub const ANGULAR_PER_WAVENUMBER: f64 = 2.0 * std::f64::consts::PI * SPEED_OF_LIGHT_CM_PER_PS;
/// Reduced Planck constant, cm⁻¹·ps. Dividing an energy in cm⁻¹ by this
/// gives an angular frequency in rad/ps.
pub const HBAR_CM_PS: f64 = 1.0 / ANGULAR_PER_WAVENUMBER;

/// The constant set, as recorded in run metadata.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitSystem {
    pub hbar: f64,
    pub kb: f64,
    pub c: f64,
    pub angular_per_wavenumber: f64,
}

pub const UNITS: UnitSystem = UnitSystem {
    hbar: HBAR_CM_PS,
    kb: BOLTZMANN_CM_PER_K,
    c: SPEED_OF_LIGHT_CM_PER_PS,
    angular_per_wavenumber: ANGULAR_PER_WAVENUMBER,
};

/// cm⁻¹ → rad/ps.
#[inline]
pub fn wavenumber_to_angular(nu: f64) -> f64 {
    nu * ANGULAR_PER_WAVENUMBER
}

/// rad/ps → cm⁻¹.
#[inline]
pub fn angular_to_wavenumber(omega: f64) -> f64 {
    omega * HBAR_CM_PS
}

/// k_B·T in cm⁻¹.
pub fn thermal_energy(temperature: f64) -> Result<f64> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::validation(format!(
            "temperature must be positive and finite, got {temperature} K"
        )));
    }
    Ok(BOLTZMANN_CM_PER_K * temperature)
}
