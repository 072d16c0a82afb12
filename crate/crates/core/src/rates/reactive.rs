//! Nonadiabatic electron-transfer rate between composite states.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::network::ReactionNetwork;
use crate::states::CompositeState;
use crate::units;

/// Marcus-Levich-Jortner rate, ps⁻¹:
/// √(π/(λ_s k_BT)) · |J|²/ħ · FC · exp(−(ΔE + λ_s)²/(4λ_s k_BT)).
///
/// Energies in cm⁻¹; `delta_e` is E_out − E_in.
pub fn mlj_rate(j: f64, lambda_s: f64, franck_condon: f64, delta_e: f64, kt: f64) -> f64 {
    if j == 0.0 || franck_condon == 0.0 {
        return 0.0;
    }
    let prefactor = (PI / (lambda_s * kt)).sqrt() * j * j / units::HBAR_CM_PS;
    let activation = (delta_e + lambda_s).powi(2) / (4.0 * lambda_s * kt);
    prefactor * franck_condon * (-activation).exp()
}

/// Index of the single molecule whose species differs between the two
/// configurations.
pub fn reacting_molecule(a: &CompositeState, b: &CompositeState) -> Result<usize> {
    let mut differing = a
        .config
        .iter()
        .zip(&b.config)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(i, _)| i);
    match (differing.next(), differing.next()) {
        (Some(i), None) => Ok(i),
        (None, _) => Err(Error::validation(
            "reactive transition requires a change of species",
        )),
        (Some(_), Some(_)) => Err(Error::validation(
            "reactive transitions change the species of exactly one molecule",
        )),
    }
}

/// Rate of |state_in⟩ → |state_out⟩ given its Franck-Condon factor.
/// Zero when the species pair has no coupling.
pub fn reactive_rate(
    state_in: &CompositeState,
    state_out: &CompositeState,
    network: &ReactionNetwork,
    franck_condon: f64,
    temperature: f64,
) -> Result<f64> {
    let i = reacting_molecule(state_in, state_out)?;
    let kt = units::thermal_energy(temperature)?;
    let Some(c) = network.coupling(state_in.config[i], state_out.config[i]) else {
        return Ok(0.0);
    };
    Ok(mlj_rate(
        c.j,
        c.lambda_s,
        franck_condon,
        state_out.energy - state_in.energy,
        kt,
    ))
}
