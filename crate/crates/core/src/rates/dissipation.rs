//! Internal-thermalization rates: cavity/vibrational loss and gain,
//! polariton-dark exchange, and weak-coupling Purcell exchange.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::modes::{ModeBasis, N_MODES};
use crate::rates::BathSpec;
use crate::units;

/// Decay of a single excitation of eigenmode `q`:
/// |c_q0|²κ + (Σ_i |c_qi|²)γ.
pub fn loss_rate_vsc(q: usize, basis: &ModeBasis, kappa: f64, gamma: f64) -> f64 {
    basis.photonic_weight(q) * kappa + basis.vibrational_weight(q) * gamma
}

/// Decay of a local mode: κ for the cavity (`mode == 0`), γ for a vibration.
pub fn loss_rate_bare(mode: usize, kappa: f64, gamma: f64) -> f64 {
    debug_assert!(mode < N_MODES);
    if mode == 0 {
        kappa
    } else {
        gamma
    }
}

/// Reverse of a loss process by detailed balance: loss · exp(−ħω_q/k_BT).
pub fn gain_rate(loss: f64, omega_q: f64, temperature: f64) -> Result<f64> {
    if !(loss >= 0.0) {
        return Err(Error::validation(format!(
            "loss rate must be >= 0, got {loss}"
        )));
    }
    let kt = units::thermal_energy(temperature)?;
    Ok(loss * (-omega_q / kt).exp())
}

/// Bose-Einstein occupation for a quantum of `gap` cm⁻¹.
pub fn bose_einstein(gap: f64, kt: f64) -> f64 {
    1.0 / (gap / kt).exp_m1()
}

/// Ohmic spectral density η·ω·exp(−(ω/ω_cut)²), angular frequencies.
pub fn ohmic_spectral_density(omega: f64, eta: f64, omega_cut: f64) -> f64 {
    eta * omega * (-(omega / omega_cut).powi(2)).exp()
}

/// Σ_i |c_{q',i}|² |c_{q,i}|² over the molecular vibrations.
pub fn vibrational_overlap(basis: &ModeBasis, q_from: usize, q_to: usize) -> f64 {
    (1..N_MODES)
        .map(|i| basis.coefficients[q_to][i].powi(2) * basis.coefficients[q_from][i].powi(2))
        .sum()
}

/// Incoherent transfer of one quantum from eigenmode `q_from` to `q_to`.
///
/// Downhill transfers (energy released to the bath) carry n̄ + 1, uphill
/// transfers carry n̄; the spectral density is evaluated at the magnitude
/// of the gap.
pub fn exchange_rate(
    q_from: usize,
    q_to: usize,
    basis: &ModeBasis,
    bath: &BathSpec,
) -> Result<f64> {
    if q_from == q_to {
        return Err(Error::validation("exchange requires two distinct modes"));
    }
    let gap = basis.frequencies[q_to] - basis.frequencies[q_from];
    if gap == 0.0 {
        return Err(Error::numerical(format!(
            "modes {} and {} are degenerate; exchange between them is undefined",
            basis.labels[q_from], basis.labels[q_to]
        )));
    }
    let kt = units::thermal_energy(bath.temperature)?;
    let released = gap.abs();
    let spectral = ohmic_spectral_density(
        units::wavenumber_to_angular(released),
        bath.eta,
        units::wavenumber_to_angular(bath.omega_cut),
    );
    let n = bose_einstein(released, kt);
    let thermal = if gap < 0.0 { n + 1.0 } else { n };
    Ok(2.0 * PI * vibrational_overlap(basis, q_from, q_to) * thermal * spectral)
}

/// Weak-coupling vibration ↔ cavity exchange rate
/// γ′ = 4g²(k₀ + k_i) / (4Δ² + (k₀ + k_i)²), with g and the detuning Δ
/// converted to rad/ps. The same rate applies in both directions.
pub fn purcell_exchange_rate(
    k_out_cavity: f64,
    k_out_vib: f64,
    g_weak: f64,
    detuning: f64,
) -> Result<f64> {
    if !(k_out_cavity >= 0.0) || !(k_out_vib >= 0.0) {
        return Err(Error::validation("outgoing rates must be >= 0"));
    }
    let total = k_out_cavity + k_out_vib;
    if total == 0.0 {
        return Err(Error::validation(
            "Purcell exchange needs a decaying cavity or vibrational excitation",
        ));
    }
    let g = units::wavenumber_to_angular(g_weak);
    let delta = units::wavenumber_to_angular(detuning);
    Ok(4.0 * g * g * total / (4.0 * delta * delta + total * total))
}
