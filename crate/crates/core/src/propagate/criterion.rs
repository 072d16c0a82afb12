//! Large-N criterion for a reaction to be modifiable by collective
//! strong coupling.
//!
//! With the steady-state approximation on the vibrationally hot product,
//! the bare reaction proceeds at k_f·k_d/(k_r + k_d), while the polaritonic
//! channels contribute ε·k_f/N. Strong coupling can matter only when the
//! latter is at least comparable: ε/N ≳ k_d/(k_r + k_d).

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub modifiable: bool,
    /// ε/N.
    pub lhs: f64,
    /// k_d/(k_r + k_d), the decay efficiency of the hot product.
    pub rhs: f64,
}

fn check_rates(k_r: f64, k_d: f64) -> Result<()> {
    if !(k_r >= 0.0) || !(k_d >= 0.0) || !k_r.is_finite() || !k_d.is_finite() {
        return Err(Error::validation("k_r and k_d must be finite and >= 0"));
    }
    if k_r + k_d == 0.0 {
        return Err(Error::validation("k_r + k_d must be > 0"));
    }
    Ok(())
}

pub fn vsc_scaling_criterion(epsilon: f64, n: f64, k_r: f64, k_d: f64) -> Result<CriterionOutcome> {
    if !(n >= 1.0) || !n.is_finite() {
        return Err(Error::validation(format!(
            "molecule count must be >= 1, got {n}"
        )));
    }
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return Err(Error::validation(format!(
            "epsilon must be >= 0, got {epsilon}"
        )));
    }
    check_rates(k_r, k_d)?;
    let lhs = epsilon / n;
    let rhs = k_d / (k_r + k_d);
    Ok(CriterionOutcome {
        modifiable: lhs >= rhs,
        lhs,
        rhs,
    })
}

/// Steady-state bare reaction rate k_f·k_d/(k_r + k_d).
pub fn ssa_reaction_rate(k_f: f64, k_r: f64, k_d: f64) -> Result<f64> {
    check_rates(k_r, k_d)?;
    Ok(k_f * k_d / (k_r + k_d))
}

/// Effective rate of the polaritonic channels, ε·k_f/N.
pub fn polaritonic_reaction_rate(epsilon: f64, k_f: f64, n: f64) -> Result<f64> {
    if !(n >= 1.0) {
        return Err(Error::validation(format!(
            "molecule count must be >= 1, got {n}"
        )));
    }
    Ok(epsilon * k_f / n)
}
