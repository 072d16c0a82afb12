//! Integration of dp/dt = K p and species-population observables.

mod balance;
mod criterion;
mod expm;
mod grid;
mod kmc;
mod taylor;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rates::RateMatrix;
use crate::states::StateSpace;
use crate::units;

pub use balance::{connected_components, log_stationary_weights};
pub use criterion::{
    polaritonic_reaction_rate, ssa_reaction_rate, vsc_scaling_criterion, CriterionOutcome,
};
pub use expm::expm;
pub use grid::{Spacing, TimeGrid};
pub use kmc::{KmcEstimate, KmcSampler};
pub use taylor::expm_nonnegative;

/// Tolerance on Σp0 = 1.
pub const NORMALIZATION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Padé scaling-and-squaring exponential, one per output time;
    /// accurate relative to the largest population.
    #[default]
    Pade,
    /// Shifted nonnegative Taylor exponential; every population keeps
    /// its relative precision, however small.
    Nonnegative,
}

/// Populations on a time grid.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub grid: TimeGrid,
    /// `[time][state]`.
    pub state_populations: Vec<Vec<f64>>,
    pub species_labels: Vec<String>,
    /// `[time][species]`, molecule counts in [0, 2].
    pub species_populations: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn from_states(
        space: &StateSpace,
        grid: TimeGrid,
        state_populations: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let species_labels = space.species_labels().to_vec();
        let species_populations = state_populations
            .iter()
            .map(|p| {
                (0..species_labels.len())
                    .map(|s| species_count(p, space, s))
                    .collect()
            })
            .collect();
        Ok(Trajectory {
            grid,
            state_populations,
            species_labels,
            species_populations,
        })
    }

    pub fn times(&self) -> &[f64] {
        self.grid.points()
    }

    fn species_column(&self, label: &str) -> Result<usize> {
        self.species_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::validation(format!("unknown species '{label}'")))
    }

    /// N_φ(t) over the grid.
    pub fn species_series(&self, label: &str) -> Result<Vec<f64>> {
        let s = self.species_column(label)?;
        Ok(self.species_populations.iter().map(|row| row[s]).collect())
    }

    /// N_φ(t)/2 over the grid.
    pub fn fraction_series(&self, label: &str) -> Result<Vec<f64>> {
        Ok(self
            .species_series(label)?
            .into_iter()
            .map(|n| n / crate::modes::N_MOLECULES as f64)
            .collect())
    }

    /// Earliest time at which the fraction of `label` reaches `level`,
    /// linearly interpolated between grid points.
    pub fn crossing_time(&self, label: &str, level: f64) -> Result<Option<f64>> {
        let f = self.fraction_series(label)?;
        let t = self.times();
        if f[0] >= level {
            return Ok(Some(t[0]));
        }
        for k in 1..f.len() {
            if f[k] >= level {
                let w = (level - f[k - 1]) / (f[k] - f[k - 1]);
                return Ok(Some(t[k - 1] + w * (t[k] - t[k - 1])));
            }
        }
        Ok(None)
    }

    /// Fraction of `label` at an arbitrary time, interpolated linearly.
    pub fn fraction_at(&self, label: &str, time: f64) -> Result<f64> {
        let f = self.fraction_series(label)?;
        let t = self.times();
        if time <= t[0] {
            return Ok(f[0]);
        }
        for k in 1..t.len() {
            if time <= t[k] {
                let w = (time - t[k - 1]) / (t[k] - t[k - 1]);
                return Ok(f[k - 1] + w * (f[k] - f[k - 1]));
            }
        }
        Ok(f[f.len() - 1])
    }
}

fn species_count(p: &[f64], space: &StateSpace, species: usize) -> f64 {
    space
        .states()
        .iter()
        .zip(p)
        .map(|(s, &w)| w * s.count(species) as f64)
        .sum()
}

/// ⟨𝒫_φ⟩ = Σ p · (molecules of species φ in the state's configuration).
pub fn species_population(p: &[f64], space: &StateSpace, label: &str) -> Result<f64> {
    if p.len() != space.len() {
        return Err(Error::validation(format!(
            "population vector has length {}, state space has {}",
            p.len(),
            space.len()
        )));
    }
    let s = space
        .species_index(label)
        .ok_or_else(|| Error::validation(format!("unknown species '{label}'")))?;
    Ok(species_count(p, space, s))
}

pub fn normalized_species_fraction(p: &[f64], space: &StateSpace, label: &str) -> Result<f64> {
    Ok(species_population(p, space, label)? / crate::modes::N_MOLECULES as f64)
}

fn check_initial(k: &RateMatrix, p0: &[f64]) -> Result<()> {
    if p0.len() != k.dim() {
        return Err(Error::validation(format!(
            "initial populations have length {}, generator has dimension {}",
            p0.len(),
            k.dim()
        )));
    }
    if p0.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::validation(
            "initial populations must be finite and >= 0",
        ));
    }
    let sum: f64 = p0.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::validation(format!(
            "initial populations sum to {sum}, not 1"
        )));
    }
    Ok(())
}

/// p(t) = exp(K t) p0 at every grid time, using the Padé exponential.
pub fn propagate(k: &RateMatrix, p0: &[f64], grid: &TimeGrid) -> Result<Vec<Vec<f64>>> {
    propagate_with(Method::Pade, k, p0, grid)
}

pub fn propagate_with(
    method: Method,
    k: &RateMatrix,
    p0: &[f64],
    grid: &TimeGrid,
) -> Result<Vec<Vec<f64>>> {
    check_initial(k, p0)?;
    let out = match method {
        Method::Pade => {
            let p = nalgebra::DVector::from_column_slice(p0);
            grid.points()
                .iter()
                .map(|&t| {
                    let u = expm(&(k.generator() * t))?;
                    Ok((u * &p).iter().copied().collect())
                })
                .collect::<Result<Vec<Vec<f64>>>>()?
        }
        Method::Nonnegative => grid
            .points()
            .iter()
            .map(|&t| {
                let u = expm_nonnegative(&(k.generator() * t))?;
                Ok((u * nalgebra::DVector::from_column_slice(p0))
                    .iter()
                    .copied()
                    .collect())
            })
            .collect::<Result<Vec<Vec<f64>>>>()?,
    };
    for (row, t) in out.iter().zip(grid.points()) {
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::numerical(format!(
                "non-finite population at t = {t} ps"
            )));
        }
    }
    Ok(out)
}

/// Boltzmann weights e^{−E/kT} restricted to each connected component of
/// the generator, each component carrying the initial mass it holds in
/// `p0`. This is the t → ∞ limit for a generator in detailed balance.
pub fn boltzmann_limit(
    space: &StateSpace,
    k: &RateMatrix,
    p0: &[f64],
    temperature: f64,
) -> Result<Vec<f64>> {
    check_initial(k, p0)?;
    let kt = units::thermal_energy(temperature)?;
    let e = space.energies();
    let mut out = vec![0.0; e.len()];
    for comp in connected_components(k) {
        let mass: f64 = comp.iter().map(|&i| p0[i]).sum();
        if mass == 0.0 {
            continue;
        }
        let e_min = comp.iter().map(|&i| e[i]).fold(f64::INFINITY, f64::min);
        let z: f64 = comp.iter().map(|&i| (-(e[i] - e_min) / kt).exp()).sum();
        for &i in &comp {
            out[i] = mass * (-(e[i] - e_min) / kt).exp() / z;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rates::{RateLaw, Transition};
    use nalgebra::DMatrix;

    fn two_state(k: f64) -> RateMatrix {
        RateMatrix::from_transitions(
            2,
            vec![Transition {
                from: 0,
                to: 1,
                rate: k,
                law: RateLaw::Reactive,
            }],
        )
        .unwrap()
    }

    #[test]
    fn frozen_dynamics() {
        let k = RateMatrix::from_generator(DMatrix::zeros(3, 3)).unwrap();
        let grid = TimeGrid::linear(0.0, 10.0, 5).unwrap();
        let p0 = [0.2, 0.3, 0.5];
        for row in propagate(&k, &p0, &grid).unwrap() {
            assert_eq!(row, p0.to_vec());
        }
    }

    #[test]
    fn irreversible_decay_matches_closed_form() {
        let rate = 0.37;
        let grid = TimeGrid::log(0.01, 100.0, 30).unwrap();
        let out = propagate(&two_state(rate), &[1.0, 0.0], &grid).unwrap();
        for (row, &t) in out.iter().zip(grid.points()) {
            let expect = -(-rate * t).exp_m1();
            assert!(
                (row[1] - expect).abs() < 1e-13,
                "t={t}: {} vs {expect}",
                row[1]
            );
        }
    }

    #[test]
    fn routes_agree_on_irreversible_decay() {
        let grid = TimeGrid::log(0.01, 100.0, 9).unwrap();
        let a = propagate_with(Method::Pade, &two_state(0.3), &[1.0, 0.0], &grid).unwrap();
        let b = propagate_with(Method::Nonnegative, &two_state(0.3), &[1.0, 0.0], &grid).unwrap();
        for (x, y) in a.iter().flatten().zip(b.iter().flatten()) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn detailed_balance_weights_from_rates() {
        let k = RateMatrix::from_transitions(
            3,
            vec![
                Transition {
                    from: 0,
                    to: 1,
                    rate: 2.0,
                    law: RateLaw::Reactive,
                },
                Transition {
                    from: 1,
                    to: 0,
                    rate: 1.0,
                    law: RateLaw::Reactive,
                },
                Transition {
                    from: 1,
                    to: 2,
                    rate: 1e-40,
                    law: RateLaw::Reactive,
                },
                Transition {
                    from: 2,
                    to: 1,
                    rate: 1.0,
                    law: RateLaw::Reactive,
                },
            ],
        )
        .unwrap();
        let w: Vec<f64> = log_stationary_weights(&k)
            .unwrap()
            .iter()
            .map(|l| l.exp())
            .collect();
        assert!((w[1] / w[0] - 2.0).abs() < 1e-14);
        assert!((w[2] / w[1] / 1e-40 - 1.0).abs() < 1e-12);
        assert_eq!(connected_components(&k), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn one_way_generators_have_no_detailed_balance_weights() {
        assert!(matches!(
            log_stationary_weights(&two_state(1.0)),
            Err(Error::Numerical(_))
        ));
    }

    #[test]
    fn input_checks() {
        let k = two_state(1.0);
        let grid = TimeGrid::linear(0.0, 1.0, 2).unwrap();
        assert!(matches!(
            propagate(&k, &[1.0], &grid),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            propagate(&k, &[0.5, 0.4], &grid),
            Err(Error::Validation(_))
        ));
        assert!(propagate(&k, &[0.5, 0.5 + 5e-11], &grid).is_ok());
    }
}
