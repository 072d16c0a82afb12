//! Composite electronic ⊗ cavity-vibrational states under the
//! ≤1-excitation truncation.

use crate::error::{Error, Result};
use crate::modes::{
    build_displacements, composite_energy_bare, composite_energy_vsc, BasisKind, CavitySpec,
    ModeBasis, Occupation, N_MOLECULES,
};
use crate::network::ReactionNetwork;
use crate::units;

/// |φ; m⟩ with its energy and its position in the enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeState {
    /// Species index of each molecule.
    pub config: [usize; N_MOLECULES],
    pub occupation: Occupation,
    /// cm⁻¹.
    pub energy: f64,
    pub index: usize,
}

impl CompositeState {
    /// Number of molecules belonging to `species`.
    pub fn count(&self, species: usize) -> usize {
        self.config.iter().filter(|&&s| s == species).count()
    }
}

/// The ordered state list for one basis. Ordering is lexicographic in
/// `(φ₁, φ₂)` by species declaration order, then ground followed by a
/// single quantum in each basis mode in mode order.
#[derive(Debug, Clone)]
pub struct StateSpace {
    pub kind: BasisKind,
    states: Vec<CompositeState>,
    species_labels: Vec<String>,
    mode_symbols: [&'static str; 3],
}

/// Enumerate all |species|² × 4 states. Energies come from
/// [`composite_energy_vsc`] for the polariton basis and from
/// [`composite_energy_bare`] for the local basis.
pub fn enumerate_states(
    network: &ReactionNetwork,
    basis: &ModeBasis,
    cavity: &CavitySpec,
) -> Result<StateSpace> {
    let n = network.len();
    let table = build_displacements(basis, network);
    let mut states = Vec::with_capacity(n * n * 4);
    for a in 0..n {
        for b in 0..n {
            let config = [a, b];
            for occupation in Occupation::truncated_manifold() {
                let energy = match basis.kind {
                    BasisKind::Vsc => {
                        composite_energy_vsc(&config, &occupation, basis, &table, network)?
                    }
                    BasisKind::Bare => {
                        composite_energy_bare(&config, &occupation, network, cavity, basis.omega_v)?
                    }
                };
                let index = states.len();
                states.push(CompositeState {
                    config,
                    occupation,
                    energy,
                    index,
                });
            }
        }
    }
    Ok(StateSpace {
        kind: basis.kind,
        states,
        species_labels: network.species().iter().map(|s| s.label.clone()).collect(),
        mode_symbols: basis.labels.map(|l| l.symbol()),
    })
}

impl StateSpace {
    pub fn states(&self) -> &[CompositeState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn species_labels(&self) -> &[String] {
        &self.species_labels
    }

    pub fn species_index(&self, label: &str) -> Option<usize> {
        self.species_labels.iter().position(|l| l == label)
    }

    /// Inverse of the enumeration.
    pub fn index_of(&self, config: [usize; N_MOLECULES], occupation: Occupation) -> Option<usize> {
        let n = self.species_labels.len();
        if config.iter().any(|&c| c >= n) || occupation.total() > 1 {
            return None;
        }
        let slot = match occupation.excited_mode() {
            None => 0,
            Some(q) => q + 1,
        };
        Some((config[0] * n + config[1]) * 4 + slot)
    }

    /// Human-readable label such as `A|B;+` or `A|A;0`.
    pub fn label(&self, index: usize) -> String {
        let s = &self.states[index];
        let mode = match s.occupation.excited_mode() {
            None => "0",
            Some(q) => self.mode_symbols[q],
        };
        format!(
            "{}|{};{}",
            self.species_labels[s.config[0]], self.species_labels[s.config[1]], mode
        )
    }

    pub fn energies(&self) -> Vec<f64> {
        self.states.iter().map(|s| s.energy).collect()
    }
}

/// Thermal distribution over the reactant configuration (both molecules in
/// `reactant`), p ∝ exp(−E/k_BT), normalized to one; zero elsewhere.
pub fn initial_distribution(
    space: &StateSpace,
    reactant: &str,
    temperature: f64,
) -> Result<Vec<f64>> {
    let kt = units::thermal_energy(temperature)?;
    let r = space
        .species_index(reactant)
        .ok_or_else(|| Error::validation(format!("unknown reactant species '{reactant}'")))?;
    let support: Vec<usize> = space
        .states()
        .iter()
        .filter(|s| s.config == [r; N_MOLECULES])
        .map(|s| s.index)
        .collect();
    let e_min = support
        .iter()
        .map(|&i| space.states()[i].energy)
        .fold(f64::INFINITY, f64::min);
    let mut p = vec![0.0; space.len()];
    for &i in &support {
        p[i] = (-(space.states()[i].energy - e_min) / kt).exp();
    }
    let z: f64 = p.iter().sum();
    for v in &mut p {
        *v /= z;
    }
    Ok(p)
}
