//! Reactive species and the diabatic couplings between them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reactive species: diabatic electronic energy and the dimensionless
/// displacement of its high-frequency vibration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpeciesSpec {
    pub label: String,
    /// E_φ, cm⁻¹.
    pub energy: f64,
    /// λ_φ, dimensionless.
    pub displacement: f64,
}

/// Electron-transfer coupling between two species. Symmetric in the pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CouplingSpec {
    pub pair: [String; 2],
    /// Diabatic coupling J, cm⁻¹.
    pub j: f64,
    /// Low-frequency (solvent) reorganization energy λ_s, cm⁻¹.
    pub lambda_s: f64,
}

/// Species and couplings. Pairs that are not listed have J = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ReactionNetwork {
    species: Vec<SpeciesSpec>,
    couplings: Vec<CouplingSpec>,
    /// couplings[pair_index[a][b]] for species indices a, b.
    pair_index: Vec<Vec<Option<usize>>>,
}

/// The three benchmark reactions studied with this model: a fast reverse
/// reaction from a hot product (A → B), an uphill reaction out of a
/// vibrationally excited reactant (A → B), and a hot intermediate
/// (A → B → C).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchmarkReaction {
    HotProduct,
    Uphill,
    HotIntermediate,
}

impl BenchmarkReaction {
    pub const ALL: [BenchmarkReaction; 3] = [
        BenchmarkReaction::HotProduct,
        BenchmarkReaction::Uphill,
        BenchmarkReaction::HotIntermediate,
    ];

    /// 1-based row number used by the bundled configs.
    pub fn number(self) -> u8 {
        match self {
            BenchmarkReaction::HotProduct => 1,
            BenchmarkReaction::Uphill => 2,
            BenchmarkReaction::HotIntermediate => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.number() == n)
    }

    /// Label of the final product species.
    pub fn product(self) -> &'static str {
        match self {
            BenchmarkReaction::HotIntermediate => "C",
            _ => "B",
        }
    }

    /// Parameters in units of ħω_v (displacements dimensionless):
    /// species (label, E, λ) and couplings (a, b, J, λ_s).
    #[allow(clippy::type_complexity)]
    pub fn reduced_parameters(
        self,
    ) -> (
        Vec<(&'static str, f64, f64)>,
        Vec<(&'static str, &'static str, f64, f64)>,
    ) {
        match self {
            BenchmarkReaction::HotProduct => (
                vec![("A", 0.0, 0.0), ("B", -0.6, 1.5)],
                vec![("A", "B", 0.01, 0.08)],
            ),
            BenchmarkReaction::Uphill => (
                vec![("A", 0.0, 0.0), ("B", 0.95, 1.0)],
                vec![("A", "B", 0.002, 0.05)],
            ),
            BenchmarkReaction::HotIntermediate => (
                vec![("A", 0.0, 0.0), ("B", -1.05, 1.5), ("C", -1.35, 4.5)],
                vec![("A", "B", 0.0003, 0.05), ("B", "C", 0.02, 0.3)],
            ),
        }
    }

    /// Network with energies converted to cm⁻¹ for the given ħω_v.
    pub fn network(self, omega_v: f64) -> ReactionNetwork {
        let (species, couplings) = self.reduced_parameters();
        let species = species
            .into_iter()
            .map(|(label, e, lambda)| SpeciesSpec {
                label: label.into(),
                energy: e * omega_v,
                displacement: lambda,
            })
            .collect();
        let couplings = couplings
            .into_iter()
            .map(|(a, b, j, ls)| CouplingSpec {
                pair: [a.into(), b.into()],
                j: j * omega_v,
                lambda_s: ls * omega_v,
            })
            .collect();
        ReactionNetwork::new(species, couplings).expect("benchmark parameters are valid")
    }
}

impl ReactionNetwork {
    pub fn new(species: Vec<SpeciesSpec>, couplings: Vec<CouplingSpec>) -> Result<Self> {
        if species.is_empty() {
            return Err(Error::validation("network has no species"));
        }
        for (i, s) in species.iter().enumerate() {
            if s.label.is_empty() {
                return Err(Error::validation("species label must be non-empty"));
            }
            if species[..i].iter().any(|o| o.label == s.label) {
                return Err(Error::validation(format!(
                    "species labels must be unique: '{}' repeated",
                    s.label
                )));
            }
            if !s.energy.is_finite() || !s.displacement.is_finite() {
                return Err(Error::validation(format!(
                    "species '{}' has a non-finite energy or displacement",
                    s.label
                )));
            }
        }

        let n = species.len();
        let mut pair_index = vec![vec![None; n]; n];
        for (k, c) in couplings.iter().enumerate() {
            let lookup = |label: &str| {
                species
                    .iter()
                    .position(|s| s.label == label)
                    .ok_or_else(|| {
                        Error::validation(format!(
                            "coupling references undeclared species '{label}'"
                        ))
                    })
            };
            let a = lookup(&c.pair[0])?;
            let b = lookup(&c.pair[1])?;
            if a == b {
                return Err(Error::validation(format!(
                    "coupling pair must name two distinct species, got '{}' twice",
                    c.pair[0]
                )));
            }
            if pair_index[a][b].is_some() {
                return Err(Error::validation(format!(
                    "duplicate coupling for pair ({}, {})",
                    c.pair[0], c.pair[1]
                )));
            }
            if !c.j.is_finite() || !c.lambda_s.is_finite() {
                return Err(Error::validation(format!(
                    "coupling ({}, {}) has non-finite parameters",
                    c.pair[0], c.pair[1]
                )));
            }
            if c.j != 0.0 && !(c.lambda_s > 0.0) {
                return Err(Error::validation(format!(
                    "coupling ({}, {}): lambda_s must be > 0 when J != 0, got {}",
                    c.pair[0], c.pair[1], c.lambda_s
                )));
            }
            if c.lambda_s < 0.0 {
                return Err(Error::validation(format!(
                    "coupling ({}, {}): lambda_s must be >= 0, got {}",
                    c.pair[0], c.pair[1], c.lambda_s
                )));
            }
            pair_index[a][b] = Some(k);
            pair_index[b][a] = Some(k);
        }

        Ok(ReactionNetwork {
            species,
            couplings,
            pair_index,
        })
    }

    pub fn species(&self) -> &[SpeciesSpec] {
        &self.species
    }

    pub fn couplings(&self) -> &[CouplingSpec] {
        &self.couplings
    }

    pub fn len(&self) -> usize {
        self.species.len()
    }

    pub fn is_empty(&self) -> bool {
        self.species.is_empty()
    }

    pub fn species_index(&self, label: &str) -> Option<usize> {
        self.species.iter().position(|s| s.label == label)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.species.iter().map(|s| s.label.as_str()).collect()
    }

    /// Coupling between species `a` and `b`, if one with J ≠ 0 is declared.
    pub fn coupling(&self, a: usize, b: usize) -> Option<&CouplingSpec> {
        self.pair_index
            .get(a)?
            .get(b)
            .copied()
            .flatten()
            .map(|k| &self.couplings[k])
            .filter(|c| c.j != 0.0)
    }
}
