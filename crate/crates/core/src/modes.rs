//! Cavity-vibrational eigenmodes for two molecules and one cavity mode.
//!
//! In the strongly coupled basis the modes are the upper and lower
//! polaritons and a single dark mode; in the bare basis they are the local
//! cavity mode and the two local vibrations. Both are described by the same
//! [`ModeBasis`] (frequencies plus an orthogonal coefficient matrix), but
//! they enumerate distinct state spaces and are never mixed.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::ReactionNetwork;

/// Number of molecules in the model.
pub const N_MOLECULES: usize = 2;
/// Cavity mode plus one vibration per molecule.
pub const N_MODES: usize = N_MOLECULES + 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavitySpec {
    /// ω_c, cm⁻¹.
    pub omega_c: f64,
    /// Single-molecule light-matter coupling g, cm⁻¹.
    pub g: f64,
    pub n_molecules: usize,
    /// Bare cavity decay rate κ, ps⁻¹.
    pub kappa: f64,
}

impl CavitySpec {
    pub fn new(omega_c: f64, g: f64, kappa: f64) -> Result<Self> {
        let spec = CavitySpec {
            omega_c,
            g,
            n_molecules: N_MOLECULES,
            kappa,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega_c > 0.0) || !self.omega_c.is_finite() {
            return Err(Error::validation(format!(
                "omega_c must be > 0, got {}",
                self.omega_c
            )));
        }
        if !(self.g >= 0.0) || !self.g.is_finite() {
            return Err(Error::validation(format!("g must be >= 0, got {}", self.g)));
        }
        if !(self.kappa >= 0.0) || !self.kappa.is_finite() {
            return Err(Error::validation(format!(
                "kappa must be >= 0, got {}",
                self.kappa
            )));
        }
        if self.n_molecules != N_MOLECULES {
            return Err(Error::validation(format!(
                "only {N_MOLECULES} molecules are supported, got {}",
                self.n_molecules
            )));
        }
        Ok(())
    }

    /// Collective coupling g√N.
    pub fn collective_coupling(&self) -> f64 {
        self.g * (self.n_molecules as f64).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    /// Polariton and dark modes.
    Vsc,
    /// Local cavity and vibrational modes.
    Bare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeLabel {
    Upper,
    Lower,
    Dark,
    Cavity,
    Vib1,
    Vib2,
}

impl ModeLabel {
    pub fn symbol(self) -> &'static str {
        match self {
            ModeLabel::Upper => "+",
            ModeLabel::Lower => "-",
            ModeLabel::Dark => "d",
            ModeLabel::Cavity => "c",
            ModeLabel::Vib1 => "v1",
            ModeLabel::Vib2 => "v2",
        }
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Eigenmodes of the cavity-vibrational subsystem.
///
/// `coefficients[q][i]` expands mode `q` in the local modes, with `i = 0`
/// the cavity and `i = 1, 2` the molecular vibrations.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeBasis {
    pub kind: BasisKind,
    pub labels: [ModeLabel; N_MODES],
    /// ω_q, cm⁻¹.
    pub frequencies: [f64; N_MODES],
    pub coefficients: [[f64; N_MODES]; N_MODES],
    /// θ, radians. Zero for the bare basis.
    pub mixing_angle: f64,
    /// ω_v, cm⁻¹.
    pub omega_v: f64,
}

/// Polariton/dark basis for the given cavity and vibrational frequency.
///
/// θ = ½·atan2(2g√N, ω_c − ω_v), so the `+` mode is always the upper branch.
pub fn build_mode_basis(cavity: &CavitySpec, omega_v: f64) -> Result<ModeBasis> {
    cavity.validate()?;
    check_omega_v(omega_v)?;
    let gn = cavity.collective_coupling();
    let detuning = cavity.omega_c - omega_v;
    let root = (detuning * detuning + 4.0 * gn * gn).sqrt();
    let upper = 0.5 * (cavity.omega_c + omega_v + root);
    let lower = 0.5 * (cavity.omega_c + omega_v - root);
    let theta = 0.5 * (2.0 * gn).atan2(detuning);
    let (s, c) = theta.sin_cos();
    let coefficients = [
        [c, s * FRAC_1_SQRT_2, s * FRAC_1_SQRT_2],
        [s, -c * FRAC_1_SQRT_2, -c * FRAC_1_SQRT_2],
        [0.0, FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
    ];
    Ok(ModeBasis {
        kind: BasisKind::Vsc,
        labels: [ModeLabel::Upper, ModeLabel::Lower, ModeLabel::Dark],
        frequencies: [upper, lower, omega_v],
        coefficients,
        mixing_angle: theta,
        omega_v,
    })
}

fn check_omega_v(omega_v: f64) -> Result<()> {
    if !(omega_v > 0.0) || !omega_v.is_finite() {
        return Err(Error::validation(format!(
            "omega_v must be > 0, got {omega_v}"
        )));
    }
    Ok(())
}

impl ModeBasis {
    /// Local-mode basis: identity coefficients, frequencies (ω_c, ω_v, ω_v).
    pub fn bare(cavity: &CavitySpec, omega_v: f64) -> Result<Self> {
        cavity.validate()?;
        check_omega_v(omega_v)?;
        Ok(ModeBasis {
            kind: BasisKind::Bare,
            labels: [ModeLabel::Cavity, ModeLabel::Vib1, ModeLabel::Vib2],
            frequencies: [cavity.omega_c, omega_v, omega_v],
            coefficients: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            mixing_angle: 0.0,
            omega_v,
        })
    }

    pub fn for_kind(kind: BasisKind, cavity: &CavitySpec, omega_v: f64) -> Result<Self> {
        match kind {
            BasisKind::Vsc => build_mode_basis(cavity, omega_v),
            BasisKind::Bare => Self::bare(cavity, omega_v),
        }
    }

    /// Same basis with the dark-mode phase reversed. The dark mode is only
    /// defined up to this sign; no observable may depend on it.
    pub fn with_flipped_dark_mode(&self) -> Self {
        let mut out = self.clone();
        if let Some(q) = self.labels.iter().position(|&l| l == ModeLabel::Dark) {
            for c in &mut out.coefficients[q] {
                *c = -*c;
            }
        }
        out
    }

    /// Photonic weight |c_q0|².
    pub fn photonic_weight(&self, q: usize) -> f64 {
        self.coefficients[q][0].powi(2)
    }

    /// Vibrational weight Σ_{i≥1} |c_qi|².
    pub fn vibrational_weight(&self, q: usize) -> f64 {
        self.coefficients[q][1..].iter().map(|c| c * c).sum()
    }

    pub fn mode_index(&self, label: ModeLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Redistributed vibronic displacements.
///
/// `per_molecule[φ][i][q]` is λ^{(i)}_{φq} = c_q,i · (ω_v/ω_q) · λ_φ for
/// molecule `i` (0-based) in species `φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct DisplacementTable {
    per_molecule: Vec<[[f64; N_MODES]; N_MOLECULES]>,
}

pub fn build_displacements(basis: &ModeBasis, network: &ReactionNetwork) -> DisplacementTable {
    let per_molecule = network
        .species()
        .iter()
        .map(|s| {
            let mut entry = [[0.0; N_MODES]; N_MOLECULES];
            for (i, row) in entry.iter_mut().enumerate() {
                for (q, value) in row.iter_mut().enumerate() {
                    *value = basis.coefficients[q][i + 1]
                        * (basis.omega_v / basis.frequencies[q])
                        * s.displacement;
                }
            }
            entry
        })
        .collect();
    DisplacementTable { per_molecule }
}

impl DisplacementTable {
    /// λ^{(i)}_{φq}; `molecule` is 0-based.
    pub fn per_molecule(&self, species: usize, molecule: usize, q: usize) -> f64 {
        self.per_molecule[species][molecule][q]
    }

    /// λ_φq, the displacement of mode `q` for electronic configuration
    /// `config` (species index per molecule).
    pub fn aggregate(&self, config: &[usize; N_MOLECULES], q: usize) -> f64 {
        config
            .iter()
            .enumerate()
            .map(|(i, &phi)| self.per_molecule[phi][i][q])
            .sum()
    }
}

/// Occupation numbers over the three active modes of a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occupation(pub [u32; N_MODES]);

impl Occupation {
    pub const GROUND: Occupation = Occupation([0; N_MODES]);

    /// One quantum in mode `q`.
    pub fn single(q: usize) -> Self {
        let mut m = [0; N_MODES];
        m[q] = 1;
        Occupation(m)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Index of the excited mode for a singly excited occupation.
    pub fn excited_mode(&self) -> Option<usize> {
        if self.total() == 1 {
            self.0.iter().position(|&m| m == 1)
        } else {
            None
        }
    }

    /// The truncated manifold: ground plus each single excitation, in mode
    /// order.
    pub fn truncated_manifold() -> [Occupation; N_MODES + 1] {
        [
            Occupation::GROUND,
            Occupation::single(0),
            Occupation::single(1),
            Occupation::single(2),
        ]
    }
}

fn check_truncation(m: &Occupation) -> Result<()> {
    if m.total() > 1 {
        return Err(Error::validation(format!(
            "occupation {:?} lies outside the <=1-excitation truncation",
            m.0
        )));
    }
    Ok(())
}

/// Energy (cm⁻¹) of |φ; m⟩ in the polariton/dark basis, including the
/// reorganization shift ħω_v Σλ²_φi − Σ_q ħω_q |λ_φq|².
pub fn composite_energy_vsc(
    config: &[usize; N_MOLECULES],
    m: &Occupation,
    basis: &ModeBasis,
    table: &DisplacementTable,
    network: &ReactionNetwork,
) -> Result<f64> {
    check_truncation(m)?;
    let species = network.species();
    let electronic: f64 = config.iter().map(|&phi| species[phi].energy).sum();
    let vibrational: f64 = (0..N_MODES)
        .map(|q| m.0[q] as f64 * basis.frequencies[q])
        .sum();
    let bare_reorg: f64 = basis.omega_v
        * config
            .iter()
            .map(|&phi| species[phi].displacement.powi(2))
            .sum::<f64>();
    let mode_reorg: f64 = (0..N_MODES)
        .map(|q| basis.frequencies[q] * table.aggregate(config, q).powi(2))
        .sum();
    Ok(electronic + vibrational + (bare_reorg - mode_reorg))
}

/// Energy (cm⁻¹) of |φ; m⟩ in the local basis: ΣE_φi + m₀ħω_c + ħω_v(m₁+m₂).
pub fn composite_energy_bare(
    config: &[usize; N_MOLECULES],
    m_local: &Occupation,
    network: &ReactionNetwork,
    cavity: &CavitySpec,
    omega_v: f64,
) -> Result<f64> {
    check_truncation(m_local)?;
    let species = network.species();
    let electronic: f64 = config.iter().map(|&phi| species[phi].energy).sum();
    Ok(electronic
        + m_local.0[0] as f64 * cavity.omega_c
        + omega_v * (m_local.0[1] + m_local.0[2]) as f64)
}
