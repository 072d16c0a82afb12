use std::collections::HashSet;

use nalgebra::DMatrix;

use super::dissipation::{
    exchange_rate, gain_rate, loss_rate_bare, loss_rate_vsc, purcell_exchange_rate,
};
use super::franck_condon::{franck_condon_bare, franck_condon_vsc};
use super::reactive::{reacting_molecule, reactive_rate};
use super::{BathSpec, RegimeKind, RegimeSpec};
use crate::error::{Error, Result};
use crate::modes::{build_displacements, BasisKind, CavitySpec, ModeBasis, Occupation};
use crate::network::ReactionNetwork;
use crate::states::StateSpace;

/// Physical process that populates an off-diagonal generator entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RateLaw {
    Reactive,
    Loss,
    Gain,
    Exchange,
    Purcell,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    /// ps⁻¹.
    pub rate: f64,
    pub law: RateLaw,
}

/// Generator K of dp/dt = K p. `K[(j, i)]` is the rate of i → j; each
/// column sums to zero.
#[derive(Debug, Clone)]
pub struct RateMatrix {
    generator: DMatrix<f64>,
    transitions: Vec<Transition>,
}

impl RateMatrix {
    /// Build from a transition list. Each ordered pair may appear once.
    pub fn from_transitions(dim: usize, transitions: Vec<Transition>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(transitions.len());
        let mut generator = DMatrix::zeros(dim, dim);
        for t in &transitions {
            if t.from >= dim || t.to >= dim || t.from == t.to {
                return Err(Error::validation(format!(
                    "transition {} -> {} out of range for dimension {dim}",
                    t.from, t.to
                )));
            }
            if !(t.rate >= 0.0) || !t.rate.is_finite() {
                return Err(Error::numerical(format!(
                    "rate {} -> {} is {} ({:?})",
                    t.from, t.to, t.rate, t.law
                )));
            }
            if !seen.insert((t.from, t.to)) {
                return Err(Error::numerical(format!(
                    "transition {} -> {} populated by more than one rate law",
                    t.from, t.to
                )));
            }
            generator[(t.to, t.from)] = t.rate;
        }
        for i in 0..dim {
            let out: f64 = (0..dim)
                .filter(|&j| j != i)
                .map(|j| generator[(j, i)])
                .sum();
            generator[(i, i)] = -out;
        }
        Ok(RateMatrix {
            generator,
            transitions,
        })
    }

    /// Wrap an existing generator; off-diagonals must be non-negative and
    /// the diagonal is recomputed from the column sums.
    pub fn from_generator(mut generator: DMatrix<f64>) -> Result<Self> {
        let n = generator.nrows();
        if generator.ncols() != n {
            return Err(Error::validation("generator must be square"));
        }
        for i in 0..n {
            let mut out = 0.0;
            for j in 0..n {
                if i != j {
                    let r = generator[(j, i)];
                    if !(r >= 0.0) || !r.is_finite() {
                        return Err(Error::validation(format!("invalid rate {r} at ({j}, {i})")));
                    }
                    out += r;
                }
            }
            generator[(i, i)] = -out;
        }
        let transitions = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && generator[(j, i)] > 0.0)
            .map(|(i, j)| Transition {
                from: i,
                to: j,
                rate: generator[(j, i)],
                law: RateLaw::Reactive,
            })
            .collect();
        Ok(RateMatrix {
            generator,
            transitions,
        })
    }

    pub fn dim(&self) -> usize {
        self.generator.nrows()
    }

    pub fn generator(&self) -> &DMatrix<f64> {
        &self.generator
    }

    /// Rate of `from → to`.
    pub fn rate(&self, from: usize, to: usize) -> f64 {
        if from == to {
            0.0
        } else {
            self.generator[(to, from)]
        }
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Total outgoing rate of state `i`.
    pub fn outgoing(&self, i: usize) -> f64 {
        -self.generator[(i, i)]
    }

    /// Largest |column sum|.
    pub fn max_column_sum(&self) -> f64 {
        self.generator
            .column_iter()
            .map(|c| c.sum().abs())
            .fold(0.0, f64::max)
    }
}

/// Assemble the generator for `regime` over `space`.
///
/// * `vsc`: reactive transitions with polariton/dark Franck-Condon factors,
///   loss/gain per eigenmode and polariton-dark exchange.
/// * `bare`: reactive transitions with local Franck-Condon factors and local
///   loss/gain; no exchange between local modes.
/// * `weak`: the bare generator plus symmetric Purcell exchange between each
///   vibration and the cavity, with outgoing rates taken from the bare
///   generator.
pub fn assemble_rate_matrix(
    space: &StateSpace,
    network: &ReactionNetwork,
    basis: &ModeBasis,
    cavity: &CavitySpec,
    bath: &BathSpec,
    regime: &RegimeSpec,
) -> Result<RateMatrix> {
    bath.validate()?;
    cavity.validate()?;
    if basis.kind != regime.kind.basis_kind() || space.kind != basis.kind {
        return Err(Error::validation(format!(
            "regime '{}' needs the {:?} basis and state space",
            regime.kind.name(),
            regime.kind.basis_kind()
        )));
    }
    let t = bath.temperature;
    let states = space.states();
    let mut transitions = Vec::new();

    // reactive
    let table = build_displacements(basis, network);
    let lambda: Vec<f64> = network.species().iter().map(|s| s.displacement).collect();
    for s_in in states {
        for s_out in states {
            let Ok(i) = reacting_molecule(s_in, s_out) else {
                continue;
            };
            let (from, to) = (s_in.config[i], s_out.config[i]);
            if network.coupling(from, to).is_none() {
                continue;
            }
            let fc = match basis.kind {
                BasisKind::Vsc => {
                    franck_condon_vsc(&s_out.occupation, &s_in.occupation, i, from, to, &table)
                }
                BasisKind::Bare => franck_condon_bare(
                    &s_out.occupation,
                    &s_in.occupation,
                    i,
                    lambda[from],
                    lambda[to],
                ),
            };
            let rate = reactive_rate(s_in, s_out, network, fc, t)?;
            if rate > 0.0 {
                transitions.push(Transition {
                    from: s_in.index,
                    to: s_out.index,
                    rate,
                    law: RateLaw::Reactive,
                });
            }
        }
    }

    // loss and gain
    for s in states {
        let Some(q) = s.occupation.excited_mode() else {
            continue;
        };
        let ground = space
            .index_of(s.config, Occupation::GROUND)
            .expect("ground state of every configuration is enumerated");
        let loss = match basis.kind {
            BasisKind::Vsc => loss_rate_vsc(q, basis, cavity.kappa, bath.gamma),
            BasisKind::Bare => loss_rate_bare(q, cavity.kappa, bath.gamma),
        };
        let gain = gain_rate(loss, basis.frequencies[q], t)?;
        for (from, to, rate, law) in [
            (s.index, ground, loss, RateLaw::Loss),
            (ground, s.index, gain, RateLaw::Gain),
        ] {
            if rate > 0.0 {
                transitions.push(Transition {
                    from,
                    to,
                    rate,
                    law,
                });
            }
        }
    }

    match regime.kind {
        RegimeKind::Vsc => {
            for s in states {
                let Some(q_from) = s.occupation.excited_mode() else {
                    continue;
                };
                for q_to in 0..basis.labels.len() {
                    if q_to == q_from {
                        continue;
                    }
                    let rate = exchange_rate(q_from, q_to, basis, bath)?;
                    if rate > 0.0 {
                        let to = space
                            .index_of(s.config, Occupation::single(q_to))
                            .expect("singly excited states are enumerated");
                        transitions.push(Transition {
                            from: s.index,
                            to,
                            rate,
                            law: RateLaw::Exchange,
                        });
                    }
                }
            }
        }
        RegimeKind::Weak => {
            let mut k_out = vec![0.0; states.len()];
            for tr in &transitions {
                k_out[tr.from] += tr.rate;
            }
            let detuning = cavity.omega_c - basis.omega_v;
            let mut purcell = Vec::new();
            for s in states
                .iter()
                .filter(|s| s.occupation == Occupation::single(0))
            {
                for vib in 1..basis.labels.len() {
                    let v = space
                        .index_of(s.config, Occupation::single(vib))
                        .expect("singly excited states are enumerated");
                    let rate = purcell_exchange_rate(
                        k_out[s.index],
                        k_out[v],
                        regime.g_effective,
                        detuning,
                    )?;
                    if rate > 0.0 {
                        for (from, to) in [(s.index, v), (v, s.index)] {
                            purcell.push(Transition {
                                from,
                                to,
                                rate,
                                law: RateLaw::Purcell,
                            });
                        }
                    }
                }
            }
            transitions.extend(purcell);
        }
        RegimeKind::Bare => {}
    }

    RateMatrix::from_transitions(states.len(), transitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::build_mode_basis;
    use crate::network::BenchmarkReaction;
    use crate::states::enumerate_states;
    use approx::assert_relative_eq;

    const WV: f64 = 2000.0;
    const G: f64 = 0.03 * WV / std::f64::consts::SQRT_2;

    fn bath() -> BathSpec {
        BathSpec {
            gamma: 0.01,
            eta: 0.001,
            omega_cut: 0.1 * WV,
            temperature: 298.0,
        }
    }

    fn build(r: BenchmarkReaction, kind: RegimeKind) -> (StateSpace, RateMatrix) {
        let regime = RegimeSpec::new(kind, G);
        let cav = CavitySpec::new(WV, regime.g_effective, 1.0).unwrap();
        let net = r.network(WV);
        let basis = ModeBasis::for_kind(kind.basis_kind(), &cav, WV).unwrap();
        let space = enumerate_states(&net, &basis, &cav).unwrap();
        let k = assemble_rate_matrix(&space, &net, &basis, &cav, &bath(), &regime).unwrap();
        (space, k)
    }

    #[test]
    fn columns_conserve_population() {
        for r in BenchmarkReaction::ALL {
            for kind in RegimeKind::ALL {
                let (_, k) = build(r, kind);
                assert!(k.max_column_sum() < 1e-12, "{r:?} {kind:?}");
                for i in 0..k.dim() {
                    for j in 0..k.dim() {
                        if i != j {
                            assert!(k.rate(i, j) >= 0.0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bare_regime_has_no_vibration_cavity_entries() {
        let (space, k) = build(BenchmarkReaction::HotProduct, RegimeKind::Bare);
        assert_eq!(k.dim(), 16);
        for t in k.transitions() {
            assert!(matches!(
                t.law,
                RateLaw::Reactive | RateLaw::Loss | RateLaw::Gain
            ));
            let (a, b) = (&space.states()[t.from], &space.states()[t.to]);
            if a.config == b.config {
                // only loss/gain to and from the ground state
                assert!(a.occupation == Occupation::GROUND || b.occupation == Occupation::GROUND);
            }
        }
    }

    #[test]
    fn weak_regime_adds_symmetric_purcell_entries() {
        let (space, bare) = build(BenchmarkReaction::HotProduct, RegimeKind::Bare);
        let (_, weak) = build(BenchmarkReaction::HotProduct, RegimeKind::Weak);
        let mut n = 0;
        for t in weak.transitions() {
            if t.law == RateLaw::Purcell {
                n += 1;
                assert_eq!(weak.rate(t.to, t.from), t.rate);
                let s = &space.states()[t.from];
                let cav = Occupation::single(0);
                let expected = purcell_exchange_rate(
                    bare.outgoing(space.index_of(s.config, cav).unwrap()),
                    bare.outgoing(if s.occupation == cav { t.to } else { t.from }),
                    G * 0.01,
                    0.0,
                )
                .unwrap();
                assert_relative_eq!(t.rate, expected, max_relative = 1e-14);
            } else {
                assert_eq!(bare.rate(t.from, t.to), t.rate);
            }
        }
        // two vibrations × two directions × four configurations
        assert_eq!(n, 16);
    }

    #[test]
    fn vsc_regime_rates_match_direct_laws() {
        let (space, k) = build(BenchmarkReaction::HotProduct, RegimeKind::Vsc);
        let up = space.index_of([0, 0], Occupation::single(0)).unwrap();
        let dark = space.index_of([0, 0], Occupation::single(2)).unwrap();
        let ground = space.index_of([0, 0], Occupation::GROUND).unwrap();
        assert_relative_eq!(k.rate(up, ground), 0.505, max_relative = 1e-13);
        assert_relative_eq!(k.rate(dark, ground), 0.01, max_relative = 1e-13);
        let basis = build_mode_basis(&CavitySpec::new(WV, G, 1.0).unwrap(), WV).unwrap();
        assert_relative_eq!(
            k.rate(up, dark),
            exchange_rate(0, 2, &basis, &bath()).unwrap(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn mismatched_basis_is_rejected() {
        let cav = CavitySpec::new(WV, G, 1.0).unwrap();
        let net = BenchmarkReaction::HotProduct.network(WV);
        let basis = ModeBasis::bare(&cav, WV).unwrap();
        let space = enumerate_states(&net, &basis, &cav).unwrap();
        let regime = RegimeSpec::new(RegimeKind::Vsc, G);
        assert!(assemble_rate_matrix(&space, &net, &basis, &cav, &bath(), &regime).is_err());
    }

    #[test]
    fn duplicate_transitions_are_rejected() {
        let t = Transition {
            from: 0,
            to: 1,
            rate: 1.0,
            law: RateLaw::Loss,
        };
        assert!(RateMatrix::from_transitions(2, vec![t, t]).is_err());
        assert!(RateMatrix::from_transitions(2, vec![Transition { rate: -1.0, ..t }]).is_err());
    }
}
