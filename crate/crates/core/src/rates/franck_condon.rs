//! Displacement-operator matrix elements and generalized Franck-Condon
//! factors.

use crate::modes::{DisplacementTable, Occupation, N_MODES, N_MOLECULES};

/// Generalized Laguerre polynomial L_n^{(α)}(x) by the three-term
/// recurrence.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// ⟨m_out| D(λ) |m_in⟩ for a real displacement λ, where
/// D(λ) = exp(λa† − λa).
///
/// For m_out ≥ m_in this is √(m_in!/m_out!) e^{−λ²/2} λ^{m_out−m_in}
/// L_{m_in}^{(m_out−m_in)}(λ²); otherwise the roles of the occupations are
/// exchanged and λ → −λ.
pub fn displacement_matrix_element(m_out: u32, m_in: u32, lambda: f64) -> f64 {
    let (hi, lo, lam) = if m_out >= m_in {
        (m_out, m_in, lambda)
    } else {
        (m_in, m_out, -lambda)
    };
    let k = hi - lo;
    // √(lo!/hi!) as a running product, never a factorial ratio
    let mut ratio = 1.0;
    for j in (lo + 1)..=hi {
        ratio /= j as f64;
    }
    let x = lam * lam;
    ratio.sqrt() * (-0.5 * x).exp() * lam.powi(k as i32) * laguerre(lo, k as f64, x)
}

/// |Π_q ⟨m′_q| D_q(λ^{(i)}_{φ′q} − λ^{(i)}_{φq}) |m_q⟩|² for molecule `i`
/// (0-based) reacting from species `from` to `to`, polariton/dark basis.
pub fn franck_condon_vsc(
    m_out: &Occupation,
    m_in: &Occupation,
    molecule: usize,
    from: usize,
    to: usize,
    table: &DisplacementTable,
) -> f64 {
    debug_assert!(molecule < N_MOLECULES);
    let amplitude: f64 = (0..N_MODES)
        .map(|q| {
            let shift = table.per_molecule(to, molecule, q) - table.per_molecule(from, molecule, q);
            displacement_matrix_element(m_out.0[q], m_in.0[q], shift)
        })
        .product();
    amplitude * amplitude
}

/// Local-basis Franck-Condon factor: zero unless the cavity and the
/// spectator vibration keep their occupations, otherwise
/// |⟨m′_i| D(λ_to − λ_from) |m_i⟩|². Occupations are (cavity, vib₁, vib₂).
pub fn franck_condon_bare(
    m_out: &Occupation,
    m_in: &Occupation,
    molecule: usize,
    lambda_from: f64,
    lambda_to: f64,
) -> f64 {
    debug_assert!(molecule < N_MOLECULES);
    let reacting = molecule + 1;
    let spectator = N_MOLECULES - molecule;
    if m_out.0[0] != m_in.0[0] || m_out.0[spectator] != m_in.0[spectator] {
        return 0.0;
    }
    let amp =
        displacement_matrix_element(m_out.0[reacting], m_in.0[reacting], lambda_to - lambda_from);
    amp * amp
}
