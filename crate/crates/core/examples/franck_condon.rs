//! Displaced-oscillator overlaps and how the polariton basis splits a
//! local displacement between the modes.
use vsc_kinetics::modes::{build_displacements, build_mode_basis, CavitySpec};
use vsc_kinetics::network::BenchmarkReaction;
use vsc_kinetics::rates::displacement_matrix_element;

fn main() -> vsc_kinetics::Result<()> {
    println!("lambda,m_out,m_in,fcf");
    for lambda in [0.5, 1.0, 1.5] {
        for m_in in 0..=1 {
            for m_out in 0..=2 {
                let fcf = displacement_matrix_element(m_out, m_in, lambda).powi(2);
                println!("{lambda},{m_out},{m_in},{fcf:.6}");
            }
        }
    }

    let omega_v = 2000.0;
    let cavity = CavitySpec::new(omega_v, 0.03 * omega_v / 2f64.sqrt(), 1.0)?;
    let basis = build_mode_basis(&cavity, omega_v)?;
    let net = BenchmarkReaction::HotProduct.network(omega_v);
    let table = build_displacements(&basis, &net);
    println!("\nspecies B, molecule 1 displacement per mode");
    for (q, label) in basis.labels.iter().enumerate() {
        println!("{label}: {:+.5}", table.per_molecule(1, 0, q));
    }
    Ok(())
}
