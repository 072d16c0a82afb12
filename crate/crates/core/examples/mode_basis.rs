//! Polariton and dark modes across a cavity detuning scan.
use vsc_kinetics::modes::{build_mode_basis, CavitySpec};

fn main() -> vsc_kinetics::Result<()> {
    let omega_v = 2000.0;
    let g = 0.03 * omega_v / 2f64.sqrt();
    println!("omega_c,omega_plus,omega_minus,omega_dark,theta,photon_plus,photon_minus");
    for detuning in [-100.0, -50.0, 0.0, 50.0, 100.0] {
        let cavity = CavitySpec::new(omega_v + detuning, g, 1.0)?;
        let b = build_mode_basis(&cavity, omega_v)?;
        println!(
            "{},{:.3},{:.3},{:.3},{:.4},{:.4},{:.4}",
            cavity.omega_c,
            b.frequencies[0],
            b.frequencies[1],
            b.frequencies[2],
            b.mixing_angle,
            b.photonic_weight(0),
            b.photonic_weight(1),
        );
    }
    Ok(())
}
