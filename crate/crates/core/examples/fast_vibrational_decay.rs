//! Raising the bath friction makes vibrational relaxation outrun the
//! reaction, which shrinks the cavity effect.
use vsc_kinetics::rates::RegimeKind;
use vsc_kinetics::scenario::{load_config, run_scenario};

fn main() -> vsc_kinetics::Result<()> {
    let base = load_config(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/configs/reaction1.json"
    ))?;
    println!("gamma,frac_B_bare,frac_B_vsc,difference");
    for gamma in [0.01, 0.1, 1.0, 10.0] {
        let mut frac = [0.0; 2];
        for (slot, kind) in [RegimeKind::Bare, RegimeKind::Vsc].into_iter().enumerate() {
            let mut c = base.clone();
            c.bath.gamma = gamma;
            c.regime = kind;
            frac[slot] = run_scenario(&c)?.trajectory.fraction_at("B", 300.0)?;
        }
        println!(
            "{gamma},{:.4},{:.4},{:.2e}",
            frac[0],
            frac[1],
            (frac[1] - frac[0]).abs()
        );
    }
    Ok(())
}
