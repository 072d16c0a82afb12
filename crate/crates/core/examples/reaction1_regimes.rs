//! Product rise in the bare, weak and strong coupling regimes.
use vsc_kinetics::rates::RegimeKind;
use vsc_kinetics::scenario::{load_config, run_comparison};

fn main() -> vsc_kinetics::Result<()> {
    let config = load_config(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/configs/reaction1.json"
    ))?;
    let runs = run_comparison(&config, &RegimeKind::ALL)?;
    println!("regime,t_half_ps,frac_B_at_1ns");
    for run in &runs {
        let tr = &run.trajectory;
        let half = tr.crossing_time("B", 0.5)?;
        let half = half.map_or("never".to_string(), |t| format!("{t:.1}"));
        println!("{},{},{:.4}", run.name, half, tr.fraction_at("B", 1000.0)?);
    }
    Ok(())
}
