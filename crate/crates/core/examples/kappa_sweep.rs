//! Cavity loss sweep under strong coupling. Pass a path to also write the
//! full CSV.
use vsc_kinetics::scenario::{export, load_config, run_sweep, Format, SweepParameter, SweepSpec};

fn main() -> vsc_kinetics::Result<()> {
    let mut base = load_config(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/configs/reaction1.json"
    ))?;
    base.regime = vsc_kinetics::rates::RegimeKind::Vsc;
    let sweep = SweepSpec {
        parameter: SweepParameter::Kappa,
        values: vec![0.0, 0.1, 1.0, 10.0],
        base,
    };
    let runs = run_sweep(&sweep)?;
    for run in &runs {
        println!(
            "{}: frac B at 500 ps = {:.4}",
            run.name,
            run.trajectory.fraction_at("B", 500.0)?
        );
    }
    if let Some(path) = std::env::args().nth(1) {
        export(&runs, Format::Csv, path)?;
    }
    Ok(())
}
