//! A -> B -> C with a vibrationally hot intermediate: how much B builds up
//! before it drains into C.
use vsc_kinetics::rates::RegimeKind;
use vsc_kinetics::scenario::{load_config, run_comparison};

fn main() -> vsc_kinetics::Result<()> {
    let config = load_config(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/configs/reaction3.json"
    ))?;
    for run in run_comparison(&config, &[RegimeKind::Bare, RegimeKind::Vsc])? {
        let tr = &run.trajectory;
        let b = tr.fraction_series("B")?;
        let (i, peak) =
            b.iter()
                .copied()
                .enumerate()
                .fold((0, 0.0), |m, (i, v)| if v > m.1 { (i, v) } else { m });
        let t_end = *tr.times().last().unwrap();
        println!(
            "{}: B peaks at {:.3} near {:.0} ps; C reaches {:.3} by {:.0} ps",
            run.name,
            peak,
            tr.times()[i],
            tr.fraction_at("C", t_end)?,
            t_end
        );
    }
    Ok(())
}
