//! Compare the deterministic product population with a kinetic Monte Carlo
//! estimate from the same generator.
use vsc_kinetics::propagate::{propagate, KmcSampler, TimeGrid};
use vsc_kinetics::scenario::{build_simulation, load_config};

fn main() -> vsc_kinetics::Result<()> {
    let config = load_config(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/configs/reaction1.json"
    ))?;
    let sim = build_simulation(&config)?;
    let b = sim.space.species_index("B").unwrap();
    let observable: Vec<f64> = sim
        .space
        .states()
        .iter()
        .map(|s| s.count(b) as f64)
        .collect();

    let grid = TimeGrid::log(10.0, 1e4, 7)?;
    let exact = propagate(&sim.rates, &sim.initial, &grid)?;
    let kmc = KmcSampler::new(&sim.rates).estimate(
        &sim.initial,
        &observable,
        grid.points(),
        20_000,
        7,
    )?;

    println!("t_ps,exact_N_B,kmc_N_B,std_error,z");
    for (i, t) in grid.points().iter().enumerate() {
        let n: f64 = exact[i].iter().zip(&observable).map(|(p, o)| p * o).sum();
        let z = (kmc.mean[i] - n) / kmc.std_error[i].max(f64::MIN_POSITIVE);
        println!(
            "{t:.1},{n:.5},{:.5},{:.1e},{z:+.2}",
            kmc.mean[i], kmc.std_error[i]
        );
    }
    Ok(())
}
