//! Assemble the generator for one benchmark and tally transitions by kind.
use std::collections::BTreeMap;

use vsc_kinetics::scenario::build_simulation;
use vsc_kinetics::scenario::load_config;

fn main() -> vsc_kinetics::Result<()> {
    let config = load_config(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/configs/reaction1.json"
    ))?;
    let sim = build_simulation(&config)?;
    let fastest = (0..sim.space.len())
        .map(|i| sim.rates.outgoing(i))
        .fold(0.0, f64::max);
    println!(
        "{} states, fastest escape rate {fastest:.3e} ps^-1",
        sim.space.len()
    );
    let mut tally: BTreeMap<String, (usize, f64)> = BTreeMap::new();
    for t in sim.rates.transitions() {
        let e = tally.entry(format!("{:?}", t.law)).or_default();
        e.0 += 1;
        e.1 = e.1.max(t.rate);
    }
    for (law, (count, fastest)) in tally {
        println!("{law:<9} {count:>4} transitions, fastest {fastest:.3e} ps^-1");
    }
    for i in 0..sim.space.len() {
        println!(
            "{:<16} {:>10.2} cm^-1  p0={:.3e}",
            sim.space.label(i),
            sim.space.energies()[i],
            sim.initial[i]
        );
    }
    Ok(())
}
