//! When can a collective cavity still change a rate? Scan the molecule
//! number against the competition between reaction and decay.
use vsc_kinetics::propagate::{
    polaritonic_reaction_rate, ssa_reaction_rate, vsc_scaling_criterion,
};

fn main() -> vsc_kinetics::Result<()> {
    let (eps, k_f) = (1.0, 1.0);
    println!("n,k_r/k_d,lhs,rhs,modifiable,ssa_rate,polaritonic_rate");
    for n in [1e1, 1e3, 1e6, 1e10] {
        for ratio in [1e-3, 1.0, 1e6, 1e12] {
            let out = vsc_scaling_criterion(eps, n, ratio, 1.0)?;
            println!(
                "{n:e},{ratio:e},{:.3e},{:.3e},{},{:.3e},{:.3e}",
                out.lhs,
                out.rhs,
                out.modifiable,
                ssa_reaction_rate(k_f, ratio, 1.0)?,
                polaritonic_reaction_rate(eps, k_f, n)?
            );
        }
    }
    Ok(())
}
