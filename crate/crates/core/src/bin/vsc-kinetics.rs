use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vsc_kinetics::modes::{build_displacements, Occupation, N_MOLECULES};
use vsc_kinetics::propagate::{ssa_reaction_rate, vsc_scaling_criterion};
use vsc_kinetics::rates::{displacement_matrix_element, franck_condon_vsc, RegimeKind};
use vsc_kinetics::scenario::{
    build_simulation, load_config, render, run_comparison, run_scenario, run_sweep, Format,
    ScenarioConfig, SweepParameter, SweepSpec,
};
use vsc_kinetics::{Error, Result};

#[derive(Parser)]
#[command(
    name = "vsc-kinetics",
    version,
    about = "Electron-transfer kinetics under vibrational strong coupling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate one scenario.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Override the config's regime (bare, weak or vsc).
        #[arg(long)]
        regimes: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Propagate one scenario in several coupling regimes side by side.
    Compare {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "bare,weak,vsc")]
        regimes: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Propagate a family of scenarios differing in one parameter.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// kappa (ps⁻¹), eta, gamma (ps⁻¹) or g (cm⁻¹).
        #[arg(long)]
        param: String,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        values: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate ε/N against k_d/(k_r + k_d).
    Criterion {
        #[arg(long)]
        epsilon: f64,
        /// Number of coupled molecules.
        #[arg(long = "n")]
        n: f64,
        /// Reverse rate of the hot product back to the reactant, ps⁻¹.
        #[arg(long)]
        k_r: f64,
        /// Decay rate of the hot product, ps⁻¹.
        #[arg(long)]
        k_d: f64,
        /// Forward rate, ps⁻¹; when given the steady-state rate is reported.
        #[arg(long)]
        k_f: Option<f64>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Print displacement matrix elements, or with --config the per-mode
    /// displacements and ground-state Franck-Condon factors of each
    /// coupled pair.
    Fcf {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        max_occupation: u32,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn fcf_table(lambdas: &[f64], max_m: u32) -> String {
    let mut s = String::from("lambda,m_in,m_out,element,fc\n");
    for &l in lambdas {
        for m_in in 0..=max_m {
            for m_out in 0..=max_m {
                let d = displacement_matrix_element(m_out, m_in, l);
                s += &format!("{l},{m_in},{m_out},{d:.15e},{:.15e}\n", d * d);
            }
        }
    }
    s
}

fn fcf_config(config: &ScenarioConfig) -> Result<String> {
    let sim = build_simulation(config)?;
    let net = &config.network;
    let table = build_displacements(&sim.basis, net);
    let modes: Vec<&str> = sim.basis.labels.iter().map(|l| l.symbol()).collect();
    let mut s = String::from("species,molecule,mode,displacement\n");
    for (phi, sp) in net.species().iter().enumerate() {
        for i in 0..N_MOLECULES {
            for (q, m) in modes.iter().enumerate() {
                s += &format!(
                    "{},{},{m},{:.15e}\n",
                    sp.label,
                    i + 1,
                    table.per_molecule(phi, i, q) + 0.0
                );
            }
        }
    }
    s += "\nfrom,to,molecule,m_out,fc\n";
    for c in net.couplings().iter().filter(|c| c.j != 0.0) {
        let a = net.species_index(&c.pair[0]).expect("validated");
        let b = net.species_index(&c.pair[1]).expect("validated");
        for m_out in Occupation::truncated_manifold() {
            let label = m_out.excited_mode().map_or("0", |q| modes[q]);
            let fc = franck_condon_vsc(&m_out, &Occupation::GROUND, 0, a, b, &table);
            s += &format!("{},{},1,{label},{fc:.15e}\n", c.pair[0], c.pair[1]);
        }
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Simulate {
            config,
            regimes,
            output,
        } => {
            let mut cfg = load_config(&config)?;
            if let Some(r) = regimes {
                cfg.regime = r.parse()?;
            }
            let run = run_scenario(&cfg)?;
            emit(
                &render(&[run], output.format.parse()?)?,
                output.out.as_ref(),
            )
        }
        Command::Compare {
            config,
            regimes,
            output,
        } => {
            let cfg = load_config(&config)?;
            let regimes = regimes
                .iter()
                .filter(|r| !r.trim().is_empty())
                .map(|r| r.parse::<RegimeKind>())
                .collect::<Result<Vec<_>>>()?;
            let runs = run_comparison(&cfg, &regimes)?;
            emit(&render(&runs, output.format.parse()?)?, output.out.as_ref())
        }
        Command::Sweep {
            config,
            param,
            values,
            output,
        } => {
            let sweep = SweepSpec {
                parameter: param.parse::<SweepParameter>()?,
                values,
                base: load_config(&config)?,
            };
            let runs = run_sweep(&sweep)?;
            emit(&render(&runs, output.format.parse()?)?, output.out.as_ref())
        }
        Command::Criterion {
            epsilon,
            n,
            k_r,
            k_d,
            k_f,
            format,
        } => {
            let c = vsc_scaling_criterion(epsilon, n, k_r, k_d)?;
            let ssa = k_f.map(|k| ssa_reaction_rate(k, k_r, k_d)).transpose()?;
            let text = match format.parse::<Format>()? {
                Format::Json => {
                    let mut v = serde_json::to_value(c).expect("plain struct");
                    if let Some(rate) = ssa {
                        v["ssa_rate"] = rate.into();
                    }
                    format!("{v}\n")
                }
                Format::Csv => {
                    let mut t = format!(
                        "modifiable,lhs,rhs\n{},{:e},{:e}\n",
                        c.modifiable, c.lhs, c.rhs
                    );
                    if let Some(rate) = ssa {
                        t += &format!("ssa_rate,{rate:e}\n");
                    }
                    t
                }
            };
            emit(&text, None)
        }
        Command::Fcf {
            lambda,
            max_occupation,
            config,
        } => {
            let text = match config {
                Some(path) => fcf_config(&load_config(path)?)?,
                None if lambda.is_empty() => {
                    return Err(Error::Validation("fcf needs --lambda or --config".into()))
                }
                None => fcf_table(&lambda, max_occupation),
            };
            emit(&text, None)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
