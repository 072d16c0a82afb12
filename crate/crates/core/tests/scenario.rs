use std::path::{Path, PathBuf};

use vsc_kinetics::modes::{Occupation, N_MOLECULES};
use vsc_kinetics::network::BenchmarkReaction;
use vsc_kinetics::propagate::{normalized_species_fraction, species_population};
use vsc_kinetics::rates::RegimeKind;
use vsc_kinetics::scenario::{
    build_simulation, configs_from_json, load_config, render_csv, render_json, run_comparison,
    run_scenario, run_sweep, ScenarioConfig, SweepParameter, SweepSpec,
};
use vsc_kinetics::Error;

fn bundled(n: u8) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("configs/reaction{n}.json"))
}

fn parse(text: &str) -> vsc_kinetics::Result<ScenarioConfig> {
    ScenarioConfig::from_json_str(text, Path::new("inline.json"))
}

const MINIMAL: &str = r#"{
  "species": [{"label": "A", "energy": 0, "displacement": 0},
              {"label": "B", "energy": -1200, "displacement": 1.5}],
  "couplings": [{"pair": ["A", "B"], "j": 20, "lambda_s": 160}],
  "reactant": "A"
}"#;

#[test]
fn bundled_configs_carry_table_values() {
    // (E_B, λ_B, J, λ_s) in ħω_v for the first coupling, as tabulated
    let table = [
        (1, -0.6, 1.5, 0.01, 0.08),
        (2, 0.95, 1.0, 0.002, 0.05),
        (3, -1.05, 1.5, 0.0003, 0.05),
    ];
    for (n, e_b, l_b, j, ls) in table {
        let c = load_config(bundled(n)).unwrap();
        assert_eq!(c.omega_v, 2000.0);
        let b = &c.network.species()[1];
        assert_eq!(
            (b.label.as_str(), b.energy, b.displacement),
            ("B", e_b * 2000.0, l_b)
        );
        let ab = &c.network.couplings()[0];
        assert_eq!((ab.j, ab.lambda_s), (j * 2000.0, ls * 2000.0));
        assert_eq!(c.bath.temperature, 298.0);
        assert!((c.cavity.g - 0.03 * 2000.0 / 2f64.sqrt()).abs() < 1e-12);
    }
    let c3 = load_config(bundled(3)).unwrap();
    let cc = &c3.network.species()[2];
    assert_eq!((cc.energy, cc.displacement), (-1.35 * 2000.0, 4.5));
    let bc = &c3.network.couplings()[1];
    assert_eq!((bc.j, bc.lambda_s), (0.02 * 2000.0, 0.3 * 2000.0));
}

#[test]
fn bundled_configs_match_builtin_benchmarks_in_both_units() {
    for r in BenchmarkReaction::ALL {
        let c = load_config(bundled(r.number())).unwrap();
        let reference = r.network(2000.0);
        for (a, b) in c.network.species().iter().zip(reference.species()) {
            assert!((a.energy - b.energy).abs() < 1e-12 && a.displacement == b.displacement);
        }
        for (a, b) in c.network.couplings().iter().zip(reference.couplings()) {
            assert!((a.j - b.j).abs() < 1e-12 && (a.lambda_s - b.lambda_s).abs() < 1e-12);
        }
        let wavenumber = serde_json::to_string(&c.to_file()).unwrap();
        assert!(wavenumber.contains("\"energy_unit\":\"cm-1\""));
        assert_eq!(parse(&wavenumber).unwrap().network, c.network);
    }
}

#[test]
fn omitted_blocks_take_defaults() {
    let c = parse(MINIMAL).unwrap();
    assert_eq!(c.bath.gamma, 0.01);
    assert_eq!(c.bath.eta, 0.001);
    assert_eq!(c.bath.omega_cut, 200.0);
    assert_eq!(c.bath.temperature, 298.0);
    assert_eq!(c.cavity.kappa, 1.0);
    assert_eq!(c.cavity.omega_c, 2000.0);
    assert_eq!(c.regime, RegimeKind::Vsc);
    assert_eq!(c.grid.len(), 400);
    assert_eq!(c.grid.points()[0], 0.1);
    assert_eq!(c.grid.t_end(), 5e4);
}

#[test]
fn partial_blocks_fill_the_rest() {
    let text = MINIMAL.replace(
        "\"reactant\": \"A\"",
        "\"reactant\": \"A\", \"bath\": {\"gamma\": 1.0}",
    );
    let c = parse(&text).unwrap();
    assert_eq!((c.bath.gamma, c.bath.eta), (1.0, 0.001));
}

#[test]
fn invalid_configs_name_the_problem() {
    let negative = MINIMAL.replace("\"lambda_s\": 160", "\"lambda_s\": -160");
    match parse(&negative) {
        Err(Error::Validation(m)) => assert!(m.contains("lambda_s"), "{m}"),
        other => panic!("{other:?}"),
    }
    let missing = MINIMAL.replace("\"reactant\": \"A\"", "\"reactant\": \"Z\"");
    assert!(matches!(parse(&missing), Err(Error::Validation(_))));
    let kappa = MINIMAL.replace(
        "\"reactant\": \"A\"",
        "\"reactant\": \"A\", \"cavity\": {\"kappa\": -1}",
    );
    assert!(matches!(parse(&kappa), Err(Error::Validation(_))));
}

#[test]
fn parse_errors_carry_position() {
    let broken = MINIMAL.replace("\"j\": 20,", "\"j\": 20,,");
    match parse(&broken) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    let unknown = MINIMAL.replace("\"reactant\"", "\"temperature\": 300, \"reactant\"");
    assert!(matches!(parse(&unknown), Err(Error::Parse { .. })));
}

#[test]
fn species_observables() {
    let sim = build_simulation(&load_config(bundled(1)).unwrap()).unwrap();
    let space = &sim.space;
    assert!((species_population(&sim.initial, space, "A").unwrap() - 2.0).abs() < 1e-15);
    assert_eq!(species_population(&sim.initial, space, "B").unwrap(), 0.0);
    assert!((normalized_species_fraction(&sim.initial, space, "A").unwrap() - 1.0).abs() < 1e-15);

    let mut uniform = vec![0.0; space.len()];
    for config in [[0, 0], [0, 1], [1, 0], [1, 1]] {
        uniform[space.index_of(config, Occupation::GROUND).unwrap()] = 0.25;
    }
    assert_eq!(species_population(&uniform, space, "A").unwrap(), 1.0);
    assert_eq!(
        normalized_species_fraction(&uniform, space, "B").unwrap(),
        0.5
    );

    let mut done = vec![0.0; space.len()];
    done[space.index_of([1, 1], Occupation::GROUND).unwrap()] = 1.0;
    assert_eq!(normalized_species_fraction(&done, space, "B").unwrap(), 1.0);

    assert!(species_population(&uniform, space, "Q").is_err());
    assert!(species_population(&uniform[1..], space, "A").is_err());
}

#[test]
fn trajectories_conserve_population_and_molecules() {
    for n in 1..=3 {
        let run = run_scenario(&load_config(bundled(n)).unwrap()).unwrap();
        let t = &run.trajectory;
        for (row, species) in t.state_populations.iter().zip(&t.species_populations) {
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-9);
            assert!(row.iter().all(|&p| p > -1e-10));
            assert!((species.iter().sum::<f64>() - N_MOLECULES as f64).abs() < 1e-9);
            assert!(species.iter().all(|&s| (-1e-12..=2.0 + 1e-12).contains(&s)));
        }
    }
}

#[test]
fn reaction1_bare_rises_on_nanoseconds() {
    let mut c = load_config(bundled(1)).unwrap();
    c.regime = RegimeKind::Bare;
    let t = run_scenario(&c).unwrap().trajectory;
    assert!(t.fraction_at("B", 100.0).unwrap() < 0.05);
    let half = t.crossing_time("B", 0.5).unwrap().unwrap();
    assert!((3e3..3e4).contains(&half), "{half}");
    assert!(t.fraction_at("B", 5e4).unwrap() > 0.95);
}

#[test]
fn comparison_orders_regimes_in_the_rise_window() {
    let c = load_config(bundled(1)).unwrap();
    let runs = run_comparison(&c, &[RegimeKind::Vsc, RegimeKind::Weak, RegimeKind::Bare]).unwrap();
    let names: Vec<&str> = runs.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["vsc", "weak", "bare"]);
    let f: Vec<Vec<f64>> = runs
        .iter()
        .map(|r| r.trajectory.fraction_series("B").unwrap())
        .collect();
    for (k, &t) in runs[0].trajectory.times().iter().enumerate() {
        if (1e3..=2e4).contains(&t) {
            assert!(f[0][k] >= f[1][k] && f[1][k] >= f[2][k], "t = {t}");
        }
    }
    assert!(matches!(run_comparison(&c, &[]), Err(Error::Validation(_))));
    let single = run_comparison(&c, &[RegimeKind::Vsc]).unwrap();
    assert_eq!(
        single[0].trajectory.state_populations,
        run_scenario(&c).unwrap().trajectory.state_populations
    );
}

#[test]
fn kappa_sweep_approaches_bare() {
    let base = load_config(bundled(1)).unwrap();
    let values = vec![1.0, 0.1, 0.01, 0.0];
    let runs = run_sweep(&SweepSpec {
        parameter: SweepParameter::Kappa,
        values: values.clone(),
        base: base.clone(),
    })
    .unwrap();
    let names: Vec<String> = runs.iter().map(|r| r.name.clone()).collect();
    assert_eq!(names, ["kappa=1", "kappa=0.1", "kappa=0.01", "kappa=0"]);
    let at =
        |r: &vsc_kinetics::scenario::ScenarioRun| r.trajectory.fraction_at("B", 6000.0).unwrap();
    for w in runs.windows(2) {
        assert!(at(&w[0]) > at(&w[1]));
    }
    let bare = run_scenario(&ScenarioConfig {
        regime: RegimeKind::Bare,
        ..base.clone()
    })
    .unwrap();
    assert!(at(&runs[3]) - at(&bare) < 0.5 * (at(&runs[0]) - at(&bare)));

    let empty = SweepSpec {
        parameter: SweepParameter::Eta,
        values: vec![],
        base: base.clone(),
    };
    assert!(matches!(run_sweep(&empty), Err(Error::Validation(_))));
    let bad = SweepSpec {
        parameter: SweepParameter::Gamma,
        values: vec![-1.0],
        base,
    };
    assert!(matches!(run_sweep(&bad), Err(Error::Validation(_))));
}

#[test]
fn csv_layout_and_determinism() {
    let c = load_config(bundled(1)).unwrap();
    let run = run_scenario(&c).unwrap();
    let csv = render_csv(std::slice::from_ref(&run)).unwrap();
    let mut lines = csv.lines();
    let fingerprint = lines.next().unwrap();
    assert_eq!(
        fingerprint,
        format!(
            "# config_fingerprint={}",
            vsc_kinetics::scenario::runs_fingerprint(std::slice::from_ref(&run))
        )
    );
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 1 + 16 + 2 * 2);
    assert_eq!(header[0], "time_ps");
    assert_eq!(header[1], "p[A|A;0]");
    assert_eq!(&header[17..], ["N[A]", "frac[A]", "N[B]", "frac[B]"]);
    assert_eq!(lines.count(), 400);

    let again = render_csv(&[run_scenario(&c).unwrap()]).unwrap();
    assert_eq!(csv, again);
    let single_thread = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let runs = single_thread
        .install(|| run_comparison(&c, &[RegimeKind::Bare, RegimeKind::Vsc]))
        .unwrap();
    let parallel = run_comparison(&c, &[RegimeKind::Bare, RegimeKind::Vsc]).unwrap();
    assert_eq!(render_json(&runs).unwrap(), render_json(&parallel).unwrap());
}

#[test]
fn json_export_round_trips_the_effective_config() {
    let c = load_config(bundled(3)).unwrap();
    let runs = run_comparison(&c, &[RegimeKind::Bare, RegimeKind::Weak]).unwrap();
    let text = render_json(&runs).unwrap();
    let back = configs_from_json(&text).unwrap();
    assert_eq!(back.len(), 2);
    assert_eq!(
        back[0],
        ScenarioConfig {
            regime: RegimeKind::Bare,
            ..c.clone()
        }
    );
    assert_eq!(
        back[1],
        ScenarioConfig {
            regime: RegimeKind::Weak,
            ..c
        }
    );
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["runs"][0]["species"][2]["label"], "C");
    assert_eq!(
        doc["runs"][0]["state_populations"][0]
            .as_array()
            .unwrap()
            .len(),
        36
    );
}
