use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vsc-kinetics"))
}

fn bundled(n: u8) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join(format!("configs/reaction{n}.json"))
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn simulate_writes_identical_csv_twice() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let o = run(&[
            "simulate",
            "--config",
            &bundled(1),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert!(text.starts_with("# config_fingerprint="));
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
}

#[test]
fn simulate_regime_override() {
    let o = run(&[
        "simulate",
        "--config",
        &bundled(1),
        "--regimes",
        "bare",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["runs"][0]["regime"]["kind"], "bare");
    assert_eq!(doc["runs"][0]["regime"]["g_effective"], 0.0);
}

#[test]
fn compare_emits_one_run_per_regime() {
    let o = run(&[
        "compare",
        "--config",
        &bundled(3),
        "--regimes",
        "bare,weak,vsc",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = doc["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["bare", "weak", "vsc"]);
}

#[test]
fn sweep_prefixes_columns_in_value_order() {
    let o = run(&[
        "sweep",
        "--config",
        &bundled(1),
        "--param",
        "eta",
        "--values",
        "0.001,0",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let header = text.lines().nth(1).unwrap();
    let first_eta0 = header.find("eta=0:").unwrap();
    assert!(header.find("eta=0.001:").unwrap() < first_eta0);
    assert_eq!(header.split(',').count(), 1 + 2 * 20);
}

#[test]
fn criterion_worked_cases() {
    let o = run(&[
        "criterion",
        "--epsilon",
        "1",
        "--n",
        "1e6",
        "--k-r",
        "1",
        "--k-d",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "modifiable,lhs,rhs\nfalse,1e-6,5e-1\n");
    let o = run(&[
        "criterion",
        "--epsilon",
        "1",
        "--n",
        "2",
        "--k-r",
        "1",
        "--k-d",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["modifiable"], true);
    let o = run(&[
        "criterion",
        "--epsilon",
        "1",
        "--n",
        "1e6",
        "--k-r",
        "1e9",
        "--k-d",
        "1",
        "--k-f",
        "2",
    ]);
    assert!(stdout(&o).starts_with("modifiable,lhs,rhs\ntrue,"));
    assert!(stdout(&o).contains("ssa_rate,"));
}

#[test]
fn fcf_tables() {
    let o = run(&["fcf", "--lambda", "0.5,1.5", "--max-occupation", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 2 * 4);
    let o = run(&["fcf", "--config", &bundled(1)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("B,1,d,1.06066"));
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(bundled(1))
        .unwrap()
        .replace("\"lambda_s\": 0.08", "\"lambda_s\": -0.08");
    std::fs::write(&bad, text).unwrap();
    let o = run(&["simulate", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("lambda_s"));

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"species\": [,\n}").unwrap();
    let o = run(&["simulate", "--config", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    for args in [
        vec!["compare", "--config", &bundled(1), "--regimes", "strongest"],
        vec![
            "sweep",
            "--config",
            &bundled(1),
            "--param",
            "omega",
            "--values",
            "1",
        ],
        vec![
            "sweep",
            "--config",
            &bundled(1),
            "--param",
            "kappa",
            "--values",
            "-1",
        ],
        vec!["simulate", "--config", &bundled(1), "--format", "xml"],
        vec![
            "criterion",
            "--epsilon",
            "1",
            "--n",
            "10",
            "--k-r",
            "0",
            "--k-d",
            "0",
        ],
        vec!["fcf"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn numerical_failures_exit_3() {
    // without coupling or detuning the polariton and dark modes coincide,
    // and exchange between degenerate modes has no rate
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("degenerate.json");
    let text = std::fs::read_to_string(bundled(1))
        .unwrap()
        .replace("\"g\": 0.021213203435596423", "\"g\": 0.0");
    std::fs::write(&path, text).unwrap();
    let o = run(&["simulate", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}
