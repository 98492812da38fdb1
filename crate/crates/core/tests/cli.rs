use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_bures-discord");
const SMALL_GRID: [&str; 4] = ["--grid-theta", "32", "--grid-psi", "64"];

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_out(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn with_grid<'a>(args: &[&'a str]) -> Vec<&'a str> {
    args.iter().copied().chain(SMALL_GRID).collect()
}

const COUNTEREXAMPLE: &str = r#"{"kind":"x_state","x_state":{"a":0.3333333333333333,"b":0.3333333333333333,
"c":0.16666666666666666,"d":0.16666666666666666,"x_re":0.16666666666666666,"x_im":0,"y_re":0.16666666666666666,"y_im":0}}"#;

#[test]
fn discord_werner_endpoints() {
    let zero = json_out(&run(&with_grid(&["discord"]), r#"{"kind":"werner","werner":0}"#));
    assert!(zero["discord"].as_f64().unwrap().abs() < 1e-12);
    let one = json_out(&run(&with_grid(&["discord"]), r#"{"kind":"werner","werner":1}"#));
    assert!((one["discord"].as_f64().unwrap() - (2.0 - 2f64.sqrt())).abs() < 2e-6);
    let brute = json_out(&run(&with_grid(&["discord", "--method", "bruteforce"]), r#"{"kind":"werner","werner":1}"#));
    assert!((brute["discord"].as_f64().unwrap() - (2.0 - 2f64.sqrt())).abs() < 2e-6);
    assert_eq!(brute["method"], "bruteforce");
}

#[test]
fn discord_reports_candidate_gap_and_trace() {
    let r = json_out(&run(&with_grid(&["discord"]), COUNTEREXAMPLE));
    assert_eq!(r["method"], "bruteforce");
    assert!(r["dispatch"].as_array().unwrap().len() >= 2);
    let gap = r["candidate_gap"].as_f64().unwrap();
    // The numerical optimum coincides with the equatorial candidate here.
    assert!(gap >= -1e-9 && gap < 1e-9, "gap {gap}");
}

#[test]
fn discord_round_trip_is_deterministic() {
    let first = run(&with_grid(&["discord"]), COUNTEREXAMPLE);
    let second = run(&with_grid(&["discord"]), COUNTEREXAMPLE);
    assert_eq!(first.stdout, second.stdout);
    let parsed: Value = json_out(&first);
    let f = parsed["fidelity"].as_f64().unwrap();
    assert_eq!(format!("{f:?}").parse::<f64>().unwrap(), f);
}

#[test]
fn invalid_input_exits_2_with_json_error() {
    let out = run(&["discord"], r#"{"kind":"werner","werner":1.5}"#);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "invalid_params");
    let out = run(&["discord"], "not json");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["discord", "--grid-theta", "4"], r#"{"kind":"werner","werner":0.5}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_file_exits_3() {
    let out = run(&["discord", "--input", "/nonexistent/state.json"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ccs_for_classical_input_echoes_state() {
    let spec = r#"{"kind":"classical","classical":{"p":0.3,"r":[0.6,0,0.8],"s":[0.1,0.2,0.3],"t":[0,-0.4,0.2]}}"#;
    let r = json_out(&run(&with_grid(&["ccs"]), spec));
    assert!((r["fidelity_check"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert_eq!(r["a_classical"], true);
}

#[test]
fn ccs_axial_x_state_is_diagonal() {
    let spec = r#"{"kind":"x_state","x_state":{"a":0.4,"b":0.3,"c":0.2,"d":0.1,"x_re":0.05,"y_re":0.1}}"#;
    let r = json_out(&run(&with_grid(&["ccs"]), spec));
    assert_eq!(r["source"], "axial_closed_form");
    for part in ["re", "im"] {
        let m = r["ccs"][part].as_array().unwrap();
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.as_array().unwrap().iter().enumerate() {
                if i != j {
                    assert!(v.as_f64().unwrap().abs() <= 1e-10);
                }
            }
        }
    }
    assert!((r["fidelity_check"].as_f64().unwrap() - r["claimed_fidelity"].as_f64().unwrap()).abs() < 1e-6);
}

#[test]
fn ccs_for_bell_has_fidelity_half() {
    let r = json_out(&run(&with_grid(&["ccs"]), r#"{"kind":"werner","werner":1}"#));
    assert!((r["fidelity_check"].as_f64().unwrap() - 0.5).abs() < 1e-6);
    let r = json_out(&run(&with_grid(&["ccs", "--theta", "0.7", "--psi", "2.0"]), r#"{"kind":"werner","werner":1}"#));
    assert_eq!(r["source"], "measurement_override");
    assert!((r["fidelity_check"].as_f64().unwrap() - 0.5).abs() < 1e-6);
}

#[test]
fn classical_command() {
    let r = json_out(&run(&["classical"], r#"{"kind":"werner","werner":0}"#));
    assert_eq!(r["c_bu"].as_f64().unwrap(), 0.0);
    let r = json_out(&run(&["classical"], r#"{"kind":"werner","werner":1}"#));
    assert!((r["c_bu"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let r = json_out(&run(&["classical"], r#"{"kind":"werner","werner":0.5}"#));
    assert!((r["c_bu"].as_f64().unwrap() - 0.1487704).abs() < 1e-7);
    assert!((r["numeric_distance_to_product"].as_f64().unwrap() - 0.1487704).abs() < 1e-7);
    let out = run(&["classical"], r#"{"kind":"x_state","x_state":{"a":0.4,"b":0.3,"c":0.2,"d":0.1}}"#);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "not_symmetric_family");
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    (headers, rows)
}

#[test]
fn werner_sweep_is_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("werner.csv");
    let spec = r#"{"family":{"kind":"werner","from":0,"to":1},"steps":11,"methods":["bruteforce"]}"#;
    let out = run(&with_grid(&["sweep", "--out", path.to_str().unwrap()]), spec);
    assert!(out.status.success());
    let (headers, rows) = parse_csv(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(
        headers,
        [
            "param_value",
            "fidelity",
            "discord",
            "theta_opt",
            "psi_opt",
            "method",
            "candidate_gap",
            "classical_corr",
            "entropic_discord"
        ]
    );
    assert_eq!(rows.len(), 11);
    let discord: Vec<f64> = rows.iter().map(|r| r[2].parse().unwrap()).collect();
    assert!(discord.windows(2).all(|w| w[1] >= w[0] - 1e-9), "{discord:?}");
    assert!(rows.iter().all(|r| r[8].is_empty() && !r[7].is_empty()));
}

#[test]
fn closed_sweep_agrees_with_brute_force() {
    let spec = r#"{"family":{"kind":"x_state_field","field":"x_re","base":{"a":0.3,"b":0.2,"c":0.2,"d":0.3,"y_re":0.1},
        "from":-0.2,"to":0.2},"steps":6,"methods":["closed"]}"#;
    let out = run(&with_grid(&["sweep"]), spec);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let (_, rows) = parse_csv(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 6);
    for r in &rows {
        assert_eq!(r[5], "symmetric_closed");
        assert!(r[6].parse::<f64>().unwrap().abs() <= 1e-6);
    }
}

#[test]
fn two_step_sweep_and_errors() {
    let spec = r#"{"family":{"kind":"werner","from":0.2,"to":0.4},"steps":2}"#;
    let (_, rows) = parse_csv(&String::from_utf8(run(&with_grid(&["sweep"]), spec).stdout).unwrap());
    assert_eq!(rows.len(), 2);
    let bad_steps = r#"{"family":{"kind":"werner","from":0,"to":1},"steps":1}"#;
    assert_eq!(run(&["sweep"], bad_steps).status.code(), Some(2));
    let bad_end = r#"{"family":{"kind":"werner","from":0,"to":2},"steps":3}"#;
    assert_eq!(run(&["sweep"], bad_end).status.code(), Some(2));
    let unwritable = run(&["sweep", "--out", "/nonexistent/dir/out.csv"], spec);
    assert_eq!(unwritable.status.code(), Some(3));
}

#[test]
fn verify_passes_is_deterministic_and_fails_on_tiny_tolerance() {
    let args = with_grid(&["verify", "--samples", "8"]);
    let first = run(&args, "");
    let report = json_out(&first);
    assert_eq!(report["passed"], true);
    let symmetric = report["suites"].as_array().unwrap().iter().find(|s| s["name"] == "symmetric_closed_form").unwrap();
    assert!(symmetric["max_deviation"].as_f64().unwrap() <= 2e-6);
    assert_eq!(first.stdout, run(&args, "").stdout);
    let failing = run(&with_grid(&["verify", "--samples", "4", "--tolerance", "1e-15"]), "");
    assert_eq!(failing.status.code(), Some(1));
}
