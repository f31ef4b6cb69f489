//! End-to-end tests driving the installed binary through its public
//! surface: output goldens, format equivalence, exit codes, and the
//! certificate round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

use fano_chern::coefficients::b_row;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano-chern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("terminated with a code")
}

fn scratch_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("fano-chern-test-{}-{name}", std::process::id()));
    path
}

/// TeX form of an exact rational string as the renderer produces it.
fn tex_token(value: &str) -> String {
    match value.split_once('/') {
        None => value.to_owned(),
        Some((numer, denom)) => {
            let (sign, digits) = match numer.strip_prefix('-') {
                Some(rest) => ("-", rest),
                None => ("", numer),
            };
            format!("{sign}\\frac{{{digits}}}{{{denom}}}")
        }
    }
}

#[test]
fn bernoulli_csv_golden() {
    let output = run(&["bernoulli", "--max-m", "10", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(!text.contains('\r'), "CSV must use LF endings");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,B");
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[1], "0,1");
    assert_eq!(lines[2], "1,-1/2");
    assert_eq!(lines[9], "8,-1/30");
    assert_eq!(lines[11], "10,5/66");
}

#[test]
fn bernoulli_json_single_entry() {
    let output = run(&["bernoulli", "--max-m", "0", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let parsed: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(parsed, serde_json::json!([{"m": 0, "B": "1"}]));
}

#[test]
fn bernoulli_extended_row() {
    let output = run(&["bernoulli", "--max-m", "20", "--format", "csv"]);
    let text = stdout_of(&output);
    assert!(text.lines().any(|line| line == "12,-691/2730"));
    assert!(text.lines().any(|line| line == "20,-174611/330"));
}

#[test]
fn table_csv_goldens() {
    let output = run(&["table", "--j", "1", "--i-max", "6", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "i,k0,k1,k2,k3,k4,k5,k6,k7");
    assert_eq!(lines[6], "6,-6,1/7,7/10,29/15,7/2,25/6,3,1");

    let output = run(&["table", "--j", "4", "--i-max", "6", "--format", "csv"]);
    let text = stdout_of(&output);
    let row = text
        .lines()
        .find(|line| line.starts_with("6,"))
        .expect("row i=6 present");
    assert!(row.contains("887/100800"));
    assert!(row.contains("19097/60480"));
}

#[test]
fn table_json_row() {
    let output = run(&["table", "--j", "2", "--i-max", "1", "--format", "json"]);
    let parsed: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(parsed["j"], 2);
    assert_eq!(
        parsed["rows"][0]["b"],
        serde_json::json!(["-1/2", "1/12", "1/2", "1"])
    );
}

#[test]
fn c_coeff_table_golden() {
    let output = run(&["table", "--c-coeffs", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,p1,p2,p3,p4,p5,p6");
    assert_eq!(lines[6], "6,-1,62,-540,1560,-1800,720");
}

#[test]
fn formats_carry_identical_rationals() {
    let csv = stdout_of(&run(&["bernoulli", "--max-m", "10", "--format", "csv"]));
    let json = stdout_of(&run(&["bernoulli", "--max-m", "10", "--format", "json"]));
    let tex = stdout_of(&run(&["bernoulli", "--max-m", "10", "--format", "tex"]));

    let csv_values: Vec<(u64, String)> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let (m, value) = line.split_once(',').unwrap();
            (m.parse().unwrap(), value.to_owned())
        })
        .collect();
    assert_eq!(csv_values.len(), 11);

    let parsed: Value = serde_json::from_str(&json).unwrap();
    let json_values: Vec<(u64, String)> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|entry| {
            (
                entry["m"].as_u64().unwrap(),
                entry["B"].as_str().unwrap().to_owned(),
            )
        })
        .collect();
    assert_eq!(csv_values, json_values);

    for (_, value) in &csv_values {
        let token = tex_token(value);
        assert!(tex.contains(&token), "tex output missing {token}");
    }
}

#[test]
fn table_formats_agree() {
    let csv = stdout_of(&run(&["table", "--j", "2", "--i-max", "3", "--format", "csv"]));
    let json = stdout_of(&run(&["table", "--j", "2", "--i-max", "3", "--format", "json"]));
    let parsed: Value = serde_json::from_str(&json).unwrap();

    for (row_index, line) in csv.lines().skip(1).enumerate() {
        let mut fields = line.split(',');
        let i: u64 = fields.next().unwrap().parse().unwrap();
        let csv_row: Vec<&str> = fields.collect();
        let json_row = &parsed["rows"][row_index];
        assert_eq!(json_row["i"].as_u64().unwrap(), i);
        let json_values: Vec<&str> = json_row["b"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert_eq!(csv_row, json_values);
    }
}

#[test]
fn verify_reports_clean_range_with_exit_zero() {
    let output = run(&["verify", "--i-max", "6", "--j", "1,2"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains("no violations"));
    assert!(text.contains("checked 60 values"));
}

#[test]
fn verify_strict_zero_is_a_violation() {
    let output = run(&["verify", "--i-max", "6", "--j", "3"]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout_of(&output);
    assert!(text.contains("violation: b(1, 3, 1) = 0"));

    let lax = run(&["verify", "--i-max", "6", "--j", "3", "--non-strict"]);
    assert_eq!(exit_code(&lax), 0);
}

#[test]
fn verify_negative_entries_fail_both_modes() {
    let strict = run(&["verify", "--i-max", "6", "--j", "4"]);
    assert_eq!(exit_code(&strict), 1);
    assert!(stdout_of(&strict).contains("violation: b(1, 4, 1) = -1/720"));

    let lax = run(&["verify", "--i-max", "6", "--j", "4", "--non-strict"]);
    assert_eq!(exit_code(&lax), 1);
    let text = stdout_of(&lax);
    assert!(text.contains("4 violations"));
    assert!(text.contains("-1/720"));
    let zero_flagged = text
        .lines()
        .any(|line| line.starts_with("violation") && line.ends_with("= 0"));
    assert!(!zero_flagged, "non-strict mode must not flag zeros");
}

#[test]
fn certificate_round_trip() {
    let path = scratch_path("certificate.json");
    let first = run(&[
        "verify",
        "--i-max",
        "6",
        "--j",
        "4",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&first), 1);

    let written = std::fs::read_to_string(&path).unwrap();
    let cert: Value = serde_json::from_str(&written).unwrap();
    let streamed: Value = serde_json::from_str(&stdout_of(&first)).unwrap();
    assert_eq!(cert, streamed);

    assert_eq!(cert["schema_version"], "1");
    assert_eq!(cert["command"], "verify");
    assert_eq!(cert["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(cert["violations"][0]["value"], "-1/720");
    assert_eq!(cert["verified"]["j_list"], serde_json::json!([4]));
    let timestamp = cert["timestamp"].as_str().unwrap();
    chrono::DateTime::parse_from_rfc3339(timestamp).expect("RFC 3339 timestamp");

    // Replaying with the recorded parameters reproduces the payload.
    let params = &cert["parameters"];
    let mut args = vec![
        "verify".to_owned(),
        "--i-lo".to_owned(),
        params["i_lo"].as_str().unwrap().to_owned(),
        "--i-max".to_owned(),
        params["i_max"].as_str().unwrap().to_owned(),
        "--j".to_owned(),
        params["j"].as_str().unwrap().to_owned(),
        "--format".to_owned(),
        "json".to_owned(),
    ];
    if params["strict"] == "false" {
        args.push("--non-strict".to_owned());
    }
    let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let second = run(&arg_refs);
    let replay: Value = serde_json::from_str(&stdout_of(&second)).unwrap();
    assert_eq!(replay["violations"], cert["violations"]);
    assert_eq!(replay["verified"], cert["verified"]);

    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_two() {
    let bad_model = run(&["invariants", "Z:9"]);
    assert_eq!(exit_code(&bad_model), 2);
    assert!(stderr_of(&bad_model).contains("error"));

    let missing_args = run(&["table"]);
    assert_eq!(exit_code(&missing_args), 2);

    let bad_format = run(&["bernoulli", "--format", "yaml"]);
    assert_eq!(exit_code(&bad_format), 2);

    let bad_chain = run(&["expand", "--a", "1,x", "--j", "1"]);
    assert_eq!(exit_code(&bad_chain), 2);
}

#[test]
fn unwritable_out_path_exits_three() {
    let output = run(&[
        "bernoulli",
        "--out",
        "/nonexistent-fano-chern-dir/table.csv",
    ]);
    assert_eq!(exit_code(&output), 3);
    assert!(stderr_of(&output).contains("error"));
}

#[test]
fn expand_golden_lines() {
    let deep = run(&["expand", "--a", "1,1", "--j", "1"]);
    assert_eq!(exit_code(&deep), 0);
    assert_eq!(
        stdout_of(&deep).trim_end(),
        "-3 c1(L_3) + 1/4 T(c1(X)) c1(L_3) + 11/12 T^2(ch_2(X)) c1(L_3) + 3/2 T^3(ch_3(X)) c1(L_3) + 1 T^3(ch_4(X))"
    );

    let depth_one = run(&["expand", "--j", "1"]);
    assert_eq!(
        stdout_of(&depth_one).trim_end(),
        "-1 c1(L_1) + 1/2 T(c1(X)) c1(L_1) + 1 T(ch_2(X))"
    );
}

#[test]
fn expand_coefficients_match_recursion_row() {
    let output = run(&["expand", "--a", "1,1,1,1", "--j", "2", "--format", "json"]);
    let parsed: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let expected: Vec<String> = b_row(5, 2)
        .unwrap()
        .into_iter()
        .map(|value| value.to_string())
        .collect();
    let rendered: Vec<String> = parsed["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|term| term["coefficient"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(rendered, expected);
}

#[test]
fn invariants_text_outputs() {
    let projective = run(&["invariants", "P:7"]);
    assert_eq!(exit_code(&projective), 0);
    assert_eq!(
        stdout_of(&projective).trim_end(),
        "model: P:7\nmin_chain_length: 7\nmax_chain_length: 7\npolarized_family: (P:6, hyperplane)"
    );

    let product = run(&["invariants", "QxP:5"]);
    assert_eq!(
        stdout_of(&product).trim_end(),
        "model: QxP:5\nmin_chain_length: 3\nmax_chain_length: 5\npolarized_family: not stated in source"
    );

    let blowup = run(&["invariants", "Bl:6,2"]);
    assert_eq!(
        stdout_of(&blowup).trim_end(),
        "model: Bl:6,2\nmin_chain_length: 3\nmax_chain_length: 3\npolarized_family: (P:2, hyperplane)"
    );
}

#[test]
fn output_lands_in_file_when_requested() {
    let path = scratch_path("bernoulli.csv");
    let output = run(&[
        "bernoulli",
        "--max-m",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "m,B\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
    std::fs::remove_file(&path).ok();
}
