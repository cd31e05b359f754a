use std::process::{Command, Output};

fn kt_hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kt-hodge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn h01_five_quarters_is_three() {
    let o = kt_hodge(&["h01", "--d", "5/4", "--oracle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("h01 = 3"), "{out}");
    assert!(out.contains("oracle brute_force: 3"));
    assert!(out.contains("oracle closed_form: 3"));
}

#[test]
fn h01_rho_oracle_sums_sectors() {
    let o = kt_hodge(&["h01", "--d", "1", "--rho", "9/4", "--oracle", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["h01"], 2);
    assert_eq!(v["oracle"]["sector_sum"], 2);
}

#[test]
fn search_rejects_multiples_of_eight() {
    let o = kt_hodge(&["search", "--target", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("divisible by 8 unreachable"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn search_finds_twelve() {
    let o = kt_hodge(&["search", "--target", "12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "target,d,closed_form,brute_force\n12,5,12,12\n");
}

#[test]
fn diamond_json_round_trips_byte_for_byte() {
    let o = kt_hodge(&["diamond", "--d", "1", "--rho", "9/4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"h01\": 2"), "{text}");
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&parsed).unwrap();
    again.push('\n');
    assert_eq!(text, again);
    assert_eq!(parsed["provenance"]["h01"], "computed");
    assert_eq!(parsed["params"]["rho"], "9/4");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diamond.csv");
    let o = kt_hodge(&["diamond", "--d", "5/4", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let csv = std::fs::read_to_string(path).unwrap();
    assert!(csv.starts_with("entry,value,provenance\n"));
    assert!(csv.contains("h01,3,computed\n"));
    assert!(csv.contains("h20,0,computed\n"));
}

#[test]
fn sweep_csv_has_header_and_agrees() {
    let o = kt_hodge(&["sweep", "--p-max", "12", "--q-max", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("p,q,d,closed_form,brute_force,match,witness_count_m0"));
    let rows: Vec<_> = lines.collect();
    assert!(rows.iter().all(|r| r.split(',').nth(5) == Some("true")));
    // rows stay in (p, q) order regardless of thread count
    let keys: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| {
            let mut c = r.split(',');
            (c.next().unwrap().parse().unwrap(), c.next().unwrap().parse().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn sweep_rejects_large_denominators() {
    let o = kt_hodge(&["sweep", "--q-max", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_stokes_is_deterministic() {
    let run = || kt_hodge(&["verify-stokes", "--count", "3", "--seed", "11", "--format", "json"]);
    let (first, second) = (run(), run());
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert_eq!(stdout(&first), stdout(&second));
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
}

#[test]
fn decimal_parameter_is_a_usage_error() {
    let o = kt_hodge(&["diamond", "--d", "1.25"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn zero_d_is_a_domain_error() {
    let o = kt_hodge(&["diamond", "--d", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[domain]"));
}

#[test]
fn non_positive_rho_is_a_domain_error() {
    let o = kt_hodge(&["h01", "--d", "1", "--rho", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sectors_total_matches_h01() {
    let o = kt_hodge(&["sectors", "--d", "5/4", "--m-max", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total_dimension"], 3);
}

#[test]
fn help_exits_zero() {
    assert_eq!(kt_hodge(&["--help"]).status.code(), Some(0));
}
