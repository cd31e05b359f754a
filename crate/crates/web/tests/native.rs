use kt_hodge_web::{circle_json, diamond_json, stokes_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn circle_for_five_quarters() {
    let v = parse(circle_json("5/4", "").unwrap());
    assert_eq!(v["count"], 3);
    assert_eq!(v["points"], serde_json::json!([[0, 0], [2, -1], [2, 1]]));
    assert_eq!(v["semi_m"], 1.25);
}

#[test]
fn circle_rejects_bad_input() {
    assert!(circle_json("0.5", "").is_err());
    assert!(circle_json("1", "-2").is_err());
}

#[test]
fn diamond_grid() {
    let v = parse(diamond_json("0", "1", "9/4").unwrap());
    assert_eq!(v["h"][0][1], 2);
    assert_eq!(v["h"][1][1], 3);
    assert_eq!(v["provenance"][0][1], "computed");
    assert!(diamond_json("0", "0", "").unwrap_err().contains("nonzero"));
}

#[test]
fn stokes_shots_separate_by_ratio() {
    let solvable = parse(stokes_json(-2.0, 1).unwrap());
    assert_eq!(solvable["solvable"], true);
    assert!(solvable["angle"].as_f64().unwrap() < 1e-6);
    let unsolvable = parse(stokes_json(0.5, 1).unwrap());
    assert_eq!(unsolvable["solvable"], false);
    assert!(unsolvable["angle"].as_f64().unwrap() > 1e-2);
    assert_eq!(unsolvable["right"].as_array().unwrap().len(), 161);
}
