//! Browser bindings. Each exported function takes plain strings or numbers
//! and returns a JSON document; the `*_json` versions underneath are
//! ordinary Rust so they can be tested off the browser.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use kt_hodge::exactmath::{format_rational, parse_rational, to_f64, Rational};
use kt_hodge::lattice::scaled_circle_count;
use kt_hodge::stokes::sample::random_problem;
use kt_hodge::stokes::{default_window, shoot, stokes_criterion};
use kt_hodge::{hodge_diamond, AcsParams, MetricSpec};

const SHOT_STEPS: usize = 40_000;
const SHOT_SAMPLES: usize = 160;

fn parse(name: &str, text: &str) -> Result<Rational, String> {
    parse_rational(text.trim()).map_err(|e| format!("{name}: {e}"))
}

/// Empty `rho` selects the standard metric.
fn metric(rho: &str) -> Result<MetricSpec, String> {
    if rho.trim().is_empty() {
        return Ok(MetricSpec::StandardOrthonormal);
    }
    MetricSpec::almost_kahler(parse("rho", rho)?).map_err(|e| e.to_string())
}

/// Lattice points on `m² = ρ l (2d - l)` plus the ellipse they sit on.
pub fn circle_json(d: &str, rho: &str) -> Result<String, String> {
    let d = parse("d", d)?;
    let metric = metric(rho)?;
    let points = scaled_circle_count(&d, &metric.rho()).map_err(|e| e.to_string())?;
    let df = to_f64(&d);
    let out = json!({
        "d": format_rational(&d),
        "rho": format_rational(&metric.rho()),
        "count": points.count,
        "points": points.points,
        "center": df,
        "semi_l": df.abs(),
        "semi_m": df.abs() * to_f64(&metric.rho()).sqrt(),
    });
    Ok(out.to_string())
}

pub fn diamond_json(a: &str, d: &str, rho: &str) -> Result<String, String> {
    let params = AcsParams::new(parse("a", a)?, parse("d", d)?).map_err(|e| e.to_string())?;
    let diamond = hodge_diamond(&params, &metric(rho)?).map_err(|e| e.to_string())?;
    let provenance: Vec<Vec<&str>> = diamond
        .provenance
        .iter()
        .map(|row| row.iter().map(|p| p.as_str()).collect())
        .collect();
    let out = json!({
        "h": diamond.h,
        "provenance": provenance,
        "text": diamond.to_string(),
    });
    Ok(out.to_string())
}

fn profile(points: &[(f64, f64)]) -> Value {
    Value::Array(points.iter().map(|&(x, y)| json!([x, y])).collect())
}

/// A random system with the given ratio, shot from both ends.
pub fn stokes_json(ratio: f64, seed: u64) -> Result<String, String> {
    if !ratio.is_finite() {
        return Err("ratio must be finite".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let problem = random_problem(&mut rng, ratio).map_err(|e| e.to_string())?;
    let verdict = stokes_criterion(&problem);
    let x = default_window(&problem);
    let right = shoot(&problem, x, 0.0, SHOT_STEPS, SHOT_SAMPLES).map_err(|e| e.to_string())?;
    let left = shoot(&problem, -x, 0.0, SHOT_STEPS, SHOT_SAMPLES).map_err(|e| e.to_string())?;
    let angle = (right.end[0] * left.end[1] - right.end[1] * left.end[0]).norm();
    let out = json!({
        "ratio": [verdict.ratio.re, verdict.ratio.im],
        "case": format!("{:?}", verdict.case),
        "solvable": verdict.solvable,
        "angle": angle,
        "window": x,
        "right": profile(&right.profile),
        "left": profile(&left.profile),
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn circle(d: &str, rho: &str) -> Result<String, JsValue> {
    circle_json(d, rho).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn diamond(a: &str, d: &str, rho: &str) -> Result<String, JsValue> {
    diamond_json(a, d, rho).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn stokes(ratio: f64, seed: u32) -> Result<String, JsValue> {
    stokes_json(ratio, u64::from(seed)).map_err(|e| JsValue::from_str(&e))
}
