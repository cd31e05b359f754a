use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use kt_hodge::exactmath::{format_rational, rational, to_f64, to_i64_pair, Rational};
use kt_hodge::lattice::{circle_count_brute, circle_count_closed, find_d_for_count, scaled_circle_count};
use kt_hodge::sectors::{
    finite_sector_dimension, h01_report, sector_criterion_rho, Certificate, SweepWindow,
};
use kt_hodge::stokes::sample::random_problem;
use kt_hodge::stokes::{default_window, numeric_l2_test, stokes_criterion, DEFAULT_STEPS};
use kt_hodge::{hodge_diamond, AcsParams, Error, MetricSpec, SectorReport};

use crate::args::{Command, ParamArgs, WindowArgs};
use crate::report::{Csv, Report};
use crate::CliError;

/// A failed command, with the report it produced if it got that far.
pub struct Failed {
    pub report: Option<Box<Report>>,
    pub error: CliError,
}

impl<E: Into<CliError>> From<E> for Failed {
    fn from(e: E) -> Self {
        Failed { report: None, error: e.into() }
    }
}

type Outcome = Result<Report, Failed>;

pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Diamond { params } => diamond(params),
        Command::H01 { params, oracle, window } => h01(params, *oracle, window),
        Command::Sweep { p_max, q_max } => sweep(*p_max, *q_max),
        Command::Search { target } => search(*target),
        Command::VerifyStokes { count, seed, tol } => verify_stokes(*count, *seed, *tol),
        Command::Sectors { params, window } => sectors(params, window),
    }
}

struct Setup {
    params: AcsParams,
    metric: MetricSpec,
    json: Value,
    metric_name: &'static str,
}

fn setup(args: &ParamArgs) -> Result<Setup, CliError> {
    let params = AcsParams::new(args.a.clone(), args.d.clone())?;
    let (metric, metric_name) = match &args.rho {
        Some(rho) => (MetricSpec::almost_kahler(rho.clone())?, "almost-kahler"),
        None => (MetricSpec::StandardOrthonormal, "standard"),
    };
    let json = json!({
        "a": format_rational(&args.a),
        "d": format_rational(&args.d),
        "rho": args.rho.as_ref().map(format_rational),
    });
    Ok(Setup { params, metric, json, metric_name })
}

impl Setup {
    fn header(&self) -> String {
        let mut s = format!(
            "a = {}, d = {}, metric = {}",
            format_rational(self.params.a()),
            format_rational(self.params.d()),
            self.metric_name
        );
        if let MetricSpec::AlmostKahlerRho(rho) = &self.metric {
            s.push_str(&format!(" (rho = {})", format_rational(rho)));
        }
        s
    }
}

fn witnesses_json(points: &[(i64, i64)]) -> Value {
    Value::Array(points.iter().map(|&(l, m)| json!([l, m])).collect())
}

fn witnesses_text(points: &[(i64, i64)]) -> String {
    points.iter().map(|(l, m)| format!("({l},{m})")).collect::<Vec<_>>().join(" ")
}

fn diamond(args: &ParamArgs) -> Outcome {
    let setup = setup(args)?;
    let d = hodge_diamond(&setup.params, &setup.metric)?;
    let witnesses = scaled_circle_count(setup.params.d(), &setup.metric.rho())?;

    let mut entries = Map::new();
    let mut provenance = Map::new();
    let mut csv = Csv::new(["entry", "value", "provenance"]);
    for p in 0..3 {
        for q in 0..3 {
            let key = format!("h{p}{q}");
            let label = d.provenance[p][q].as_str();
            entries.insert(key.clone(), json!(d.h[p][q]));
            provenance.insert(key.clone(), json!(label));
            csv.push([key, d.h[p][q].to_string(), label.to_string()]);
        }
    }
    let json = json!({
        "params": setup.json,
        "metric": setup.metric_name,
        "diamond": entries,
        "provenance": provenance,
        "witnesses": witnesses_json(&witnesses.points),
    });

    let mut table = format!("{}\n\n{d}\n\n", setup.header());
    for p in 0..3 {
        for q in 0..3 {
            table.push_str(&format!("h{p}{q} = {}  [{}]\n", d.h[p][q], d.provenance[p][q].as_str()));
        }
    }
    table.push_str(&format!("h01 witnesses (l,m): {}\n", witnesses_text(&witnesses.points)));
    Ok(Report { json, table, csv })
}

fn to_i64(r: &Rational) -> Result<i64, CliError> {
    Ok(to_i64_pair(r)?.0)
}

/// Integer `l` between 0 and `2d`, or `|l| ≤ window` when given.
fn l_span(d: &Rational, window: Option<u32>) -> Result<(i64, i64), CliError> {
    if let Some(w) = window {
        return Ok((-i64::from(w), i64::from(w)));
    }
    let two_d = d * rational(2, 1);
    let lo = to_i64(&two_d.floor())?.min(0);
    let hi = to_i64(&two_d.ceil())?.max(0);
    Ok((lo, hi))
}

/// Sum of finite-sector dimensions over every `(l, m)` that could lie on the
/// circle, counted sector by sector rather than from the lattice routine.
fn sector_sum(setup: &Setup, k_max: u32) -> Result<u64, CliError> {
    let (lo, hi) = l_span(setup.params.d(), None)?;
    let reach = (to_f64(&setup.metric.rho()).sqrt() * to_f64(setup.params.d()).abs()).ceil() as i64 + 1;
    let k_max = i64::from(k_max);
    let mut total = 0u64;
    for k in -k_max..=k_max {
        for l in lo..=hi {
            for m in -reach..=reach {
                total += u64::from(finite_sector_dimension(&setup.params, &setup.metric, k, l, m).dimension);
            }
        }
    }
    Ok(total)
}

fn h01(args: &ParamArgs, oracle: bool, window: &WindowArgs) -> Outcome {
    let setup = setup(args)?;
    let sweep_window = SweepWindow { k_max: window.k_max, n_max: window.n_max };
    let report = h01_report(&setup.params, &setup.metric, sweep_window)?;

    let mut checks = Map::new();
    let mut mismatches = Vec::new();
    if oracle {
        let mut check = |name: &str, value: u64| {
            checks.insert(name.to_string(), json!(value));
            if value != report.count {
                mismatches.push(format!("{name} gives {value}, h01 = {}", report.count));
            }
        };
        match setup.metric {
            MetricSpec::StandardOrthonormal => {
                check("brute_force", circle_count_brute(setup.params.d())?.count as u64);
                match circle_count_closed(setup.params.d()) {
                    Ok(c) => check("closed_form", c),
                    Err(Error::UnsupportedDenominator(_)) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            MetricSpec::AlmostKahlerRho(_) => check("sector_sum", sector_sum(&setup, window.k_max)?),
        }
    }

    let sweep_json = report.sweep.as_ref().map(|s| {
        json!({
            "sectors_checked": s.sectors_checked,
            "nonempty": s.nonempty.iter().map(|id| id.to_string()).collect::<Vec<_>>(),
        })
    });
    let json = json!({
        "params": setup.json,
        "metric": setup.metric_name,
        "h01": report.count,
        "witnesses": witnesses_json(&report.witnesses.points),
        "infinite_sweep": sweep_json,
        "oracle": if oracle { Value::Object(checks.clone()) } else { Value::Null },
    });

    let mut table = format!("{}\nh01 = {}\nwitnesses (l,m): {}\n", setup.header(), report.count, witnesses_text(&report.witnesses.points));
    match &report.sweep {
        Some(s) => table.push_str(&format!(
            "infinite-orbit sectors: {} checked, {} nonempty\n",
            s.sectors_checked,
            s.nonempty.len()
        )),
        None => table.push_str("infinite-orbit sectors: skipped (sqrt(rho) irrational)\n"),
    }
    for (name, value) in &checks {
        table.push_str(&format!("oracle {name}: {value}\n"));
    }

    let mut csv = Csv::new(["l", "m"]);
    for &(l, m) in &report.witnesses.points {
        csv.push([l, m]);
    }
    let out = Report { json, table, csv };
    if mismatches.is_empty() {
        Ok(out)
    } else {
        Err(Failed { report: Some(Box::new(out)), error: CliError::Mismatch(mismatches.join("; ")) })
    }
}

struct SweepRow {
    p: u64,
    q: u64,
    closed: u64,
    brute: u64,
    on_axis: usize,
}

fn sweep(p_max: u64, q_max: u64) -> Outcome {
    if p_max == 0 || q_max == 0 {
        return Err(CliError::Usage("p-max and q-max must be positive".into()).into());
    }
    if q_max > 5 {
        return Err(Error::UnsupportedDenominator(q_max.to_string()).into());
    }
    let pairs: Vec<(u64, u64)> = (1..=p_max)
        .flat_map(|p| (1..=q_max).map(move |q| (p, q)))
        .filter(|&(p, q)| p.gcd(&q) == 1)
        .collect();
    let rows = pairs
        .par_iter()
        .map(|&(p, q)| -> Result<SweepRow, Error> {
            let d = rational(p as i64, q as i64);
            let brute = circle_count_brute(&d)?;
            Ok(SweepRow { p, q, closed: circle_count_closed(&d)?, brute: brute.count as u64, on_axis: brute.on_axis() })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut csv = Csv::new(["p", "q", "d", "closed_form", "brute_force", "match", "witness_count_m0"]);
    let mut table = format!("{:>4} {:>2} {:>8} {:>6} {:>6} {:>5} {:>3}\n", "p", "q", "d", "closed", "brute", "match", "m0");
    let mut json_rows = Vec::new();
    let mut bad = Vec::new();
    for r in &rows {
        let d = format_rational(&rational(r.p as i64, r.q as i64));
        let ok = r.closed == r.brute;
        if !ok {
            bad.push(d.clone());
        }
        csv.push([r.p.to_string(), r.q.to_string(), d.clone(), r.closed.to_string(), r.brute.to_string(), ok.to_string(), r.on_axis.to_string()]);
        table.push_str(&format!("{:>4} {:>2} {:>8} {:>6} {:>6} {:>5} {:>3}\n", r.p, r.q, d, r.closed, r.brute, ok, r.on_axis));
        json_rows.push(json!({
            "p": r.p, "q": r.q, "d": d, "closed_form": r.closed,
            "brute_force": r.brute, "match": ok, "witness_count_m0": r.on_axis,
        }));
    }
    table.push_str(&format!("{} values of d, {} disagreements\n", rows.len(), bad.len()));
    let json = json!({ "p_max": p_max, "q_max": q_max, "rows": json_rows, "disagreements": bad });
    let report = Report { json, table, csv };
    if bad.is_empty() {
        Ok(report)
    } else {
        let error = CliError::Mismatch(format!("closed form disagrees with brute force at d = {}", bad.join(", ")));
        Err(Failed { report: Some(Box::new(report)), error })
    }
}

fn search(target: u64) -> Outcome {
    let d = find_d_for_count(target)?;
    let closed = circle_count_closed(&d)?;
    let brute = circle_count_brute(&d)?;
    let text = format_rational(&d);
    let json = json!({
        "target": target,
        "d": text,
        "closed_form": closed,
        "brute_force": brute.count,
        "witnesses": witnesses_json(&brute.points),
    });
    let table = format!("target {target}: d = {text} (closed form {closed}, brute force {})\n", brute.count);
    let mut csv = Csv::new(["target", "d", "closed_form", "brute_force"]);
    csv.push([target.to_string(), text, closed.to_string(), brute.count.to_string()]);
    let report = Report { json, table, csv };
    if closed == target && brute.count as u64 == target {
        Ok(report)
    } else {
        Err(Failed { report: Some(Box::new(report)), error: CliError::Mismatch(format!("d found for {target} does not reproduce it")) })
    }
}

/// Ratios `b₂b₃/(λ₁ - λ₂)` cycled through by `verify-stokes`; the first six
/// are solvable.
const STOKES_RATIOS: [f64; 10] = [-5.0, -4.0, -3.0, -2.0, -1.0, 0.0, 0.5, 1.0 / 3.0, 1.0, 2.5];

struct StokesRow {
    ratio: f64,
    algebraic: bool,
    numeric: bool,
    angle: f64,
    case: String,
}

fn verify_stokes(count: usize, seed: u64, tol: f64) -> Outcome {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!("tol must be positive, got {tol}")).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let problems = (0..count)
        .map(|i| {
            let ratio = STOKES_RATIOS[i % STOKES_RATIOS.len()];
            random_problem(&mut rng, ratio).map(|p| (ratio, p))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let rows = problems
        .par_iter()
        .map(|(ratio, problem)| -> Result<StokesRow, Error> {
            let algebraic = stokes_criterion(problem);
            let numeric = numeric_l2_test(problem, default_window(problem), DEFAULT_STEPS, tol)?;
            Ok(StokesRow {
                ratio: *ratio,
                algebraic: algebraic.solvable,
                numeric: numeric.solvable,
                angle: numeric.angle.unwrap_or(f64::NAN),
                case: format!("{:?}", algebraic.case),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut csv = Csv::new(["index", "ratio", "case", "algebraic", "numeric", "angle", "agree"]);
    let mut table = format!("{:>4} {:>9} {:<14} {:>9} {:>9} {:>10}\n", "#", "ratio", "case", "algebraic", "numeric", "angle");
    let mut json_rows = Vec::new();
    let mut disagreements = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let agree = r.algebraic == r.numeric;
        if !agree {
            disagreements.push(i);
        }
        csv.push([i.to_string(), r.ratio.to_string(), r.case.clone(), r.algebraic.to_string(), r.numeric.to_string(), format!("{:e}", r.angle), agree.to_string()]);
        table.push_str(&format!("{:>4} {:>9.4} {:<14} {:>9} {:>9} {:>10.2e}\n", i, r.ratio, r.case, r.algebraic, r.numeric, r.angle));
        json_rows.push(json!({
            "index": i, "ratio": r.ratio, "case": r.case, "algebraic": r.algebraic,
            "numeric": r.numeric, "angle": r.angle, "agree": agree,
        }));
    }
    table.push_str(&format!("{} problems, {} disagreements (seed {seed}, tol {tol:e})\n", rows.len(), disagreements.len()));
    let json = json!({
        "seed": seed, "tol": tol, "count": rows.len(),
        "problems": json_rows, "disagreements": disagreements,
    });
    let report = Report { json, table, csv };
    if disagreements.is_empty() {
        Ok(report)
    } else {
        let error = CliError::Mismatch(format!("{} of {} problems disagree", disagreements.len(), rows.len()));
        Err(Failed { report: Some(Box::new(report)), error })
    }
}

fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::LatticeWitness { l, m } => format!("lattice point ({l},{m})"),
        Certificate::ConstantSolution => "constant".into(),
        Certificate::StokesRatio(r) => format!("ratio {r}"),
        Certificate::StokesSolution(r) => format!("solvable, ratio {r}"),
        Certificate::Empty(why) => why.clone(),
    }
}

fn sectors(args: &ParamArgs, window: &WindowArgs) -> Outcome {
    let setup = setup(args)?;
    let rho = setup.metric.rho();
    let (lo, hi) = l_span(setup.params.d(), window.window)?;
    let (k_max, m_max, n_max) = (i64::from(window.k_max), i64::from(window.m_max), i64::from(window.n_max));

    let mut reports: Vec<Result<SectorReport, String>> = Vec::new();
    for k in -k_max..=k_max {
        for l in lo..=hi {
            for m in -m_max..=m_max {
                reports.push(Ok(finite_sector_dimension(&setup.params, &setup.metric, k, l, m)));
            }
        }
    }
    let mut unavailable = Vec::new();
    for n in (-n_max..=n_max).filter(|&n| n != 0) {
        for k in -k_max..=k_max {
            for m in 0..n.abs() {
                match sector_criterion_rho(&setup.params, &rho, k, m, n) {
                    Ok(r) => reports.push(Ok(r)),
                    Err(Error::IrrationalScale(_)) => unavailable.push(format!("H[k={k},m={m},n={n}]")),
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }

    let mut csv = Csv::new(["sector", "dimension", "certificate"]);
    let mut table = format!("{}\n", setup.header());
    let mut json_rows = Vec::new();
    let mut total = 0u64;
    for r in reports.iter().flatten() {
        let cert = certificate_text(&r.certificate);
        total += u64::from(r.dimension);
        csv.push([r.sector.to_string(), r.dimension.to_string(), cert.clone()]);
        table.push_str(&format!("{:<24} {}  {}\n", r.sector.to_string(), r.dimension, cert));
        json_rows.push(json!({ "sector": r.sector.to_string(), "dimension": r.dimension, "certificate": cert }));
    }
    if !unavailable.is_empty() {
        table.push_str(&format!("{} infinite-orbit sectors skipped: sqrt(rho) irrational\n", unavailable.len()));
    }
    table.push_str(&format!("{} sectors, total dimension {total}\n", json_rows.len()));
    let json = json!({
        "params": setup.json,
        "metric": setup.metric_name,
        "sectors": json_rows,
        "total_dimension": total,
        "skipped": unavailable,
    });
    Ok(Report { json, table, csv })
}
