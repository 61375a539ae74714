use fourhole::orbits::{
    density_scan, enumerate_orbit, exceptional_family, filtration as filtration_level, is_closed, minimality_criterion,
    n_of_epsilon, DensityOptions, OrbitStatus, FLOAT_DEDUP_QUANTUM,
};
use fourhole::parse::{parse_list, parse_point, parse_traces};
use fourhole::rep::{example_rep, is_in_f, trace_coordinates};
use fourhole::scalar::{format_rational, parse_rational, q};
use fourhole::surface::{classify_along, kappa, on_surface};
use fourhole::trigdioph::{
    bounded_search, default_coeff_set, eval_exact, families, match_family, FamilyMatch, SEARCH_MAX_Q,
};
use fourhole::twists::apply_word;
use fourhole::{AngleFraction, Axis, BoundaryTraces, ComponentClass, Field, Mode, Rational, TracePoint, TwistWord};
use serde_json::{json, Value};

use crate::emit::{self, closed_form, pretty};
use crate::{CliError, Emitted, RunConfig};

type Out = Result<Emitted, CliError>;

const DEFAULT_ORBIT_BUDGET: usize = 1000;
const DEFAULT_SCAN_BUDGET: usize = 10_000;
const DEFAULT_CJ_MAX_Q: i64 = 12;
const DEFAULT_SEED: u64 = 0x5eed;

fn mode(cfg: &RunConfig) -> Result<Mode, CliError> {
    Ok(cfg.get("mode").map(str::parse::<Mode>).transpose()?.unwrap_or(Mode::Exact))
}

fn axis(cfg: &RunConfig) -> Result<Axis, CliError> {
    match cfg.get("axis").map(str::trim) {
        None | Some("X" | "x") => Ok(Axis::X),
        Some("Y" | "y") => Ok(Axis::Y),
        Some("Z" | "z") => Ok(Axis::Z),
        Some(other) => Err(CliError::Input(format!("--axis: expected X, Y or Z, got {other:?}"))),
    }
}

fn budget(cfg: &RunConfig, default: usize) -> Result<usize, CliError> {
    match cfg.parsed("budget", default)? {
        0 => Err(CliError::Input("--budget must be positive".into())),
        n => Ok(n),
    }
}

fn traces<T: Field>(cfg: &RunConfig) -> Result<BoundaryTraces<T>, CliError> {
    Ok(parse_traces(cfg.require("traces")?)?)
}

/// The point, which must lie on the surface of `b`.
fn surface_point<T: Field>(cfg: &RunConfig, b: &BoundaryTraces<T>) -> Result<TracePoint<T>, CliError> {
    let p: TracePoint<T> = parse_point(cfg.require("point")?)?;
    if !on_surface(b, &p) {
        return Err(CliError::Input(format!("point is off the surface: kappa = {}", emit::value(&kappa(b, &p)))));
    }
    Ok(p)
}

pub fn classify(cfg: &RunConfig) -> Out {
    let axis = axis(cfg)?;
    match mode(cfg)? {
        Mode::Exact => classify_in::<Rational>(cfg, axis),
        Mode::Float => classify_in::<f64>(cfg, axis),
    }
}

fn classify_in<T: Field>(cfg: &RunConfig, axis: Axis) -> Out {
    let b: BoundaryTraces<T> = traces(cfg)?;
    let c = classify_along(&b, axis)?;
    let v = emit::value::<T>;
    let report = json!({
        "mode": T::MODE.name(),
        "traces": emit::traces(&b),
        "axis": axis.name(),
        "class": c.class.name(),
        "S": [v(&c.lo), v(&c.hi)],
        "pair_intervals": [[v(&c.first.lo), v(&c.first.hi)], [v(&c.second.lo), v(&c.second.hi)]],
        "sigma": {"x": v(b.sigma_x()), "y": v(b.sigma_y()), "z": v(b.sigma_z())},
        "s": v(b.s_const()),
    });
    Ok(pretty(&report).into())
}

pub fn orbit(cfg: &RunConfig) -> Out {
    match mode(cfg)? {
        Mode::Exact => orbit_in::<Rational>(cfg),
        Mode::Float => orbit_in::<f64>(cfg),
    }
}

fn orbit_in<T: Field>(cfg: &RunConfig) -> Out {
    let b: BoundaryTraces<T> = traces(cfg)?;
    let p = surface_point(cfg, &b)?;
    let result = enumerate_orbit(&b, &p, budget(cfg, DEFAULT_ORBIT_BUDGET)?)?;
    let mut data = String::from("x,y,z\n");
    for pt in &result.points {
        data.push_str(&emit::csv_row(pt));
    }
    let summary = json!({"status": result.status.name(), "cardinality": result.status.count()});
    Ok(Emitted { data, summary: Some(summary.to_string()), failure: None })
}

pub fn twist(cfg: &RunConfig) -> Out {
    match mode(cfg)? {
        Mode::Exact => twist_in::<Rational>(cfg),
        Mode::Float => twist_in::<f64>(cfg),
    }
}

fn twist_in<T: Field>(cfg: &RunConfig) -> Out {
    let b: BoundaryTraces<T> = traces(cfg)?;
    let p: TracePoint<T> = parse_point(cfg.require("point")?)?;
    let word: TwistWord = cfg.require("word")?.parse()?;
    let image = apply_word(&b, &p, &word);
    let (before, after) = (kappa(&b, &p), kappa(&b, &image));
    let preserved = match T::MODE {
        Mode::Exact => before == after,
        Mode::Float => (before.clone() - after.clone()).near_zero(fourhole::scalar::GEOMETRY_TOL * (1.0 + before.to_f64().abs())),
    };
    let report = json!({
        "mode": T::MODE.name(),
        "word": word.to_string(),
        "point": emit::point(&p),
        "image": emit::point(&image),
        "kappa": [emit::value(&before), emit::value(&after)],
    });
    Ok(Emitted {
        data: pretty(&report),
        summary: None,
        failure: (!preserved).then(|| "kappa changed under the twist".to_string()),
    })
}

pub fn scan(cfg: &RunConfig) -> Out {
    let mode = mode(cfg)?;
    let eps_text = cfg.get("eps").unwrap_or("1/10");
    let eps = parse_rational(eps_text)?;
    if eps <= q(0, 1) {
        return Err(CliError::Input("--eps must be positive".into()));
    }
    let seed = cfg.parsed("seed", DEFAULT_SEED)?;
    let exact: BoundaryTraces<Rational> = traces(cfg)?;
    let b = exact.map(|t| t.to_f64())?;
    let p = match mode {
        Mode::Exact => surface_point::<Rational>(cfg, &exact)?.to_f64(),
        Mode::Float => surface_point::<f64>(cfg, &b)?,
    };
    let mut opts = DensityOptions::new(eps.to_f64(), budget(cfg, DEFAULT_SCAN_BUDGET)?);
    opts.seed = seed;
    let report = density_scan(&b, &p, &opts)?;
    let (eps_out, coverage) = match mode {
        Mode::Exact => (
            format_rational(&eps),
            format_rational(&Rational::new(report.covered.into(), report.grid_points.max(1).into())),
        ),
        Mode::Float => (emit::value(&eps.to_f64()), emit::value(&report.covered_fraction)),
    };
    let out = json!({
        "mode": mode.name(),
        "traces": emit::traces(&exact),
        "eps": eps_out,
        "seed": seed,
        "budget": opts.budget,
        "orbit_points": report.orbit_points,
        "grid_points": report.grid_points,
        "covered": report.covered,
        "coverage": coverage,
        "walked": report.truncated,
        "n_of_eps": n_of_epsilon(&b, opts.eps)?,
        "minimality_criterion": minimality_criterion(&exact)?,
    });
    Ok(pretty(&out).into())
}

pub fn cj(cfg: &RunConfig) -> Out {
    if cfg.verify_list {
        return verify_list();
    }
    let max_q = cfg.parsed("max-q", DEFAULT_CJ_MAX_Q)?;
    let max_terms = cfg.parsed("max-terms", 4usize)?;
    let coeffs = match cfg.get("coeffs") {
        Some(s) => {
            let n = s.split(',').count();
            parse_list::<Rational>(s, n)?
        }
        None => default_coeff_set(),
    };
    if max_q > SEARCH_MAX_Q {
        return Err(CliError::Input(format!("--max-q is at most {SEARCH_MAX_Q}")));
    }
    let mut data = String::new();
    for rel in bounded_search(max_q, max_terms, &coeffs)? {
        let family = match_family(&rel)?;
        data.push_str(&format!("{rel}\t{family}\n"));
    }
    Ok(data.into())
}

/// Instance of the parameterized identity shown by `--verify-list`.
const T_SAMPLE: (i64, i64) = (1, 9);

fn verify_list() -> Out {
    let t = AngleFraction::new(T_SAMPLE.0, T_SAMPLE.1)?;
    let mut data = String::new();
    let mut bad = Vec::new();
    for (number, rel) in families::all_with(t) {
        let zero = eval_exact(&rel)?.is_zero();
        let matched = match match_family(&rel)? {
            FamilyMatch::Listed { number: n, .. } => n == number,
            FamilyMatch::TFamily { .. } => number == families::T_FAMILY,
            _ => false,
        };
        let verdict = if zero { "exact zero residual" } else { "NONZERO residual" };
        data.push_str(&format!("{number:>2}  {rel}  {verdict}\n"));
        if !zero || !matched {
            bad.push(number.to_string());
        }
    }
    let failure = (!bad.is_empty()).then(|| format!("identities {} failed", bad.join(", ")));
    Ok(Emitted { data, summary: None, failure })
}

pub fn filtration(cfg: &RunConfig) -> Out {
    let n = cfg.parsed("n", 6i64)?;
    let mode = mode(cfg)?;
    let level = filtration_level(n).map_err(|e| CliError::Input(e.to_string()))?;
    let levels: Vec<Value> = level
        .elements
        .iter()
        .map(|a| {
            let mut v = json!({"p": a.p(), "q": a.q(), "angle": a.to_string(), "exact": closed_form(*a)});
            if mode == Mode::Float {
                v["value"] = Value::String(emit::value(&a.trace_level()));
            }
            v
        })
        .collect();
    Ok(pretty(&json!({"n": n, "levels": levels})).into())
}

struct Checks(Vec<(String, bool)>);

impl Checks {
    fn add(&mut self, name: &str, ok: bool) {
        self.0.push((name.to_string(), ok));
    }
}

pub fn example5(_cfg: &RunConfig) -> Out {
    let rep = example_rep();
    let mut checks = Checks(Vec::new());
    for (name, m) in [("A", &rep.a), ("B", &rep.b), ("C", &rep.c), ("D", &rep.d)] {
        checks.add(&format!("det {name} = 1"), m.det() == q(1, 1));
    }
    checks.add("ABCD = I", rep.relation_holds());
    let (b, p) = trace_coordinates(&rep)?;
    let expected = BoundaryTraces::new(q(1, 1), q(1, 1), q(7, 4), q(-7, 4))?;
    checks.add("traces = (1, 1, 7/4, -7/4)", b == expected);
    checks.add("point = (-1, 0, 0)", p == TracePoint::new(q(-1, 1), q(0, 1), q(0, 1)));
    checks.add("kappa = 0", kappa(&b, &p) == q(0, 1));
    let class = classify_along(&b, Axis::X)?;
    checks.add("class SL2R_compact", class.class == ComponentClass::Sl2rCompact);
    checks.add("S = (-17/16, -1)", class.lo == q(-17, 16) && class.hi == q(-1, 1));
    checks.add("(1, 7/4) in exceptional family", is_in_f(&q(1, 1), &q(7, 4))?);
    let orbit = enumerate_orbit(&b, &p, 100)?;
    checks.add("orbit is finite of size 2", orbit.status == OrbitStatus::Finite(2));
    checks.add("orbit is closed under all twists", is_closed(&b, &orbit.points, FLOAT_DEDUP_QUANTUM));
    let special = exceptional_family(&q(1, 1), &q(7, 4)).map(|f| f.special_orbit).unwrap_or_default();
    checks.add(
        "orbit = {(-1, 0, 0), (-17/16, 0, 0)}",
        orbit.points.len() == special.len() && special.iter().all(|s| orbit.points.contains(s)),
    );

    let failed: Vec<&str> = checks.0.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    let out = json!({
        "matrices": {"A": rep.a.to_string(), "B": rep.b.to_string(), "C": rep.c.to_string(), "D": rep.d.to_string()},
        "traces": emit::traces(&b),
        "point": emit::point(&p),
        "class": class.class.name(),
        "S": [emit::value(&class.lo), emit::value(&class.hi)],
        "orbit": orbit.points.iter().map(emit::point).collect::<Vec<_>>(),
        "checks": checks.0.iter().map(|(n, ok)| json!({"check": n, "pass": ok})).collect::<Vec<_>>(),
    });
    Ok(Emitted {
        data: pretty(&out),
        summary: None,
        failure: (!failed.is_empty()).then(|| failed.join("; ")),
    })
}
