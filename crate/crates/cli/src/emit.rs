use fourhole::scalar::{format_float, format_rational};
use fourhole::{AngleFraction, BoundaryTraces, Field, Mode, TracePoint};
use serde_json::{json, Value};

/// Exact values as `p/q`, floats with 17 significant digits.
pub fn value<T: Field>(t: &T) -> String {
    match (T::MODE, t.as_rational()) {
        (Mode::Exact, Some(r)) => format_rational(r),
        _ => format_float(t.to_f64()),
    }
}

pub fn point<T: Field>(p: &TracePoint<T>) -> Value {
    json!([value(&p.x), value(&p.y), value(&p.z)])
}

pub fn traces<T: Field>(b: &BoundaryTraces<T>) -> Value {
    Value::Array(b.traces().into_iter().map(|t| Value::String(value(t))).collect())
}

pub fn csv_row<T: Field>(p: &TracePoint<T>) -> String {
    format!("{},{},{}\n", value(&p.x), value(&p.y), value(&p.z))
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// `2cos(πp/q)` in radicals for the quadratic cases `q ≤ 6`, else symbolically.
pub fn closed_form(a: AngleFraction) -> String {
    let f = a.folded();
    match (f.p(), f.q()) {
        (0, _) => "2".into(),
        (1, 1) => "-2".into(),
        (1, 2) => "0".into(),
        (1, 3) => "1".into(),
        (2, 3) => "-1".into(),
        (1, 4) => "sqrt(2)".into(),
        (3, 4) => "-sqrt(2)".into(),
        (1, 5) => "(1+sqrt(5))/2".into(),
        (2, 5) => "(-1+sqrt(5))/2".into(),
        (3, 5) => "(1-sqrt(5))/2".into(),
        (4, 5) => "(-1-sqrt(5))/2".into(),
        (1, 6) => "sqrt(3)".into(),
        (5, 6) => "-sqrt(3)".into(),
        (1, q) => format!("2cos(π/{q})"),
        (p, q) => format!("2cos({p}π/{q})"),
    }
}
