#![no_main]

use fourhole::parse::{parse_point, parse_traces};
use fourhole::surface::kappa;
use fourhole::{BoundaryTraces, Rational, TracePoint};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let (head, tail) = s.split_once(';').unwrap_or((s, ""));
    let exact: Result<BoundaryTraces<Rational>, _> = parse_traces(head);
    let float: Result<BoundaryTraces<f64>, _> = parse_traces(head);
    // Rounding is monotone and fixes ±2, so nothing rejected exactly is accepted in float mode.
    if exact.is_err() {
        assert!(float.is_err());
    }
    let p: Result<TracePoint<Rational>, _> = parse_point(tail);
    if let (Ok(b), Ok(p)) = (exact, p) {
        let _ = kappa(&b, &p);
    }
});
