//! Replays the checked-in fuzz seeds through the same checks the fuzz targets make.

use std::fs;
use std::path::PathBuf;

use fourhole::parse::{parse_point, parse_traces, Config};
use fourhole::scalar::{format_rational, parse_rational};
use fourhole::surface::kappa;
use fourhole::{BoundaryTraces, Rational, TracePoint, TwistWord};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| String::from_utf8_lossy(&fs::read(e.unwrap().path()).unwrap()).into_owned())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn parse_rational_seeds() {
    let mut parsed = 0;
    for s in seeds("parse_rational") {
        if let Ok(r) = parse_rational(&s) {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
            parsed += 1;
        }
    }
    assert!(parsed >= 4);
}

#[test]
fn parse_coords_seeds() {
    for s in seeds("parse_coords") {
        let (head, tail) = s.split_once(';').unwrap_or((&s, ""));
        let exact: Result<BoundaryTraces<Rational>, _> = parse_traces(head);
        let float: Result<BoundaryTraces<f64>, _> = parse_traces(head);
        if exact.is_err() {
            assert!(float.is_err(), "{s}");
        }
        let p: Result<TracePoint<Rational>, _> = parse_point(tail);
        if let (Ok(b), Ok(p)) = (exact, p) {
            let _ = kappa(&b, &p);
        }
    }
}

#[test]
fn twist_word_seeds() {
    for s in seeds("twist_word") {
        if let Ok(w) = s.parse::<TwistWord>() {
            assert_eq!(w.to_string().parse::<TwistWord>().unwrap(), w);
            assert!(w.concat(&w.inverse()).reduced().is_empty());
        }
    }
}

#[test]
fn config_seeds() {
    for s in seeds("config") {
        if let Ok(cfg) = Config::parse(&s) {
            for key in cfg.keys() {
                assert!(cfg.get(&key.replace('-', "_")).is_some());
            }
        }
    }
}

mod arbitrary_text {
    use super::*;
    use proptest::prelude::*;

    fn texty() -> impl Strategy<Value = String> {
        prop_oneof![
            any::<String>(),
            "[-+0-9/., XYZxyz^=#\"_a-z\n]{0,40}",
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 4000, ..ProptestConfig::default() })]

        #[test]
        fn parsers_round_trip_or_reject(s in texty()) {
            if let Ok(r) = parse_rational(&s) {
                prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
            }
            if let Ok(w) = s.parse::<TwistWord>() {
                prop_assert_eq!(w.to_string().parse::<TwistWord>().unwrap(), w);
            }
            if parse_traces::<Rational>(&s).is_err() {
                prop_assert!(parse_traces::<f64>(&s).is_err());
            }
            let _ = parse_point::<Rational>(&s);
            if let Ok(cfg) = Config::parse(&s) {
                for key in cfg.keys() {
                    prop_assert!(cfg.get(key).is_some());
                }
            }
        }
    }
}
