//! Text formats for traces, points and flat `key = value` configuration files.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Field};
use crate::surface::{BoundaryTraces, TracePoint};

/// Comma-separated numbers; exactly `n` of them.
pub fn parse_list<T: Field>(s: &str, n: usize) -> Result<Vec<T>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(Error::Parse(format!("expected {n} comma-separated values, got {}", parts.len())));
    }
    parts.into_iter().map(|p| parse_rational(p).map(|r| T::from_rational(&r))).collect()
}

/// `a,b,c,d`, each strictly inside (−2, 2).
pub fn parse_traces<T: Field>(s: &str) -> Result<BoundaryTraces<T>> {
    let v: [T; 4] = parse_list(s, 4)?.try_into().map_err(|_| Error::Parse("four traces".into()))?;
    BoundaryTraces::from_array(v)
}

/// `x,y,z`.
pub fn parse_point<T: Field>(s: &str) -> Result<TracePoint<T>> {
    let mut v = parse_list::<T>(s, 3)?.into_iter();
    let (x, y, z) = (v.next(), v.next(), v.next());
    match (x, y, z) {
        (Some(x), Some(y), Some(z)) => Ok(TracePoint::new(x, y, z)),
        _ => Err(Error::Parse("three coordinates".into())),
    }
}

/// Flat `key = value` lines; `#` starts a comment, blank lines are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", n + 1)))?;
            let key = key.trim();
            if key.is_empty() || !key.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-') {
                return Err(Error::Parse(format!("line {}: bad key {key:?}", n + 1)));
            }
            let value = value.trim().trim_matches('"');
            if entries.insert(key.replace('_', "-"), value.to_string()).is_some() {
                return Err(Error::Parse(format!("line {}: duplicate key {key:?}", n + 1)));
            }
        }
        Ok(Self { entries })
    }

    /// Keys are compared with `_` and `-` treated alike.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(&key.replace('_', "-")).map(String::as_str)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}
