//! The classical list of minimal rational relations among at most four cosines
//! of rational multiples of π in (0, π/2).

use crate::angle::AngleFraction;
use crate::error::Result;
use crate::scalar::q;

use super::{CJRelation, CJTerm};

/// `(sign, p, q)` for the term `sign·cos(πp/q)`.
type Term = (i64, i64, i64);

/// `(number, terms)`; every listed identity equals 1/2 except the
/// parameterized one (number 2), which is built by [`t_family`].
const LISTED: [(usize, &[Term]); 9] = [
    (1, &[(1, 1, 3)]),
    (3, &[(1, 1, 5), (-1, 2, 5)]),
    (4, &[(1, 1, 7), (-1, 2, 7), (1, 3, 7)]),
    (5, &[(1, 1, 5), (-1, 1, 15), (1, 4, 15)]),
    (6, &[(-1, 2, 5), (1, 2, 15), (-1, 7, 15)]),
    (7, &[(1, 1, 7), (1, 3, 7), (-1, 1, 21), (1, 8, 21)]),
    (8, &[(1, 1, 7), (-1, 2, 7), (1, 2, 21), (-1, 5, 21)]),
    (9, &[(-1, 2, 7), (1, 3, 7), (1, 4, 21), (1, 10, 21)]),
    (10, &[(-1, 1, 15), (1, 2, 15), (1, 4, 15), (-1, 7, 15)]),
];

/// Number of the parameterized family `cos(t+π/3) + cos(π/3−t) − cos(t) = 0`.
pub const T_FAMILY: usize = 2;

fn build(terms: &[Term]) -> CJRelation {
    let terms = terms
        .iter()
        .map(|&(s, p, d)| CJTerm::new(q(s, 1), AngleFraction::new(p, d).expect("positive denominator")))
        .collect::<Result<Vec<_>>>()
        .expect("nonzero coefficients");
    CJRelation::new(terms, q(1, 2))
}

/// The nine fixed identities, keyed by their position in the list.
pub fn listed() -> Vec<(usize, CJRelation)> {
    LISTED.iter().map(|(n, t)| (*n, build(t))).collect()
}

/// `cos(t+π/3) + cos(π/3−t) − cos(t) = 0`.
pub fn t_family(t: AngleFraction) -> CJRelation {
    let third = AngleFraction::new(1, 3).expect("positive denominator");
    let terms = vec![
        CJTerm::new(q(1, 1), t + third).expect("nonzero"),
        CJTerm::new(q(1, 1), third - t).expect("nonzero"),
        CJTerm::new(q(-1, 1), t).expect("nonzero"),
    ];
    CJRelation::new(terms, q(0, 1))
}

/// All ten identities in list order, the parameterized one instantiated at `t`.
pub fn all_with(t: AngleFraction) -> Vec<(usize, CJRelation)> {
    let mut out = listed();
    out.insert(1, (T_FAMILY, t_family(t)));
    out
}
