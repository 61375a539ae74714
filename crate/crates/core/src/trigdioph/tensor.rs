//! Sparse coordinates for `ℚ(ζ_L)` in the basis `⊗_j {ζ_{m_j}^e : e < φ(m_j)}`,
//! one factor per prime power `m_j ∥ L`.
//!
//! A root of unity is a tensor of at most `Π (p_j − 1)` basis vectors, so
//! cosines of small-denominator angles stay sparse even when `L` is large.
//! An element is rational exactly when only the all-zero exponent survives.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::angle::AngleFraction;
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::trigdioph::cyclo::factorize;

/// Sparse integer vector keyed by mixed-radix basis index; key 0 is the constant.
pub type SparseVec = BTreeMap<u64, i64>;

#[derive(Debug, Clone)]
struct PrimePower {
    p: u64,
    m: u64,
    /// `(L/m)⁻¹ mod m`
    inv: u64,
    stride: u64,
}

#[derive(Debug, Clone)]
pub struct TensorBasis {
    conductor: u64,
    factors: Vec<PrimePower>,
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let g = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i128) as u64
}

impl TensorBasis {
    pub fn new(conductor: u64) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::Invalid("conductor must be positive".into()));
        }
        let mut stride = 1u64;
        let mut factors = Vec::new();
        for (p, e) in factorize(conductor) {
            let m = p.pow(e);
            factors.push(PrimePower { p, m, inv: mod_inverse((conductor / m) % m, m), stride });
            stride = stride
                .checked_mul(m)
                .ok_or_else(|| Error::ScaleGuard(format!("conductor {conductor} too large")))?;
        }
        Ok(Self { conductor, factors })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `ζ_m^r` in the power basis of `ℚ(ζ_m)`, `m = p^e`: exponents below
    /// `φ(m)` are basis vectors; `ζ^{φ+t} = −Σ_{i<p−1} ζ^{t+i·p^{e−1}}`.
    fn prime_power_root(f: &PrimePower, r: u64) -> Vec<(u64, i64)> {
        let s = f.m / f.p;
        let phi = f.m - s;
        if r < phi {
            vec![(r, 1)]
        } else {
            let t = r - phi;
            (0..f.p - 1).map(|i| (t + i * s, -1)).collect()
        }
    }

    /// `ζ_L^k`.
    pub fn root(&self, k: i64) -> SparseVec {
        let k = k.rem_euclid(self.conductor as i64) as u64;
        let mut terms: Vec<(u64, i64)> = vec![(0, 1)];
        for f in &self.factors {
            let r = ((k % f.m) as u128 * f.inv as u128 % f.m as u128) as u64;
            let local = Self::prime_power_root(f, r);
            let mut next = Vec::with_capacity(terms.len() * local.len());
            for &(key, c) in &terms {
                for &(e, d) in &local {
                    next.push((key + e * f.stride, c * d));
                }
            }
            terms = next;
        }
        let mut out = SparseVec::new();
        for (key, c) in terms {
            *out.entry(key).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// `2cos(πp/q)`; needs `2q | L`.
    pub fn two_cos(&self, angle: AngleFraction) -> Result<SparseVec> {
        let two_q = 2 * angle.q() as u64;
        if !self.conductor.is_multiple_of(two_q) {
            return Err(Error::Invalid(format!("2·{} does not divide conductor {}", angle.q(), self.conductor)));
        }
        let k = angle.p() * (self.conductor / two_q) as i64;
        let mut v = self.root(k);
        for (key, c) in self.root(-k) {
            *v.entry(key).or_insert(0) += c;
        }
        v.retain(|_, c| *c != 0);
        Ok(v)
    }
}

/// Non-constant part of a vector.
pub fn irrational_part(v: &SparseVec) -> SparseVec {
    v.iter().filter(|(&k, _)| k != 0).map(|(&k, &c)| (k, c)).collect()
}

/// Every non-constant key of every vector occurs in at least one other vector.
///
/// Necessary for a relation among the vectors that uses all of them.
pub fn supports_overlap(vectors: &[&SparseVec]) -> bool {
    vectors.iter().enumerate().all(|(i, v)| {
        v.keys().filter(|&&k| k != 0).all(|k| {
            vectors.iter().enumerate().any(|(j, w)| j != i && w.contains_key(k))
        })
    })
}

/// Outcome of eliminating the non-constant parts of some vectors.
#[derive(Debug, Clone)]
pub struct Elimination {
    pub rank: usize,
    /// Coefficients of the first dependency found (in input order), if any.
    pub relation: Option<Vec<Rational>>,
}

/// Gaussian elimination over ℚ on the non-constant parts, tracking row combinations.
pub fn eliminate(vectors: &[&SparseVec]) -> Elimination {
    let n = vectors.len();
    let mut basis: Vec<(u64, BTreeMap<u64, Rational>, Vec<Rational>)> = Vec::new();
    let mut relation = None;
    for (i, v) in vectors.iter().enumerate() {
        let mut row: BTreeMap<u64, Rational> = v
            .iter()
            .filter(|(&k, _)| k != 0)
            .map(|(&k, &c)| (k, Rational::from_integer(c.into())))
            .collect();
        let mut track = vec![Rational::zero(); n];
        track[i] = Rational::one();
        for (pivot, prow, ptrack) in &basis {
            if let Some(c) = row.get(pivot).cloned() {
                let factor = &c / &prow[pivot];
                for (k, pc) in prow {
                    let e = row.entry(*k).or_insert_with(Rational::zero);
                    *e -= &factor * pc;
                }
                row.retain(|_, c| !c.is_zero());
                for (t, pt) in track.iter_mut().zip(ptrack) {
                    *t -= &factor * pt;
                }
            }
        }
        match row.keys().next().copied() {
            Some(pivot) => basis.push((pivot, row, track)),
            None => {
                if relation.is_none() {
                    relation = Some(track);
                }
            }
        }
    }
    Elimination { rank: basis.len(), relation }
}

/// Minimal in the sense that the vectors admit a rational-valued combination
/// and no proper subset does: rank `n − 1`, with every `n − 1` subset independent.
pub fn is_minimal_dependent(vectors: &[&SparseVec]) -> Option<Vec<Rational>> {
    let n = vectors.len();
    if !supports_overlap(vectors) {
        return None;
    }
    let full = eliminate(vectors);
    if full.rank + 1 != n {
        return None;
    }
    for skip in 0..n {
        let rest: Vec<&SparseVec> = vectors.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, v)| *v).collect();
        if eliminate(&rest).rank != n - 1 {
            return None;
        }
    }
    full.relation
}
