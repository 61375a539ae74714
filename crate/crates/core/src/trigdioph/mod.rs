//! Rational linear relations among cosines of rational multiples of π.
//!
//! Exact values live in cyclotomic fields: [`cyclo`] keeps dense power-basis
//! coordinates for small conductors and [`tensor`] keeps sparse coordinates
//! that stay cheap for the large conductors the exhaustive search needs.

pub mod cyclo;
pub mod families;
pub mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::angle::AngleFraction;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, q, Rational};
use crate::surface::BoundaryTraces;

pub use cyclo::{CycloElement, CONDUCTOR_GUARD};
use tensor::{SparseVec, TensorBasis};

/// `coeff · cos(angle)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CJTerm {
    coeff: Rational,
    angle: AngleFraction,
}

impl CJTerm {
    pub fn new(coeff: Rational, angle: AngleFraction) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::Invalid("cosine term with zero coefficient".into()));
        }
        Ok(Self { coeff, angle })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn angle(&self) -> AngleFraction {
        self.angle
    }
}

/// `Σ coeff·cos(angle) = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CJRelation {
    pub terms: Vec<CJTerm>,
    pub rhs: Rational,
}

impl CJRelation {
    pub fn new(terms: Vec<CJTerm>, rhs: Rational) -> Self {
        Self { terms, rhs }
    }

    pub fn angles(&self) -> impl Iterator<Item = AngleFraction> + '_ {
        self.terms.iter().map(|t| t.angle)
    }

    /// Double-precision value of `Σ coeff·cos(angle) − rhs`.
    pub fn eval_f64(&self) -> f64 {
        let lhs: f64 = self.terms.iter().map(|t| t.coeff.to_f64().unwrap_or(f64::NAN) * t.angle.cos()).sum();
        lhs - self.rhs.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for CJRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = t.coeff.abs();
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            write!(f, "cos({})", t.angle)?;
        }
        write!(f, " = {}", format_rational(&self.rhs))
    }
}

/// Rewrites every angle into [0, π/2] without changing the value of the relation.
///
/// Angles above π are reflected, angles above π/2 are replaced by their
/// supplements with the sign flipped, `cos 0` moves to the right side and
/// `cos(π/2)` disappears. Equal angles are merged and the result is sorted.
pub fn normalize(rel: &CJRelation) -> CJRelation {
    let mut rhs = rel.rhs.clone();
    let mut merged: BTreeMap<AngleFraction, Rational> = BTreeMap::new();
    for t in &rel.terms {
        let mut angle = t.angle.folded();
        let mut coeff = t.coeff.clone();
        if angle > AngleFraction::half_pi() {
            angle = angle.supplement();
            coeff = -coeff;
        }
        if angle == AngleFraction::zero() {
            rhs -= coeff;
        } else if angle != AngleFraction::half_pi() {
            *merged.entry(angle).or_insert_with(Rational::zero) += coeff;
        }
    }
    let terms = merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(angle, coeff)| CJTerm { coeff, angle })
        .collect();
    CJRelation { terms, rhs }
}

fn checked_conductor(angles: impl IntoIterator<Item = AngleFraction>) -> Result<u64> {
    angles.into_iter().try_fold(1u64, |l, a| {
        let m = 2 * a.q() as u64;
        (l / l.gcd(&m)).checked_mul(m).ok_or(Error::ConductorOverflow(u64::MAX))
    })
}

/// `Σ coeff·cos(angle) − rhs` in `ℚ(ζ_L)`, `L = lcm(2q)`.
pub fn eval_exact(rel: &CJRelation) -> Result<CycloElement> {
    let l = checked_conductor(rel.angles())?;
    let mut acc = CycloElement::rational(-rel.rhs.clone(), l)?;
    for t in &rel.terms {
        acc = acc.add(&CycloElement::cos(t.angle, l)?.scale(&t.coeff))?;
    }
    Ok(acc)
}

/// `Σ coeff·2cos(angle)` in sparse coordinates.
fn sparse_sum(terms: &[&CJTerm], basis: &TensorBasis) -> Result<BTreeMap<u64, Rational>> {
    let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
    for t in terms {
        for (k, c) in basis.two_cos(t.angle)? {
            *acc.entry(k).or_insert_with(Rational::zero) += &t.coeff * Rational::from_integer(c.into());
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(acc)
}

fn rational_value(terms: &[&CJTerm], basis: &TensorBasis) -> Result<Option<Rational>> {
    let v = sparse_sum(terms, basis)?;
    if v.keys().any(|&k| k != 0) {
        return Ok(None);
    }
    Ok(Some(v.get(&0).cloned().unwrap_or_else(Rational::zero) / Rational::from_integer(2.into())))
}

/// The value of `Σ coeff·cos(angle)` when it is rational.
pub fn is_rational_relation(rel: &CJRelation) -> Result<Option<Rational>> {
    let basis = TensorBasis::new(checked_conductor(rel.angles())?)?;
    let terms: Vec<&CJTerm> = rel.terms.iter().collect();
    rational_value(&terms, &basis)
}

/// Where a rationally valued relation sits relative to the classical list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMatch {
    /// `scale` times listed identity `number`.
    Listed { number: usize, scale: Rational },
    /// `scale` times `cos(t+π/3) + cos(π/3−t) − cos(t) = 0`.
    TFamily { t: AngleFraction, scale: Rational },
    /// A nonempty proper sub-combination is already rational.
    Reducible,
    /// No terms survive normalization.
    Empty,
    /// Minimal, rational, and not on the list.
    Unlisted,
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Listed { number, scale } => write!(f, "family #{number} (scale {})", format_rational(scale)),
            Self::TFamily { t, scale } => write!(f, "family #2 with t = {t} (scale {})", format_rational(scale)),
            Self::Reducible => f.write_str("reducible"),
            Self::Empty => f.write_str("empty"),
            Self::Unlisted => f.write_str("unlisted"),
        }
    }
}

/// `Some(λ)` when `terms` equals `λ·reference` term by term (both sorted by angle).
fn proportional(terms: &[CJTerm], reference: &[CJTerm]) -> Option<Rational> {
    if terms.len() != reference.len() || terms.is_empty() {
        return None;
    }
    let scale = &terms[0].coeff / &reference[0].coeff;
    terms
        .iter()
        .zip(reference)
        .all(|(t, r)| t.angle == r.angle && t.coeff == &scale * &r.coeff)
        .then_some(scale)
}

fn match_t_family(terms: &[CJTerm]) -> Option<(AngleFraction, Rational)> {
    if terms.len() != 3 {
        return None;
    }
    // With all three angles distinct in (0, π/2), t is necessarily the smallest.
    let t = terms[0].angle;
    if t >= AngleFraction::new(1, 6).expect("positive denominator") {
        return None;
    }
    let reference = normalize(&families::t_family(t));
    proportional(terms, &reference.terms).map(|s| (t, s))
}

/// Identifies which classical identity a rationally valued relation is proportional to.
pub fn match_family(rel: &CJRelation) -> Result<FamilyMatch> {
    let rel = normalize(rel);
    let basis = TensorBasis::new(checked_conductor(rel.angles())?)?;
    let all: Vec<&CJTerm> = rel.terms.iter().collect();
    if rational_value(&all, &basis)?.is_none() {
        return Err(Error::NotRational);
    }
    let n = rel.terms.len();
    if n == 0 {
        return Ok(FamilyMatch::Empty);
    }
    for mask in 1..(1u32 << n) - 1 {
        let sub: Vec<&CJTerm> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &rel.terms[i]).collect();
        if rational_value(&sub, &basis)?.is_some() {
            return Ok(FamilyMatch::Reducible);
        }
    }
    for (number, fam) in families::listed() {
        if let Some(scale) = proportional(&rel.terms, &normalize(&fam).terms) {
            return Ok(FamilyMatch::Listed { number, scale });
        }
    }
    if let Some((t, scale)) = match_t_family(&rel.terms) {
        return Ok(FamilyMatch::TFamily { t, scale });
    }
    Ok(FamilyMatch::Unlisted)
}

/// Coefficients tried by [`bounded_search`] when none are given.
pub fn default_coeff_set() -> Vec<Rational> {
    vec![q(1, 1), q(-1, 1), q(1, 2), q(-1, 2), q(2, 1), q(-2, 1)]
}

pub const SEARCH_MAX_Q: i64 = 30;
pub const SEARCH_MAX_TERMS: usize = 4;

/// The reduced angles `πp/q` strictly inside (0, π/2) with `q ≤ max_q`, ascending.
pub fn open_quadrant_angles(max_q: i64) -> Vec<AngleFraction> {
    let mut out: Vec<AngleFraction> = (1..=max_q)
        .flat_map(|d| (1..d).filter(move |&p| 2 * p < d && p.gcd(&d) == 1).map(move |p| (p, d)))
        .map(|(p, d)| AngleFraction::new(p, d).expect("positive denominator"))
        .collect();
    out.sort();
    out
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    go(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Every minimal rational relation with at most `max_terms` distinct angles in
/// (0, π/2) of denominator at most `max_q` and coefficients from `coeff_set`.
///
/// Output order is by subset size, then lexicographic in the ascending angle
/// list, then by the order of `coeff_set`.
pub fn bounded_search(max_q: i64, max_terms: usize, coeff_set: &[Rational]) -> Result<Vec<CJRelation>> {
    if !(1..=SEARCH_MAX_Q).contains(&max_q) {
        return Err(Error::ScaleGuard(format!("max_q = {max_q} outside 1..={SEARCH_MAX_Q}")));
    }
    if max_terms > SEARCH_MAX_TERMS {
        return Err(Error::ScaleGuard(format!("max_terms = {max_terms} exceeds {SEARCH_MAX_TERMS}")));
    }
    let angles = open_quadrant_angles(max_q);
    let basis = TensorBasis::new(checked_conductor(angles.iter().copied())?)?;
    let vectors: Vec<SparseVec> = angles.iter().map(|&a| basis.two_cos(a)).collect::<Result<_>>()?;
    let mut coeffs: Vec<Rational> = Vec::new();
    for c in coeff_set {
        if !c.is_zero() && !coeffs.contains(c) {
            coeffs.push(c.clone());
        }
    }

    let mut out = Vec::new();
    for k in 1..=max_terms {
        for_each_subset(angles.len(), k, &mut |idx| {
            let vs: Vec<&SparseVec> = idx.iter().map(|&i| &vectors[i]).collect();
            let Some(rel) = tensor::is_minimal_dependent(&vs) else {
                return Ok(());
            };
            let mut seen: Vec<Vec<Rational>> = Vec::new();
            for c0 in &coeffs {
                let scale = c0 / &rel[0];
                let scaled: Vec<Rational> = rel.iter().map(|r| r * &scale).collect();
                if !scaled.iter().all(|c| coeffs.contains(c)) || seen.contains(&scaled) {
                    continue;
                }
                let constant: Rational = scaled
                    .iter()
                    .zip(&vs)
                    .map(|(c, v)| c * Rational::from_integer(v.get(&0).copied().unwrap_or(0).into()))
                    .sum();
                let terms = scaled
                    .iter()
                    .zip(idx)
                    .map(|(c, &i)| CJTerm { coeff: c.clone(), angle: angles[i] })
                    .collect();
                out.push(CJRelation { terms, rhs: constant / Rational::from_integer(2.into()) });
                seen.push(scaled);
            }
            Ok(())
        })?;
    }
    Ok(out)
}

/// Result of evaluating the four-cosine equation attached to a twist orbit.
#[derive(Debug, Clone)]
pub struct EqCosReport {
    /// `cos θ_xy + cos(θ_z+θ_y) + cos(θ_z−θ_y) + cos θ_x − σ_x/2`.
    pub residual: CycloElement,
    /// Whether `2cos θ_xy = σ_x − (2cos θ_y)(2cos θ_z) − 2cos θ_x`; checked only when the residual vanishes.
    pub trace_identity: Option<bool>,
}

impl EqCosReport {
    pub fn is_zero(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.residual.as_rational()
    }
}

/// The cosine equation for angles `[θ_x, θ_y, θ_z, θ_xy]` against `σ_x` of `b`.
pub fn eqcos_residual<T: crate::scalar::Field>(b: &BoundaryTraces<T>, thetas: [AngleFraction; 4]) -> Result<EqCosReport> {
    let sigma = b.sigma_x().as_rational().ok_or(Error::FloatMode)?.clone();
    let [tx, ty, tz, txy] = thetas;
    let (plus, minus) = (tz + ty, tz - ty);
    let l = checked_conductor([tx, ty, tz, txy, plus, minus])?;
    let cos = |a: AngleFraction| CycloElement::cos(a, l);
    let mut residual = CycloElement::rational(-sigma.clone() / Rational::from_integer(2.into()), l)?;
    for a in [txy, plus, minus, tx] {
        residual = residual.add(&cos(a)?)?;
    }
    let trace_identity = if residual.is_zero() {
        let two = q(2, 1);
        let lhs = cos(txy)?.scale(&two);
        let yz = cos(ty)?.scale(&two).mul(&cos(tz)?.scale(&two))?;
        let rhs = CycloElement::rational(sigma, l)?.sub(&yz)?.sub(&cos(tx)?.scale(&two))?;
        Some(lhs == rhs)
    } else {
        None
    };
    Ok(EqCosReport { residual, trace_identity })
}
