//! Divisors on the rational places and the four code families.
//!
//! A [`Divisor`] is an integer multiplicity vector indexed by the `n`
//! rational places (places are abstract indices at this layer; only the
//! realization binds them to points of the projective line). A
//! [`FamilySpec`] fixes a family, a curve, and the parameters `(k, s, w)`,
//! and [`enumerate_family`] streams the family's divisors in lexicographic
//! order of their multiplicity vectors.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

use crate::counting::{self, BoundedEq};

/// Which divisor family a spec describes.
///
/// All four consist of the divisors of degree `s` whose per-place
/// multiplicities lie in a fixed range: `{0,1}` for H, `{0..s}` for A,
/// `{0..w}` for B, and `{s-w(n-1)..w}` for C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    H,
    A,
    B,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::H => write!(f, "H"),
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
        }
    }
}

impl Family {
    pub fn uses_weight_bound(self) -> bool {
        matches!(self, Family::B | Family::C)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family {family} is infeasible: {reason}")]
    Infeasible { family: Family, reason: String },
    #[error("family {0} does not take a weight bound w")]
    UnexpectedWeight(Family),
    #[error("family {0} requires a weight bound w >= 1")]
    MissingWeight(Family),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("divisor length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// The curve data the constructions depend on: the field size `q`, the
/// number of rational places `n`, and the genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDescriptor {
    pub q: u32,
    pub n: usize,
    pub g: i64,
}

impl CurveDescriptor {
    pub fn new(q: u32, n: usize, g: i64) -> Result<CurveDescriptor, FamilyError> {
        if q < 2 || !is_prime_power(q) {
            return Err(FamilyError::InvalidParameter(format!(
                "q = {q} is not a prime power"
            )));
        }
        if n < 1 {
            return Err(FamilyError::InvalidParameter(
                "need at least one rational place".into(),
            ));
        }
        if g < 0 {
            return Err(FamilyError::InvalidParameter(format!(
                "genus must be nonnegative, got {g}"
            )));
        }
        Ok(CurveDescriptor { q, n, g })
    }
}

/// Factors `q` as p^m if it is a prime power.
pub fn prime_power_decomposition(q: u32) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u32;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut m = 0;
            while rest % p == 0 {
                rest /= p;
                m += 1;
            }
            return (rest == 1).then_some((p as u64, m));
        }
        p += 1;
    }
    Some((q as u64, 1)) // q itself is prime
}

fn is_prime_power(q: u32) -> bool {
    prime_power_decomposition(q).is_some()
}

/// A divisor supported on the rational places: one (possibly negative)
/// multiplicity per place, indexed 0..n-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Divisor {
    mults: Vec<i64>,
}

impl Divisor {
    pub fn new(mults: Vec<i64>) -> Divisor {
        Divisor { mults }
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn mult(&self, place: usize) -> i64 {
        self.mults[place]
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn degree(&self) -> i64 {
        self.mults.iter().sum()
    }

    pub fn pointwise_min(&self, other: &Divisor) -> Result<Divisor, FamilyError> {
        self.zip_with(other, i64::min)
    }

    pub fn pointwise_max(&self, other: &Divisor) -> Result<Divisor, FamilyError> {
        self.zip_with(other, i64::max)
    }

    fn zip_with(&self, other: &Divisor, f: impl Fn(i64, i64) -> i64) -> Result<Divisor, FamilyError> {
        if self.len() != other.len() {
            return Err(FamilyError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Divisor::new(
            self.mults
                .iter()
                .zip(&other.mults)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        ))
    }
}

/// A fully-specified code family: which family, over which curve, with the
/// scaling `k`, the degree `s`, and (for B and C) the weight bound `w`.
///
/// Construction validates structural feasibility; the theorem-side
/// hypotheses `k > 2g-2` and `w <= s` are soft and surfaced through
/// [`FamilySpec::theorem_valid`], [`FamilySpec::standing_hypothesis_ok`],
/// and [`FamilySpec::base_warnings`] instead of being rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct FamilySpec {
    family: Family,
    curve: CurveDescriptor,
    k: i64,
    s: i64,
    w: Option<i64>,
}

/// Flat JSON form: {"family": "B", "q": 4, "n": 5, "g": 0, "k": 2, "s": 3, "w": 2}
#[derive(Serialize, Deserialize, Clone)]
struct SpecRepr {
    family: Family,
    q: u32,
    n: usize,
    g: i64,
    k: i64,
    s: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w: Option<i64>,
}

impl TryFrom<SpecRepr> for FamilySpec {
    type Error = FamilyError;
    fn try_from(r: SpecRepr) -> Result<FamilySpec, FamilyError> {
        FamilySpec::new(r.family, CurveDescriptor::new(r.q, r.n, r.g)?, r.k, r.s, r.w)
    }
}

impl From<FamilySpec> for SpecRepr {
    fn from(s: FamilySpec) -> SpecRepr {
        SpecRepr {
            family: s.family,
            q: s.curve.q,
            n: s.curve.n,
            g: s.curve.g,
            k: s.k,
            s: s.s,
            w: s.w,
        }
    }
}

impl FamilySpec {
    pub fn new(
        family: Family,
        curve: CurveDescriptor,
        k: i64,
        s: i64,
        w: Option<i64>,
    ) -> Result<FamilySpec, FamilyError> {
        if k < 1 {
            return Err(FamilyError::InvalidParameter(format!(
                "k must be a positive integer, got {k}"
            )));
        }
        if s < 1 {
            return Err(FamilyError::InvalidParameter(format!(
                "s must be a positive integer, got {s}"
            )));
        }
        match (family.uses_weight_bound(), w) {
            (false, Some(_)) => return Err(FamilyError::UnexpectedWeight(family)),
            (true, None) => return Err(FamilyError::MissingWeight(family)),
            (true, Some(w)) if w < 1 => {
                return Err(FamilyError::InvalidParameter(format!(
                    "w must be a positive integer, got {w}"
                )))
            }
            _ => {}
        }
        let n = curve.n as i64;
        if family == Family::H && s > n {
            return Err(FamilyError::Infeasible {
                family,
                reason: format!("s = {s} exceeds the number of rational places n = {n}"),
            });
        }
        if let Some(w) = w {
            if s > n * w {
                return Err(FamilyError::Infeasible {
                    family,
                    reason: format!("s = {s} exceeds n*w = {}", n * w),
                });
            }
        }
        Ok(FamilySpec {
            family,
            curve,
            k,
            s,
            w,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn curve(&self) -> CurveDescriptor {
        self.curve
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn w(&self) -> Option<i64> {
        self.w
    }

    /// Per-place multiplicity range of the family.
    pub fn mult_range(&self) -> (i64, i64) {
        let n = self.curve.n as i64;
        match self.family {
            Family::H => (0, 1),
            Family::A => (0, self.s),
            Family::B => (0, self.w.expect("B has w")),
            Family::C => {
                let w = self.w.expect("C has w");
                (self.s - w * (n - 1), w)
            }
        }
    }

    /// Multiplier c of the all-places divisor whose Riemann-Roch space is
    /// the ambient: k for H, ks for A, kw for B and C.
    pub fn ambient_multiplier(&self) -> i64 {
        match self.family {
            Family::H => self.k,
            Family::A => self.k * self.s,
            Family::B | Family::C => self.k * self.w.expect("B/C have w"),
        }
    }

    /// Whether k > 2g-2, the regime in which the Riemann-Roch dimension
    /// formulas used by the parameter theorems are exact.
    pub fn theorem_valid(&self) -> bool {
        self.k > 2 * self.curve.g - 2
    }

    /// Whether w <= s holds (vacuous for H and A).
    pub fn standing_hypothesis_ok(&self) -> bool {
        self.w.map_or(true, |w| w <= self.s)
    }

    /// Warnings about soft hypothesis violations.
    pub fn base_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.theorem_valid() {
            out.push(format!(
                "k = {} does not exceed 2g-2 = {}: Riemann-Roch dimensions are lower bounds only",
                self.k,
                2 * self.curve.g - 2
            ));
        }
        if !self.standing_hypothesis_ok() {
            out.push(format!(
                "w = {} exceeds s = {}: outside the standing hypothesis 0 < w <= s <= nw",
                self.w.expect("weight present"),
                self.s
            ));
        }
        out
    }
}

/// True iff `d` has the right length, degree s, and every multiplicity in
/// the family's range.
pub fn family_contains(spec: &FamilySpec, d: &Divisor) -> bool {
    if d.len() != spec.curve.n {
        return false;
    }
    let (lo, hi) = spec.mult_range();
    d.degree() == spec.s && d.mults().iter().all(|&m| lo <= m && m <= hi)
}

/// Streams every divisor of the family exactly once, in lexicographic
/// order of multiplicity vectors. Lazy: divisors are produced on demand,
/// so callers decide how much of a large family to touch.
pub fn enumerate_family(spec: &FamilySpec) -> FamilyIter {
    let (lo, hi) = spec.mult_range();
    FamilyIter::new(spec.curve.n, spec.s, lo, hi)
}

/// Lexicographic iterator over bounded compositions of `s` into `n` parts.
pub struct FamilyIter {
    n: usize,
    s: i64,
    lo: i64,
    hi: i64,
    next: Option<Vec<i64>>,
}

impl FamilyIter {
    fn new(n: usize, s: i64, lo: i64, hi: i64) -> FamilyIter {
        let mut iter = FamilyIter {
            n,
            s,
            lo,
            hi,
            next: None,
        };
        iter.next = iter.smallest_completion(&[], s);
        iter
    }

    /// The lexicographically smallest feasible assignment for the
    /// remaining positions, given the prefix already fixed.
    fn smallest_completion(&self, prefix: &[i64], mut rem: i64) -> Option<Vec<i64>> {
        let mut out = prefix.to_vec();
        for pos in prefix.len()..self.n {
            let later = (self.n - pos - 1) as i64;
            let v = self.lo.max(rem - self.hi * later);
            if v > self.hi {
                return None;
            }
            out.push(v);
            rem -= v;
        }
        (rem == 0).then_some(out)
    }

    fn advance(&self, cur: &[i64]) -> Option<Vec<i64>> {
        // Scan right to left for a position that can be incremented while
        // leaving a feasible remainder for the suffix.
        let mut prefix_sum: i64 = cur[..self.n - 1].iter().sum();
        for j in (0..self.n - 1).rev() {
            prefix_sum -= cur[j];
            let later = (self.n - 1 - j) as i64;
            let available = self.s - prefix_sum;
            let v_min = (cur[j] + 1).max(available - self.hi * later);
            let v_max = self.hi.min(available - self.lo * later);
            if v_min <= v_max {
                let mut prefix = cur[..j].to_vec();
                prefix.push(v_min);
                return self.smallest_completion(&prefix, self.s - prefix_sum - v_min);
            }
        }
        None
    }
}

impl Iterator for FamilyIter {
    type Item = Divisor;

    fn next(&mut self) -> Option<Divisor> {
        let cur = self.next.take()?;
        self.next = self.advance(&cur);
        Some(Divisor::new(cur))
    }
}

/// The divisor at position `rank` (0-based) in the family's lexicographic
/// order, or `None` when `rank` is at least the family size. Costs one
/// bounded-composition count per (place, candidate value) pair, so large
/// families can be sampled without walking the stream.
pub fn unrank(spec: &FamilySpec, rank: &BigUint) -> Option<Divisor> {
    let (lo, hi) = spec.mult_range();
    let n = spec.curve.n;
    let mut rank = rank.clone();
    let mut rem = spec.s;
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        let later = (n - pos - 1) as u64;
        let mut chosen = None;
        for v in lo..=hi {
            let below = if later == 0 {
                if rem - v == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                counting::count_u_shifted(BoundedEq::new(later, rem - v, lo, hi))
            };
            if rank < below {
                chosen = Some(v);
                break;
            }
            rank -= below;
        }
        let v = chosen?;
        out.push(v);
        rem -= v;
    }
    Some(Divisor::new(out))
}
