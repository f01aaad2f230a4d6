//! Explicit realization over the genus-0 rational function field.
//!
//! Over GF(q) the projective line has exactly n = q+1 rational places: one
//! finite place per field element plus the place at infinity. A function f
//! in the ambient space L(c * D), D the sum of all places, is identified
//! with the polynomial h = f * prod over finite a of (x-a)^c, which has
//! degree at most cn; the coefficients of h are the ambient coordinates.
//! Under this identification the codeword L(kV) for a divisor V with
//! multiplicities m_a is spanned by
//!
//!   x^j * prod over finite a of (x-a)^(c - k*m_a),   0 <= j <= k*deg(V),
//!
//! and the pole bound at infinity becomes the degree bound
//! deg h <= c(n-1) + k*m_inf, which the construction satisfies whenever
//! k*m_a <= c at every place. Every Riemann-Roch claim about dimensions,
//! intersections, and subspace distances then reduces to exact row
//! reduction over GF(q), which is what [`verify`] checks.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::counting::count_family;
use crate::divisors::{
    enumerate_family, family_contains, prime_power_decomposition, unrank, Divisor, FamilyError,
    FamilySpec,
};
use crate::gf::{Field, FieldElement, GfError, MatrixGF, Poly};
use crate::params::riemann_roch_dim;

/// Number of violating pairs recorded in full per law; beyond this only the
/// booleans and counters reflect further violations.
const MAX_RECORDED_VIOLATIONS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("genus {0} realization is not supported; only genus 0 is realized")]
    GenusUnsupported(i64),
    #[error(
        "scaled multiplicity k*m = {k}*{mult} at place {place} exceeds the ambient multiplier {ambient}"
    )]
    AmbientOverflow {
        place: usize,
        mult: i64,
        k: i64,
        ambient: i64,
    },
    #[error("family size {size} exceeds the cap {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("spec has n = {n} places but genus-0 realization over GF({q}) requires n = q+1 = {expected}")]
    PlaceCountMismatch { n: usize, q: u32, expected: usize },
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A rational place of the projective line over GF(q).
///
/// Enumeration order is canonical: the finite places in field-element index
/// order, then infinity last, matching the divisor index convention
/// (place i holds element i for i < q; place q is infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalPlace {
    Finite(FieldElement),
    Infinity,
}

/// The q+1 rational places in canonical order.
pub fn rational_places(field: &Field) -> Vec<RationalPlace> {
    field
        .elements()
        .map(RationalPlace::Finite)
        .chain(std::iter::once(RationalPlace::Infinity))
        .collect()
}

/// A subspace of the ambient coordinate space, held as its canonical
/// reduced row-echelon basis. Two subspaces are equal iff their bases are
/// identical matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: MatrixGF,
}

impl Subspace {
    /// Canonicalizes a generating set: reduce, drop zero rows.
    pub fn from_generators(generators: &MatrixGF) -> Subspace {
        let (reduced, rank) = generators.rref();
        Subspace {
            basis: reduced.truncate_rows(rank),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    fn key(&self) -> (usize, Vec<FieldElement>) {
        (self.dim(), self.basis.entries().to_vec())
    }
}

/// Subspace distance dim(U+V) - dim(U∩V) = 2 rank([U;V]) - dim U - dim V.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<i64, RealizeError> {
    let r = u.basis.stack_rank(&v.basis)? as i64;
    Ok(2 * r - u.dim() as i64 - v.dim() as i64)
}

/// dim(U∩V) = dim U + dim V - rank([U;V]).
pub fn intersection_dim(u: &Subspace, v: &Subspace) -> Result<i64, RealizeError> {
    let r = u.basis.stack_rank(&v.basis)? as i64;
    Ok(u.dim() as i64 + v.dim() as i64 - r)
}

/// Realizes L(kV) inside the coordinates of L(c * D) on the genus-0 line.
///
/// Accepts any divisor on the q+1 places with k*m <= c everywhere (its
/// degree need not be the family degree; intersections of codewords are
/// realized through their pointwise-min divisors, which have smaller
/// degree). The resulting dimension is k*deg(V) + 1, or 0 when that is
/// negative.
pub fn embed_basis(field: &Field, d: &Divisor, k: i64, c: i64) -> Result<Subspace, RealizeError> {
    let q = field.order();
    let n = q as usize + 1;
    if d.len() != n {
        return Err(RealizeError::PlaceCountMismatch {
            n: d.len(),
            q,
            expected: n,
        });
    }
    for (place, &mult) in d.mults().iter().enumerate() {
        if k * mult > c {
            return Err(RealizeError::AmbientOverflow {
                place,
                mult,
                k,
                ambient: c,
            });
        }
    }

    let ambient = (c * n as i64 + 1) as usize;
    let dim = k * d.degree() + 1;
    if dim <= 0 {
        return Ok(Subspace {
            basis: MatrixGF::zero(field, 0, ambient),
        });
    }
    let dim = dim as usize;

    let mut base = Poly::one(field);
    for i in 0..q {
        let e = c - k * d.mult(i as usize);
        base = base
            .mul(&Poly::linear_power(field, field.element(i), e as u32))
            .expect("same field");
    }
    let base_deg = base.degree().expect("product of monic factors is nonzero");
    debug_assert!(base_deg + dim - 1 < ambient, "basis row escapes the ambient");

    let mut generators = MatrixGF::zero(field, dim, ambient);
    for j in 0..dim {
        for (t, &coef) in base.coeffs().iter().enumerate() {
            generators.set(j, j + t, coef);
        }
    }
    let subspace = Subspace::from_generators(&generators);
    debug_assert_eq!(subspace.dim(), dim, "shifted rows must be independent");
    Ok(subspace)
}

fn realization_field(spec: &FamilySpec) -> Result<Field, RealizeError> {
    let curve = spec.curve();
    if curve.g != 0 {
        return Err(RealizeError::GenusUnsupported(curve.g));
    }
    let (p, m) = prime_power_decomposition(curve.q).expect("spec validated q");
    let field = Field::new(p, m)?;
    let expected = field.order() as usize + 1;
    if curve.n != expected {
        return Err(RealizeError::PlaceCountMismatch {
            n: curve.n,
            q: curve.q,
            expected,
        });
    }
    Ok(field)
}

/// Realizes every codeword of the family, one subspace per divisor.
///
/// Refuses families larger than `cap` (the error carries the exact size)
/// rather than attempting an infeasible exhaustion.
pub fn realize_family(
    spec: &FamilySpec,
    cap: u64,
) -> Result<Vec<(Divisor, Subspace)>, RealizeError> {
    let field = realization_field(spec)?;
    let size = count_family(spec);
    if size > BigUint::from(cap) {
        return Err(RealizeError::CapExceeded {
            size: size.to_string(),
            cap,
        });
    }
    let c = spec.ambient_multiplier();
    enumerate_family(spec)
        .map(|d| embed_basis(&field, &d, spec.k(), c).map(|s| (d, s)))
        .collect()
}

/// A pair of family divisors whose pointwise min has degree s-1, so their
/// codewords realize the minimum predicted distance 2k (for s = 1 the min
/// is the zero divisor and the distance is 2k as well at genus 0).
///
/// The explicit (s-1)P + Q vs (s-1)P + R pair is returned whenever the
/// family's multiplicity range admits it; otherwise the lexicographically
/// first divisor is perturbed by moving one unit of multiplicity between
/// two places. Returns `None` for one-element families.
pub fn proof_pair(spec: &FamilySpec) -> Option<(Divisor, Divisor)> {
    if count_family(spec) < BigUint::from(2u32) {
        return None;
    }
    let n = spec.curve().n;
    let s = spec.s();
    let (lo, hi) = spec.mult_range();
    if n >= 3 && s - 1 <= hi && 1 <= hi && lo <= 0 {
        let mut v1 = vec![0i64; n];
        v1[0] = s - 1;
        v1[1] = 1;
        let mut v2 = vec![0i64; n];
        v2[0] = s - 1;
        v2[2] = 1;
        let (d1, d2) = (Divisor::new(v1), Divisor::new(v2));
        if family_contains(spec, &d1) && family_contains(spec, &d2) {
            return Some((d1, d2));
        }
    }
    let first = enumerate_family(spec).next()?;
    let m = first.mults();
    for j in 0..n {
        if m[j] >= hi {
            continue;
        }
        if let Some(i) = (0..n).rev().find(|&i| i != j && m[i] > lo) {
            let mut v2 = m.to_vec();
            v2[i] -= 1;
            v2[j] += 1;
            let d2 = Divisor::new(v2);
            debug_assert!(family_contains(spec, &d2));
            return Some((first, d2));
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Exhaustive,
    Sampled,
}

/// One comparison that came out unexpected. `violation: false` marks a
/// recorded disagreement with a stated value (the implementation is still
/// considered sound); `violation: true` marks a broken law.
#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub law: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor1: Option<Divisor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor2: Option<Divisor>,
    pub expected: String,
    pub observed: String,
    pub violation: bool,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub spec: FamilySpec,
    pub mode: VerifyMode,
    /// Exact family size as a decimal string.
    pub family_size: String,
    pub codewords_checked: u64,
    pub dims_ok: bool,
    pub all_distinct: bool,
    /// Minimum subspace distance over the checked pairs; absent for
    /// one-element families.
    pub empirical_min_distance: Option<i64>,
    pub stated_min_distance: i64,
    pub proof_min_distance: i64,
    pub intersection_formula_ok: bool,
    pub discrepancies: Vec<Finding>,
}

impl VerificationReport {
    /// True when no law was violated; disagreements with stated minimum
    /// distances may still be present as non-violation findings.
    pub fn passed(&self) -> bool {
        !self.discrepancies.iter().any(|f| f.violation)
    }
}

struct PairScan {
    min_dist: Option<(i64, usize, usize)>,
    violations: Vec<(usize, usize, i64, i64, i64)>, // i, j, observed, expected_rr, embedded
    violation_count: u64,
}

impl PairScan {
    fn empty() -> PairScan {
        PairScan {
            min_dist: None,
            violations: Vec::new(),
            violation_count: 0,
        }
    }

    fn merge(mut self, mut other: PairScan) -> PairScan {
        self.min_dist = match (self.min_dist, other.min_dist) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.violation_count += other.violation_count;
        self.violations.append(&mut other.violations);
        self.violations.sort_unstable();
        self.violations.truncate(MAX_RECORDED_VIOLATIONS);
        self
    }
}

/// Realizes the family (all of it when the size is within `cap`, otherwise
/// a seeded deterministic sample that always contains a distance-2k pair)
/// and checks, pair by pair:
///
/// 1. every codeword has dimension ks+1;
/// 2. distinct divisors produce distinct subspaces, and in exhaustive mode
///    the codeword count equals the counted family size;
/// 3. the intersection dimension of every pair equals both the dimension
///    of the embedded pointwise-min divisor and the genus-0 Riemann-Roch
///    value max(k*deg(min) + 1, 0);
/// 4. the minimum observed distance is compared against the stated and the
///    proof-based minimum distance; disagreement with the former is a
///    recorded finding, disagreement with the latter a violation.
pub fn verify(
    spec: &FamilySpec,
    cap: u64,
    seed: Option<u64>,
) -> Result<VerificationReport, RealizeError> {
    let field = realization_field(spec)?;
    let size = count_family(spec);
    let exhaustive = size <= BigUint::from(cap);
    let mode = if exhaustive {
        VerifyMode::Exhaustive
    } else {
        VerifyMode::Sampled
    };
    let divisors: Vec<Divisor> = if exhaustive {
        enumerate_family(spec).collect()
    } else {
        sample_divisors(spec, cap, seed.unwrap_or(0), &size)
    };

    let k = spec.k();
    let c = spec.ambient_multiplier();
    let codewords: Vec<(Divisor, Subspace)> = divisors
        .into_par_iter()
        .map(|d| embed_basis(&field, &d, k, c).map(|s| (d, s)))
        .collect::<Result<_, _>>()?;

    let mut findings: Vec<Finding> = Vec::new();
    let expected_dim = k * spec.s() + 1;

    let mut dims_ok = true;
    for (d, sub) in &codewords {
        if sub.dim() as i64 != expected_dim {
            dims_ok = false;
            if findings.len() < MAX_RECORDED_VIOLATIONS {
                findings.push(Finding {
                    law: "codeword_dimension".into(),
                    divisor1: Some(d.clone()),
                    divisor2: None,
                    expected: expected_dim.to_string(),
                    observed: sub.dim().to_string(),
                    violation: true,
                });
            }
        }
    }

    let mut all_distinct = true;
    let mut seen: HashMap<(usize, Vec<FieldElement>), usize> = HashMap::new();
    for (idx, (d, sub)) in codewords.iter().enumerate() {
        if let Some(&prev) = seen.get(&sub.key()) {
            all_distinct = false;
            if findings.len() < MAX_RECORDED_VIOLATIONS {
                findings.push(Finding {
                    law: "distinct_subspaces".into(),
                    divisor1: Some(codewords[prev].0.clone()),
                    divisor2: Some(d.clone()),
                    expected: "distinct subspaces for distinct divisors".into(),
                    observed: "identical canonical bases".into(),
                    violation: true,
                });
            }
        } else {
            seen.insert(sub.key(), idx);
        }
    }
    if exhaustive && BigUint::from(codewords.len() as u64) != size {
        all_distinct = false;
        findings.push(Finding {
            law: "codeword_count".into(),
            divisor1: None,
            divisor2: None,
            expected: size.to_string(),
            observed: codewords.len().to_string(),
            violation: true,
        });
    }

    let scan = (0..codewords.len())
        .into_par_iter()
        .map(|i| {
            let mut local = PairScan::empty();
            let (di, ui) = &codewords[i];
            for (joff, (dj, uj)) in codewords[i + 1..].iter().enumerate() {
                let j = i + 1 + joff;
                let joint = ui
                    .basis()
                    .stack_rank(uj.basis())
                    .expect("codewords share the ambient") as i64;
                let dist = 2 * joint - ui.dim() as i64 - uj.dim() as i64;
                let inter = ui.dim() as i64 + uj.dim() as i64 - joint;

                let min_div = di.pointwise_min(dj).expect("equal length");
                let expected_rr = riemann_roch_dim(k * min_div.degree(), 0).value().max(0);
                let embedded = embed_basis(&field, &min_div, k, c)
                    .expect("min divisor stays within the ambient")
                    .dim() as i64;
                if inter != expected_rr || inter != embedded {
                    local.violation_count += 1;
                    if local.violations.len() < MAX_RECORDED_VIOLATIONS {
                        local.violations.push((i, j, inter, expected_rr, embedded));
                    }
                }

                let cand = (dist, i, j);
                if local.min_dist.map_or(true, |m| cand < m) {
                    local.min_dist = Some(cand);
                }
            }
            local
        })
        .reduce(PairScan::empty, PairScan::merge);

    let intersection_formula_ok = scan.violation_count == 0;
    for (i, j, observed, expected_rr, embedded) in &scan.violations {
        if findings.len() >= 3 * MAX_RECORDED_VIOLATIONS {
            break;
        }
        findings.push(Finding {
            law: "intersection_dimension".into(),
            divisor1: Some(codewords[*i].0.clone()),
            divisor2: Some(codewords[*j].0.clone()),
            expected: format!("riemann_roch {expected_rr}, embedded {embedded}"),
            observed: observed.to_string(),
            violation: true,
        });
    }

    let stated = crate::params::stated_min_distance(spec.family(), k, spec.s(), 0);
    let proof = crate::params::proof_min_distance(k, spec.s(), 0);
    let empirical = scan.min_dist.map(|(d, _, _)| d);
    if let Some((dist, i, j)) = scan.min_dist {
        if dist != proof {
            findings.push(Finding {
                law: "min_distance_proof".into(),
                divisor1: Some(codewords[i].0.clone()),
                divisor2: Some(codewords[j].0.clone()),
                expected: proof.to_string(),
                observed: dist.to_string(),
                violation: true,
            });
        }
        if dist != stated {
            findings.push(Finding {
                law: "min_distance_stated".into(),
                divisor1: Some(codewords[i].0.clone()),
                divisor2: Some(codewords[j].0.clone()),
                expected: stated.to_string(),
                observed: dist.to_string(),
                violation: false,
            });
        }
    }

    Ok(VerificationReport {
        spec: *spec,
        mode,
        family_size: size.to_string(),
        codewords_checked: codewords.len() as u64,
        dims_ok,
        all_distinct,
        empirical_min_distance: empirical,
        stated_min_distance: stated,
        proof_min_distance: proof,
        intersection_formula_ok,
        discrepancies: findings,
    })
}

/// Draws `cap` distinct divisors by unranking uniform ranks from a seeded
/// generator, then appends the distance-achieving pair so sampling can
/// never miss the minimum.
fn sample_divisors(spec: &FamilySpec, cap: u64, seed: u64, size: &BigUint) -> Vec<Divisor> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut ranks: BTreeSet<BigUint> = BTreeSet::new();
    while (ranks.len() as u64) < cap {
        ranks.insert(random_below(&mut rng, size));
    }
    let mut out: Vec<Divisor> = ranks
        .iter()
        .map(|r| unrank(spec, r).expect("rank below family size"))
        .collect();
    if let Some((d1, d2)) = proof_pair(spec) {
        for d in [d1, d2] {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

fn random_below(rng: &mut ChaCha12Rng, bound: &BigUint) -> BigUint {
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let excess = (bytes as u64 * 8 - bits) as u32;
    loop {
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        if excess > 0 {
            buf[bytes - 1] &= 0xffu8 >> excess;
        }
        let v = BigUint::from_bytes_le(&buf);
        if &v < bound {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisors::{CurveDescriptor, Family};

    fn gspec(family: Family, q: u32, k: i64, s: i64, w: Option<i64>) -> FamilySpec {
        FamilySpec::new(
            family,
            CurveDescriptor::new(q, q as usize + 1, 0).unwrap(),
            k,
            s,
            w,
        )
        .unwrap()
    }

    #[test]
    fn places_are_ordered_finite_then_infinity() {
        let f = Field::new(2, 1).unwrap();
        let places = rational_places(&f);
        assert_eq!(
            places,
            vec![
                RationalPlace::Finite(f.element(0)),
                RationalPlace::Finite(f.element(1)),
                RationalPlace::Infinity,
            ]
        );
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(rational_places(&f4).len(), 5);
    }

    #[test]
    fn embedding_the_infinity_place() {
        // A over GF(2) with k = s = 1, divisor 1 * infinity: the codeword is
        // p(x) * x(x+1) with deg p <= 1 inside the 4-dimensional ambient.
        let f = Field::new(2, 1).unwrap();
        let sub = embed_basis(&f, &Divisor::new(vec![0, 0, 1]), 1, 1).unwrap();
        assert_eq!(sub.ambient_dim(), 4);
        assert_eq!(sub.dim(), 2);
    }

    #[test]
    fn embedded_dimension_is_k_deg_plus_one() {
        let f = Field::new(2, 1).unwrap();
        for (mults, k, c) in [
            (vec![2i64, 0, 0], 1i64, 2i64),
            (vec![1, 1, 0], 1, 2),
            (vec![-1, 1, 2], 1, 2),
            (vec![2, -1, 1], 2, 4),
        ] {
            let d = Divisor::new(mults);
            let sub = embed_basis(&f, &d, k, c).unwrap();
            assert_eq!(sub.dim() as i64, k * d.degree() + 1);
            assert_eq!(sub.ambient_dim() as i64, c * 3 + 1);
        }
    }

    #[test]
    fn embedding_negative_degree_gives_zero_space() {
        let f = Field::new(2, 1).unwrap();
        let sub = embed_basis(&f, &Divisor::new(vec![-2, 1, 0]), 1, 2).unwrap();
        assert_eq!(sub.dim(), 0);
    }

    #[test]
    fn ambient_overflow_is_rejected() {
        let f = Field::new(2, 1).unwrap();
        let err = embed_basis(&f, &Divisor::new(vec![3, -1, 0]), 1, 2).unwrap_err();
        assert!(matches!(err, RealizeError::AmbientOverflow { place: 0, .. }));
    }

    #[test]
    fn distance_and_intersection_examples() {
        let f = Field::new(2, 1).unwrap();
        // L(2 * infinity) vs L(infinity + place_0) at k = 1, c = 2
        let u = embed_basis(&f, &Divisor::new(vec![0, 0, 2]), 1, 2).unwrap();
        let v = embed_basis(&f, &Divisor::new(vec![1, 0, 1]), 1, 2).unwrap();
        assert_eq!(subspace_distance(&u, &u).unwrap(), 0);
        assert_eq!(intersection_dim(&u, &u).unwrap(), u.dim() as i64);
        assert_eq!(subspace_distance(&u, &v).unwrap(), 2);
        // the min divisor is 1 * infinity, so the intersection is L(infinity)
        assert_eq!(intersection_dim(&u, &v).unwrap(), 2);
    }

    #[test]
    fn proof_pair_intersection_has_predicted_dimension() {
        // L(k(s-1)P + kQ) meets L(k(s-1)P + kR) in L(k(s-1)P).
        let f = Field::new(3, 1).unwrap();
        let (k, s, c) = (2i64, 3i64, 6i64);
        let u = embed_basis(&f, &Divisor::new(vec![2, 1, 0, 0]), k, c).unwrap();
        let v = embed_basis(&f, &Divisor::new(vec![2, 0, 1, 0]), k, c).unwrap();
        assert_eq!(intersection_dim(&u, &v).unwrap(), k * (s - 1) + 1);
        assert_eq!(subspace_distance(&u, &v).unwrap(), 2 * k);
    }

    #[test]
    fn distance_errors_on_mismatched_ambients() {
        let f = Field::new(2, 1).unwrap();
        let u = embed_basis(&f, &Divisor::new(vec![1, 0, 0]), 1, 1).unwrap();
        let v = embed_basis(&f, &Divisor::new(vec![1, 0, 0]), 1, 2).unwrap();
        assert!(subspace_distance(&u, &v).is_err());
    }

    #[test]
    fn realize_family_sizes_and_dimensions() {
        let h = realize_family(&gspec(Family::H, 2, 1, 1, None), 100).unwrap();
        assert_eq!(h.len(), 3);
        assert!(h.iter().all(|(_, s)| s.dim() == 2 && s.ambient_dim() == 4));

        let a = realize_family(&gspec(Family::A, 2, 1, 2, None), 100).unwrap();
        assert_eq!(a.len(), 6);
        assert!(a.iter().all(|(_, s)| s.dim() == 3 && s.ambient_dim() == 7));

        let b = realize_family(&gspec(Family::B, 3, 1, 2, Some(1)), 100).unwrap();
        assert_eq!(b.len(), 6); // w = 1 collapses B to H
    }

    #[test]
    fn realize_family_respects_the_cap() {
        let err = realize_family(&gspec(Family::A, 2, 1, 2, None), 5).unwrap_err();
        assert_eq!(
            err,
            RealizeError::CapExceeded {
                size: "6".into(),
                cap: 5
            }
        );
    }

    #[test]
    fn genus_one_is_rejected() {
        let spec = FamilySpec::new(
            Family::A,
            CurveDescriptor::new(2, 3, 1).unwrap(),
            1,
            2,
            None,
        )
        .unwrap();
        assert_eq!(
            realize_family(&spec, 100).unwrap_err(),
            RealizeError::GenusUnsupported(1)
        );
        assert_eq!(
            verify(&spec, 100, None).unwrap_err(),
            RealizeError::GenusUnsupported(1)
        );
    }

    #[test]
    fn wrong_place_count_is_rejected() {
        let spec = FamilySpec::new(
            Family::A,
            CurveDescriptor::new(2, 4, 0).unwrap(),
            1,
            2,
            None,
        )
        .unwrap();
        assert!(matches!(
            realize_family(&spec, 100).unwrap_err(),
            RealizeError::PlaceCountMismatch { n: 4, expected: 3, .. }
        ));
    }

    #[test]
    fn verify_family_a_flags_the_stated_distance_once() {
        let report = verify(&gspec(Family::A, 2, 1, 2, None), 2000, None).unwrap();
        assert!(report.passed());
        assert!(report.dims_ok);
        assert!(report.all_distinct);
        assert!(report.intersection_formula_ok);
        assert_eq!(report.mode, VerifyMode::Exhaustive);
        assert_eq!(report.codewords_checked, 6);
        assert_eq!(report.empirical_min_distance, Some(2));
        assert_eq!(report.stated_min_distance, 4);
        assert_eq!(report.proof_min_distance, 2);
        assert_eq!(report.discrepancies.len(), 1);
        let f = &report.discrepancies[0];
        assert_eq!(f.law, "min_distance_stated");
        assert!(!f.violation);
    }

    #[test]
    fn verify_s_equal_one_reaches_two_k() {
        let report = verify(&gspec(Family::A, 3, 2, 1, None), 2000, None).unwrap();
        assert!(report.passed());
        assert_eq!(report.empirical_min_distance, Some(4));
        assert!(report.discrepancies.is_empty());
    }

    #[test]
    fn verify_family_c_with_negative_multiplicities() {
        let report = verify(&gspec(Family::C, 2, 1, 2, Some(2)), 2000, None).unwrap();
        assert!(report.passed());
        assert!(report.dims_ok);
        assert!(report.all_distinct);
        assert!(report.intersection_formula_ok);
        assert_eq!(report.empirical_min_distance, Some(2));
        assert_eq!(report.family_size, "15");
    }

    #[test]
    fn verify_single_codeword_family_has_no_distance() {
        // H with s = n has exactly one codeword
        let report = verify(&gspec(Family::H, 2, 1, 3, None), 2000, None).unwrap();
        assert!(report.passed());
        assert_eq!(report.codewords_checked, 1);
        assert_eq!(report.empirical_min_distance, None);
    }

    #[test]
    fn sampled_verification_is_deterministic_and_reaches_the_minimum() {
        let spec = gspec(Family::A, 3, 1, 3, None); // size C(6,3) = 20
        let r1 = verify(&spec, 10, Some(7)).unwrap();
        let r2 = verify(&spec, 10, Some(7)).unwrap();
        assert_eq!(r1.mode, VerifyMode::Sampled);
        assert!(r1.codewords_checked >= 10);
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
        assert!(r1.passed());
        // the appended pair guarantees the 2k minimum is observed
        assert_eq!(r1.empirical_min_distance, Some(2));
        let r3 = verify(&spec, 10, Some(8)).unwrap();
        assert_eq!(r3.empirical_min_distance, Some(2));
    }

    #[test]
    fn proof_pair_shapes() {
        // literal (s-1)P + Q form when representable
        let a = gspec(Family::A, 2, 1, 3, None);
        let (d1, d2) = proof_pair(&a).unwrap();
        assert_eq!(d1, Divisor::new(vec![2, 1, 0]));
        assert_eq!(d2, Divisor::new(vec![2, 0, 1]));
        // H with s >= 3 cannot host (s-1)P; the perturbation kicks in
        let h = gspec(Family::H, 3, 1, 3, None);
        let (h1, h2) = proof_pair(&h).unwrap();
        assert_ne!(h1, h2);
        assert!(family_contains(&h, &h1) && family_contains(&h, &h2));
        assert_eq!(h1.pointwise_min(&h2).unwrap().degree(), 2);
        // one-element family
        assert_eq!(proof_pair(&gspec(Family::H, 2, 1, 3, None)), None);
    }
}
