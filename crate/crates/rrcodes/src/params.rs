//! Theorem-level code parameters and rate tables.
//!
//! For a family spec this module computes the code type
//! `[N, l, log_q |C|, D]` together with the normalized weight, rate, and
//! normalized minimum distance, for any genus. Two values are reported for
//! the minimum distance: `min_distance_stated` follows the case split in
//! the parameter theorems (2k for s = 1, 2(k+1-g) for s > 1 in families H
//! and A; 2k for B and C), while `min_distance_proof` follows the explicit
//! distance-achieving constructions (2(k-g) for s = 1 via the constant
//! functions in the intersection, 2k for s > 1). The two disagree outside
//! g = 1; disagreement is reported as a warning, never silently resolved.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::counting::count_family;
use crate::divisors::{CurveDescriptor, Family, FamilyError, FamilySpec};

/// A Riemann-Roch dimension: exact when the degree is outside the
/// ambiguous middle range, otherwise only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrDim {
    Exact(i64),
    LowerBound(i64),
}

impl RrDim {
    pub fn value(self) -> i64 {
        match self {
            RrDim::Exact(v) | RrDim::LowerBound(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, RrDim::Exact(_))
    }
}

/// Dimension of L(D) for a divisor of degree `deg` on a genus-`g` curve.
///
/// Exact 0 for negative degree, exact 1 at degree 0 (the constants), exact
/// deg+1-g above 2g-2, and a lower bound max(deg+1-g, 0) in between.
pub fn riemann_roch_dim(deg: i64, g: i64) -> RrDim {
    if deg < 0 {
        RrDim::Exact(0)
    } else if deg == 0 {
        RrDim::Exact(1)
    } else if deg > 2 * g - 2 {
        RrDim::Exact(deg + 1 - g)
    } else {
        RrDim::LowerBound((deg + 1 - g).max(0))
    }
}

/// Dimension n*c + 1 - g of the ambient space L(c * D), c the family's
/// ambient multiplier (k, ks, or kw). Exact when c*n > 2g-2.
pub fn ambient_dim(spec: &FamilySpec) -> i64 {
    let CurveDescriptor { n, g, .. } = spec.curve();
    n as i64 * spec.ambient_multiplier() + 1 - g
}

/// log base q of a positive big integer, from the bit length and the top
/// 64 bits of the value. Relative error is below 1e-12; the integer is
/// never converted to floating point as a whole, so precision does not
/// degrade with magnitude.
pub fn log_q(x: &BigUint, q: u32) -> f64 {
    assert!(*x > BigUint::from(0u32), "log of a nonpositive count");
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_u64().expect("top 64 bits fit");
    let log2x = (top as f64).log2() + shift as f64;
    log2x / (q as f64).log2()
}

/// The computed parameters of a code family.
#[derive(Debug, Clone, Serialize)]
pub struct CodeParameters {
    pub spec: FamilySpec,
    /// N: dimension of the ambient Riemann-Roch space.
    pub ambient_dim: i64,
    /// l: dimension of every codeword, ks + 1 - g.
    pub codeword_dim: i64,
    /// Exact family size as a decimal string.
    pub count: String,
    /// log_q of the family size.
    pub log_size: f64,
    /// D per the literal theorem case split.
    pub min_distance_stated: i64,
    /// D per the explicit distance-achieving pair in the proofs.
    pub min_distance_proof: i64,
    /// lambda = l / N.
    pub normalized_weight: f64,
    /// R = log_q|C| / (N * l).
    pub rate: f64,
    /// delta = D_stated / (2l).
    pub normalized_min_distance: f64,
    /// (2g-1)/((s+1)g-1), emitted for g >= 1 only; at g = 0 the expression
    /// evaluates to 1 and does not bound delta, so it is omitted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_lower_bound: Option<f64>,
    pub validity_warnings: Vec<String>,
}

/// Minimum distance per the literal theorem case split.
pub fn stated_min_distance(family: Family, k: i64, s: i64, g: i64) -> i64 {
    match family {
        Family::H | Family::A => {
            if s == 1 {
                2 * k
            } else {
                2 * (k + 1 - g)
            }
        }
        Family::B | Family::C => 2 * k,
    }
}

/// Minimum distance per the explicit constructions in the proofs.
pub fn proof_min_distance(k: i64, s: i64, g: i64) -> i64 {
    if s == 1 {
        // Two distinct degree-1 divisors meet in L(0), which holds the
        // constants: the intersection has dimension 1, not 0.
        2 * (k - g)
    } else {
        2 * k
    }
}

/// Computes the full parameter set of a family.
pub fn code_parameters(spec: &FamilySpec) -> CodeParameters {
    let CurveDescriptor { q, n, g } = spec.curve();
    let (k, s) = (spec.k(), spec.s());
    let count = count_family(spec);
    let log_size = log_q(&count, q);
    let ambient = ambient_dim(spec);
    let codeword = k * s + 1 - g;
    let stated = stated_min_distance(spec.family(), k, s, g);
    let proof = proof_min_distance(k, s, g);

    let mut warnings = spec.base_warnings();
    if n as i64 * spec.ambient_multiplier() <= 2 * g - 2 {
        warnings.push(format!(
            "ambient degree {} does not exceed 2g-2 = {}: ambient dimension may be inexact",
            n as i64 * spec.ambient_multiplier(),
            2 * g - 2
        ));
    }
    if stated != proof {
        warnings.push(format!(
            "stated minimum distance {stated} differs from the proof-based value {proof}"
        ));
    }

    let (lambda, rate, delta) = if codeword >= 1 && ambient >= 1 {
        (
            codeword as f64 / ambient as f64,
            log_size / (ambient as f64 * codeword as f64),
            stated as f64 / (2.0 * codeword as f64),
        )
    } else {
        warnings.push(
            "dimension formulas are nonpositive; normalized quantities set to 0".into(),
        );
        (0.0, 0.0, 0.0)
    };

    let delta_lower_bound = (g >= 1).then(|| {
        let bound = (2 * g - 1) as f64 / ((s + 1) * g - 1) as f64;
        if bound > delta + 1e-12 {
            warnings.push(format!(
                "distance bound (2g-1)/((s+1)g-1) = {bound:.6} exceeds the normalized minimum distance {delta:.6}"
            ));
        }
        bound
    });

    CodeParameters {
        spec: *spec,
        ambient_dim: ambient,
        codeword_dim: codeword,
        count: count.to_string(),
        log_size,
        min_distance_stated: stated,
        min_distance_proof: proof,
        normalized_weight: lambda,
        rate,
        normalized_min_distance: delta,
        delta_lower_bound,
        validity_warnings: warnings,
    }
}

/// R = log_q|C| / (N * l).
pub fn rate(spec: &FamilySpec) -> f64 {
    let count = count_family(spec);
    let ambient = ambient_dim(spec);
    let codeword = spec.k() * spec.s() + 1 - spec.curve().g;
    log_q(&count, spec.curve().q) / (ambient as f64 * codeword as f64)
}

/// One row of the rate table: the four family rates at fixed (n, s),
/// rounded half-up to 6 decimals.
#[derive(Debug, Clone, Serialize)]
pub struct RateTableRow {
    pub n: usize,
    pub s: i64,
    pub rate_h: f64,
    pub rate_a: f64,
    pub rate_b: f64,
    pub rate_c: f64,
}

/// The preset rate-table grid: q = 16, k = 5, w = 3, g = 1, n = 8..=14,
/// s = 1..n. 70 rows, n ascending then s ascending.
pub fn table3() -> Vec<RateTableRow> {
    let (q, k, w, g) = (16, 5, 3, 1);
    let mut rows = Vec::with_capacity(70);
    for n in 8..=14usize {
        let curve = CurveDescriptor::new(q, n, g).expect("valid curve");
        for s in 1..n as i64 {
            let r = |family, wopt| {
                rate(&FamilySpec::new(family, curve, k, s, wopt).expect("feasible preset"))
            };
            rows.push(RateTableRow {
                n,
                s,
                rate_h: round6(r(Family::H, None)),
                rate_a: round6(r(Family::A, None)),
                rate_b: round6(r(Family::B, Some(w))),
                rate_c: round6(r(Family::C, Some(w))),
            });
        }
    }
    rows
}

/// CSV rendering with header `n,s,H,A,B,C` and exactly six decimals per
/// rate.
pub fn table_csv(rows: &[RateTableRow]) -> String {
    let mut out = String::from("n,s,H,A,B,C\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.s,
            format6(r.rate_h),
            format6(r.rate_a),
            format6(r.rate_b),
            format6(r.rate_c)
        ));
    }
    out
}

/// Normalized weight, rate, and normalized minimum distance of one family
/// evaluated with the genus-1 simplifications.
#[derive(Debug, Clone, Serialize)]
pub struct Table2Row {
    pub family: Family,
    pub normalized_weight: f64,
    pub rate: f64,
    pub normalized_min_distance: f64,
}

/// Evaluates the genus-1 closed forms for one family. The denominators
/// collapse to n k^2 s (H), n k^2 s^2 (A), and n k^2 w s (B, C); the
/// normalized weights to s/n (H), 1/n (A), and s/(nw) (B, C); delta to 1/s.
pub fn table2_row(
    family: Family,
    q: u32,
    n: usize,
    k: i64,
    s: i64,
    w: Option<i64>,
) -> Result<Table2Row, FamilyError> {
    let curve = CurveDescriptor::new(q, n, 1)?;
    let spec = FamilySpec::new(family, curve, k, s, w)?;
    let count = count_family(&spec);
    let nf = n as i64;
    let (lambda, denom) = match family {
        Family::H => (s as f64 / nf as f64, nf * k * k * s),
        Family::A => (1.0 / nf as f64, nf * k * k * s * s),
        Family::B | Family::C => {
            let w = w.expect("B/C have w");
            (s as f64 / (nf * w) as f64, nf * k * k * w * s)
        }
    };
    Ok(Table2Row {
        family,
        normalized_weight: lambda,
        rate: log_q(&count, q) / denom as f64,
        normalized_min_distance: 1.0 / s as f64,
    })
}

/// Rounds half-up to six decimal places.
pub fn round6(x: f64) -> f64 {
    assert!(x >= 0.0 && x.is_finite());
    (x * 1e6 + 0.5).floor() / 1e6
}

/// Fixed six-decimal rendering with half-up rounding, via integer
/// micro-units so the output is platform-stable.
pub fn format6(x: f64) -> String {
    assert!(x >= 0.0 && x.is_finite());
    let micro = (x * 1e6 + 0.5).floor() as i64;
    format!("{}.{:06}", micro / 1_000_000, micro % 1_000_000)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{binom, multiset_coeff};

    fn spec(family: Family, q: u32, n: usize, g: i64, k: i64, s: i64, w: Option<i64>) -> FamilySpec {
        FamilySpec::new(family, CurveDescriptor::new(q, n, g).unwrap(), k, s, w).unwrap()
    }

    #[test]
    fn riemann_roch_dimension_cases() {
        assert_eq!(riemann_roch_dim(10, 1), RrDim::Exact(10));
        assert_eq!(riemann_roch_dim(0, 3), RrDim::Exact(1));
        assert_eq!(riemann_roch_dim(-2, 0), RrDim::Exact(0));
        assert_eq!(riemann_roch_dim(2, 2), RrDim::LowerBound(1));
        assert_eq!(riemann_roch_dim(5, 0), RrDim::Exact(6));
    }

    #[test]
    fn ambient_dimensions() {
        assert_eq!(ambient_dim(&spec(Family::H, 16, 8, 1, 5, 2, None)), 40);
        assert_eq!(ambient_dim(&spec(Family::A, 2, 3, 0, 1, 2, None)), 7);
        assert_eq!(ambient_dim(&spec(Family::B, 16, 8, 1, 5, 4, Some(3))), 120);
    }

    #[test]
    fn log_q_matches_reference_values() {
        assert!((log_q(&BigUint::from(36u32), 16) - 1.292481250360578).abs() < 1e-12);
        assert!((log_q(&BigUint::from(2_035_800u64), 16) - 5.239291101301715).abs() < 1e-11);
        assert_eq!(log_q(&BigUint::from(16u32), 16), 1.0);
        // a value far beyond f64 integer range
        let huge = BigUint::from(3u8).pow(500);
        let expect = 500.0 * 3f64.log2() / 4.0;
        assert!((log_q(&huge, 16) - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn parameters_of_a_family_preset_row() {
        let p = code_parameters(&spec(Family::A, 16, 8, 1, 5, 2, None));
        // N = nks + 1 - g; together with l = 10 this gives N*l = 800, the
        // denominator that produces the preset rate 0.001616.
        assert_eq!(p.ambient_dim, 80);
        assert_eq!(p.codeword_dim, 10);
        assert_eq!(p.count, "36");
        assert!((p.log_size - 1.292481250360578).abs() < 1e-12);
        assert!((p.rate - 0.0016156015629507226).abs() < 5e-7);
        assert_eq!(p.min_distance_stated, 10);
        assert_eq!(p.min_distance_proof, 10);
        assert_eq!(p.normalized_min_distance, 0.5);
        assert_eq!(p.delta_lower_bound, Some(0.5));
        assert!(p.validity_warnings.is_empty());
    }

    #[test]
    fn genus_zero_distance_case_split_is_flagged() {
        let p = code_parameters(&spec(Family::A, 2, 3, 0, 2, 3, None));
        assert_eq!(p.codeword_dim, 7);
        assert_eq!(p.min_distance_stated, 6);
        assert_eq!(p.min_distance_proof, 4);
        assert_eq!(p.validity_warnings.len(), 1);
        assert!(p.validity_warnings[0].contains("differs"));
        assert!(p.delta_lower_bound.is_none());
    }

    #[test]
    fn genus_one_normalized_quantities_collapse() {
        for k in 1..4i64 {
            for s in 1..6i64 {
                let p = code_parameters(&spec(Family::H, 16, 8, 1, k, s, None));
                assert!((p.normalized_weight - s as f64 / 8.0).abs() < 1e-12);
                assert!((p.normalized_min_distance - 1.0 / s as f64).abs() < 1e-12);
                if s >= 2 {
                    // both theorem branches collapse to 2k at g = 1
                    assert_eq!(p.min_distance_stated, p.min_distance_proof);
                } else {
                    // at s = 1 the constants in L(0) cost one intersection
                    // dimension that the stated value does not account for
                    assert_eq!(p.min_distance_stated, 2 * k);
                    assert_eq!(p.min_distance_proof, 2 * (k - 1));
                }
            }
        }
    }

    #[test]
    fn rate_examples() {
        assert!((rate(&spec(Family::H, 16, 8, 1, 5, 1, None)) - 0.00375).abs() < 5e-7);
        assert!((rate(&spec(Family::B, 16, 8, 1, 5, 1, Some(3))) - 0.00125).abs() < 5e-7);
        assert!(
            (rate(&spec(Family::C, 16, 14, 1, 5, 13, Some(3))) - 0.0006331655229486073).abs()
                < 1e-12
        );
        assert!((rate(&spec(Family::C, 16, 8, 1, 5, 1, Some(3))) - 0.008732151835502858).abs() < 1e-12);
    }

    #[test]
    fn preset_table_shape_and_spot_rows() {
        let rows = table3();
        assert_eq!(rows.len(), 70);
        let csv = table_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,s,H,A,B,C");
        assert_eq!(lines[1], "8,1,0.003750,0.003750,0.001250,0.008732");
        let r126 = rows.iter().find(|r| r.n == 12 && r.s == 6).unwrap();
        assert_eq!(format6(r126.rate_h), "0.001368");
        assert_eq!(format6(r126.rate_a), "0.000315");
        assert_eq!(format6(r126.rate_b), "0.000624");
        assert_eq!(format6(r126.rate_c), "0.001461");
        // n ascending, then s ascending
        for pair in rows.windows(2) {
            assert!(pair[0].n < pair[1].n || (pair[0].n == pair[1].n && pair[0].s < pair[1].s));
        }
    }

    #[test]
    fn rate_of_family_c_decreases_in_s_within_each_block() {
        let rows = table3();
        for n in 8..=14usize {
            let block: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.rate_c).collect();
            for pair in block.windows(2) {
                assert!(pair[0] > pair[1], "C rate not strictly decreasing at n={n}");
            }
        }
    }

    #[test]
    fn general_formulas_reduce_to_genus_one_forms_on_the_grid() {
        let (q, k, w) = (16, 5, 3);
        for n in 8..=14usize {
            for s in 1..n as i64 {
                for (family, wopt) in [
                    (Family::H, None),
                    (Family::A, None),
                    (Family::B, Some(w)),
                    (Family::C, Some(w)),
                ] {
                    let general = code_parameters(&spec(family, q, n, 1, k, s, wopt));
                    let reduced = table2_row(family, q as u32, n, k, s, wopt).unwrap();
                    assert!(
                        (general.rate - reduced.rate).abs() < 1e-12,
                        "rate mismatch {family} n={n} s={s}"
                    );
                    assert!((general.normalized_weight - reduced.normalized_weight).abs() < 1e-12);
                    assert!(
                        (general.normalized_min_distance - reduced.normalized_min_distance).abs()
                            < 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn s_equal_one_collapses_a_to_h_counts() {
        for n in 2..12u64 {
            assert_eq!(binom(n as i64, 1), multiset_coeff(n, 1));
        }
        let h = code_parameters(&spec(Family::H, 16, 8, 1, 5, 1, None));
        let a = code_parameters(&spec(Family::A, 16, 8, 1, 5, 1, None));
        assert_eq!(h.count, a.count);
        assert_eq!(h.codeword_dim, a.codeword_dim);
        // ambient differs (k vs ks multiplier) but at s = 1 they coincide
        assert_eq!(h.ambient_dim, a.ambient_dim);
    }

    #[test]
    fn delta_identity_between_closed_form_and_distance_quotient() {
        for g in 0..3i64 {
            for k in (2 * g - 1).max(1)..(2 * g + 6) {
                for s in 1..10i64 {
                    let ell = k * s + 1 - g;
                    let closed = 1.0 / (s as f64 + (1 - g) as f64 / k as f64);
                    let quotient = 2.0 * k as f64 / (2.0 * ell as f64);
                    assert!((closed - quotient).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn delta_bound_holds_exactly_where_the_derivation_applies() {
        // At g = 1 the bound is an equality; for g >= 2 it holds iff
        // k(s-1) <= 2g-1, and outside that regime a warning is emitted.
        for g in 1..4i64 {
            for k in (2 * g - 1)..(2 * g + 6) {
                for s in 1..=10i64 {
                    let p = code_parameters(&spec(Family::B, 16, 8, g, k, s.max(1), Some(s.max(1))));
                    let bound = p.delta_lower_bound.unwrap();
                    let delta = p.normalized_min_distance;
                    if g == 1 {
                        assert!((delta - bound).abs() < 1e-12);
                    } else if k * (s - 1) <= 2 * g - 1 {
                        assert!(delta >= bound - 1e-12, "g={g} k={k} s={s}");
                    } else {
                        let flagged = delta >= bound - 1e-12
                            || p
                                .validity_warnings
                                .iter()
                                .any(|w| w.contains("distance bound"));
                        assert!(flagged, "violated bound must be flagged: g={g} k={k} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn rounding_is_half_up_with_fixed_width() {
        assert_eq!(format6(0.0000005), "0.000001");
        assert_eq!(format6(0.0000004), "0.000000");
        assert_eq!(format6(0.0094413), "0.009441");
        assert_eq!(format6(1.25), "1.250000");
        assert_eq!(round6(0.0037499999), 0.00375);
    }
}
