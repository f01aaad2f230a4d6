//! Exact combinatorics for family sizes.
//!
//! Everything here is arbitrary-precision integer arithmetic; no floating
//! point enters this module. Counts of bounded compositions are available
//! through two independent routes: the inclusion-exclusion formula
//! ([`count_u`] / [`count_u_shifted`]) and a dynamic-programming oracle
//! ([`oracle_count`]) that never touches the alternating sum, so each can
//! certify the other.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::divisors::{Family, FamilySpec};

/// Exact nonnegative count; alias for the arbitrary-precision integer type.
pub type BigCount = BigUint;

/// The equation x_1 + ... + x_n = s with every x_i in {lo, ..., hi}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedEq {
    pub n: u64,
    pub s: i64,
    pub lo: i64,
    pub hi: i64,
}

impl BoundedEq {
    pub fn new(n: u64, s: i64, lo: i64, hi: i64) -> BoundedEq {
        BoundedEq { n, s, lo, hi }
    }
}

/// Binomial coefficient C(n, k), zero whenever k < 0, k > n, or n < 0.
pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Number of s-multisubsets of an n-element set: C(n+s-1, s).
pub fn multiset_coeff(n: u64, s: u64) -> BigUint {
    assert!(n >= 1, "multiset coefficient needs at least one element");
    binom((n + s - 1) as i64, s as i64)
}

/// Number of solutions of x_1 + ... + x_n = s with x_i in {0, ..., w},
/// by inclusion-exclusion over the variables pushed above w:
///
/// sum over i of (-1)^i C(n, i) C(s - i(w+1) + n - 1, n - 1),
/// i up to min(n, floor(s / (w+1))).
pub fn count_u(n: u64, s: i64, w: i64) -> BigUint {
    if w < 0 || s < 0 || (s as i128) > n as i128 * w as i128 {
        return BigUint::zero();
    }
    let t = (n as i64).min(s / (w + 1));
    let mut acc = BigInt::zero();
    for i in 0..=t {
        let term = BigInt::from(binom(n as i64, i)) * BigInt::from(binom(s - i * (w + 1) + n as i64 - 1, n as i64 - 1));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let (sign, mag) = acc.into_parts();
    assert_ne!(sign, Sign::Minus, "alternating sum must end nonnegative");
    mag
}

/// Number of solutions of the bounded equation with a general lower bound,
/// via the shift y_i = x_i - lo: U'(n, s, lo, hi) = U(n, s - n*lo, 0, hi - lo).
pub fn count_u_shifted(eq: BoundedEq) -> BigUint {
    if eq.hi < eq.lo {
        return BigUint::zero();
    }
    let shifted = eq.s as i128 - eq.n as i128 * eq.lo as i128;
    match i64::try_from(shifted) {
        Ok(s) => count_u(eq.n, s, eq.hi - eq.lo),
        Err(_) => BigUint::zero(),
    }
}

/// Dynamic-programming count of the same bounded equation.
///
/// Convolves the uniform distribution on {0, ..., hi-lo} one variable at a
/// time with a sliding-window prefix sum. Exact, and independent of the
/// inclusion-exclusion route.
pub fn oracle_count(eq: BoundedEq) -> BigUint {
    assert!(eq.n >= 1, "need at least one variable");
    if eq.hi < eq.lo {
        return BigUint::zero();
    }
    let d = (eq.hi - eq.lo) as i128;
    let target = eq.s as i128 - eq.n as i128 * eq.lo as i128;
    if target < 0 || target > eq.n as i128 * d {
        return BigUint::zero();
    }
    let target = target as usize;
    let d = d as usize;
    let mut ways = vec![BigUint::zero(); target + 1];
    ways[0] = BigUint::one();
    for _ in 0..eq.n {
        // prefix[t] = sum of ways[0..=t]; new[t] = prefix[t] - prefix[t-d-1]
        let mut prefix = ways.clone();
        for t in 1..=target {
            prefix[t] = &prefix[t] + &prefix[t - 1];
        }
        for t in 0..=target {
            ways[t] = if t > d {
                &prefix[t] - &prefix[t - d - 1]
            } else {
                prefix[t].clone()
            };
        }
    }
    ways[target].clone()
}

/// Exact size of a code family:
///
/// - H: C(n, s)
/// - A: C(n+s-1, s)
/// - B: U(n, s, 0, w)
/// - C: U'(n, s, s-w(n-1), w)
pub fn count_family(spec: &FamilySpec) -> BigUint {
    let n = spec.curve().n as u64;
    let s = spec.s();
    match spec.family() {
        Family::H => binom(n as i64, s),
        Family::A => multiset_coeff(n, s as u64),
        Family::B => count_u(n, s, spec.w().expect("family B has w")),
        Family::C => {
            let w = spec.w().expect("family C has w");
            count_u_shifted(BoundedEq::new(n, s, s - w * (n as i64 - 1), w))
        }
    }
}
