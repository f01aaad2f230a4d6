use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Errors from field construction and linear algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    /// The requested characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// The requested field has more than 2^16 elements.
    #[error("field size {p}^{m} exceeds 2^16")]
    TooLarge { p: u64, m: u32 },
    /// Operands belong to different fields.
    #[error("operands belong to different fields")]
    FieldMismatch,
    /// Matrix shapes are incompatible.
    #[error("column counts differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// An element of GF(p^m), identified by its canonical index.
///
/// The index encodes the coefficient vector of the residue polynomial in
/// base p: index = sum of c_i * p^i. Index 0 is the additive identity and
/// index 1 the multiplicative identity. Elements carry no field pointer;
/// arithmetic is performed through the owning [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldTables {
    p: u32,
    m: u32,
    q: u32,
    /// Monic irreducible modulus over GF(p), coefficients lowest degree
    /// first, length m+1.
    modulus: Vec<u32>,
    /// log[a] for a in 1..q; log[0] is unused.
    log: Vec<u16>,
    /// exp[i] = g^i for 0 <= i < q-1, g the smallest generator by index.
    exp: Vec<u16>,
}

/// A finite field GF(p^m) with q = p^m <= 2^16.
///
/// Cheap to clone; the tables are shared and immutable, so a `Field` may be
/// used freely from any number of threads.
#[derive(Clone)]
pub struct Field {
    tables: Arc<FieldTables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tables, &other.tables)
            || (self.tables.p == other.tables.p
                && self.tables.m == other.tables.m
                && self.tables.modulus == other.tables.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.tables.q)
    }
}

impl Field {
    /// Builds GF(p^m) with the lexicographically smallest monic irreducible
    /// modulus of degree m (comparing coefficient vectors with the leading
    /// coefficient most significant, i.e. by the base-p integer encoding).
    pub fn new(p: u64, m: u32) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        assert!(m >= 1, "extension degree must be at least 1");
        let q = checked_pow(p, m).ok_or(GfError::TooLarge { p, m })?;
        if q > 1 << 16 {
            return Err(GfError::TooLarge { p, m });
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = smallest_irreducible(p, m);
        let (exp, log) = build_tables(p, m, q, &modulus);
        Ok(Field {
            tables: Arc::new(FieldTables {
                p,
                m,
                q,
                modulus,
                log,
                exp,
            }),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.tables.p
    }

    pub fn degree(&self) -> u32 {
        self.tables.m
    }

    pub fn order(&self) -> u32 {
        self.tables.q
    }

    /// Modulus coefficients over GF(p), lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.tables.modulus
    }

    /// The element with the given canonical index.
    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.tables.q, "index {index} out of range");
        FieldElement(index as u16)
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.tables.q).map(|i| FieldElement(i as u16))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &self.tables;
        if t.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if t.m == 1 {
            return FieldElement(((a.index() + b.index()) % t.p) as u16);
        }
        let (mut x, mut y) = (a.index(), b.index());
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..t.m {
            out += (x % t.p + y % t.p) % t.p * place;
            x /= t.p;
            y /= t.p;
            place *= t.p;
        }
        FieldElement(out as u16)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let t = &self.tables;
        if t.p == 2 {
            return a;
        }
        let mut x = a.index();
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..t.m {
            out += (t.p - x % t.p) % t.p * place;
            x /= t.p;
            place *= t.p;
        }
        FieldElement(out as u16)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let t = &self.tables;
        let mut l = t.log[a.0 as usize] as u32 + t.log[b.0 as usize] as u32;
        if l >= t.q - 1 {
            l -= t.q - 1;
        }
        FieldElement(t.exp[l as usize])
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "zero has no inverse");
        let t = &self.tables;
        let l = t.log[a.0 as usize] as u32;
        FieldElement(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let t = &self.tables;
        let l = t.log[a.0 as usize] as u64;
        let r = l * (e % (t.q as u64 - 1)) % (t.q as u64 - 1);
        FieldElement(t.exp[r as usize])
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(p: u64, m: u32) -> Option<u64> {
    let mut out = 1u64;
    for _ in 0..m {
        out = out.checked_mul(p)?;
        if out > 1 << 16 {
            return None;
        }
    }
    Some(out)
}

// Polynomials over GF(p) as digit vectors, lowest degree first, used only
// while building the field tables.

fn ptrim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pmul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    ptrim(&mut out);
    out
}

/// Remainder of `num` modulo a monic divisor `den`.
fn prem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    debug_assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem: Vec<u32> = num.to_vec();
    let d = den.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - d;
        if lead != 0 {
            for (j, &dj) in den.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + (p - lead % p) * dj) % p;
            }
        }
        rem.pop();
        ptrim(&mut rem);
        if rem.len() <= d {
            break;
        }
    }
    ptrim(&mut rem);
    rem
}

/// Irreducibility by trial division against every monic polynomial of
/// degree at most m/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for v in 0..count {
            let mut g = digits(v, p, d);
            g.push(1);
            if prem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for v in 0..count {
        let mut f = digits(v, p, m as usize);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} over GF({p}) exists")
}

fn index_to_digits(idx: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = digits(idx as u64, p, m as usize);
    ptrim(&mut out);
    out
}

fn digits_to_index(v: &[u32], p: u32) -> u32 {
    let mut out = 0u64;
    for &d in v.iter().rev() {
        out = out * p as u64 + d as u64;
    }
    out as u32
}

fn residue_mul(a: u32, b: u32, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let prod = pmul(
        &index_to_digits(a, p, m),
        &index_to_digits(b, p, m),
        p,
    );
    digits_to_index(&prem(&prod, modulus, p), p)
}

fn residue_pow(mut base: u32, mut e: u64, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let mut out = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            out = residue_mul(out, base, p, m, modulus);
        }
        base = residue_mul(base, base, p, m, modulus);
        e >>= 1;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn build_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> (Vec<u16>, Vec<u16>) {
    let order = (q - 1) as u64;
    let factors = prime_factors(order);
    let generator = (1..q)
        .find(|&c| {
            factors
                .iter()
                .all(|&r| residue_pow(c, order / r, p, m, modulus) != 1)
        })
        .expect("the multiplicative group of a finite field is cyclic");

    let mut exp = vec![0u16; order as usize];
    let mut log = vec![0u16; q as usize];
    let mut x = 1u32;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x as u16;
        log[x as usize] = i as u16;
        x = residue_mul(x, generator, p, m, modulus);
    }
    debug_assert_eq!(x, 1, "generator order must be q-1");
    (exp, log)
}
