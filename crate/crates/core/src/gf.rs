//! Arithmetic in GF(q) for prime powers q.
//!
//! Elements are encoded as integers `enc = sum c_i p^i`, where `c_i` are the
//! coefficients of the residue polynomial modulo a fixed irreducible polynomial.
//! For prime q this is just the residue mod p. The modulus is the monic
//! irreducible polynomial of degree m with the smallest base-p encoding, and the
//! distinguished primitive element is the smallest-encoding generator of the
//! multiplicative group, so every field of a given order is built identically.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by [`FieldSpec::new`].
pub const MAX_ORDER: u32 = 1 << 16;

/// Orders up to this bound get full addition/multiplication tables.
const TABLE_LIMIT: u32 = 256;

/// An element of some GF(q), stored as its integer encoding.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw encoding. The caller is responsible for `enc < q`;
    /// use [`FieldSpec::element`] for a checked conversion.
    #[inline]
    pub const fn from_enc(enc: u32) -> Self {
        FieldElement(enc)
    }

    #[inline]
    pub const fn enc(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    xi: FieldElement,
    neg: Vec<u32>,
    inv: Vec<u32>,
    tables: Option<Tables>,
}

/// A concrete finite field GF(p^m).
///
/// Cheap to clone; all clones share the same tables. Two specs compare equal
/// iff they have the same order, since construction is deterministic.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.inner.q == other.inner.q
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.inner.p)
            .field("m", &self.inner.m)
            .field("q", &self.inner.q)
            .field("modulus", &self.inner.modulus)
            .field("xi", &self.inner.xi)
            .finish()
    }
}

/// Splits `q` as `p^m`, or returns `None` if it is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

// Polynomials over GF(p) as little-endian coefficient vectors.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            let sub = lead * bc % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn digits(mut enc: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = enc % p;
        enc /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Monic irreducible test by trial division with every monic polynomial of
/// degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let m = m as usize;
    let count = p.pow(m as u32);
    (0..count)
        .map(|low| {
            let mut f = digits(low, p, m);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists for every degree")
}

impl FieldSpec {
    /// Builds GF(q). Fails with [`Error::NotPrimePower`] unless `q = p^m`.
    pub fn new(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = if m == 1 { vec![0, 1] } else { smallest_irreducible(p, m) };
        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            xi: FieldElement::ONE,
            neg: Vec::new(),
            inv: Vec::new(),
            tables: None,
        };
        inner.neg = (0..q).map(|a| raw_neg(&inner, a)).collect();
        if q <= TABLE_LIMIT {
            let mut add = vec![0; (q * q) as usize];
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = raw_add(&inner, a, b);
                    mul[(a * q + b) as usize] = raw_mul(&inner, a, b);
                }
            }
            inner.tables = Some(Tables { add, mul });
        }
        // a^(q-2) = a^-1 on the multiplicative group
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { raw_pow(&inner, a, q - 2) })
            .collect();
        inner.inv = inv;
        inner.xi = (1..q)
            .find(|&g| raw_order(&inner, g) == q - 1)
            .map(FieldElement)
            .expect("the multiplicative group is cyclic");
        Ok(FieldSpec { inner: Arc::new(inner) })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.inner.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Coefficients `c_0..c_m` of the modulus (monic, so `c_m = 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The distinguished primitive element.
    #[inline]
    pub fn xi(&self) -> FieldElement {
        self.inner.xi
    }

    /// Checked conversion from an integer encoding.
    pub fn element(&self, enc: u32) -> Result<FieldElement> {
        if enc < self.q() {
            Ok(FieldElement(enc))
        } else {
            Err(Error::ElementOutOfRange { enc, q: self.q() })
        }
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q()
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q()).map(FieldElement)
    }

    /// Nonzero elements in ascending encoding order.
    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q()).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.inner.q + b.0) as usize]),
            None => FieldElement(raw_add(&self.inner, a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.inner.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.inner.q + b.0) as usize]),
            None => FieldElement(raw_mul(&self.inner, a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.inner.inv[a.0 as usize]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Order of `a` in the multiplicative group; 0 for the zero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> u32 {
        if a.is_zero() {
            return 0;
        }
        let mut x = a;
        let mut k = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `[xi, xi^2, ..., xi^(q-2)]`. Empty for q = 2.
    pub fn powers_of_xi(&self) -> Vec<FieldElement> {
        let xi = self.xi();
        let mut out = Vec::with_capacity(self.q().saturating_sub(2) as usize);
        let mut x = xi;
        for _ in 1..self.q().saturating_sub(1) {
            out.push(x);
            x = self.mul(x, xi);
        }
        out
    }

    /// Like [`powers_of_xi`](Self::powers_of_xi) but rejects q = 2, where the
    /// range is empty.
    pub fn powers_of_xi_checked(&self) -> Result<Vec<FieldElement>> {
        if self.q() == 2 {
            return Err(Error::EmptyRange);
        }
        Ok(self.powers_of_xi())
    }

    /// Dot product of two equal-length slices.
    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        a.iter()
            .zip(b)
            .fold(FieldElement::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// Builds GF(q).
pub fn build_field(q: u32) -> Result<FieldSpec> {
    FieldSpec::new(q)
}

fn raw_pow(f: &Inner, a: u32, mut e: u32) -> u32 {
    let mut base = a;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(f, acc, base);
        }
        base = raw_mul(f, base, base);
        e >>= 1;
    }
    acc
}

fn raw_order(f: &Inner, a: u32) -> u32 {
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = raw_mul(f, x, a);
        k += 1;
    }
    k
}

fn raw_add(f: &Inner, a: u32, b: u32) -> u32 {
    if f.m == 1 {
        return (a + b) % f.p;
    }
    let da = digits(a, f.p, f.m as usize);
    let db = digits(b, f.p, f.m as usize);
    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % f.p).collect();
    undigits(&s, f.p)
}

fn raw_neg(f: &Inner, a: u32) -> u32 {
    if f.m == 1 {
        return (f.p - a) % f.p;
    }
    let d: Vec<u32> = digits(a, f.p, f.m as usize)
        .into_iter()
        .map(|x| (f.p - x) % f.p)
        .collect();
    undigits(&d, f.p)
}

fn raw_mul(f: &Inner, a: u32, b: u32) -> u32 {
    if f.m == 1 {
        return ((a as u64 * b as u64) % f.p as u64) as u32;
    }
    let m = f.m as usize;
    let da = digits(a, f.p, m);
    let db = digits(b, f.p, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % f.p;
        }
    }
    let mut r = poly_rem(&prod, &f.modulus, f.p);
    r.resize(m, 0);
    undigits(&r, f.p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(x: u32) -> FieldElement {
        FieldElement::from_enc(x)
    }

    #[test]
    fn prime_fields() {
        let f = build_field(3).unwrap();
        assert_eq!((f.p(), f.m(), f.q()), (3, 1, 3));
        assert_eq!(f.xi(), fe(2));
        assert_eq!(f.add(fe(2), fe(2)), fe(1));
        assert_eq!(f.inv(fe(2)).unwrap(), fe(2));
    }

    #[test]
    fn gf4_modulus_and_product() {
        let f = build_field(4).unwrap();
        assert_eq!((f.p(), f.m()), (2, 2));
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * x = x + 1 mod x^2 + x + 1
        assert_eq!(f.mul(fe(2), fe(2)), fe(3));
    }

    #[test]
    fn gf4_product_matches_table_oracle() {
        // multiplication table of F_2[x]/(x^2+x+1) with 0,1,x,x+1 = 0,1,2,3
        let table = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        let f = build_field(4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(f.mul(fe(a), fe(b)).enc(), table[a as usize][b as usize]);
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 12, 15, 18, 100] {
            assert!(matches!(build_field(q), Err(Error::NotPrimePower(_))), "q={q}");
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(36), None);
    }

    #[test]
    fn element_listing() {
        let enc = |q| build_field(q).unwrap().elements().map(|e| e.enc()).collect::<Vec<_>>();
        assert_eq!(enc(2), vec![0, 1]);
        assert_eq!(enc(3), vec![0, 1, 2]);
        assert_eq!(enc(4), vec![0, 1, 2, 3]);
    }

    #[test]
    fn xi_powers() {
        let f3 = build_field(3).unwrap();
        assert_eq!(f3.powers_of_xi(), vec![fe(2)]);
        let f5 = build_field(5).unwrap();
        assert_eq!(f5.xi(), fe(2));
        assert_eq!(f5.powers_of_xi(), vec![fe(2), fe(4), fe(3)]);
        let f2 = build_field(2).unwrap();
        assert!(f2.powers_of_xi().is_empty());
        assert!(matches!(f2.powers_of_xi_checked(), Err(Error::EmptyRange)));
    }

    #[test]
    fn division_by_zero() {
        let f = build_field(5).unwrap();
        assert!(matches!(f.inv(FieldElement::ZERO), Err(Error::DivisionByZero)));
        assert!(matches!(f.div(fe(3), FieldElement::ZERO), Err(Error::DivisionByZero)));
        assert_eq!(f.div(fe(3), fe(3)).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn axioms_exhaustive_small_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = build_field(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn xi_generates_group() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = build_field(q).unwrap();
            let mut seen: Vec<u32> = (0..q - 1).map(|i| f.pow(f.xi(), i as u64).enc()).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len() as u32, q - 1, "q={q}");
            assert!(!seen.contains(&0));
        }
    }

    #[test]
    fn untabled_field_agrees_with_pow() {
        // 729 = 3^6 is above the table limit and exercises the direct path.
        let f = build_field(729).unwrap();
        assert_eq!(f.multiplicative_order(f.xi()), 728);
        let a = f.element(123).unwrap();
        assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        assert_eq!(f.pow(a, 728), FieldElement::ONE);
    }
}
