//! Arithmetic in GF(q²) for q ∈ {2, 3, 9}, and polynomial-basis extensions
//! GF((q²)^m) used to locate roots of unity.
//!
//! Elements are stored as *digits* in logarithmic encoding: digit 0 is zero and
//! digit d ≥ 1 is α^(d-1), where α is a root of the field's Conway polynomial.
//! This is the encoding used by all printed coefficient strings, so `0,1,2,3`
//! over GF(4) read as `0, 1, ω, ω²`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Conway polynomials C_{p,m}, ascending coefficients over GF(p).
const CONWAY: &[(u32, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
];

/// A field element in logarithmic digit encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn digit(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    q: u32,
    order: u32,
    p: u32,
    degree: u32,
    modulus: Vec<u8>,
    add: Vec<u8>,
    neg: Vec<u8>,
    /// digit -> coefficients over GF(p) in the polynomial basis 1, α, α², …
    coords: Vec<Vec<u8>>,
}

/// The field GF(q²). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct FieldSpec {
    t: Arc<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.order == other.t.order && self.t.modulus == other.t.modulus)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.t.order.hash(state);
        self.t.modulus.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.t.order)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Remainder of `a` modulo the monic `m`, both ascending over GF(p).
fn rem_mod_p(a: &[u8], m: &[u8], p: u32) -> Vec<u8> {
    let mut r: Vec<u32> = a.iter().map(|&c| c as u32).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap() % p;
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &mc) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * mc as u32) % p;
            }
        }
    }
    r.into_iter().map(|c| (c % p) as u8).collect()
}

/// Exhaustive trial division by every monic polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible_mod_p(modulus: &[u8], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                cand.push((v % p as u64) as u8);
                v /= p as u64;
            }
            cand.push(1);
            if rem_mod_p(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    deg >= 1
}

impl FieldSpec {
    /// Builds GF(q²) from the Conway polynomial of the matching degree.
    pub fn new(q: u32) -> Result<FieldSpec> {
        let (p, m) = match q {
            2 => (2, 2),
            3 => (3, 2),
            9 => (3, 4),
            other => return Err(Error::UnsupportedField(other)),
        };
        let modulus = CONWAY
            .iter()
            .find(|(cp, cm, _)| *cp == p && *cm == m)
            .map(|(_, _, c)| c.to_vec())
            .ok_or(Error::UnsupportedField(q))?;
        Self::from_modulus(q, p, modulus)
    }

    fn from_modulus(q: u32, p: u32, modulus: Vec<u8>) -> Result<FieldSpec> {
        let m = (modulus.len() - 1) as u32;
        let order = p.pow(m);
        if !is_prime(p) || order != q * q || !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::UnsupportedField(q));
        }
        let n = order as usize;
        let to_int = |v: &[u8]| v.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize);

        // Powers of α as coordinate vectors; α must have order Q-1.
        let mut coords = vec![vec![0u8; m as usize]; n];
        let mut digit_of = vec![0u8; n];
        let mut cur = vec![0u8; m as usize];
        cur[0] = 1;
        for e in 0..n - 1 {
            let idx = to_int(&cur);
            if digit_of[idx] != 0 || (idx == 0) {
                return Err(Error::UnsupportedField(q));
            }
            digit_of[idx] = (e + 1) as u8;
            coords[e + 1] = cur.clone();
            let mut shifted = vec![0u8];
            shifted.extend_from_slice(&cur);
            cur = rem_mod_p(&shifted, &modulus, p);
            cur.resize(m as usize, 0);
        }
        if to_int(&cur) != 1 {
            return Err(Error::UnsupportedField(q));
        }

        let mut add = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u8> = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(&x, &y)| ((x as u32 + y as u32) % p) as u8)
                    .collect();
                add[a * n + b] = digit_of[to_int(&s)];
            }
            let s: Vec<u8> = coords[a].iter().map(|&x| ((p - x as u32) % p) as u8).collect();
            neg[a] = digit_of[to_int(&s)];
        }
        Ok(FieldSpec {
            t: Arc::new(Tables { q, order, p, degree: m, modulus, add, neg, coords }),
        })
    }

    /// The base size q (the quantum alphabet).
    pub fn q(&self) -> u32 {
        self.t.q
    }

    /// The field size Q = q².
    pub fn order(&self) -> u32 {
        self.t.order
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.t.degree
    }

    /// Defining polynomial over GF(p), ascending.
    pub fn modulus(&self) -> &[u8] {
        &self.t.modulus
    }

    pub fn elem(&self, digit: u32) -> Result<FieldElem> {
        if digit < self.t.order {
            Ok(FieldElem(digit as u8))
        } else {
            Err(Error::DigitOutOfRange { digit, order: self.t.order })
        }
    }

    /// All elements in digit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.t.order).map(|d| FieldElem(d as u8))
    }

    /// The primitive element α (digit 2).
    pub fn primitive(&self) -> FieldElem {
        FieldElem(2)
    }

    /// α^e.
    pub fn alpha_pow(&self, e: u64) -> FieldElem {
        FieldElem((e % (self.t.order as u64 - 1)) as u8 + 1)
    }

    /// Discrete log to base α, `None` for zero.
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        (a.0 != 0).then(|| a.0 as u32 - 1)
    }

    /// The image of an integer under Z → GF(p) ⊂ GF(Q).
    pub fn from_int(&self, v: i64) -> FieldElem {
        let p = self.t.p as i64;
        let r = v.rem_euclid(p);
        (0..r).fold(FieldElem::ZERO, |acc, _| self.add(acc, FieldElem::ONE))
    }

    /// Coordinates over GF(p) in the basis 1, α, …, α^(m-1).
    pub fn coords(&self, a: FieldElem) -> &[u8] {
        &self.t.coords[a.0 as usize]
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.t.add[a.0 as usize * self.t.order as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.t.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let m = self.t.order - 1;
        FieldElem((((a.0 - 1) as u32 + (b.0 - 1) as u32) % m) as u8 + 1)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let m = self.t.order - 1;
        Ok(FieldElem(((m - (a.0 as u32 - 1)) % m) as u8 + 1))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.0 == 0 {
            return FieldElem::ZERO;
        }
        let m = (self.t.order - 1) as u64;
        FieldElem((((a.0 - 1) as u64 * (e % m)) % m) as u8 + 1)
    }

    /// The Frobenius conjugate a^q.
    #[inline]
    pub fn conj(&self, a: FieldElem) -> FieldElem {
        if a.0 == 0 {
            return a;
        }
        let m = self.t.order - 1;
        FieldElem((((a.0 - 1) as u32 * self.t.q) % m) as u8 + 1)
    }

    /// a^(q+1), the Hermitian norm; always lies in GF(q).
    pub fn norm(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.t.q as u64 + 1)
    }

    /// Σ u_i^q v_i.
    pub fn hermitian_dot(&self, u: &[FieldElem], v: &[FieldElem]) -> FieldElem {
        u.iter()
            .zip(v)
            .fold(FieldElem::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(self.conj(a), b)))
    }

    /// Renders α^e as `a^e`, with `0` and `1` kept literal.
    pub fn render(&self, a: FieldElem) -> String {
        match a.0 {
            0 => "0".into(),
            1 => "1".into(),
            d => format!("a^{}", d - 1),
        }
    }
}

/// An element of an extension GF(Q^m): coefficients over GF(Q) in the basis
/// 1, y, …, y^(m-1) of GF(Q)[y]/(modulus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElem(Vec<FieldElem>);

impl ExtElem {
    pub fn coeffs(&self) -> &[FieldElem] {
        &self.0
    }
}

/// GF(Q^m) in polynomial representation over a base [`FieldSpec`].
#[derive(Clone, Debug)]
pub struct ExtField {
    base: FieldSpec,
    modulus: Poly,
}

impl ExtField {
    /// Finds the lexicographically first monic irreducible polynomial of
    /// degree `m` over the base field and uses it as the modulus.
    pub fn new(base: &FieldSpec, m: usize) -> Result<ExtField> {
        if m == 0 {
            return Err(Error::Spec("extension degree must be at least 1".into()));
        }
        if m == 1 {
            let modulus = Poly::from_coeffs(base, vec![FieldElem::ZERO, FieldElem::ONE]);
            return Ok(ExtField { base: base.clone(), modulus });
        }
        let q = base.order() as u128;
        let count = q
            .checked_pow(m as u32)
            .ok_or_else(|| Error::Spec(format!("extension GF({q}^{m}) is too large")))?;
        // Every other candidate has a nonzero constant term; irreducibles of
        // density ~1/m appear quickly.
        for idx in 0..count {
            let mut v = idx;
            let mut coeffs = Vec::with_capacity(m + 1);
            for _ in 0..m {
                coeffs.push(FieldElem((v % q) as u8));
                v /= q;
            }
            if coeffs[0].is_zero() {
                continue;
            }
            coeffs.push(FieldElem::ONE);
            let cand = Poly::from_coeffs(base, coeffs);
            if is_irreducible(&cand) {
                return Ok(ExtField { base: base.clone(), modulus: cand });
            }
        }
        Err(Error::Inconsistent(format!("no irreducible polynomial of degree {m}")))
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Q^m.
    pub fn order(&self) -> u128 {
        (self.base.order() as u128).pow(self.degree() as u32)
    }

    fn wrap(&self, p: Poly) -> ExtElem {
        let mut c = p.rem(&self.modulus).coeffs().to_vec();
        c.resize(self.degree(), FieldElem::ZERO);
        ExtElem(c)
    }

    fn unwrap(&self, a: &ExtElem) -> Poly {
        Poly::from_coeffs(&self.base, a.0.clone())
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem(vec![FieldElem::ZERO; self.degree()])
    }

    pub fn one(&self) -> ExtElem {
        self.embed(FieldElem::ONE)
    }

    pub fn embed(&self, a: FieldElem) -> ExtElem {
        let mut c = vec![FieldElem::ZERO; self.degree()];
        c[0] = a;
        ExtElem(c)
    }

    /// Returns the base-field value if `a` lies in GF(Q).
    pub fn base_value(&self, a: &ExtElem) -> Option<FieldElem> {
        a.0[1..].iter().all(|c| c.is_zero()).then_some(a.0[0])
    }

    /// The element whose coordinates are the base-Q digits of `idx`.
    pub fn from_index(&self, mut idx: u128) -> ExtElem {
        let q = self.base.order() as u128;
        let mut c = Vec::with_capacity(self.degree());
        for _ in 0..self.degree() {
            c.push(FieldElem((idx % q) as u8));
            idx /= q;
        }
        ExtElem(c)
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.base.add(x, y)).collect())
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().map(|&x| self.base.neg(x)).collect())
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.wrap(self.unwrap(a).mul(&self.unwrap(b)))
    }

    pub fn pow(&self, a: &ExtElem, mut e: u128) -> ExtElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_one(&self, a: &ExtElem) -> bool {
        *a == self.one()
    }
}

fn prime_factors(mut n: u128) -> Vec<u128> {
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

/// Rabin's test: monic f of degree m is irreducible over GF(Q) iff
/// x^(Q^m) ≡ x (mod f) and gcd(x^(Q^(m/r)) - x, f) = 1 for every prime r | m.
pub fn is_irreducible(f: &Poly) -> bool {
    let m = match f.degree() {
        Some(0) | None => return false,
        Some(m) => m,
    };
    if m == 1 {
        return true;
    }
    let field = f.field().clone();
    let q = field.order() as u128;
    let x = Poly::from_coeffs(&field, vec![FieldElem::ZERO, FieldElem::ONE]);
    // frob[j] = x^(Q^j) mod f
    let mut frob = vec![x.rem(f)];
    for _ in 0..m {
        let last = frob.last().unwrap();
        frob.push(last.pow_mod(q, f));
    }
    if frob[m] != x.rem(f) {
        return false;
    }
    prime_factors(m as u128).into_iter().all(|r| {
        let t = frob[m / r as usize].sub(&x);
        t.gcd(f).degree() == Some(0)
    })
}

/// Multiplicative order of `a` modulo `n` (requires gcd(a, n) = 1, n ≥ 1).
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = x * (a % n) % n;
        k += 1;
        if k > n {
            return 0;
        }
    }
    k
}

/// Finds an element of exact multiplicative order `n` in `ext`.
pub fn primitive_root_of_unity(ext: &ExtField, n: u64) -> Result<ExtElem> {
    let group = ext.order() - 1;
    if group % n as u128 != 0 {
        return Err(Error::Inconsistent(format!("{n} does not divide |GF({})*|", ext.order())));
    }
    let cof = group / n as u128;
    let primes = prime_factors(n as u128);
    for idx in 1..ext.order() {
        let beta = ext.pow(&ext.from_index(idx), cof);
        if primes.iter().all(|&r| !ext.is_one(&ext.pow(&beta, n as u128 / r))) {
            return Ok(beta);
        }
    }
    Err(Error::Inconsistent(format!("no primitive {n}-th root of unity found")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_irreducible_by_roots(modulus: &[u8], p: u32) -> bool {
        // degree 2 polynomials are irreducible iff they have no root in GF(p)
        (0..p).all(|x| {
            let v = modulus.iter().rev().fold(0u32, |acc, &c| (acc * x + c as u32) % p);
            v != 0
        })
    }

    #[test]
    fn conway_moduli() {
        let f4 = FieldSpec::new(2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert!(naive_irreducible_by_roots(f4.modulus(), 2));
        let f9 = FieldSpec::new(3).unwrap();
        assert_eq!(f9.modulus(), &[2, 2, 1]);
        assert!(naive_irreducible_by_roots(f9.modulus(), 3));
        let f81 = FieldSpec::new(9).unwrap();
        assert_eq!(f81.modulus(), &[2, 0, 0, 2, 1]);
        // a quartic with no roots could still split into quadratics; the
        // exhaustive trial division covers that
        assert!(naive_irreducible_by_roots(f81.modulus(), 3));
        assert!(is_irreducible_mod_p(f81.modulus(), 3));
        assert!(!is_irreducible_mod_p(&[1, 0, 2, 0, 1], 3)); // (x^2+1)^2
        assert_eq!((f4.order(), f9.order(), f81.order()), (4, 9, 81));
        assert_eq!(f81.characteristic(), 3);
    }

    #[test]
    fn unsupported_field() {
        assert!(matches!(FieldSpec::new(5), Err(Error::UnsupportedField(5))));
        assert!(matches!(FieldSpec::new(4), Err(Error::UnsupportedField(4))));
    }

    #[test]
    fn small_identities() {
        let f4 = FieldSpec::new(2).unwrap();
        let e = |d| f4.elem(d).unwrap();
        assert_eq!(f4.mul(e(2), e(3)), e(1));
        assert_eq!(f4.add(e(2), e(3)), e(1));
        assert_eq!(f4.conj(e(2)), e(3));
        let f9 = FieldSpec::new(3).unwrap();
        for a in f9.elements() {
            assert!(f9.add(f9.add(a, a), a).is_zero());
        }
        assert_eq!(f9.conj(f9.elem(2).unwrap()), f9.elem(4).unwrap());
        // ξ^4 = -1 in GF(9)
        assert_eq!(f9.neg(FieldElem::ONE), f9.elem(5).unwrap());
        assert!(matches!(f9.inv(FieldElem::ZERO), Err(Error::DivisionByZero)));
        assert!(f9.elem(9).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 9] {
            let f = FieldSpec::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.conj(f.conj(a)), a);
                assert_eq!(f.conj(FieldElem::ZERO), FieldElem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.pow(a, f.order() as u64 - 1), FieldElem::ONE);
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
                }
                assert!(f.add(a, f.neg(a)).is_zero());
                // the norm lands in GF(q): fixed by conjugation
                assert_eq!(f.conj(f.norm(a)), f.norm(a));
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_has_full_order() {
        for q in [2, 3, 9] {
            let f = FieldSpec::new(q).unwrap();
            let a = f.primitive();
            let ord = (1..f.order() as u64).find(|&e| f.pow(a, e) == FieldElem::ONE).unwrap();
            assert_eq!(ord, f.order() as u64 - 1);
        }
    }

    #[test]
    fn from_int_is_prime_subfield() {
        let f9 = FieldSpec::new(3).unwrap();
        assert_eq!(f9.from_int(2), f9.neg(FieldElem::ONE));
        assert_eq!(f9.from_int(3), FieldElem::ZERO);
        assert_eq!(f9.from_int(-1), f9.from_int(2));
        let f81 = FieldSpec::new(9).unwrap();
        assert_eq!(f81.from_int(2), f81.alpha_pow(40));
    }

    #[test]
    fn extension_degree_one_is_base() {
        let f4 = FieldSpec::new(2).unwrap();
        let e = ExtField::new(&f4, 1).unwrap();
        assert_eq!(e.order(), 4);
    }

    #[test]
    fn extension_gf16_contains_15th_roots() {
        let f4 = FieldSpec::new(2).unwrap();
        let e = ExtField::new(&f4, 2).unwrap();
        assert_eq!(e.order(), 16);
        for idx in 1..16 {
            let a = e.from_index(idx);
            assert!(e.is_one(&e.pow(&a, 15)));
        }
        let beta = primitive_root_of_unity(&e, 15).unwrap();
        assert!((1..15).all(|j| !e.is_one(&e.pow(&beta, j))));
    }

    #[test]
    fn extension_gf9_5_has_11th_roots() {
        let f9 = FieldSpec::new(3).unwrap();
        assert_eq!(multiplicative_order(9, 11), 5);
        let e = ExtField::new(&f9, 5).unwrap();
        let beta = primitive_root_of_unity(&e, 11).unwrap();
        assert!(e.is_one(&e.pow(&beta, 11)));
        assert!(!e.is_one(&beta));
    }
}
