//! Polynomials over GF(q²) and the quotient ring R_n = GF(q²)[x]/(xⁿ-1).
//!
//! [`Poly`] is a plain polynomial (trimmed, ascending coefficients) used for
//! gcd, exact division and factoring. [`RingPoly`] is a dense element of R_n.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{multiplicative_order, primitive_root_of_unity, ExtField, FieldElem, FieldSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

impl Poly {
    pub fn from_coeffs(field: &FieldSpec, mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldSpec) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Poly {
        Poly::constant(field, FieldElem::ONE)
    }

    pub fn constant(field: &FieldSpec, c: FieldElem) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// c·x^deg.
    pub fn monomial(field: &FieldSpec, c: FieldElem, deg: usize) -> Poly {
        let mut v = vec![FieldElem::ZERO; deg + 1];
        v[deg] = c;
        Poly::from_coeffs(field, v)
    }

    /// xⁿ - 1.
    pub fn x_n_minus_1(field: &FieldSpec, n: usize) -> Poly {
        let mut v = vec![FieldElem::ZERO; n + 1];
        v[0] = field.neg(FieldElem::ONE);
        v[n] = FieldElem::ONE;
        Poly::from_coeffs(field, v)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    fn same_field(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(f, v)
    }

    pub fn neg(&self) -> Poly {
        let v = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::from_coeffs(&self.field, v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        let v = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::from_coeffs(&self.field, v)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut v = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, v)
    }

    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quo = vec![FieldElem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quo[i - dd] = t;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(rem[k], f.mul(t, dc));
            }
        }
        Ok((Poly::from_coeffs(f, quo), Poly::from_coeffs(f, rem)))
    }

    /// Remainder; panics on a zero divisor.
    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).expect("division by zero polynomial").1
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// True iff `self` divides `other` exactly. The zero polynomial divides
    /// only itself.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        self.coeffs.iter().rev().fold(FieldElem::ZERO, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// x^deg · p(1/x) for deg = degree(p).
    pub fn reciprocal(&self) -> Poly {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::from_coeffs(&self.field, v)
    }

    /// Coefficient-wise Frobenius a ↦ a^q.
    pub fn conj(&self) -> Poly {
        let v = self.coeffs.iter().map(|&c| self.field.conj(c)).collect();
        Poly::from_coeffs(&self.field, v)
    }

    /// Human-readable rendering such as `x^7+x^4+x` or `a^8*x^3+1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let term = match (c == FieldElem::ONE, mono.is_empty()) {
                (true, true) => "1".into(),
                (true, false) => mono,
                (false, true) => self.field.render(c),
                (false, false) => format!("{}*{}", self.field.render(c), mono),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

/// An element of R_n stored densely with exactly n coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingPoly {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingPoly(n={}, {})", self.n(), render_compact(&self.coeffs))
    }
}

impl RingPoly {
    pub fn zero(field: &FieldSpec, n: usize) -> RingPoly {
        RingPoly { field: field.clone(), coeffs: vec![FieldElem::ZERO; n] }
    }

    /// Builds from ascending coefficients; at most n of them.
    pub fn from_coeffs(field: &FieldSpec, n: usize, mut coeffs: Vec<FieldElem>) -> Result<RingPoly> {
        if coeffs.len() > n {
            return Err(Error::TooLong { len: coeffs.len(), max: n });
        }
        coeffs.resize(n, FieldElem::ZERO);
        Ok(RingPoly { field: field.clone(), coeffs })
    }

    /// Reduces a plain polynomial modulo xⁿ - 1.
    pub fn reduce(p: &Poly, n: usize) -> RingPoly {
        let f = p.field();
        let mut coeffs = vec![FieldElem::ZERO; n];
        for (i, &c) in p.coeffs().iter().enumerate() {
            coeffs[i % n] = f.add(coeffs[i % n], c);
        }
        RingPoly { field: f.clone(), coeffs }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(&self.field, self.coeffs.clone())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &RingPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::Shape(format!("ring lengths {} and {}", self.n(), other.n())));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingPoly) -> Result<RingPoly> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(RingPoly { field: self.field.clone(), coeffs })
    }

    pub fn neg(&self) -> RingPoly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        RingPoly { field: self.field.clone(), coeffs }
    }

    /// Product modulo xⁿ - 1.
    pub fn mul_mod(&self, other: &RingPoly) -> Result<RingPoly> {
        self.check(other)?;
        let n = self.n();
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        Ok(RingPoly { field: f.clone(), coeffs: out })
    }

    /// x^s · self: the cyclic shift by s positions.
    pub fn shift(&self, s: usize) -> RingPoly {
        let n = self.n();
        let mut coeffs = vec![FieldElem::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(i + s) % n] = c;
        }
        RingPoly { field: self.field.clone(), coeffs }
    }

    /// f̄(x) = f_0 + f_{n-1} x + … + f_1 x^{n-1}.
    pub fn bar(&self) -> RingPoly {
        let n = self.n();
        let coeffs = (0..n).map(|i| self.coeffs[(n - i) % n]).collect();
        RingPoly { field: self.field.clone(), coeffs }
    }

    /// Coefficient-wise a ↦ a^q.
    pub fn frob(&self) -> RingPoly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.conj(c)).collect();
        RingPoly { field: self.field.clone(), coeffs }
    }

    pub fn render_compact(&self) -> String {
        let end = self.degree().map_or(1, |d| d + 1);
        render_compact(&self.coeffs[..end])
    }
}

/// Generator of the Hermitian dual of the cyclic code ⟨g⟩:
/// h = (xⁿ-1)/g, g^⊥ = x^{deg h} h(1/x), result (g^⊥)^q.
///
/// The result keeps the reciprocal's own scaling (constant term 1 for a monic
/// g), which is what the printed circulant blocks use.
pub fn dual_gen(g: &Poly, n: usize) -> Result<Poly> {
    let field = g.field();
    let xn1 = Poly::x_n_minus_1(field, n);
    if g.is_zero() || !g.divides(&xn1) {
        return Err(Error::GNotDivisor { n });
    }
    let h = xn1.quotient(g)?;
    Ok(h.reciprocal().conj())
}

/// Parses the run-length notation used in code tables.
///
/// Grammar: `seq := item+`, `item := atom ('^' count)?`,
/// `atom := digit | '(' seq ')'`, `count := digit | '{' digits '}'`.
/// Single-character digits require Q ≤ 10. Any input containing a comma is
/// read as a digit list instead, whose items are decimal digits or `z^k` (α^k).
pub fn parse_compact(s: &str, field: &FieldSpec, max_len: usize) -> Result<Vec<FieldElem>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    if cleaned.is_empty() {
        return Err(err("empty"));
    }
    let digits = if cleaned.contains(',') || field.order() > 10 {
        parse_list(&cleaned, field).map_err(|r| err(&r))?
    } else {
        let chars: Vec<char> = cleaned.chars().collect();
        let mut pos = 0;
        let out = parse_seq(&chars, &mut pos, field, 0).map_err(|r| err(&r))?;
        if pos != chars.len() {
            return Err(err(&format!("unexpected '{}' at position {pos}", chars[pos])));
        }
        out
    };
    if digits.len() > max_len {
        return Err(Error::TooLong { len: digits.len(), max: max_len });
    }
    Ok(digits)
}

const MAX_EXPANSION: usize = 1 << 16;

fn parse_seq(chars: &[char], pos: &mut usize, field: &FieldSpec, depth: usize) -> Result<Vec<FieldElem>, String> {
    let mut out = Vec::new();
    while *pos < chars.len() && chars[*pos] != ')' {
        let atom = match chars[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos, field, depth + 1)?;
                if *pos >= chars.len() || chars[*pos] != ')' {
                    return Err("unbalanced '('".into());
                }
                if inner.is_empty() {
                    return Err("empty group".into());
                }
                *pos += 1;
                inner
            }
            c if c.is_ascii_digit() => {
                let d = c.to_digit(10).unwrap();
                if d >= field.order() {
                    return Err(format!("digit {d} not in GF({})", field.order()));
                }
                *pos += 1;
                vec![field.elem(d).unwrap()]
            }
            c => return Err(format!("unexpected '{c}' at position {}", *pos)),
        };
        let mut count = 1usize;
        if *pos < chars.len() && chars[*pos] == '^' {
            *pos += 1;
            count = parse_count(chars, pos)?;
        }
        if out.len() + atom.len() * count > MAX_EXPANSION {
            return Err("expansion too long".into());
        }
        for _ in 0..count {
            out.extend_from_slice(&atom);
        }
    }
    if depth == 0 && *pos < chars.len() {
        return Err("unbalanced ')'".into());
    }
    Ok(out)
}

fn parse_count(chars: &[char], pos: &mut usize) -> Result<usize, String> {
    let start = *pos;
    let value = if chars.get(*pos) == Some(&'{') {
        *pos += 1;
        let begin = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if chars.get(*pos) != Some(&'}') || *pos == begin {
            return Err(format!("malformed exponent at position {start}"));
        }
        let v: String = chars[begin..*pos].iter().collect();
        *pos += 1;
        v.parse::<usize>().map_err(|e| e.to_string())?
    } else {
        match chars.get(*pos).and_then(|c| c.to_digit(10)) {
            Some(d) => {
                *pos += 1;
                d as usize
            }
            None => return Err(format!("missing exponent at position {start}")),
        }
    };
    if value == 0 {
        return Err("exponent must be positive".into());
    }
    Ok(value)
}

fn parse_list(s: &str, field: &FieldSpec) -> Result<Vec<FieldElem>, String> {
    s.split(',')
        .map(|tok| {
            if let Some(e) = tok.strip_prefix("z^") {
                let e: u64 = e.parse().map_err(|_| format!("bad exponent in {tok:?}"))?;
                Ok(field.alpha_pow(e))
            } else if tok == "z" {
                Ok(field.primitive())
            } else {
                let d: u32 = tok.parse().map_err(|_| format!("bad digit {tok:?}"))?;
                field.elem(d).map_err(|e| e.to_string())
            }
        })
        .collect()
}

/// Canonical run-length rendering; inverse of [`parse_compact`]. Fields with
/// more than ten elements render as a comma-separated digit list.
pub fn render_compact(digits: &[FieldElem]) -> String {
    if digits.is_empty() {
        return "0".into();
    }
    if digits.iter().any(|d| d.digit() > 9) {
        return digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    }
    let mut out = String::new();
    let mut i = 0;
    while i < digits.len() {
        let mut j = i;
        while j < digits.len() && digits[j] == digits[i] {
            j += 1;
        }
        let run = j - i;
        out.push_str(&digits[i].to_string());
        match run {
            1 => {}
            2..=9 => out.push_str(&format!("^{run}")),
            _ => out.push_str(&format!("^{{{run}}}")),
        }
        i = j;
    }
    out
}

/// Irreducible monic factors of xⁿ - 1 over the field, one per Q-cyclotomic
/// coset modulo n, ordered by (degree, coefficients).
pub fn factor_xn_minus_1(field: &FieldSpec, n: usize) -> Result<Vec<Poly>> {
    let p = field.characteristic() as usize;
    if n == 0 || n % p == 0 {
        return Err(Error::RepeatedRoots { n, p: p as u32 });
    }
    let q = field.order() as u64;
    let m = multiplicative_order(q, n as u64) as usize;
    let ext = ExtField::new(field, m)?;
    let beta = primitive_root_of_unity(&ext, n as u64)?;

    let mut seen = vec![false; n];
    let mut factors = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            coset.push(t);
            t = (t as u64 * q % n as u64) as usize;
        }
        // ∏ (x - β^t) with coefficients in the extension
        let mut prod = vec![ext.one()];
        for &t in &coset {
            let root = ext.neg(&ext.pow(&beta, t as u128));
            let mut next = vec![ext.zero(); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i + 1] = ext.add(&next[i + 1], c);
                next[i] = ext.add(&next[i], &ext.mul(c, &root));
            }
            prod = next;
        }
        let coeffs = prod
            .iter()
            .map(|c| {
                ext.base_value(c)
                    .ok_or_else(|| Error::Inconsistent("minimal polynomial left the base field".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        factors.push(Poly::from_coeffs(field, coeffs));
    }
    factors.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    Ok(factors)
}
