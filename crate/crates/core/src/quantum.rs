//! Stabilizer and entanglement-assisted code parameters derived from
//! classical data, and the quantum Gilbert-Varshamov bound.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QeccSource {
    /// A Hermitian self-orthogonal code used directly.
    SelfOrthogonal,
    /// A self-orthogonal code with one appended row and column.
    ExtendedOneColumn,
    /// A self-orthogonal code with two appended rows and columns.
    ExtendedTwoColumn,
    /// One extra qudit added to an existing code.
    Lengthened,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EaSource {
    /// Any classical code with `c = rank(HH†)`.
    ParityGram,
    /// A QC code, stabilized through its Hermitian dual.
    QcPrimal,
    /// The Hermitian dual of a QC code, stabilized through the QC code.
    QcDual,
    /// Hermitian dual of a QC code with one appended row and column.
    ExtendedOneColumn,
    /// Hermitian dual of a QC code with two appended rows and columns.
    ExtendedTwoColumn,
}

/// `[[n, k, d]]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QeccParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    /// The distance equals the plain dual distance.
    pub pure: bool,
    pub source: QeccSource,
}

impl fmt::Display for QeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]_{}", self.n, self.k, self.d, self.q)
    }
}

/// `[[n, k, d; c]]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EaqeccParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub c: usize,
    pub q: u32,
    /// `c = n - k`.
    pub maximal: bool,
    pub source: EaSource,
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{};{}]]_{}", self.n, self.k, self.d, self.c, self.q)
    }
}

/// QECC `[[n, n-2k, d]]_q` from a Hermitian self-orthogonal `[n, k]_{q²}`
/// code, where `d` is the minimum weight of `C^⊥h \ C`.
pub fn qecc_from_self_orthogonal(
    n: usize,
    k: usize,
    d_impure: usize,
    d_dual: usize,
    q: u32,
    source: QeccSource,
) -> Result<QeccParams> {
    if 2 * k > n {
        return Err(Error::Inconsistent(format!("a self-orthogonal [{n},{k}] code cannot exist")));
    }
    Ok(QeccParams { n, k: n - 2 * k, d: d_impure, q, pure: d_impure == d_dual, source })
}

/// Lengths and dimensions of the one- and two-column extensions of a
/// self-orthogonal QC code with block length `n`.
pub fn extended_qecc_dims(n: usize, deg_g: usize) -> [(usize, usize); 2] {
    [(2 * n + 1, (2 * deg_g).saturating_sub(1)), (2 * n + 2, (2 * deg_g).saturating_sub(2))]
}

/// `[[n, k, d]] → [[n+1, k, d]]`.
pub fn lengthen(p: &QeccParams) -> QeccParams {
    QeccParams { n: p.n + 1, source: QeccSource::Lengthened, pure: false, ..p.clone() }
}

/// EAQECC `[[n, 2k-n+c, d; c]]_q` stabilized by the Hermitian dual of an
/// `[n, k, d]_{q²}` code whose parity-check Gram matrix has rank `c`.
pub fn eaqecc_from_parity(n: usize, k: usize, d: usize, c: usize, q: u32, source: EaSource) -> Result<EaqeccParams> {
    let kq = (2 * k + c).checked_sub(n).ok_or_else(|| {
        Error::Inconsistent(format!("[{n},{k}] code with c = {c} gives a negative dimension"))
    })?;
    if c > n - kq {
        return Err(Error::Inconsistent(format!("c = {c} exceeds n - k = {}", n - kq)));
    }
    Ok(EaqeccParams { n, k: kq, d, c, q, maximal: c == n - kq, source })
}

/// Checks `rank(HH†) = rank(GG†) + n - 2k`.
pub fn check_gram_identity(n: usize, k: usize, hh_rank: usize, gg_rank: usize) -> Result<()> {
    if hh_rank + 2 * k != gg_rank + n {
        return Err(Error::Inconsistent(format!(
            "rank(HH†) = {hh_rank} but rank(GG†) + n - 2k = {}",
            gg_rank as i64 + n as i64 - 2 * k as i64
        )));
    }
    Ok(())
}

/// The maximal-entanglement pair promised for a QC code of block length
/// `n` meeting the entanglement conditions.
pub fn qc_pair_dims(n: usize, deg_g: usize) -> [(usize, usize, usize); 2] {
    [(2 * n, n - deg_g, n + deg_g), (2 * n, n + deg_g, n - deg_g)]
}

/// `(length, dimension, c)` promised for the dual of an extension with
/// `r` appended columns.
pub fn extended_ea_dims(n: usize, deg_g: usize, r: usize) -> (usize, usize, usize) {
    (2 * n + r, n + deg_g, n - deg_g + r)
}

/// Evaluation of the quantum GV inequality
/// `(q^(n-k+2) - 1)/(q² - 1) > Σ_{i=1}^{d-1} (q²-1)^(i-1) C(n,i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvVerdict {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    /// False when the parameters fall outside `n > k ≥ 2`, `n ≡ k (mod 2)`, `d ≥ 2`.
    pub applicable: bool,
    #[serde(serialize_with = "opt_decimal")]
    pub lhs: Option<BigUint>,
    #[serde(serialize_with = "opt_decimal")]
    pub rhs: Option<BigUint>,
    /// The inequality holds, so existence already follows from the bound.
    pub guaranteed: bool,
}

fn opt_decimal<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl GvVerdict {
    /// A code with these parameters exists although the bound does not
    /// guarantee it.
    pub fn exceeds(&self) -> bool {
        self.applicable && !self.guaranteed
    }
}

impl fmt::Display for GvVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.lhs, &self.rhs) {
            (Some(l), Some(r)) if self.guaranteed => write!(f, "guaranteed by GV ({l} > {r})"),
            (Some(l), Some(r)) => write!(f, "not guaranteed by GV (code exceeds bound: {l} <= {r})"),
            _ => write!(f, "GV bound not applicable"),
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn gv_bound(n: usize, k: usize, d: usize, q: u32) -> GvVerdict {
    let applicable = n > k && k >= 2 && (n - k) % 2 == 0 && d >= 2;
    if !applicable {
        return GvVerdict { n, k, d, q, applicable, lhs: None, rhs: None, guaranteed: false };
    }
    let qb = BigUint::from(q);
    let q2m1 = &qb * &qb - 1u32;
    let lhs = (qb.pow((n - k + 2) as u32) - 1u32) / &q2m1;
    let rhs: BigUint = (1..d).map(|i| q2m1.pow((i - 1) as u32) * binomial(n, i)).sum();
    let guaranteed = lhs > rhs;
    GvVerdict { n, k, d, q, applicable, lhs: Some(lhs), rhs: Some(rhs), guaranteed }
}
