//! Exact weight distributions, minimum distances and the MacWilliams transform.

mod packed;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::mat::Mat;

/// Default cap on enumerated messages.
pub const DEFAULT_BUDGET: u128 = 1 << 32;

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: Vec<BigUint>,
}

impl fmt::Debug for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightEnumerator({})", self)
    }
}

/// Renders as `0^1 16^3 18^630 …`, listing nonzero counts only.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero().map(|(w, c)| format!("{w}^{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl serde::Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (w, c) in self.nonzero() {
            map.serialize_entry(&w.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl WeightEnumerator {
    pub fn from_counts(counts: Vec<BigUint>) -> WeightEnumerator {
        WeightEnumerator { counts }
    }

    /// From `(weight, count)` pairs for a code of length `n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, u128)]) -> WeightEnumerator {
        let mut counts = vec![BigUint::zero(); n + 1];
        for &(w, c) in pairs {
            counts[w] += BigUint::from(c);
        }
        WeightEnumerator { counts }
    }

    /// Inverse of the JSON form: weight strings to decimal strings.
    pub fn from_map(n: usize, map: &BTreeMap<String, String>) -> Result<WeightEnumerator> {
        let mut counts = vec![BigUint::zero(); n + 1];
        for (w, c) in map {
            let w: usize = w.parse().map_err(|_| Error::Spec(format!("bad weight {w:?}")))?;
            if w > n {
                return Err(Error::Spec(format!("weight {w} exceeds length {n}")));
            }
            counts[w] = c.parse().map_err(|_| Error::Spec(format!("bad count {c:?}")))?;
        }
        Ok(WeightEnumerator { counts })
    }

    /// The zero code of length `n`.
    pub fn zero_code(n: usize) -> WeightEnumerator {
        WeightEnumerator::from_pairs(n, &[(0, 1)])
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Smallest positive weight present.
    pub fn min_distance(&self) -> Result<usize> {
        self.nonzero().map(|(w, _)| w).find(|&w| w > 0).ok_or(Error::ZeroCode)
    }
}

/// Options for [`enumerate`].
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Maximum number of messages `Q^k` accepted.
    pub budget: u128,
    /// Split the message space across the rayon pool.
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { budget: DEFAULT_BUDGET, parallel: true }
    }
}

/// Number of messages `Q^k` for a generator matrix.
pub fn message_count(field: &FieldSpec, k: usize) -> BigUint {
    BigUint::from(field.order()).pow(k as u32)
}

/// Weight distribution of the row space of `g`, which must have full row rank.
pub fn enumerate(g: &Mat, opts: EnumOptions) -> Result<WeightEnumerator> {
    let field = g.field().clone();
    let k = g.rows();
    let n = g.cols();
    let rank = g.rank();
    if rank != k {
        return Err(Error::NotFullRank { rank, rows: k });
    }
    let required = message_count(&field, k);
    if required > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded { required, budget: opts.budget });
    }
    if n > packed::MAX_LENGTH {
        return Err(Error::Shape(format!("length {n} exceeds the enumeration limit {}", packed::MAX_LENGTH)));
    }
    if k == 0 {
        return Ok(WeightEnumerator::zero_code(n));
    }

    let q = field.order() as usize;
    let layout = packed::Layout::new(&field, n);
    let elems: Vec<FieldElem> = field.elements().collect();
    let scaled = |row: &[FieldElem], c: FieldElem| -> Vec<FieldElem> { row.iter().map(|&x| field.mul(c, x)).collect() };

    // Top rows are fixed per shard; the rest are scanned in Gray order.
    let target_shards = if opts.parallel { shard_target() } else { 1 };
    let mut top = 0;
    while top < k - 1 && q.pow(top as u32) < target_shards {
        top += 1;
    }
    let low = k - top;
    let mut deltas = Vec::with_capacity(low * q);
    for j in 0..low {
        for a in 0..q {
            let step = field.sub(elems[(a + 1) % q], elems[a]);
            deltas.push(layout.pack(&field, &scaled(g.row(j), step)));
        }
    }
    let shards = q.pow(top as u32);
    let run = |s: usize| -> Vec<u64> {
        let mut start = vec![FieldElem::ZERO; n];
        let mut idx = s;
        for t in 0..top {
            let c = elems[idx % q];
            idx /= q;
            for (x, &r) in start.iter_mut().zip(g.row(low + t)) {
                *x = field.add(*x, field.mul(c, r));
            }
        }
        let mut hist = vec![0u64; n + 1];
        packed::scan(&layout, &deltas, &layout.pack(&field, &start), low, q, &mut hist);
        hist
    };
    let hists = run_shards(shards, opts.parallel, &run);
    let mut counts = vec![BigUint::zero(); n + 1];
    for h in hists {
        for (c, v) in counts.iter_mut().zip(h) {
            *c += v;
        }
    }
    Ok(WeightEnumerator { counts })
}

#[cfg(feature = "parallel")]
fn shard_target() -> usize {
    4 * rayon::current_num_threads()
}

#[cfg(not(feature = "parallel"))]
fn shard_target() -> usize {
    1
}

#[cfg(feature = "parallel")]
fn run_shards(shards: usize, parallel: bool, run: &(dyn Fn(usize) -> Vec<u64> + Sync)) -> Vec<Vec<u64>> {
    use rayon::prelude::*;
    if parallel {
        (0..shards).into_par_iter().map(run).collect()
    } else {
        (0..shards).map(run).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_shards(shards: usize, _parallel: bool, run: &(dyn Fn(usize) -> Vec<u64> + Sync)) -> Vec<Vec<u64>> {
    (0..shards).map(run).collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `K_j(i) = Σ_s (-1)^s (Q-1)^(j-s) C(i,s) C(n-i,j-s)` by direct summation.
pub fn krawtchouk(q: u64, n: usize, j: usize, i: usize) -> BigInt {
    let mut total = BigInt::zero();
    for s in 0..=j.min(i) {
        let term = BigInt::from(q - 1).pow((j - s) as u32) * binomial(i, s) * binomial(n - i, j - s);
        if s % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Column `i` of the Krawtchouk matrix, `K_0(i)..K_n(i)`, via the
/// three-term recurrence.
fn krawtchouk_column(q: u64, n: usize, i: usize) -> Vec<BigInt> {
    let qb = BigInt::from(q);
    let q1 = BigInt::from(q - 1);
    let mut col = Vec::with_capacity(n + 1);
    col.push(BigInt::one());
    if n == 0 {
        return col;
    }
    col.push(&q1 * n - &qb * i);
    for j in 1..n {
        let a = BigInt::from(j) + &q1 * (n - j) - &qb * i;
        let b = &q1 * (n - j + 1);
        let num = a * &col[j] - b * &col[j - 1];
        col.push(num / (j + 1));
    }
    col
}

/// Weight distribution of the dual of a `Q`-ary code of dimension `k`.
///
/// The division by `Q^k` is checked to be exact and every result
/// non-negative; either failure means the input is not a real enumerator.
pub fn macwilliams(w: &WeightEnumerator, k: usize, q: u64) -> Result<WeightEnumerator> {
    let n = w.n();
    let size = BigUint::from(q).pow(k as u32);
    if w.total() != size {
        return Err(Error::MacWilliams(format!("counts sum to {}, expected {q}^{k}", w.total())));
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in w.nonzero() {
        let a = BigInt::from(a.clone());
        for (j, kj) in krawtchouk_column(q, n, i).into_iter().enumerate() {
            acc[j] += &a * kj;
        }
    }
    let size = BigInt::from(size);
    let mut counts = Vec::with_capacity(n + 1);
    for (j, v) in acc.into_iter().enumerate() {
        if !(&v % &size).is_zero() {
            return Err(Error::MacWilliams(format!("B_{j} is not an integer")));
        }
        let b = v / &size;
        if b.is_negative() {
            return Err(Error::MacWilliams(format!("B_{j} is negative")));
        }
        counts.push(b.to_biguint().expect("non-negative"));
    }
    Ok(WeightEnumerator { counts })
}

/// Minimum distance of the dual code.
pub fn dual_distance(w: &WeightEnumerator, k: usize, q: u64) -> Result<usize> {
    macwilliams(w, k, q)?.min_distance()
}

/// Smallest `w > 0` with `B_w > A_w`: the minimum weight of `C^⊥h \ C` for a
/// self-orthogonal `C`.
pub fn impure_distance(code: &WeightEnumerator, dual: &WeightEnumerator) -> Result<usize> {
    (1..=dual.n()).find(|&w| dual.get(w) > code.get(w)).ok_or(Error::SelfDual)
}

/// Smallest number of linearly dependent columns of `g`, searched up to
/// `limit`. Equals the dual distance of the row space.
pub fn min_dependent_columns(g: &Mat, limit: usize) -> Option<usize> {
    let n = g.cols();
    let cols = g.transpose();
    for t in 1..=limit.min(n) {
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            let rows: Vec<Vec<FieldElem>> = idx.iter().map(|&c| cols.row(c).to_vec()).collect();
            let sub = Mat::from_rows(g.field(), g.rows(), &rows).expect("uniform rows");
            if sub.rank() < t {
                return Some(t);
            }
            // next t-subset in lexicographic order
            let mut i = t;
            while i > 0 && idx[i - 1] == n - t + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..t {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Converts a count to `u128` when it fits, for compact assertions.
pub fn count_u128(c: &BigUint) -> Option<u128> {
    c.to_u128()
}
