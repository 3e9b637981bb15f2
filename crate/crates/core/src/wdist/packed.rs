//! Bitsliced codeword arithmetic and the Gray-order scan.
//!
//! A vector over GF(p^m) is stored as bit-planes of its GF(p) coordinates.
//! Characteristic 2 uses one plane per coordinate and adds with XOR.
//! Characteristic 3 uses two planes per coordinate, with 1 ↦ (1,0) and
//! 2 ↦ (0,1). The Hamming weight is the popcount of the OR of all planes.

use crate::gf::{FieldElem, FieldSpec};

/// Packs field vectors into planes for a fixed length.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub(crate) ternary: bool,
    pub(crate) planes: usize,
    pub(crate) words: usize,
}

impl Layout {
    pub(crate) fn new(field: &FieldSpec, len: usize) -> Layout {
        let ternary = field.characteristic() == 3;
        let m = field.degree() as usize;
        Layout { ternary, planes: if ternary { 2 * m } else { m }, words: len.div_ceil(64).max(1) }
    }

    /// Flat plane-major layout: `planes × words` words.
    pub(crate) fn pack(&self, field: &FieldSpec, v: &[FieldElem]) -> Vec<u64> {
        let mut out = vec![0u64; self.planes * self.words];
        for (i, &e) in v.iter().enumerate() {
            let (w, b) = (i / 64, i % 64);
            for (l, &c) in field.coords(e).iter().enumerate() {
                let plane = match (self.ternary, c) {
                    (_, 0) => continue,
                    (false, _) => l,
                    (true, 1) => 2 * l,
                    (true, _) => 2 * l + 1,
                };
                out[plane * self.words + w] |= 1 << b;
            }
        }
        out
    }
}

type Vector<const PL: usize, const W: usize> = [[u64; W]; PL];

#[inline(always)]
fn add_into<const PL: usize, const W: usize, const TERN: bool>(a: &mut Vector<PL, W>, b: &Vector<PL, W>) {
    if TERN {
        for c in 0..PL / 2 {
            for w in 0..W {
                let (x1, x2) = (a[2 * c][w], a[2 * c + 1][w]);
                let (y1, y2) = (b[2 * c][w], b[2 * c + 1][w]);
                let t = (x1 | y2) ^ (x2 | y1);
                a[2 * c][w] = (x2 | y2) ^ t;
                a[2 * c + 1][w] = (x1 | y1) ^ t;
            }
        }
    } else {
        for pl in 0..PL {
            for w in 0..W {
                a[pl][w] ^= b[pl][w];
            }
        }
    }
}

#[inline(always)]
fn weight<const PL: usize, const W: usize>(a: &Vector<PL, W>) -> usize {
    let mut total = 0;
    for w in 0..W {
        let mut acc = 0;
        for plane in a.iter() {
            acc |= plane[w];
        }
        total += acc.count_ones() as usize;
    }
    total
}

fn to_fixed<const PL: usize, const W: usize>(flat: &[u64]) -> Vector<PL, W> {
    let mut v = [[0u64; W]; PL];
    let words = flat.len() / PL;
    for (pl, plane) in v.iter_mut().enumerate() {
        plane[..words].copy_from_slice(&flat[pl * words..(pl + 1) * words]);
    }
    v
}

/// One shard: all `q^rows` combinations of the low rows added to `start`.
///
/// `deltas[j * q + a]` holds `(e(a+1) - e(a))·row_j` packed, where `e` maps
/// digit counters to field elements. Digit `j` advances whenever the step
/// index has exactly `j` trailing zeros in base q, so every message is
/// visited once.
fn scan_fixed<const PL: usize, const W: usize, const TERN: bool>(
    deltas: &[Vec<u64>],
    start: &[u64],
    rows: usize,
    q: usize,
    hist: &mut [u64],
) {
    let deltas: Vec<Vector<PL, W>> = deltas.iter().map(|d| to_fixed(d)).collect();
    let mut acc: Vector<PL, W> = to_fixed(start);
    hist[weight(&acc)] += 1;
    let mut counter = vec![0usize; rows];
    let mut value = vec![0usize; rows];
    loop {
        let mut j = 0;
        loop {
            if j == rows {
                return;
            }
            counter[j] += 1;
            if counter[j] == q {
                counter[j] = 0;
                j += 1;
            } else {
                break;
            }
        }
        let a = value[j];
        add_into::<PL, W, TERN>(&mut acc, &deltas[j * q + a]);
        value[j] = if a + 1 == q { 0 } else { a + 1 };
        hist[weight(&acc)] += 1;
    }
}

macro_rules! dispatch_words {
    ($pl:literal, $tern:literal, $words:expr, $($arg:expr),*) => {
        match $words {
            1 => scan_fixed::<$pl, 1, $tern>($($arg),*),
            2 => scan_fixed::<$pl, 2, $tern>($($arg),*),
            3 => scan_fixed::<$pl, 3, $tern>($($arg),*),
            4 => scan_fixed::<$pl, 4, $tern>($($arg),*),
            5 => scan_fixed::<$pl, 5, $tern>($($arg),*),
            6 => scan_fixed::<$pl, 6, $tern>($($arg),*),
            7 | 8 => scan_fixed::<$pl, 8, $tern>($($arg),*),
            9..=16 => scan_fixed::<$pl, 16, $tern>($($arg),*),
            w => unreachable!("{w} words exceed the supported length"),
        }
    };
}

/// Longest codeword length the kernel supports.
pub(crate) const MAX_LENGTH: usize = 16 * 64;

pub(crate) fn scan(layout: &Layout, deltas: &[Vec<u64>], start: &[u64], rows: usize, q: usize, hist: &mut [u64]) {
    let pad = |v: &[u64]| -> Vec<u64> {
        // widen each plane to the dispatched word count
        let target = match layout.words {
            w @ 1..=6 => w,
            7 | 8 => 8,
            _ => 16,
        };
        let mut out = vec![0u64; layout.planes * target];
        for pl in 0..layout.planes {
            out[pl * target..pl * target + layout.words]
                .copy_from_slice(&v[pl * layout.words..(pl + 1) * layout.words]);
        }
        out
    };
    let deltas: Vec<Vec<u64>> = deltas.iter().map(|d| pad(d)).collect();
    let start = pad(start);
    match (layout.ternary, layout.planes) {
        (false, 2) => dispatch_words!(2, false, layout.words, &deltas, &start, rows, q, hist),
        (true, 4) => dispatch_words!(4, true, layout.words, &deltas, &start, rows, q, hist),
        (true, 8) => dispatch_words!(8, true, layout.words, &deltas, &start, rows, q, hist),
        (t, p) => unreachable!("no kernel for ternary={t} planes={p}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_add_table() {
        let enc = |v: u8| -> [[u64; 1]; 2] { [[(v == 1) as u64], [(v == 2) as u64]] };
        for x in 0..3u8 {
            for y in 0..3u8 {
                let mut a = enc(x);
                add_into::<2, 1, true>(&mut a, &enc(y));
                assert_eq!(a, enc((x + y) % 3), "{x} + {y}");
            }
        }
    }

    #[test]
    fn pack_matches_field_addition() {
        for q in [2, 3, 9] {
            let f = FieldSpec::new(q).unwrap();
            let layout = Layout::new(&f, 70);
            let elems: Vec<FieldElem> = f.elements().collect();
            let u: Vec<FieldElem> = (0..70).map(|i| elems[i % elems.len()]).collect();
            let v: Vec<FieldElem> = (0..70).map(|i| elems[(i * 7 + 3) % elems.len()]).collect();
            let sum: Vec<FieldElem> = u.iter().zip(&v).map(|(&a, &b)| f.add(a, b)).collect();
            let pu = layout.pack(&f, &u);
            let pv = layout.pack(&f, &v);
            let ps = layout.pack(&f, &sum);
            match (layout.ternary, layout.planes) {
                (false, 2) => {
                    let mut a: Vector<2, 2> = to_fixed(&pu);
                    add_into::<2, 2, false>(&mut a, &to_fixed(&pv));
                    assert_eq!(a, to_fixed::<2, 2>(&ps));
                }
                (true, 4) => {
                    let mut a: Vector<4, 2> = to_fixed(&pu);
                    add_into::<4, 2, true>(&mut a, &to_fixed(&pv));
                    assert_eq!(a, to_fixed::<4, 2>(&ps));
                }
                (true, 8) => {
                    let mut a: Vector<8, 2> = to_fixed(&pu);
                    add_into::<8, 2, true>(&mut a, &to_fixed(&pv));
                    assert_eq!(a, to_fixed::<8, 2>(&ps));
                    assert_eq!(weight(&a), sum.iter().filter(|e| !e.is_zero()).count());
                }
                other => panic!("unexpected layout {other:?}"),
            }
        }
    }
}
