//! One-generator quasi-cyclic codes of index 2 and their one- and two-column
//! extensions.
//!
//! `C(f, g)` is the row space of `G = (G1 | G2)` where row `i` of `G1` is
//! `xⁱ·g(x)` and row `i` of `G2` is `xⁱ·f(x)g(x)`, both taken mod `xⁿ-1`.

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::mat::Mat;
use crate::poly::{dual_gen, Poly, RingPoly};

/// Messages scanned by [`QcCode::find_extension_vector`] unless told otherwise.
pub const DEFAULT_SCAN_BUDGET: u64 = 1 << 26;

#[derive(Clone, Debug)]
pub struct QcCode {
    field: FieldSpec,
    n: usize,
    f: RingPoly,
    g: Poly,
    g_ring: RingPoly,
    fg: RingPoly,
    dual: Poly,
    f_coprime: bool,
}

/// Outcome of the two self-orthogonality tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelfOrthogonality {
    /// `G G† = 0`.
    pub by_gram: bool,
    /// `g^⊥q | g`, a sufficient condition.
    pub by_divisibility: bool,
}

/// Certificate for the maximal-entanglement pair built from `C(f, g)`.
#[derive(Clone, Debug)]
pub struct EntanglementConditions {
    pub h1h1_nonsingular: bool,
    pub one_not_eigenvalue: bool,
    /// `H1†(H1H1†)⁻¹H1 - (H2†H2)⁻¹`; absent when `H1H1†` is singular.
    pub p: Option<Mat>,
    pub char_poly: Option<Poly>,
}

impl EntanglementConditions {
    pub fn holds(&self) -> bool {
        self.h1h1_nonsingular && self.one_not_eigenvalue
    }
}

/// Acceptance rule for an appended row `(x, …, α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionRule {
    /// `⟨x,x⟩ = p-1` with `α = 1`; keeps the code self-orthogonal.
    SelfOrthogonal,
    /// `⟨x,x⟩ ≠ (p-1)α^(q+1)`; adds one to the Gram rank.
    Entangled { alpha: FieldElem },
}

impl ExtensionRule {
    pub fn alpha(&self) -> FieldElem {
        match *self {
            ExtensionRule::SelfOrthogonal => FieldElem::ONE,
            ExtensionRule::Entangled { alpha } => alpha,
        }
    }

    pub fn accepts(&self, field: &FieldSpec, self_product: FieldElem) -> bool {
        let p_minus_1 = field.from_int(-1);
        match *self {
            ExtensionRule::SelfOrthogonal => self_product == p_minus_1,
            ExtensionRule::Entangled { alpha } => {
                self_product != field.mul(p_minus_1, field.norm(alpha))
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            ExtensionRule::SelfOrthogonal => "equal-p-minus-1",
            ExtensionRule::Entangled { .. } => "not-equal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionKind {
    SelfOrthogonal,
    Entangled,
}

/// A QC code with one or two appended rows and columns.
#[derive(Clone, Debug)]
pub struct ExtendedCode {
    base: QcCode,
    kind: ExtensionKind,
    rows: Vec<(Vec<FieldElem>, FieldElem)>,
    generator: Mat,
    gram_rank: usize,
}

impl ExtendedCode {
    pub fn base(&self) -> &QcCode {
        &self.base
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    /// The appended vectors with their corner coefficients.
    pub fn appended(&self) -> &[(Vec<FieldElem>, FieldElem)] {
        &self.rows
    }

    pub fn columns_added(&self) -> usize {
        self.rows.len()
    }

    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn gram_rank(&self) -> usize {
        self.gram_rank
    }
}

impl QcCode {
    /// Builds `C(f, g)`; `g` must divide `xⁿ-1`.
    pub fn build(field: &FieldSpec, n: usize, f: &RingPoly, g: &Poly) -> Result<QcCode> {
        if f.field() != field || g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if f.n() != n {
            return Err(Error::Shape(format!("f has ring length {}, expected {n}", f.n())));
        }
        let dual = dual_gen(g, n)?;
        let g_ring = RingPoly::reduce(g, n);
        let fg = f.mul_mod(&g_ring)?;
        let xn1 = Poly::x_n_minus_1(field, n);
        let f_coprime = f.to_poly().gcd(&xn1).degree() == Some(0);
        let code = QcCode { field: field.clone(), n, f: f.clone(), g: g.clone(), g_ring, fg, dual, f_coprime };
        let h = code.parity_check();
        let g_mat = code.generator();
        if !h.mul(&g_mat.conj_transpose())?.is_zero() {
            return Err(Error::Inconsistent("parity-check matrix does not annihilate G".into()));
        }
        Ok(code)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        2 * self.n
    }

    pub fn f(&self) -> &RingPoly {
        &self.f
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn deg_g(&self) -> usize {
        self.g.degree().unwrap_or(0)
    }

    /// `n - deg g`.
    pub fn dimension(&self) -> usize {
        self.n - self.deg_g()
    }

    pub fn f_coprime(&self) -> bool {
        self.f_coprime
    }

    /// `g^⊥q`, generator of the Hermitian dual of `⟨g⟩`.
    pub fn dual_generator(&self) -> &Poly {
        &self.dual
    }

    pub fn g1(&self) -> Mat {
        Mat::circulant(&self.g_ring, self.dimension())
    }

    pub fn g2(&self) -> Mat {
        Mat::circulant(&self.fg, self.dimension())
    }

    pub fn generator(&self) -> Mat {
        self.g1().hstack(&self.g2()).expect("same row count")
    }

    /// `deg g × n` circulant of `g^⊥q`.
    pub fn h1(&self) -> Mat {
        Mat::circulant(&RingPoly::reduce(&self.dual, self.n), self.deg_g())
    }

    /// `n × n` circulant of `-f̄^q`.
    pub fn h2(&self) -> Mat {
        Mat::circulant(&self.f.bar().frob().neg(), self.n)
    }

    /// `[[H1, 0], [H2, I]]`, rows spanning the Hermitian dual of the code.
    pub fn parity_check(&self) -> Mat {
        let top = self.h1().hstack(&Mat::zeros(&self.field, self.deg_g(), self.n)).expect("rows");
        let bottom = self.h2().hstack(&Mat::identity(&self.field, self.n)).expect("rows");
        top.vstack(&bottom).expect("columns")
    }

    pub fn self_orthogonality(&self) -> SelfOrthogonality {
        SelfOrthogonality {
            by_gram: self.generator().gram().is_zero(),
            by_divisibility: self.dual.divides(&self.g),
        }
    }

    /// Shifting both halves of every generator row by one position gives a
    /// codeword again.
    pub fn psi_closed(&self) -> bool {
        let g = self.generator();
        let n = self.n;
        (0..g.rows()).all(|r| {
            let row = g.row(r);
            let mut shifted = vec![FieldElem::ZERO; 2 * n];
            for j in 0..n {
                shifted[(j + 1) % n] = row[j];
                shifted[n + (j + 1) % n] = row[n + j];
            }
            g.row_space_contains(&shifted)
        })
    }

    /// Row spaces of `G1` and `G2` agree (expected when f is coprime).
    pub fn sides_coincide(&self) -> bool {
        let (a, b) = (self.g1(), self.g2());
        let r = a.vstack(&b).expect("columns").rank();
        r == a.rank() && r == b.rank()
    }

    /// Generator polynomial of the cyclic code `C_side^⊥h`.
    pub fn side_dual_generator(&self, side: u8) -> Result<Poly> {
        let xn1 = Poly::x_n_minus_1(&self.field, self.n);
        let gen = match side {
            1 => self.g.clone(),
            2 => self.fg.to_poly().gcd(&xn1),
            _ => return Err(Error::Spec(format!("side must be 1 or 2, got {side}"))),
        };
        // gcd(0, xⁿ-1) is xⁿ-1 itself: the zero code, whose dual is everything
        let gen = if gen.is_zero() { xn1 } else { gen };
        dual_gen(&gen, self.n)
    }

    /// Basis rows of `C_side^⊥h`.
    pub fn side_dual_basis(&self, side: u8) -> Result<Mat> {
        let h = self.side_dual_generator(side)?;
        let dim = self.n - h.degree().unwrap_or(0);
        Ok(Mat::circulant(&RingPoly::reduce(&h, self.n), dim))
    }

    /// Checks `x ∈ C_side^⊥h` through `G_side x† = 0`.
    pub fn in_side_dual(&self, side: u8, x: &[FieldElem]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::Shape(format!("extension vector of length {}, expected {}", x.len(), self.n)));
        }
        let gi = match side {
            1 => self.g1(),
            2 => self.g2(),
            _ => return Err(Error::Spec(format!("side must be 1 or 2, got {side}"))),
        };
        let f = &self.field;
        Ok((0..gi.rows()).all(|r| f.hermitian_dot(x, gi.row(r)).is_zero()))
    }

    /// First nonzero codeword of `C_side^⊥h`, in lexicographic message order
    /// over its circulant basis, whose self-product satisfies `rule`.
    pub fn find_extension_vector(&self, side: u8, rule: ExtensionRule, budget: u64) -> Result<Vec<FieldElem>> {
        let basis = self.side_dual_basis(side)?;
        let f = &self.field;
        let dim = basis.rows();
        let q = f.order() as u64;
        let total = (q as u128).checked_pow(dim as u32);
        let mut digits = vec![0u64; dim];
        let mut word = vec![FieldElem::ZERO; self.n];
        let mut scanned: u64 = 0;
        loop {
            // odometer increment; position dim-1 is least significant
            let mut pos = dim;
            loop {
                if pos == 0 {
                    return Err(Error::NoExtensionVector { side });
                }
                pos -= 1;
                let old = f.elem(digits[pos] as u32)?;
                digits[pos] = (digits[pos] + 1) % q;
                let new = f.elem(digits[pos] as u32)?;
                let delta = f.sub(new, old);
                for (w, &b) in word.iter_mut().zip(basis.row(pos)) {
                    *w = f.add(*w, f.mul(delta, b));
                }
                if digits[pos] != 0 {
                    break;
                }
            }
            scanned += 1;
            if rule.accepts(f, f.hermitian_dot(&word, &word)) {
                return Ok(word);
            }
            if scanned >= budget && total.is_none_or(|t| t > scanned as u128 + 1) {
                return Err(Error::BudgetExceeded {
                    required: total.map_or_else(
                        || num_bigint::BigUint::from(q).pow(dim as u32),
                        num_bigint::BigUint::from,
                    ),
                    budget: budget as u128,
                });
            }
        }
    }

    /// Conditions under which the code and its dual yield
    /// maximal-entanglement codes; requires `gcd(f, xⁿ-1) = 1`.
    pub fn entanglement_conditions(&self) -> Result<EntanglementConditions> {
        if !self.f_coprime {
            return Err(Error::NotCoprime);
        }
        let f = &self.field;
        let n = self.n;
        let h1 = self.h1();
        let h2 = self.h2();
        let h2_term = h2.conj_transpose().mul(&h2)?.inverse()?;
        let h1h1 = h1.gram();
        let Ok(h1h1_inv) = h1h1.inverse() else {
            return Ok(EntanglementConditions {
                h1h1_nonsingular: false,
                one_not_eigenvalue: false,
                p: None,
                char_poly: None,
            });
        };
        let proj = if h1.rows() == 0 {
            Mat::zeros(f, n, n)
        } else {
            h1.conj_transpose().mul(&h1h1_inv)?.mul(&h1)?
        };
        let p = proj.sub(&h2_term)?;
        let one_not_eigenvalue = p.sub(&Mat::identity(f, n))?.rank() == n;
        let char_poly = p.char_poly()?;
        Ok(EntanglementConditions { h1h1_nonsingular: true, one_not_eigenvalue, p: Some(p), char_poly: Some(char_poly) })
    }

    /// Appends one row `(x1, 0…0, α1)` (one extra column) or two rows
    /// `(x1, 0…0, α1, 0)` and `(0…0, x2, 0, α2)` (two extra columns).
    pub fn extend(&self, kind: ExtensionKind, rows: &[(Vec<FieldElem>, FieldElem)]) -> Result<ExtendedCode> {
        let f = &self.field;
        let n = self.n;
        if rows.is_empty() || rows.len() > 2 {
            return Err(Error::Spec(format!("one or two extension rows required, got {}", rows.len())));
        }
        match kind {
            ExtensionKind::SelfOrthogonal => {
                if !self.self_orthogonality().by_gram {
                    return Err(Error::NotSelfOrthogonal);
                }
            }
            ExtensionKind::Entangled => {
                if f.q() == 2 {
                    return Err(Error::WrongFieldSize);
                }
                let cond = self.entanglement_conditions()?;
                if !cond.holds() {
                    return Err(Error::ConditionsNotMet {
                        h1h1_nonsingular: cond.h1h1_nonsingular,
                        one_not_eigenvalue: cond.one_not_eigenvalue,
                    });
                }
            }
        }
        for (i, (x, alpha)) in rows.iter().enumerate() {
            let side = i as u8 + 1;
            if alpha.is_zero() {
                return Err(Error::ZeroAlpha);
            }
            if !self.in_side_dual(side, x)? {
                return Err(Error::NotInDual { side });
            }
            let rule = match kind {
                ExtensionKind::SelfOrthogonal if *alpha == FieldElem::ONE => ExtensionRule::SelfOrthogonal,
                ExtensionKind::SelfOrthogonal => {
                    return Err(Error::Spec("self-orthogonal extension requires alpha = 1".into()))
                }
                ExtensionKind::Entangled => ExtensionRule::Entangled { alpha: *alpha },
            };
            let sp = f.hermitian_dot(x, x);
            if !rule.accepts(f, sp) {
                return Err(Error::WrongSelfProduct { side, found: sp.digit(), rule: rule.name().into() });
            }
        }

        let extra = rows.len();
        let k = self.dimension();
        let base = self.generator();
        let mut out = Vec::with_capacity(k + extra);
        for r in 0..k {
            let mut row = base.row(r).to_vec();
            row.resize(2 * n + extra, FieldElem::ZERO);
            out.push(row);
        }
        for (i, (x, alpha)) in rows.iter().enumerate() {
            let mut row = vec![FieldElem::ZERO; 2 * n + extra];
            row[i * n..(i + 1) * n].copy_from_slice(x);
            row[2 * n + i] = *alpha;
            out.push(row);
        }
        let generator = Mat::from_rows(f, 2 * n + extra, &out)?;
        let gram_rank = generator.gram().rank();
        let expected = match kind {
            ExtensionKind::SelfOrthogonal => 0,
            ExtensionKind::Entangled => k + extra,
        };
        if gram_rank != expected {
            return Err(Error::Inconsistent(format!(
                "extended Gram matrix has rank {gram_rank}, expected {expected}"
            )));
        }
        if generator.rank() != k + extra {
            return Err(Error::NotFullRank { rank: generator.rank(), rows: k + extra });
        }
        Ok(ExtendedCode { base: self.clone(), kind, rows: rows.to_vec(), generator, gram_rank })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_compact;

    fn code(q: u32, n: usize, f: &str, g: &str) -> QcCode {
        let field = FieldSpec::new(q).unwrap();
        let f = RingPoly::from_coeffs(&field, n, parse_compact(f, &field, n).unwrap()).unwrap();
        let g = Poly::from_coeffs(&field, parse_compact(g, &field, n + 1).unwrap());
        QcCode::build(&field, n, &f, &g).unwrap()
    }

    fn digits(v: &[FieldElem]) -> String {
        v.iter().map(|d| d.to_string()).collect()
    }

    #[test]
    fn small_code_dimensions() {
        // g = x + 1 over GF(4), n = 7
        let c = code(2, 7, "032321", "11");
        assert_eq!((c.length(), c.dimension()), (14, 6));
        assert_eq!(digits(c.dual_generator().coeffs()), "1111111");
        assert!(c.f_coprime());
        assert!(c.psi_closed());
        assert!(c.sides_coincide());
        assert_eq!(c.h1().gram(), Mat::identity(c.field(), 1));
    }

    #[test]
    fn rejects_non_divisor() {
        let field = FieldSpec::new(2).unwrap();
        let f = RingPoly::zero(&field, 7);
        let g = Poly::from_coeffs(&field, parse_compact("101", &field, 8).unwrap());
        assert!(matches!(QcCode::build(&field, 7, &f, &g), Err(Error::GNotDivisor { n: 7 })));
    }

    #[test]
    fn zero_f_is_degenerate() {
        let c = code(2, 7, "0", "11");
        assert!(!c.f_coprime());
        assert!(c.g2().is_zero());
        assert!(matches!(c.entanglement_conditions(), Err(Error::NotCoprime)));
        // the second side is the zero code, so every vector is in its dual
        assert_eq!(c.side_dual_basis(2).unwrap().rows(), 7);
    }

    #[test]
    fn full_divisor_gives_zero_code() {
        // g = x^7 - 1: H1 is the circulant of 1, i.e. the identity
        let c = code(2, 7, "1", "10^61");
        assert_eq!(c.dimension(), 0);
        let so = c.self_orthogonality();
        assert!(so.by_gram && so.by_divisibility);
        assert_eq!(c.h1(), Mat::identity(c.field(), 7));
    }

    #[test]
    fn rule_checks() {
        let f4 = FieldSpec::new(2).unwrap();
        assert!(ExtensionRule::SelfOrthogonal.accepts(&f4, FieldElem::ONE));
        assert!(!ExtensionRule::SelfOrthogonal.accepts(&f4, FieldElem::ZERO));
        let f9 = FieldSpec::new(3).unwrap();
        // p - 1 = 2 = -1 in GF(9)
        let minus_one = f9.neg(FieldElem::ONE);
        assert!(ExtensionRule::SelfOrthogonal.accepts(&f9, minus_one));
        let rule = ExtensionRule::Entangled { alpha: FieldElem::ONE };
        assert!(!rule.accepts(&f9, minus_one));
        assert!(rule.accepts(&f9, FieldElem::ZERO));
    }

    #[test]
    fn entangled_extension_needs_odd_q() {
        let c = code(2, 7, "032321", "11");
        let x = vec![FieldElem::ONE; 7];
        assert!(matches!(
            c.extend(ExtensionKind::Entangled, &[(x, FieldElem::ONE)]),
            Err(Error::WrongFieldSize)
        ));
    }
}
