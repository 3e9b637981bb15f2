//! Dense matrices over GF(q²) with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::poly::{Poly, RingPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat { field: field.clone(), rows, cols, data: vec![FieldElem::ZERO; rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, cols: usize, rows: &[Vec<FieldElem>]) -> Result<Mat> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(Mat { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Parses rows of single-character digits, e.g. `["0023230", "0002323"]`.
    pub fn from_digit_rows(field: &FieldSpec, rows: &[&str]) -> Result<Mat> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| {
                        let d = c.to_digit(10).ok_or_else(|| Error::Parse {
                            input: r.to_string(),
                            reason: format!("'{c}' is not a digit"),
                        })?;
                        field.elem(d)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, Vec::len);
        Mat::from_rows(field, cols, &parsed)
    }

    /// Row i holds xⁱ·a(x) mod xⁿ-1.
    pub fn circulant(a: &RingPoly, rows: usize) -> Mat {
        let n = a.n();
        let mut m = Mat::zeros(a.field(), rows, n);
        for i in 0..rows {
            for (j, &c) in a.coeffs().iter().enumerate() {
                m.set(i, (i + j) % n, c);
            }
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    /// [self | other].
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::Shape(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let rows: Vec<Vec<FieldElem>> =
            (0..self.rows).map(|r| [self.row(r), other.row(r)].concat()).collect();
        Mat::from_rows(&self.field, self.cols + other.cols, &rows)
    }

    /// self stacked above other.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Shape(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Entry-wise a ↦ a^q.
    pub fn conj(&self) -> Mat {
        let data = self.data.iter().map(|&a| self.field.conj(a)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// M†.
    pub fn conj_transpose(&self) -> Mat {
        self.conj().transpose()
    }

    pub fn neg(&self) -> Mat {
        let data = self.data.iter().map(|&a| self.field.neg(a)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "adding {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "multiplying {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(t, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// M·M†, the Hermitian Gram matrix of the rows.
    pub fn gram(&self) -> Mat {
        self.mul(&self.conj_transpose()).expect("shapes agree")
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                let t = m.get(i, c);
                if i == r || t.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(m.get(i, j), f.mul(t, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Shape(format!("inverse of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let aug = self.hstack(&Mat::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Mat::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let f = &self.field;
        let mut m = self.clone();
        let mut det = FieldElem::ONE;
        for c in 0..self.cols {
            let Some(p) = (c..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(FieldElem::ZERO);
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot)?;
            for i in c + 1..self.rows {
                let t = f.mul(m.get(i, c), inv);
                if t.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(m.get(i, j), f.mul(t, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis (as rows) of {x : M x = 0}.
    pub fn nullspace(&self) -> Mat {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, FieldElem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(pr, fc)));
            }
        }
        basis
    }

    /// Basis of the Hermitian dual of the row space: {x : Σ m_i^q x_i = 0}.
    pub fn hermitian_dual_basis(&self) -> Mat {
        self.conj().nullspace()
    }

    /// True iff `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[FieldElem]) -> bool {
        let extra = Mat::from_rows(&self.field, self.cols, &[v.to_vec()]).expect("row length matches");
        let stacked = self.vstack(&extra).expect("columns match");
        stacked.rank() == self.rank()
    }

    /// det(xI - M) via similarity reduction to upper Hessenberg form.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::Shape(format!("char_poly of a {}x{} matrix", self.rows, self.cols)));
        }
        let f = &self.field;
        let n = self.rows;
        let h = self.hessenberg();
        // p[m] is the characteristic polynomial of the leading m×m block
        let x = Poly::monomial(f, FieldElem::ONE, 1);
        let mut p = vec![Poly::one(f)];
        for m in 0..n {
            let mut next = x.sub(&Poly::constant(f, h.get(m, m))).mul(&p[m]);
            let mut prod = FieldElem::ONE;
            for i in 1..=m {
                prod = f.mul(prod, h.get(m - i + 1, m - i));
                let coeff = f.mul(h.get(m - i, m), prod);
                if !coeff.is_zero() {
                    next = next.sub(&p[m - i].scale(coeff));
                }
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }

    fn hessenberg(&self) -> Mat {
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(p) = (j + 1..n).find(|&i| !a.get(i, j).is_zero()) else {
                continue;
            };
            if p != j + 1 {
                a.swap_rows(p, j + 1);
                for r in 0..n {
                    a.data.swap(r * n + p, r * n + j + 1);
                }
            }
            let inv = f.inv(a.get(j + 1, j)).expect("pivot is nonzero");
            for i in j + 2..n {
                let t = f.mul(a.get(i, j), inv);
                if t.is_zero() {
                    continue;
                }
                // row_i -= t row_{j+1}, then col_{j+1} += t col_i
                for c in 0..n {
                    let v = f.sub(a.get(i, c), f.mul(t, a.get(j + 1, c)));
                    a.set(i, c, v);
                }
                for r in 0..n {
                    let v = f.add(a.get(r, j + 1), f.mul(t, a.get(r, i)));
                    a.set(r, j + 1, v);
                }
            }
        }
        a
    }
}

/// Hermitian hull dimension k - rank(G G†), cross-checked against the
/// dimension of rowspace(G) ∩ rowspace(G)^⊥h computed directly.
pub fn hull_dim(g: &Mat) -> Result<usize> {
    let k = g.rank();
    if k != g.rows() {
        return Err(Error::NotFullRank { rank: k, rows: g.rows() });
    }
    let by_formula = k - g.gram().rank();
    let direct = intersection_dim(g, &g.hermitian_dual_basis())?;
    if by_formula != direct {
        return Err(Error::Inconsistent(format!(
            "hull dimension {by_formula} from the Gram rank but {direct} by intersection"
        )));
    }
    Ok(by_formula)
}

/// dim(rowspace(a) ∩ rowspace(b)) = rank a + rank b - rank [a; b].
pub fn intersection_dim(a: &Mat, b: &Mat) -> Result<usize> {
    let sum = a.vstack(b)?.rank();
    Ok(a.rank() + b.rank() - sum)
}
