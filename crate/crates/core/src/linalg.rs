//! Dense matrices over GF(q).
//!
//! Pivots are always the first nonzero entry in column order, so reduced
//! forms, nullspace bases and span solutions are reproducible.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl std::fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "MatrixGF over GF({}) {}x{}", self.field.q(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl MatrixGF {
    /// Builds a matrix from row-major data, checking shape and entry ranges.
    pub fn new(field: &FieldSpec, rows: usize, cols: usize, data: Vec<FieldElement>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| !field.contains(**e)) {
            return Err(Error::ElementOutOfRange {
                enc: bad.enc(),
                q: field.q(),
            });
        }
        Ok(MatrixGF {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from integer encodings given row by row.
    pub fn from_rows<R: AsRef<[u32]>>(field: &FieldSpec, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for &x in r {
                data.push(field.element(x)?);
            }
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldSpec, height: usize, columns: &[Vec<FieldElement>]) -> Result<Self> {
        let mut m = Self::zeros(field, height, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != height {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {height}",
                    c.len()
                )));
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[FieldElement] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Indices of columns that are entirely zero.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).all(|r| self.get(r, c).is_zero()))
            .collect()
    }

    fn check_field(&self, other: &MatrixGF) -> Result<()> {
        if self.field != other.field {
            return Err(Error::SpecMismatch(self.field.q(), other.field.q()));
        }
        Ok(())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &MatrixGF) -> Result<MatrixGF> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &MatrixGF) -> Result<MatrixGF> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> MatrixGF {
        let mut m = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `u * self`.
    pub fn left_mul_vec(&self, u: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                u.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(a, g));
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|r| self.field.dot(self.row(r), x)).collect())
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(lead, j), inv);
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(lead, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of `{v : self * v^T = 0}`, one row per free column in
    /// ascending order.
    pub fn nullspace(&self) -> MatrixGF {
        let f = &self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, FieldElement::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(pr, fc)));
            }
        }
        basis
    }

    /// Kronecker product `self (x) other`.
    pub fn kronecker(&self, other: &MatrixGF) -> Result<MatrixGF> {
        self.check_field(other)?;
        let f = &self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Parses the text format: a header `q rows cols` followed by `rows` lines
    /// of `cols` integer encodings. Lines starting with `#` are comments.
    pub fn from_text(text: &str) -> Result<MatrixGF> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let nums = parse_ints(hline, header)?;
        let [q, rows, cols] = nums[..] else {
            return Err(Error::Parse {
                line: hline,
                msg: "header must be `q rows cols`".into(),
            });
        };
        let field = FieldSpec::new(q)?;
        let (rows, cols) = (rows as usize, cols as usize);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (ln, l) = lines.next().ok_or(Error::Parse {
                line: 0,
                msg: format!("expected {rows} rows, found {r}"),
            })?;
            let vals = parse_ints(ln, l)?;
            if vals.len() != cols {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {cols} entries, found {}", vals.len()),
                });
            }
            for v in vals {
                data.push(field.element(v).map_err(|e| Error::Parse {
                    line: ln,
                    msg: e.to_string(),
                })?);
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::Parse {
                line: ln,
                msg: "trailing data after the last row".into(),
            });
        }
        MatrixGF::new(&field, rows, cols, data)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field.q(), self.rows, self.cols);
        for r in 0..self.rows {
            let mut first = true;
            for x in self.row(r) {
                if !first {
                    s.push(' ');
                }
                first = false;
                write!(s, "{}", x.enc()).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| Error::Parse {
                line,
                msg: format!("not a non-negative integer: {tok:?}"),
            })
        })
        .collect()
}

/// Solves `sum_j x_j * columns[j] = target`.
///
/// Returns `None` when the target is outside the span. Free variables are
/// set to zero, so the solution is the one read off the reduced form.
pub fn in_span(
    field: &FieldSpec,
    target: &[FieldElement],
    columns: &[Vec<FieldElement>],
) -> Result<Option<Vec<FieldElement>>> {
    let h = target.len();
    if let Some(c) = columns.iter().find(|c| c.len() != h) {
        return Err(Error::DimensionMismatch(format!(
            "column of length {} against target of length {h}",
            c.len()
        )));
    }
    let mut all = columns.to_vec();
    all.push(target.to_vec());
    let aug = MatrixGF::from_columns(field, h, &all)?;
    let Rref { matrix, pivots, .. } = aug.rref();
    let n = columns.len();
    if pivots.contains(&n) {
        return Ok(None);
    }
    let mut x = vec![FieldElement::ZERO; n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = matrix.get(r, n);
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn m(q: u32, rows: &[&[u32]]) -> MatrixGF {
        MatrixGF::from_rows(&build_field(q).unwrap(), rows).unwrap()
    }

    fn v(xs: &[u32]) -> Vec<FieldElement> {
        xs.iter().map(|&x| FieldElement::from_enc(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let f2 = build_field(2).unwrap();
        let i3 = MatrixGF::identity(&f2, 3);
        let r = i3.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, i3);
        assert_eq!(m(2, &[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn in_span_examples() {
        let f2 = build_field(2).unwrap();
        assert_eq!(
            in_span(&f2, &v(&[1, 0]), &[v(&[1, 1]), v(&[0, 1])]).unwrap(),
            Some(v(&[1, 1]))
        );
        assert_eq!(in_span(&f2, &v(&[1, 0]), &[v(&[1, 1])]).unwrap(), None);
        assert_eq!(
            in_span(&f2, &v(&[0, 0]), &[v(&[1, 1]), v(&[0, 1])]).unwrap(),
            Some(v(&[0, 0]))
        );
        assert!(matches!(
            in_span(&f2, &v(&[0, 0]), &[v(&[1])]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn nullspace_examples() {
        let n = m(2, &[&[1, 1, 1]]).nullspace();
        assert_eq!(n, m(2, &[&[1, 1, 0], &[1, 0, 1]]));
        let f3 = build_field(3).unwrap();
        assert_eq!(MatrixGF::identity(&f3, 2).nullspace().rows(), 0);
        assert_eq!(m(2, &[&[1, 0, 1], &[0, 1, 1]]).nullspace(), m(2, &[&[1, 1, 1]]));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(
            m(2, &[&[1, 1]]).kronecker(&m(2, &[&[1, 0]])).unwrap(),
            m(2, &[&[1, 0, 1, 0]])
        );
        let f2 = build_field(2).unwrap();
        let i2 = MatrixGF::identity(&f2, 2);
        assert_eq!(i2.kronecker(&i2).unwrap(), MatrixGF::identity(&f2, 4));
        assert_eq!(
            m(3, &[&[1, 1], &[0, 1]]).kronecker(&m(3, &[&[1, 2]])).unwrap(),
            m(3, &[&[1, 2, 1, 2], &[0, 0, 1, 2]])
        );
        assert!(matches!(
            m(3, &[&[1]]).kronecker(&m(2, &[&[1]])),
            Err(Error::SpecMismatch(3, 2))
        ));
    }

    #[test]
    fn text_round_trip_and_comments() {
        let a = m(4, &[&[1, 0, 3], &[0, 1, 2]]);
        let text = a.to_text();
        assert_eq!(text, "4 2 3\n1 0 3\n0 1 2\n");
        assert_eq!(MatrixGF::from_text(&text).unwrap(), a);
        let commented = "# generator\n4 2 3\n\n  1 0   3\n# mid\n0 1 2  \n";
        assert_eq!(MatrixGF::from_text(commented).unwrap(), a);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(MatrixGF::from_text(""), Err(Error::Parse { .. })));
        assert!(matches!(
            MatrixGF::from_text("6 1 1\n1\n"),
            Err(Error::NotPrimePower(6))
        ));
        assert!(matches!(
            MatrixGF::from_text("3 1 2\n1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(MatrixGF::from_text("3 2 2\n1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(MatrixGF::from_text("3 1 2\n1 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            MatrixGF::from_text("3 1 1\n1\n2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
