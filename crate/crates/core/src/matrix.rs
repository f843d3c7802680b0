//! Dense exact matrices and the elimination kernels everything else reduces to.
//!
//! Matrices are row-major. Module code in this crate acts on row vectors
//! (`x ↦ x·M`); the kernel and solve entry points here follow the usual
//! column convention (`M·v = 0`, `M·x = b`) and the `left_*` variants cover
//! the row-vector side.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// A quotient `K^n / S` presented by a projection and a section.
///
/// Row-vector convention: `v·projection` are the quotient coordinates of `v`,
/// and `c·section` lifts quotient coordinates back to `K^n`, so
/// `section·projection` is the identity on the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub projection: Matrix,
    pub section: Matrix,
    /// Ambient coordinates kept as the complement basis.
    pub complement: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::MixedField);
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    /// Matrix product; panics on shape mismatch (callers own the shapes).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product of {}x{} and {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::MixedField);
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul(rhs))
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![self.field.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    *o = &*o + &(a * b);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, b) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn block_diagonal(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    let v = b.get(i, j);
                    if !v.is_zero() {
                        out.set(r0 + i, c0 + j, v.clone());
                    }
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn power(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Reduced row echelon form by Gauss-Jordan elimination with the first
    /// nonzero entry in each column as pivot.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..m.cols {
                    let idx = r * m.cols + j;
                    if !m.data[idx].is_zero() {
                        m.data[idx] = &m.data[idx] * &inv;
                    }
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..m.cols)
                .filter_map(|j| {
                    let v = m.get(r, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let idx = i * m.cols + j;
                    m.data[idx] = &m.data[idx] - &(&f * v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : M·v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let ech = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &c) in ech.pivots.iter().enumerate() {
                let e = ech.matrix.get(r, free);
                if !e.is_zero() {
                    v[c] = -e;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{x : x·M = 0}`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.transpose().kernel_basis()
    }

    /// Some `x` with `M·x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        if b.iter().any(|s| s.field() != self.field) {
            return Err(Error::MixedField);
        }
        let col = Matrix {
            field: self.field,
            rows: self.rows,
            cols: 1,
            data: b.to_vec(),
        };
        let ech = self.hstack(&col).rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            x[c] = ech.matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Some `x` with `x·M = b`.
    pub fn left_solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.transpose().solve(b)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let ech = self.hstack(&Matrix::identity(self.field, n)).rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(ech.matrix.select_cols(&idx))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank of a matrix, reporting mixed-field operands.
pub fn rank(m: &Matrix) -> Result<usize> {
    if m.data.iter().any(|s| s.field() != m.field) {
        return Err(Error::MixedField);
    }
    Ok(m.rank())
}

pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    m.solve(b)
}

/// Quotient of `K^ambient_dim` by the span of `sub`.
pub fn subspace_quotient(field: Field, ambient_dim: usize, sub: &[Vec<Scalar>]) -> Quotient {
    let ech = if sub.is_empty() {
        Matrix::zeros(field, 0, ambient_dim).rref()
    } else {
        Matrix::from_rows(field, ambient_dim, sub)
            .expect("subspace vectors live in the ambient space")
            .rref()
    };
    quotient_from_echelon(field, ambient_dim, &ech)
}

pub(crate) fn quotient_from_echelon(field: Field, n: usize, ech: &Echelon) -> Quotient {
    let mut pivot_row = vec![None; n];
    for (r, &c) in ech.pivots.iter().enumerate() {
        pivot_row[c] = Some(r);
    }
    let complement: Vec<usize> = (0..n).filter(|&j| pivot_row[j].is_none()).collect();
    let q = complement.len();
    let mut projection = Matrix::zeros(field, n, q);
    let mut section = Matrix::zeros(field, q, n);
    for (k, &j) in complement.iter().enumerate() {
        projection.set(j, k, field.one());
        section.set(k, j, field.one());
    }
    for (i, pr) in pivot_row.iter().enumerate() {
        if let Some(r) = *pr {
            for (k, &j) in complement.iter().enumerate() {
                let e = ech.matrix.get(r, j);
                if !e.is_zero() {
                    projection.set(i, k, -e);
                }
            }
        }
    }
    Quotient {
        projection,
        section,
        complement,
    }
}

/// A subspace of `K^n` held in reduced echelon form, so that the coordinates
/// of a member vector are simply its entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient: usize,
    pub echelon: Echelon,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let m = if vectors.is_empty() {
            Matrix::zeros(field, 0, ambient)
        } else {
            Matrix::from_rows(field, ambient, vectors).expect("vectors of ambient length")
        };
        Subspace {
            ambient,
            echelon: m.rref(),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.echelon.matrix
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.echelon.pivots.iter().map(|&c| v[c].clone()).collect();
        let back = self.echelon.matrix.left_apply(&coords);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn quotient(&self, field: Field) -> Quotient {
        quotient_from_echelon(field, self.ambient, &self.echelon)
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinates {
    echelon: Echelon,
    transform: Matrix,
}

impl Coordinates {
    /// `None` when the vectors are linearly dependent.
    pub fn new(field: Field, ambient: usize, basis: &[Vec<Scalar>]) -> Option<Coordinates> {
        let k = basis.len();
        let m = if k == 0 {
            Matrix::zeros(field, 0, ambient)
        } else {
            Matrix::from_rows(field, ambient, basis).expect("vectors of ambient length")
        };
        let ech = m.hstack(&Matrix::identity(field, k)).rref();
        if ech.pivots.iter().filter(|&&c| c < ambient).count() < k {
            return None;
        }
        let left: Vec<usize> = (0..ambient).collect();
        let right: Vec<usize> = (ambient..ambient + k).collect();
        let rows: Vec<usize> = (0..k).collect();
        let top = ech.matrix.select_rows(&rows);
        Some(Coordinates {
            echelon: Echelon {
                matrix: top.select_cols(&left),
                pivots: ech.pivots[..k].to_vec(),
            },
            transform: top.select_cols(&right),
        })
    }

    pub fn dim(&self) -> usize {
        self.echelon.pivots.len()
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let y: Vec<Scalar> = self.echelon.pivots.iter().map(|&c| v[c].clone()).collect();
        if self.echelon.matrix.left_apply(&y).as_slice() != v {
            return None;
        }
        Some(self.transform.left_apply(&y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(q(), 2).rank(), 2);
        assert_eq!(Matrix::zeros(q(), 3, 4).rank(), 0);
        assert_eq!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn rank_reports_mixed_fields() {
        let f5 = Field::prime(5).unwrap();
        let mut m = Matrix::zeros(q(), 1, 2);
        m.data[1] = f5.one();
        assert_eq!(rank(&m), Err(Error::MixedField));
        assert!(Matrix::new(q(), 1, 1, vec![f5.one()]).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(q(), 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(q(), 2, 3).kernel_basis().len(), 3);
        let f2 = Field::prime(2).unwrap();
        let k = Matrix::from_i64(f2, &[&[1, 1]]).kernel_basis();
        // Enumerating F_2^2: only (0,0) and (1,1) satisfy x+y = 0.
        assert_eq!(k, vec![vec![f2.one(), f2.one()]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q().from_i64(3), q().from_i64(-2)];
        assert_eq!(Matrix::identity(q(), 2).solve(&b).unwrap(), Some(b.clone()));
        let m = Matrix::from_i64(q(), &[&[1], &[0]]);
        assert_eq!(m.solve(&[q().zero(), q().one()]).unwrap(), None);
        let m = Matrix::from_i64(q(), &[&[2]]);
        assert_eq!(
            m.solve(&[q().one()]).unwrap(),
            Some(vec![q().from_ratio(1, 2).unwrap()])
        );
        assert!(m.solve(&[q().one(), q().one()]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let full = subspace_quotient(q(), 2, &[vec![q().one(), q().zero()], vec![q().zero(), q().one()]]);
        assert_eq!(full.projection.cols(), 0);
        let none = subspace_quotient(q(), 2, &[]);
        assert_eq!(none.projection, Matrix::identity(q(), 2));
        let diag = subspace_quotient(q(), 2, &[vec![q().one(), q().one()]]);
        assert_eq!(diag.projection.cols(), 1);
        assert!(diag
            .projection
            .left_apply(&[q().one(), q().one()])
            .iter()
            .all(Scalar::is_zero));
        assert_eq!(diag.section.mul(&diag.projection), Matrix::identity(q(), 1));
    }

    #[test]
    fn coordinates_in_arbitrary_basis() {
        let basis = vec![
            vec![q().from_i64(1), q().from_i64(1), q().zero()],
            vec![q().zero(), q().from_i64(2), q().from_i64(1)],
        ];
        let c = Coordinates::new(q(), 3, &basis).unwrap();
        let v = vec![q().from_i64(3), q().from_i64(1), q().from_i64(-1)];
        assert_eq!(c.coords(&v), Some(vec![q().from_i64(3), q().from_i64(-1)]));
        assert_eq!(c.coords(&[q().one(), q().zero(), q().zero()]), None);
        assert!(Coordinates::new(q(), 3, &[basis[0].clone(), basis[0].clone()]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
