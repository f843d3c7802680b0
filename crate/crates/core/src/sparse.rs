//! Incremental sparse elimination.
//!
//! Hom spaces and ideal quotients produce many short equations over a few
//! hundred unknowns; feeding them one at a time into an echelon basis keeps the
//! working set small and skips the dense blow-up of stacking them first.

use crate::field::{Field, Scalar};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

fn axpy(row: &SparseRow, f: &Scalar, pivot: &SparseRow) -> SparseRow {
    // row - f * pivot, both sorted by column
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            let v = -&(f * &pivot[j].1);
            if !v.is_zero() {
                out.push((cj, v));
            }
            j += 1;
        } else {
            let v = &row[i].1 - &(f * &pivot[j].1);
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn normalize_row(mut row: SparseRow) -> SparseRow {
    row.retain(|e| !e.1.is_zero());
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = &last.1 + &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl SparseEchelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        SparseEchelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The stored (forward-reduced) rows, spanning the same space as the input.
    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Remainder of `row` after forward reduction by the stored pivots.
    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        let mut row = normalize_row(row);
        let mut start = 0;
        while start < row.len() {
            let (c, v) = row[start].clone();
            match self.pivot_row[c] {
                Some(r) => {
                    row = axpy(&row, &v, &self.rows[r]);
                }
                None => start += 1,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns whether it enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((c, lead)) = row.first().cloned() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero lead");
        let row: SparseRow = row.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Fully reduced pivot rows, keyed by pivot column, in column order.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseRow)> {
        let pivots = self.pivots();
        let mut reduced: Vec<Option<SparseRow>> = vec![None; self.ncols];
        for &c in pivots.iter().rev() {
            let mut row = self.rows[self.pivot_row[c].unwrap()].clone();
            // eliminate later pivot columns, which are already fully reduced
            let mut k = 1;
            while k < row.len() {
                let (col, v) = row[k].clone();
                if let Some(rr) = &reduced[col] {
                    row = axpy(&row, &v, rr);
                } else {
                    k += 1;
                }
            }
            reduced[c] = Some(row);
        }
        pivots
            .into_iter()
            .map(|c| (c, reduced[c].take().unwrap()))
            .collect()
    }

    /// Dense basis of the solution space `{v : row·v = 0 for every stored row}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let reduced = self.reduced_rows();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.pivot_row[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.ncols];
            v[free] = self.field.one();
            for (c, row) in &reduced {
                if let Some((_, e)) = row.iter().find(|e| e.0 == free) {
                    v[*c] = -e;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&c| self.pivot_row[c].is_none())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    #[test]
    fn matches_dense_kernel() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[1, 2, 0, -1], &[2, 4, 1, 0], &[3, 6, 1, -1]]);
        let mut e = SparseEchelon::new(q, 4);
        for i in 0..m.rows() {
            let row = m.row(i).iter().cloned().enumerate().collect();
            e.insert(row);
        }
        assert_eq!(e.rank(), m.rank());
        let k = e.kernel_basis();
        assert_eq!(k.len(), 4 - m.rank());
        for v in &k {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }
}
