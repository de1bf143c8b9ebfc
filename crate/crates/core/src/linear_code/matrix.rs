use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// A dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r).iter().map(|e| e.index()).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.field.order() - 1).to_string().len();
        for r in 0..self.rows {
            let row: Vec<String> =
                self.row(r).iter().map(|e| format!("{:>width$}", e.index())).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|x| !field.contains(**x)) {
            field.check(bad)?;
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>, cols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        let n = rows.len();
        Self::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_indices(field: &Field, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&i| field.elem(i)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, rows, cols)
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_indices(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|e| e.index()).collect()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for (l, &a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(l, j))));
                }
            }
        }
        Ok(out)
    }

    /// Product with a column vector.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { left: self.cols, right: v.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { left: self.cols, right: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let data = (0..self.rows).flat_map(|r| cols.iter().map(move |&c| self.get(r, c))).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: cols.len(), data }
    }

    /// Gauss-Jordan elimination. Columns are scanned left to right and the
    /// pivot is the first nonzero entry at or below the current row, so the
    /// result is fully deterministic.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let x = m.get(row, c);
                m.set(row, c, f.mul(x, inv));
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let x = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of {x : self · xᵀ = 0}, one row per free column.
    ///
    /// For free column j the basis vector has a 1 at j, the negated RREF
    /// entries at the pivot columns and zeros elsewhere.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: r, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &j) in free.iter().enumerate() {
            basis.set(b, j, Elem::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(i, j)));
            }
        }
        basis
    }

    /// RREF with zero rows removed: a canonical form of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let Rref { matrix, rank, .. } = self.rref();
        Matrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data: matrix.data[..rank * self.cols].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[Vec<u32>]) -> Matrix {
        Matrix::from_indices(f, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let r = m(&f5, &[vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, m(&f5, &[vec![1, 2], vec![0, 0]]));
        let id = Matrix::identity(&f5, 3);
        let r = id.rref();
        assert_eq!((r.rank, r.matrix), (3, id));
        assert_eq!(Matrix::zeros(&f5, 2, 4).rank(), 0);
    }

    #[test]
    fn pivots_strictly_increase() {
        let f7 = Field::new(7, 1).unwrap();
        let a = m(&f7, &[vec![0, 3, 1, 4], vec![0, 6, 2, 1], vec![5, 0, 0, 2]]);
        let r = a.rref();
        assert!(r.pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, &c) in r.pivots.iter().enumerate() {
            for row in 0..r.matrix.rows() {
                let want = if row == i { Elem::ONE } else { Elem::ZERO };
                assert_eq!(r.matrix.get(row, c), want);
            }
        }
    }

    #[test]
    fn null_space_is_orthogonal() {
        let f9 = Field::new(3, 2).unwrap();
        let a = m(&f9, &[vec![1, 2, 3, 4, 5], vec![0, 7, 8, 1, 1], vec![1, 0, 2, 6, 3]]);
        let ns = a.null_space();
        assert_eq!(ns.rows(), 5 - a.rank());
        let prod = a.mul(&ns.transpose()).unwrap();
        assert!(prod.data.iter().all(|x| x.is_zero()));
        assert_eq!(ns.rank(), ns.rows());
    }

    #[test]
    fn shape_errors() {
        let f5 = Field::new(5, 1).unwrap();
        let a = m(&f5, &[vec![1, 2]]);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(Matrix::from_indices(&f5, &[vec![1, 2], vec![1]]).is_err());
        assert_eq!(Matrix::from_indices(&f5, &[vec![5]]).unwrap_err(), Error::FieldMismatch);
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(a.vstack(&m(&f7, &[vec![1, 1]])).unwrap_err(), Error::FieldMismatch);
    }
}
