//! Dense exact linear algebra over a coefficient field: rank, kernel,
//! and linear solving by Gaussian elimination.

use crate::error::Result;
use crate::field::{CoefficientField, FieldElement};

#[derive(Clone, Debug)]
pub struct Matrix {
    pub field: CoefficientField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: &CoefficientField, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &CoefficientField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldElement {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Row echelon form in place; returns the pivot columns.
    pub fn echelonize(&mut self) -> Result<Vec<usize>> {
        let field = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let pr = match pivot_row {
                None => continue,
                Some(r) => r,
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = field.inv(self.at(row, col))?;
            for c in col..self.cols {
                let v = field.mul(self.at(row, c), &inv);
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let delta = field.mul(&factor, self.at(row, c));
                    let v = field.sub(self.at(r, c), &delta);
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.echelonize()?.len())
    }

    /// Basis of the right kernel {v : M v = 0}.
    pub fn kernel(&self) -> Result<Vec<Vec<FieldElement>>> {
        let field = self.field.clone();
        let mut m = self.clone();
        let pivots = m.echelonize()?;
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![field.zero(); self.cols];
            v[fc] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                // row r: x_pc + sum_{c>pc} m[r][c] x_c = 0
                v[pc] = field.neg(m.at(r, fc));
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// One solution of M x = b, if any.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        assert_eq!(b.len(), self.rows);
        let field = self.field.clone();
        let mut aug = Matrix::zero(&field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let pivots = aug.echelonize()?;
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![field.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        // clear contributions of free columns (set to zero), adjust pivots
        for (r, &pc) in pivots.iter().enumerate() {
            let mut v = aug.at(r, self.cols).clone();
            for c in 0..self.cols {
                if c != pc && !x[c].is_zero() {
                    let delta = field.mul(aug.at(r, c), &x[c]);
                    v = field.sub(&v, &delta);
                }
            }
            x[pc] = v;
        }
        Ok(Some(x))
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<FieldElement> {
        assert_eq!(self.rows, self.cols);
        let field = self.field.clone();
        let mut m = self.clone();
        let mut det = field.one();
        let mut sign = false;
        for col in 0..m.cols {
            let pivot_row = (col..m.rows).find(|&r| !m.at(r, col).is_zero());
            let pr = match pivot_row {
                None => return Ok(field.zero()),
                Some(r) => r,
            };
            if pr != col {
                for c in 0..m.cols {
                    m.data.swap(col * m.cols + c, pr * m.cols + c);
                }
                sign = !sign;
            }
            det = field.mul(&det, m.at(col, col));
            let inv = field.inv(m.at(col, col))?;
            for r in col + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = field.mul(m.at(r, col), &inv);
                for c in col..m.cols {
                    let delta = field.mul(&factor, m.at(col, c));
                    let v = field.sub(m.at(r, c), &delta);
                    *m.at_mut(r, c) = v;
                }
            }
        }
        if sign {
            det = field.neg(&det);
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat_int;

    #[test]
    fn rank_kernel_solve() {
        let q = CoefficientField::rationals();
        let mut m = Matrix::zero(&q, 2, 3);
        // [1 2 3; 2 4 6] has rank 1, kernel dim 2
        for (c, v) in [1i64, 2, 3].iter().enumerate() {
            *m.at_mut(0, c) = q.from_integer(*v);
            *m.at_mut(1, c) = q.from_integer(2 * *v);
        }
        assert_eq!(m.rank().unwrap(), 1);
        let ker = m.kernel().unwrap();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in 0..2 {
                let mut acc = q.zero();
                for c in 0..3 {
                    acc = q.add(&acc, &q.mul(m.at(r, c), &v[c]));
                }
                assert!(acc.is_zero());
            }
        }
        let b = vec![q.from_integer(6), q.from_integer(12)];
        let x = m.solve(&b).unwrap().unwrap();
        let mut acc = q.zero();
        for c in 0..3 {
            acc = q.add(&acc, &q.mul(m.at(0, c), &x[c]));
        }
        assert_eq!(acc, q.from_integer(6));
        // inconsistent system
        let b2 = vec![q.from_integer(1), q.from_integer(0)];
        assert!(m.solve(&b2).unwrap().is_none());
    }

    #[test]
    fn determinant() {
        let q = CoefficientField::rationals();
        let mut m = Matrix::zero(&q, 2, 2);
        *m.at_mut(0, 0) = q.from_integer(2);
        *m.at_mut(0, 1) = q.from_integer(3);
        *m.at_mut(1, 0) = q.from_integer(5);
        *m.at_mut(1, 1) = q.from_integer(7);
        assert_eq!(m.det().unwrap(), q.from_rational(rat_int(-1)));
        let id = Matrix::identity(&q, 4);
        assert_eq!(id.det().unwrap(), q.one());
    }
}
