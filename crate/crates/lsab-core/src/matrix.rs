//! Dense matrices over exact rationals, with Gaussian elimination for
//! solving, inversion, rank and nullspace computations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense `rows x cols` matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer table, mostly for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_cols(n: usize, cols: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(n, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| k * self.get(r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Applies the matrix to a coordinate column.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, x.len(), "apply: dimension mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &x[c]).sum())
            .collect()
    }

    /// `ab - ba`.
    pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
        a * b - b * a
    }

    /// Kronecker product; index `(a,c)` flattens to `a * other.rows + c`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (a, x) = (r / other.rows, r % other.rows);
                let (b, y) = (c / other.cols, c % other.cols);
                self.get(a, b) * other.get(x, y)
            },
        )
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Row echelon form; returns (echelon matrix, pivot columns, det sign swaps)
    /// without scaling rows, so the determinant can be read off the diagonal.
    fn echelon(&self) -> (Matrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
                swaps += 1;
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for r in row + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, swaps)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().1
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "det of non-square matrix");
        let (e, pivots, swaps) = self.echelon();
        if pivots.len() < self.rows {
            return Scalar::zero();
        }
        let mut d = if swaps % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        for i in 0..self.rows {
            d = d * e.get(i, i).clone();
        }
        d
    }

    /// Determinants of the leading principal `k x k` blocks, `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        (1..=self.rows)
            .map(|k| Matrix::from_fn(k, k, |r, c| self.get(r, c).clone()).det())
            .collect()
    }

    /// Solves `self * x = rhs` for square `self`; `Err(SingularMatrix)` when no
    /// unique solution exists.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "solve expects a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: rhs length {} does not match {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let sols = self.solve_columns(&Matrix::from_cols(self.rows, &[rhs.to_vec()]))?;
        Ok(sols.column(0))
    }

    /// Solves `self * X = rhs` column by column.
    fn solve_columns(&self, rhs: &Matrix) -> Result<Matrix> {
        let n = self.rows;
        let k = rhs.cols;
        let mut aug = Matrix::from_fn(n, n + k, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - n).clone()
            }
        });
        // forward elimination with exact pivots
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !aug.get(r, col).is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            if p != col {
                for c in 0..n + k {
                    aug.data.swap(p * (n + k) + c, col * (n + k) + c);
                }
            }
            let inv = aug.get(col, col).inv().expect("pivot is nonzero");
            for c in col..n + k {
                let v = aug.get(col, c) * &inv;
                aug.set(col, c, v);
            }
            for r in 0..n {
                if r == col || aug.get(r, col).is_zero() {
                    continue;
                }
                let factor = aug.get(r, col).clone();
                for c in col..n + k {
                    let v = aug.get(r, c) - &(&factor * aug.get(col, c));
                    aug.set(r, c, v);
                }
            }
        }
        Ok(Matrix::from_fn(n, k, |r, c| aug.get(r, n + c).clone()))
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "invert expects a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        self.solve_columns(&Matrix::identity(self.rows))
    }

    /// Is `v` in the column span of `self`?
    pub fn spans(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                v[r].clone()
            }
        });
        aug.rank() == self.rank()
    }

    /// Coordinates of `v` in the column basis of `self`, when `v` lies in
    /// the span and the columns are independent.
    pub fn express_in_span(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                v[r].clone()
            }
        });
        let (e, pivots, _) = aug.echelon();
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return None; // inconsistent, or dependent columns
        }
        // back-substitute the upper-triangular system on pivot rows
        let mut x = vec![Scalar::zero(); self.cols];
        for row in (0..pivots.len()).rev() {
            let col = pivots[row];
            let mut acc = e.get(row, self.cols).clone();
            for c in col + 1..self.cols {
                acc = acc - &(e.get(row, c) * &x[c]);
            }
            x[col] = acc / e.get(row, col).clone();
        }
        Some(x)
    }

    /// A basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (e, pivots, _) = self.echelon();
        // back-substitute to reduced form
        let mut red = e;
        for (prow, &pcol) in pivots.iter().enumerate().rev() {
            let inv = red.get(prow, pcol).inv().expect("pivot is nonzero");
            for c in pcol..red.cols {
                let v = red.get(prow, c) * &inv;
                red.set(prow, c, v);
            }
            for r in 0..prow {
                if red.get(r, pcol).is_zero() {
                    continue;
                }
                let factor = red.get(r, pcol).clone();
                for c in pcol..red.cols {
                    let v = red.get(r, c) - &(&factor * red.get(prow, c));
                    red.set(r, c, v);
                }
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[fc] = Scalar::one();
                for (prow, &pcol) in pivots.iter().enumerate() {
                    v[pcol] = -red.get(prow, fc).clone();
                }
                v
            })
            .collect()
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Sub for Matrix {
    type Output = Matrix;
    fn sub(self, rhs: Matrix) -> Matrix {
        &self - &rhs
    }
}

impl Add for Matrix {
    type Output = Matrix;
    fn add(self, rhs: Matrix) -> Matrix {
        &self + &rhs
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::unit_vec;

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(2);
        let b = vec![Scalar::ratio(3, 2), Scalar::from_int(-1)];
        assert_eq!(m.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_rotation() {
        // [[0,1],[-1,0]] x = (1,0)  =>  x = (0,1)
        let m = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        let x = m.solve(&unit_vec(2, 0)).unwrap();
        assert_eq!(x, unit_vec(2, 1));
    }

    #[test]
    fn solve_singular_flags() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            m.solve(&unit_vec(2, 0)),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn invert_diagonal() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::from_int(2), Scalar::zero()],
            vec![Scalar::zero(), Scalar::ratio(1, 3)],
        ]);
        let inv = m.invert().unwrap();
        assert_eq!(inv.get(0, 0), &Scalar::ratio(1, 2));
        assert_eq!(inv.get(1, 1), &Scalar::from_int(3));
        assert_eq!(Matrix::identity(2), &m * &inv);
    }

    #[test]
    fn invert_singular_flags() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(m.invert().is_err());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn principal_minors() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 3]]);
        assert_eq!(
            m.leading_principal_minors(),
            vec![Scalar::from_int(2), Scalar::from_int(5)]
        );
    }
}
