use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use super::{Scalar, Vector};

/// Dense matrix of exact scalars, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[&Vector]) -> Self {
        assert!(!cols.is_empty());
        let rows = cols[0].dim();
        let mut m = Matrix::zero(rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.dim(), rows);
            for i in 0..rows {
                m.set(i, j, v.coord(i).clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// The orthogonal reflection `v ↦ v − 2(v,α)/(α,α)·α` as a matrix.
    pub fn reflection_across(alpha: &Vector) -> Matrix {
        let n = alpha.dim();
        let norm = alpha.norm_sq();
        assert!(!norm.is_zero(), "reflection across the zero vector");
        let two = Scalar::from_int(2);
        let mut m = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let corr = &(&two * alpha.coord(i)) * alpha.coord(j) / &norm;
                let v = m.get(i, j) - &corr;
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim());
        let coords = (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j) * v.coord(j);
                }
                acc
            })
            .collect();
        Vector::new(coords)
    }

    pub fn minus_identity(&self) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i) - &Scalar::one();
            m.set(i, i, v);
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self == &Matrix::identity(self.rows)
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = Scalar::one() / m.get(row, col).clone();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &(&factor * m.get(row, j));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Public view of the reduced row echelon form with its pivot columns;
    /// canonical per row space, which makes it usable as a span key.
    pub fn reduced_row_echelon(&self) -> (Matrix, Vec<usize>) {
        self.rref()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = Vector::zero(self.cols).coords().to_vec();
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            basis.push(Vector::new(v));
        }
        basis
    }

    /// Unique solution of `self · x = b` when the columns are independent;
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.dim());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b.coord(i).clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix by fraction-free-enough elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                det = -det;
                for j in 0..m.cols {
                    let a = m.get(col, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
            }
            let pivot = m.get(col, col).clone();
            det = det * &pivot;
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for j in col..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        det
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut m = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k) * rhs.get(k, j);
                }
                m.set(i, j, acc);
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_matrices_are_orthogonal_involutions() {
        let alpha = Vector::from_ints(&[1, -1, 0]);
        let m = Matrix::reflection_across(&alpha);
        assert!((&m * &m).is_identity());
        assert!((&m.transpose() * &m).is_identity());
        // swaps coordinates 1 and 2
        assert_eq!(m.apply(&Vector::unit(3, 0)), Vector::unit(3, 1));
    }

    #[test]
    fn kernel_of_reflection_minus_identity_is_the_hyperplane() {
        let alpha = Vector::from_ints(&[1, -1, 0]);
        let m = Matrix::reflection_across(&alpha).minus_identity();
        assert_eq!(m.kernel_dim(), 2);
        for b in m.kernel_basis() {
            assert_eq!(b.inner(&alpha), Scalar::zero());
        }
    }

    #[test]
    fn solve_and_det() {
        let c0 = Vector::from_ints(&[1, 1]);
        let c1 = Vector::from_ints(&[1, 0]);
        let m = Matrix::from_columns(&[&c0, &c1]);
        assert_eq!(m.det(), Scalar::from_int(-1));
        let x = m.solve(&Vector::from_ints(&[3, 1])).unwrap();
        assert_eq!(x, vec![Scalar::from_int(1), Scalar::from_int(2)]);
        // inconsistent system
        let col = Vector::from_ints(&[1, 1]);
        let sys = Matrix::from_columns(&[&col]);
        assert!(sys.solve(&Vector::from_ints(&[1, 2])).is_none());
    }
}
