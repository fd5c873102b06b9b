//! Dense row-major matrices over a single scalar backend.

use crate::combinatorics::IndexSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::ops::Index;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn conjugate(&self) -> Matrix<T> {
        self.map(Scalar::conjugate)
    }

    pub fn matmul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * rhs.get(k, j).clone());
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// Submatrix keeping the given rows and columns (any sizes).
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Matrix<T>> {
        rows.check_ambient(self.rows)?;
        cols.check_ambient(self.cols)?;
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows.indices() {
            for &c in cols.indices() {
                data.push(self.get(r, c).clone());
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        })
    }

    /// Determinant by elimination: fraction-free Bareiss on exact backends,
    /// partially pivoted Gaussian elimination on float backends.
    pub fn det_lu(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let d = self.rows;
        if d == 0 {
            return Ok(T::one());
        }
        let mut m = self.data.clone();
        if T::EXACT {
            Ok(bareiss_det(&mut m, d))
        } else {
            Ok(pivoted_det(&mut m, d))
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

fn bareiss_det<T: Scalar>(m: &mut [T], d: usize) -> T {
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..d - 1 {
        if m[k * d + k].is_zero() {
            match (k + 1..d).find(|&i| !m[i * d + k].is_zero()) {
                Some(i) => {
                    for j in 0..d {
                        m.swap(k * d + j, i * d + j);
                    }
                    sign_flip = !sign_flip;
                }
                None => return T::zero(),
            }
        }
        let pivot = m[k * d + k].clone();
        for i in k + 1..d {
            for j in k + 1..d {
                let num = m[i * d + j].clone() * pivot.clone()
                    - m[i * d + k].clone() * m[k * d + j].clone();
                // Exact division: the one-step Bareiss update is divisible
                // by the previous pivot over any integral domain.
                m[i * d + j] = num / prev.clone();
            }
        }
        prev = pivot;
    }
    let det = m[(d - 1) * d + (d - 1)].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

fn pivoted_det<T: Scalar>(m: &mut [T], d: usize) -> T {
    let mut det = T::one();
    for k in 0..d {
        let (pivot_row, pivot_mag) = (k..d)
            .map(|i| (i, m[i * d + k].abs_f64()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pivot_mag == 0.0 {
            return T::zero();
        }
        if pivot_row != k {
            for j in 0..d {
                m.swap(k * d + j, pivot_row * d + j);
            }
            det = -det;
        }
        let pivot = m[k * d + k].clone();
        det = det * pivot.clone();
        for i in k + 1..d {
            let factor = m[i * d + k].clone() / pivot.clone();
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..d {
                let delta = factor.clone() * m[k * d + j].clone();
                m[i * d + j] = m[i * d + j].clone() - delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_traits::Zero;

    fn rat(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn det_identity() {
        let m: Matrix<Rational> = Matrix::identity(3);
        assert_eq!(m.det_lu().unwrap(), rat(1));
        let f: Matrix<f64> = Matrix::identity(3);
        assert_eq!(f.det_lu().unwrap(), 1.0);
    }

    #[test]
    fn det_rank_one_is_zero() {
        let m: Matrix<Rational> =
            Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[3, 6, 9]]).unwrap();
        assert_eq!(m.det_lu().unwrap(), rat(0));
    }

    #[test]
    fn det_needs_square() {
        let m: Matrix<Rational> = Matrix::zeros(2, 3);
        assert!(matches!(m.det_lu(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn det_with_zero_leading_pivot() {
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.det_lu().unwrap(), rat(-1));
        let f: Matrix<f64> = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(f.det_lu().unwrap(), -1.0);
    }

    #[test]
    fn det_empty_matrix_is_one() {
        let m: Matrix<Rational> = Matrix::zeros(0, 0);
        assert_eq!(m.det_lu().unwrap(), rat(1));
    }

    // Cofactor-expansion oracle, independent of the elimination path.
    fn cofactor_det(m: &Matrix<Rational>) -> Rational {
        let d = m.rows();
        if d == 0 {
            return Rational::from_int(1);
        }
        let mut acc = Rational::from_int(0);
        for c in 0..d {
            if m.get(0, c).is_zero() {
                continue;
            }
            let sub = Matrix::from_rows(
                (1..d)
                    .map(|r| {
                        (0..d)
                            .filter(|&j| j != c)
                            .map(|j| m.get(r, j).clone())
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            let term = m.get(0, c).clone() * cofactor_det(&sub);
            acc = if c % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let d = rng.gen_range(1..=4);
            let data: Vec<Rational> = (0..d * d)
                .map(|_| Rational::from_int(rng.gen_range(-5..=5)))
                .collect();
            let m = Matrix::new(d, d, data).unwrap();
            assert_eq!(m.det_lu().unwrap(), cofactor_det(&m));
        }
    }

    #[test]
    fn matmul_shapes() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let b: Matrix<Rational> = Matrix::zeros(3, 2);
        assert!(a.matmul(&b).is_err());
        let i: Matrix<Rational> = Matrix::identity(2);
        assert_eq!(a.matmul(&i).unwrap(), a);
    }

    #[test]
    fn submatrix_selects_minor_block() {
        let m: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        let s = m
            .submatrix(
                &IndexSet::new(vec![0, 1]).unwrap(),
                &IndexSet::new(vec![1, 2]).unwrap(),
            )
            .unwrap();
        assert_eq!(s, Matrix::from_int_rows(&[&[2, 3], &[5, 6]]).unwrap());
        assert!(m
            .submatrix(&IndexSet::new(vec![0, 2]).unwrap(), &IndexSet::empty())
            .is_err());
    }
}
