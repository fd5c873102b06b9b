//! Compound matrices (all n-by-n minors), pullback matrices of linear maps at
//! every exterior level, and the determinant through the top exterior power.

use crate::combinatorics::{binomial, IndexSet, SubsetFamily};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Determinant of a square matrix, with a direct-formula fast path for
/// orders up to 3 and elimination above that.
pub(crate) fn square_det<T: Scalar>(m: &Matrix<T>) -> T {
    debug_assert!(m.is_square());
    match m.rows() {
        0 => T::one(),
        1 => m.get(0, 0).clone(),
        2 => {
            m.get(0, 0).clone() * m.get(1, 1).clone() - m.get(0, 1).clone() * m.get(1, 0).clone()
        }
        3 => {
            let a = m.get(0, 0).clone()
                * (m.get(1, 1).clone() * m.get(2, 2).clone()
                    - m.get(1, 2).clone() * m.get(2, 1).clone());
            let b = m.get(0, 1).clone()
                * (m.get(1, 0).clone() * m.get(2, 2).clone()
                    - m.get(1, 2).clone() * m.get(2, 0).clone());
            let c = m.get(0, 2).clone()
                * (m.get(1, 0).clone() * m.get(2, 1).clone()
                    - m.get(1, 1).clone() * m.get(2, 0).clone());
            a - b + c
        }
        _ => m.det_lu().expect("square by construction"),
    }
}

/// Minor of `m` on the given row and column index sets.
pub fn minor<T: Scalar>(m: &Matrix<T>, rows: &IndexSet, cols: &IndexSet) -> Result<T> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch(format!(
            "minor needs equally sized index sets, got {} rows and {} cols",
            rows.len(),
            cols.len()
        )));
    }
    let sub = m.submatrix(rows, cols)?;
    Ok(square_det(&sub))
}

/// The level-`n` compound of `m`: entry (rho, sigma) is the minor on rows
/// `rho` and columns `sigma`, both families in lexicographic rank order.
///
/// Level 0 is the 1x1 matrix [1]; levels above min(rows, cols) give a matrix
/// with zero rows and/or columns.
pub fn compound<T: Scalar>(m: &Matrix<T>, level: usize) -> Matrix<T> {
    let out_rows = binomial(m.rows(), level);
    let out_cols = binomial(m.cols(), level);
    let mut out = Matrix::zeros(out_rows, out_cols);
    let row_sets: Vec<IndexSet> = SubsetFamily::new(m.rows(), level).iter().collect();
    let col_sets: Vec<IndexSet> = SubsetFamily::new(m.cols(), level).iter().collect();
    for (i, rho) in row_sets.iter().enumerate() {
        for (j, sigma) in col_sets.iter().enumerate() {
            let sub = m.submatrix(rho, sigma).expect("index sets in range");
            out.set(i, j, square_det(&sub));
        }
    }
    out
}

/// Matrix of the level-`n` dual map induced by `m`: the transpose of the
/// level-`n` compound. Composition reverses: the pullback of a product is the
/// product of the pullbacks in opposite order.
pub fn pullback_matrix<T: Scalar>(m: &Matrix<T>, level: usize) -> Matrix<T> {
    compound(m, level).transpose()
}

/// Determinant as the single entry of the top-level compound.
pub fn det_top_power<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let top = compound(m, m.rows());
    Ok(top.get(0, 0).clone())
}
