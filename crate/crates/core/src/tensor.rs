//! Alternating multilinear functionals stored as sparse coefficient maps on
//! the lexicographic basis of wedges of coordinate functionals.

use crate::combinatorics::IndexSet;
use crate::error::{Error, Result};
use crate::exterior::square_det;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A level-`n` alternating multilinear functional on an `ambient_dim`-dimensional
/// space. Absent coefficients are zero. A level above the ambient dimension is
/// representable but identically zero (no valid basis index set exists).
#[derive(Clone, PartialEq, Debug)]
pub struct AlternatingTensor<T> {
    level: usize,
    ambient_dim: usize,
    coeffs: BTreeMap<IndexSet, T>,
}

impl<T: Scalar> AlternatingTensor<T> {
    pub fn zero(level: usize, ambient_dim: usize) -> Self {
        AlternatingTensor {
            level,
            ambient_dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis functional indexed by `indices` (a wedge of coordinate
    /// functionals with strictly increasing indices), with coefficient 1.
    pub fn basis(ambient_dim: usize, indices: IndexSet) -> Result<Self> {
        indices.check_ambient(ambient_dim)?;
        let mut t = Self::zero(indices.len(), ambient_dim);
        t.coeffs.insert(indices, T::one());
        Ok(t)
    }

    /// A level-0 tensor: a single scalar keyed by the empty index set.
    pub fn scalar(ambient_dim: usize, value: T) -> Self {
        let mut t = Self::zero(0, ambient_dim);
        if !value.is_zero() {
            t.coeffs.insert(IndexSet::empty(), value);
        }
        t
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeff(&self, indices: &IndexSet) -> T {
        self.coeffs.get(indices).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&IndexSet, &T)> {
        self.coeffs.iter()
    }

    pub fn set_coeff(&mut self, indices: IndexSet, value: T) -> Result<()> {
        indices.check_ambient(self.ambient_dim)?;
        if indices.len() != self.level {
            return Err(Error::DimensionMismatch(format!(
                "coefficient index set has size {}, tensor level is {}",
                indices.len(),
                self.level
            )));
        }
        if value.is_zero() {
            self.coeffs.remove(&indices);
        } else {
            self.coeffs.insert(indices, value);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.level, self.ambient_dim);
        if factor.is_zero() {
            return out;
        }
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), v.clone() * factor.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level || self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot add tensors of level {}/{} and ambient {}/{}",
                self.level, other.level, self.ambient_dim, other.ambient_dim
            )));
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let sum = out.coeff(k) + v.clone();
            out.set_coeff(k.clone(), sum)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.level, self.ambient_dim);
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), -v.clone());
        }
        out
    }

    /// Apply the functional to `level` vectors of length `ambient_dim`:
    /// the sum over stored index sets sigma of coeff(sigma) times the minor of
    /// the argument matrix on columns sigma.
    pub fn evaluate(&self, xs: &[Vec<T>]) -> Result<T> {
        if xs.len() != self.level {
            return Err(Error::DimensionMismatch(format!(
                "level-{} tensor takes {} vectors, got {}",
                self.level,
                self.level,
                xs.len()
            )));
        }
        for v in xs {
            if v.len() != self.ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "argument vector has length {}, ambient dimension is {}",
                    v.len(),
                    self.ambient_dim
                )));
            }
        }
        let arg = Matrix::from_rows(xs.to_vec())?;
        let all_rows = IndexSet::full(self.level);
        let mut acc = T::zero();
        for (sigma, c) in &self.coeffs {
            let sub = arg.submatrix(&all_rows, sigma)?;
            acc = acc + c.clone() * square_det(&sub);
        }
        Ok(acc)
    }

    /// Wedge product. Bilinear, associative, and graded-anticommutative:
    /// swapping the factors multiplies by (-1)^(pq).
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut out = Self::zero(self.level + other.level, self.ambient_dim);
        for (sigma, a) in &self.coeffs {
            for (tau, b) in &other.coeffs {
                if let Some((merged, negative)) = merge_disjoint(sigma, tau) {
                    let term = a.clone() * b.clone();
                    let term = if negative { -term } else { term };
                    let sum = out.coeff(&merged) + term;
                    out.set_coeff(merged, sum)?;
                }
            }
        }
        Ok(out)
    }
}

/// Merge two index sets into one increasing tuple. Returns `None` when they
/// overlap (the wedge term vanishes), otherwise the merged set and whether the
/// merge permutation is odd.
fn merge_disjoint(sigma: &IndexSet, tau: &IndexSet) -> Option<(IndexSet, bool)> {
    let a = sigma.indices();
    let b = tau.indices();
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut transpositions = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            merged.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining elements of a
            transpositions += a.len() - i;
            merged.push(b[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&a[i..]);
    merged.extend_from_slice(&b[j..]);
    Some((
        IndexSet::new(merged).expect("merge of increasing disjoint tuples"),
        transpositions % 2 == 1,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn rat(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn basis(dim: usize, idx: &[usize]) -> AlternatingTensor<Rational> {
        AlternatingTensor::basis(dim, IndexSet::new(idx.to_vec()).unwrap()).unwrap()
    }

    fn unit(dim: usize, i: usize) -> Vec<Rational> {
        (0..dim).map(|j| rat((j == i) as i64)).collect()
    }

    #[test]
    fn evaluate_defining_case() {
        let w = basis(2, &[0, 1]);
        assert_eq!(w.evaluate(&[unit(2, 0), unit(2, 1)]).unwrap(), rat(1));
        assert_eq!(w.evaluate(&[unit(2, 1), unit(2, 0)]).unwrap(), rat(-1));
    }

    // Oracle: full antisymmetrized tensor expansion over all permutations.
    fn brute_force_eval(
        w: &AlternatingTensor<Rational>,
        xs: &[Vec<Rational>],
    ) -> Rational {
        fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
            if n == 0 {
                return vec![(vec![], 1)];
            }
            let mut out = Vec::new();
            for (perm, sign) in permutations(n - 1) {
                for pos in 0..n {
                    let mut p = perm.clone();
                    p.insert(pos, n - 1);
                    let flips = (p.len() - 1 - pos) as i64;
                    out.push((p, if flips % 2 == 0 { sign } else { -sign }));
                }
            }
            out
        }
        let n = w.level();
        let mut acc = rat(0);
        for (sigma, c) in w.coeffs() {
            for (perm, sign) in permutations(n) {
                let mut prod = rat(sign);
                for (slot, &p) in perm.iter().enumerate() {
                    prod = prod * xs[slot][sigma.indices()[p]].clone();
                }
                acc = acc + c.clone() * prod;
            }
        }
        acc
    }

    #[test]
    fn evaluate_matches_brute_force_expansion() {
        let w = basis(3, &[0, 1]);
        let xs = vec![
            vec![rat(1), rat(2), rat(5)],
            vec![rat(3), rat(4), rat(6)],
        ];
        assert_eq!(brute_force_eval(&w, &xs), rat(-2));
        assert_eq!(w.evaluate(&xs).unwrap(), rat(-2));

        // a mixed tensor against the same oracle
        let mut t = basis(3, &[0, 2]).scale(&rat(3));
        t = t.add(&basis(3, &[1, 2]).scale(&rat(-2))).unwrap();
        assert_eq!(t.evaluate(&xs).unwrap(), brute_force_eval(&t, &xs));
    }

    #[test]
    fn evaluate_rejects_bad_shapes() {
        let w = basis(3, &[0, 1]);
        assert!(w.evaluate(&[unit(3, 0)]).is_err());
        assert!(w.evaluate(&[unit(2, 0), unit(2, 1)]).is_err());
    }

    #[test]
    fn repeated_argument_vanishes() {
        let w = basis(4, &[0, 2]);
        let x = vec![rat(1), rat(2), rat(3), rat(4)];
        assert_eq!(w.evaluate(&[x.clone(), x]).unwrap(), rat(0));
    }

    #[test]
    fn wedge_of_coordinate_functionals() {
        let e0 = basis(2, &[0]);
        let e1 = basis(2, &[1]);
        let w = e0.wedge(&e1).unwrap();
        // (f1 ^ f2)[x, y] = f1[x] f2[y] - f1[y] f2[x]
        let x = vec![rat(2), rat(3)];
        let y = vec![rat(5), rat(7)];
        assert_eq!(w.evaluate(&[x, y]).unwrap(), rat(2 * 7 - 3 * 5));
    }

    #[test]
    fn wedge_with_self_is_zero() {
        let e0 = basis(2, &[0]);
        assert!(e0.wedge(&e0).unwrap().is_zero());
    }

    #[test]
    fn wedge_swap_negates_for_odd_levels() {
        let e0 = basis(3, &[0]);
        let e1 = basis(3, &[1]);
        let lhs = e1.wedge(&e0).unwrap();
        let rhs = e0.wedge(&e1).unwrap().neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_sign_rule_exhaustive() {
        // eta ^ omega = (-1)^(pq) omega ^ eta for p, q <= 4, ambient <= 6,
        // checked on all pairs of basis tensors.
        for dim in 1..=6usize {
            for p in 0..=4.min(dim) {
                for q in 0..=4.min(dim) {
                    for s in crate::combinatorics::SubsetFamily::new(dim, p).iter() {
                        for t in crate::combinatorics::SubsetFamily::new(dim, q).iter() {
                            let w = AlternatingTensor::<Rational>::basis(dim, s.clone()).unwrap();
                            let e = AlternatingTensor::<Rational>::basis(dim, t).unwrap();
                            let ew = e.wedge(&w).unwrap();
                            let we = w.wedge(&e).unwrap();
                            let expected = if (p * q) % 2 == 0 { we } else { we.neg() };
                            assert_eq!(ew, expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_is_associative_on_samples() {
        let a = basis(5, &[0, 3]).scale(&rat(2));
        let b = basis(5, &[1]);
        let c = basis(5, &[2, 4]).scale(&rat(-3));
        let lhs = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let rhs = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_ambient_mismatch() {
        let a = basis(3, &[0]);
        let b = basis(4, &[1]);
        assert!(a.wedge(&b).is_err());
    }

    #[test]
    fn level_zero_acts_as_scalar() {
        let s = AlternatingTensor::scalar(3, rat(4));
        let e = basis(3, &[1]);
        let prod = s.wedge(&e).unwrap();
        assert_eq!(prod, e.scale(&rat(4)));
        assert_eq!(s.evaluate(&[]).unwrap(), rat(4));
    }
}
