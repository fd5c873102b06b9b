//! Minor summation and exact verification of the determinant identities:
//! the classical product formula, its abstract operator form, the projection
//! and embedding lemma, the partition of identity, and the sum-of-squares
//! corollary.

use crate::combinatorics::{binomial, IndexSet, SubsetFamily};
use crate::error::{Error, Result};
use crate::exterior::{det_top_power, pullback_matrix};
use crate::matrix::Matrix;
use crate::reduce::{reduce_terms, Reduction};
use crate::report::{compare_matrices, compare_scalars, Deviation, IdentityReport};
use crate::scalar::Scalar;

pub use crate::exterior::minor;

/// A coordinate splitting of an `ambient`-dimensional space into the span of
/// the basis vectors indexed by `sigma` and the span of the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    sigma: IndexSet,
    ambient: usize,
}

impl Decomposition {
    pub fn new(sigma: IndexSet, ambient: usize) -> Result<Self> {
        sigma.check_ambient(ambient)?;
        Ok(Decomposition { sigma, ambient })
    }

    pub fn sigma(&self) -> &IndexSet {
        &self.sigma
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The n x N coordinate projection onto the `sigma` coordinates; row r is
    /// the transposed standard basis vector with index `sigma[r]`.
    pub fn projection_matrix<T: Scalar>(&self) -> Matrix<T> {
        let mut p = Matrix::zeros(self.sigma.len(), self.ambient);
        for (r, &i) in self.sigma.indices().iter().enumerate() {
            p.set(r, i, T::one());
        }
        p
    }

    /// The N x n embedding whose columns are the standard basis vectors
    /// indexed by `sigma`; the transpose of the projection.
    pub fn embedding_matrix<T: Scalar>(&self) -> Matrix<T> {
        self.projection_matrix::<T>().transpose()
    }
}

/// The canonical identification of the `sigma` subspace with the model
/// n-dimensional space: basis vector r goes to basis vector r, so the matrix
/// is the identity.
pub fn phi_matrix<T: Scalar>(n: usize) -> Matrix<T> {
    Matrix::identity(n)
}

/// Sum over all column sets sigma of minor(A, all rows, sigma) times
/// minor(B, sigma, all cols). Empty (zero) when the common order exceeds the
/// inner dimension.
pub fn cauchy_binet_sum<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<T> {
    cauchy_binet_sum_with(a, b, Reduction::Sequential)
}

pub fn cauchy_binet_sum_with<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    mode: Reduction,
) -> Result<T> {
    if a.cols() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "inner dimensions differ: A is {}x{}, B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.rows() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "outer dimensions differ: A has {} rows, B has {} cols",
            a.rows(),
            b.cols()
        )));
    }
    let n = a.rows();
    let big_n = a.cols();
    let all_rows = IndexSet::full(n);
    let terms: Vec<T> = SubsetFamily::new(big_n, n)
        .iter()
        .map(|sigma| {
            let left = minor(a, &all_rows, &sigma).expect("shape checked");
            let right = minor(b, &sigma, &all_rows).expect("shape checked");
            left * right
        })
        .collect();
    Ok(reduce_terms(terms, mode))
}

/// Classical identity: det(AB) equals the minor sum.
pub fn verify_classical<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    tolerance: Option<f64>,
    seed: Option<u64>,
) -> Result<IdentityReport> {
    let sum = cauchy_binet_sum(a, b)?;
    let direct = det_top_power(&a.matmul(b)?)?;
    let dev = compare_scalars(&direct, &sum, tolerance);
    Ok(IdentityReport::new::<T>(
        "classical",
        format!("A {}x{}, B {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        seed,
        tolerance,
        dev,
    ))
}

/// Sum-of-squares corollary: det(A A^T) equals the sum of squared maximal
/// minors of A, and is therefore nonnegative.
pub fn verify_pythagorean<T: Scalar>(
    a: &Matrix<T>,
    tolerance: Option<f64>,
    seed: Option<u64>,
) -> Result<IdentityReport> {
    let n = a.rows();
    let all_rows = IndexSet::full(n);
    let mut rhs = T::zero();
    for sigma in SubsetFamily::new(a.cols(), n).iter() {
        let m = minor(a, &all_rows, &sigma)?;
        rhs = rhs + m.clone() * m;
    }
    let lhs = det_top_power(&a.matmul(&a.transpose())?)?;
    let mut dev = compare_scalars(&lhs, &rhs, tolerance);
    if rhs.re_f64() < 0.0 {
        dev.passed = false;
        dev.display = format!("negative sum of squares: {rhs}");
    }
    Ok(IdentityReport::new::<T>(
        "pythagorean",
        format!("A {}x{}", a.rows(), a.cols()),
        seed,
        tolerance,
        dev,
    ))
}

/// Abstract operator identity at level `n`: the pullback of A.B equals the
/// sum over sigma of the pullbacks of the projected and embedded factors.
/// A maps the middle space into a w-dimensional one, B maps a u-dimensional
/// space into the middle one, so A is w x N and B is N x u.
pub fn verify_abstract<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    level: usize,
    tolerance: Option<f64>,
    seed: Option<u64>,
) -> Result<IdentityReport> {
    if a.cols() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "inner dimensions differ: A is {}x{}, B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let big_n = a.cols();
    let lhs = pullback_matrix(&a.matmul(b)?, level);
    let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
    for sigma in SubsetFamily::new(big_n, level).iter() {
        let d = Decomposition::new(sigma, big_n)?;
        let left = pullback_matrix(&d.projection_matrix::<T>().matmul(b)?, level);
        let right = pullback_matrix(&a.matmul(&d.embedding_matrix::<T>())?, level);
        rhs = rhs.add(&left.matmul(&right)?)?;
    }
    let dev = compare_matrices(&lhs, &rhs, tolerance);
    Ok(IdentityReport::new::<T>(
        "abstract",
        format!(
            "A {}x{}, B {}x{}, level {}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
            level
        ),
        seed,
        tolerance,
        dev,
    ))
}

/// The coordinate projection of the level-n exterior space onto the basis
/// slot of `sigma`: a row vector with a single 1 at the rank of `sigma`.
pub fn wedge_projection<T: Scalar>(sigma: &IndexSet, ambient: usize) -> Result<Matrix<T>> {
    let count = binomial(ambient, sigma.len());
    let mut p = Matrix::zeros(1, count);
    p.set(0, sigma.rank(ambient)?, T::one());
    Ok(p)
}

/// The matching embedding: the transpose of [`wedge_projection`].
pub fn wedge_embedding<T: Scalar>(sigma: &IndexSet, ambient: usize) -> Result<Matrix<T>> {
    Ok(wedge_projection::<T>(sigma, ambient)?.transpose())
}

/// The projection onto a wedge basis slot is the pullback of the coordinate
/// embedding, and the wedge embedding is the pullback of the coordinate
/// projection.
pub fn verify_lemma1<T: Scalar>(ambient: usize, sigma: &IndexSet) -> Result<IdentityReport> {
    let d = Decomposition::new(sigma.clone(), ambient)?;
    let n = sigma.len();
    let proj_direct = wedge_projection::<T>(sigma, ambient)?;
    let proj_pullback = pullback_matrix(&d.embedding_matrix::<T>(), n);
    let embed_direct = wedge_embedding::<T>(sigma, ambient)?;
    let embed_pullback = pullback_matrix(&d.projection_matrix::<T>(), n);
    let dev = compare_matrices(&proj_direct, &proj_pullback, None)
        .merge(compare_matrices(&embed_direct, &embed_pullback, None));
    Ok(IdentityReport::new::<T>(
        "lemma1",
        format!("N {ambient}, sigma {sigma}"),
        None,
        None,
        dev,
    ))
}

/// Summing embedding-after-projection over every sigma gives the identity on
/// the level-n exterior space.
pub fn verify_partition_of_identity<T: Scalar>(ambient: usize, n: usize) -> Result<IdentityReport> {
    let count = binomial(ambient, n);
    let mut sum = Matrix::zeros(count, count);
    for sigma in SubsetFamily::new(ambient, n).iter() {
        let d = Decomposition::new(sigma, ambient)?;
        let embed = pullback_matrix(&d.projection_matrix::<T>(), n);
        let proj = pullback_matrix(&d.embedding_matrix::<T>(), n);
        sum = sum.add(&embed.matmul(&proj)?)?;
    }
    let dev = compare_matrices(&sum, &Matrix::identity(count), None);
    Ok(IdentityReport::new::<T>(
        "partition_of_identity",
        format!("N {ambient}, n {n}"),
        None,
        None,
        dev,
    ))
}

/// Cross-check of the two determinant routes through the canonical
/// identification: assembling the projected and embedded factors as explicit
/// square matrices and taking determinants must reproduce the minor sum.
pub fn verify_phi_factorization<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    tolerance: Option<f64>,
    seed: Option<u64>,
) -> Result<IdentityReport> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "expected A n x N and B N x n, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let n = a.rows();
    let big_n = a.cols();
    let phi = phi_matrix::<T>(n);
    let mut via_phi = T::zero();
    for sigma in SubsetFamily::new(big_n, n).iter() {
        let d = Decomposition::new(sigma, big_n)?;
        let projected = phi.matmul(&d.projection_matrix::<T>())?.matmul(b)?;
        let embedded = a.matmul(&d.embedding_matrix::<T>())?.matmul(&phi)?;
        via_phi = via_phi + projected.det_lu()? * embedded.det_lu()?;
    }
    let via_minors = cauchy_binet_sum(a, b)?;
    let dev = compare_scalars(&via_phi, &via_minors, tolerance);
    Ok(IdentityReport::new::<T>(
        "phi_factorization",
        format!("A {}x{}, B {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        seed,
        tolerance,
        dev,
    ))
}

/// Convenience wrapper building a report from an already computed deviation.
pub fn report_from_deviation<T: Scalar>(
    identity: &str,
    dims: String,
    seed: Option<u64>,
    tolerance: Option<f64>,
    dev: Deviation,
) -> IdentityReport {
    IdentityReport::new::<T>(identity, dims, seed, tolerance, dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn rat(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn sum_reduces_to_dot_product_for_order_one() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2, 3, 4]]).unwrap();
        let b: Matrix<Rational> =
            Matrix::from_int_rows(&[&[5], &[6], &[7], &[8]]).unwrap();
        assert_eq!(
            cauchy_binet_sum(&a, &b).unwrap(),
            rat(5 + 12 + 21 + 32)
        );
    }

    #[test]
    fn sum_with_single_surviving_minor() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let b = a.transpose();
        assert_eq!(cauchy_binet_sum(&a, &b).unwrap(), rat(1));
    }

    #[test]
    fn sum_matches_product_determinant() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        let b: Matrix<Rational> =
            Matrix::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let expected = det_top_power(&a.matmul(&b).unwrap()).unwrap();
        assert_eq!(cauchy_binet_sum(&a, &b).unwrap(), expected);
    }

    #[test]
    fn order_above_inner_dimension_gives_empty_sum() {
        let a: Matrix<Rational> = Matrix::zeros(3, 2);
        let b: Matrix<Rational> = Matrix::zeros(2, 3);
        assert_eq!(cauchy_binet_sum(&a, &b).unwrap(), rat(0));
    }

    #[test]
    fn sum_rejects_mismatched_shapes() {
        let a: Matrix<Rational> = Matrix::zeros(2, 3);
        let b: Matrix<Rational> = Matrix::zeros(4, 2);
        assert!(cauchy_binet_sum(&a, &b).is_err());
    }

    #[test]
    fn classical_square_case_is_product_rule() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let b: Matrix<Rational> = Matrix::from_int_rows(&[&[5, 6], &[7, 8]]).unwrap();
        let report = verify_classical(&a, &b, None, None).unwrap();
        assert!(report.passed);
        assert_eq!(report.max_abs_deviation, "0");
    }

    #[test]
    fn pythagorean_three_four_five() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[3, 4]]).unwrap();
        let report = verify_pythagorean(&a, None, None).unwrap();
        assert!(report.passed);
        assert_eq!(
            det_top_power(&a.matmul(&a.transpose()).unwrap()).unwrap(),
            rat(25)
        );
    }

    #[test]
    fn pythagorean_orthonormal_rows() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(
            det_top_power(&a.matmul(&a.transpose()).unwrap()).unwrap(),
            rat(1)
        );
        assert!(verify_pythagorean(&a, None, None).unwrap().passed);
    }

    #[test]
    fn projection_embedding_shapes_and_products() {
        for ambient in 1..=8usize {
            for n in 0..=ambient.min(3) {
                for sigma in SubsetFamily::new(ambient, n).iter() {
                    let d = Decomposition::new(sigma.clone(), ambient).unwrap();
                    let p: Matrix<Rational> = d.projection_matrix();
                    let e: Matrix<Rational> = d.embedding_matrix();
                    assert_eq!(p.matmul(&e).unwrap(), Matrix::identity(n));
                    let ep = e.matmul(&p).unwrap();
                    // idempotent 0/1 diagonal supported on sigma
                    assert_eq!(ep.matmul(&ep).unwrap(), ep);
                    for i in 0..ambient {
                        let expect = rat(sigma.contains(i) as i64);
                        assert_eq!(ep.get(i, i), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn leading_sigma_projection_is_identity_block() {
        let sigma = IndexSet::new(vec![0, 1]).unwrap();
        let d = Decomposition::new(sigma, 4).unwrap();
        let p: Matrix<Rational> = d.projection_matrix();
        assert_eq!(
            p,
            Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap()
        );
    }

    #[test]
    fn abstract_identity_small_exact() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let a = Matrix::new(3, 5, (0..15).map(|_| rat(rng.gen_range(-3..=3))).collect()).unwrap();
        let b = Matrix::new(5, 4, (0..20).map(|_| rat(rng.gen_range(-3..=3))).collect()).unwrap();
        let report = verify_abstract(&a, &b, 2, None, None).unwrap();
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn abstract_identity_level_one_is_rank_one_expansion() {
        let a: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        let b: Matrix<Rational> = Matrix::from_int_rows(&[&[7, 8], &[9, 1], &[2, 3]]).unwrap();
        assert!(verify_abstract(&a, &b, 1, None, None).unwrap().passed);
    }

    #[test]
    fn abstract_identity_vacuous_above_outer_dims() {
        let a: Matrix<Rational> = Matrix::zeros(2, 5);
        let b: Matrix<Rational> = Matrix::zeros(5, 2);
        let report = verify_abstract(&a, &b, 3, None, None).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn lemma1_smallest_case() {
        let sigma = IndexSet::new(vec![0]).unwrap();
        let report = verify_lemma1::<Rational>(2, &sigma).unwrap();
        assert!(report.passed);
        let p: Matrix<Rational> = wedge_projection(&sigma, 2).unwrap();
        assert_eq!(p, Matrix::from_int_rows(&[&[1, 0]]).unwrap());
    }

    #[test]
    fn lemma1_exhaustive_n5_k2() {
        for sigma in SubsetFamily::new(5, 2).iter() {
            assert!(verify_lemma1::<Rational>(5, &sigma).unwrap().passed);
        }
    }

    #[test]
    fn wedge_projections_pair_as_dual_bases() {
        for sigma in SubsetFamily::new(4, 2).iter() {
            for tau in SubsetFamily::new(4, 2).iter() {
                let p: Matrix<Rational> = wedge_projection(&sigma, 4).unwrap();
                let e: Matrix<Rational> = wedge_embedding(&tau, 4).unwrap();
                let prod = p.matmul(&e).unwrap();
                let expect = rat((sigma == tau) as i64);
                assert_eq!(prod.get(0, 0), &expect);
            }
        }
    }

    #[test]
    fn partition_of_identity_cases() {
        assert!(verify_partition_of_identity::<Rational>(3, 3).unwrap().passed);
        assert!(verify_partition_of_identity::<Rational>(4, 2).unwrap().passed);
    }

    #[test]
    fn phi_factorization_matches_minor_sum() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = Matrix::new(2, 4, (0..8).map(|_| rat(rng.gen_range(-5..=5))).collect()).unwrap();
        let b = Matrix::new(4, 2, (0..8).map(|_| rat(rng.gen_range(-5..=5))).collect()).unwrap();
        let report = verify_phi_factorization(&a, &b, None, None).unwrap();
        assert!(report.passed);
        // det of the projected factor is the row minor of B by construction
        let sigma = IndexSet::new(vec![1, 3]).unwrap();
        let d = Decomposition::new(sigma.clone(), 4).unwrap();
        let projected = phi_matrix::<Rational>(2)
            .matmul(&d.projection_matrix())
            .unwrap()
            .matmul(&b)
            .unwrap();
        assert_eq!(
            projected.det_lu().unwrap(),
            minor(&b, &sigma, &IndexSet::full(2)).unwrap()
        );
    }
}
