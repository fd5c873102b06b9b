//! Seeded instance generation. A fixed seed fully determines every generated
//! matrix, so suites are reproducible byte for byte.

use crate::matrix::Matrix;
use crate::scalar::Rational;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational entries p/q with p in [-9, 9] and q in [1, 9], which keeps
/// intermediate sizes in exact elimination small.
pub fn rational_entry<R: Rng>(rng: &mut R) -> Rational {
    let p: i64 = rng.gen_range(-9..=9);
    let q: i64 = rng.gen_range(1..=9);
    Rational::new(p.into(), q.into())
}

pub fn rational_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::new(rows, cols, (0..rows * cols).map(|_| rational_entry(rng)).collect())
        .expect("consistent dimensions")
}

/// Uniform entries in [-1, 1].
pub fn float_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<f64> {
    Matrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| rng.gen_range(-1.0..=1.0)).collect(),
    )
    .expect("consistent dimensions")
}

/// Random complex coefficients in the unit square, one per frequency in
/// [-degree, degree].
pub fn trig_coeffs<R: Rng>(rng: &mut R, degree: i64) -> Vec<(i64, Complex64)> {
    (-degree..=degree)
        .map(|k| {
            (
                k,
                Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)),
            )
        })
        .collect()
}
