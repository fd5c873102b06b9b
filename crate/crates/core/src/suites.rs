//! Seeded verification suites shared by the CLI and the acceptance tests.
//! A fixed seed determines every generated instance, so two runs with the
//! same configuration produce identical reports.

use crate::cauchy_binet::{
    verify_abstract, verify_classical, verify_lemma1, verify_partition_of_identity,
    verify_phi_factorization, verify_pythagorean,
};
use crate::combinatorics::SubsetFamily;
use crate::error::Result;
use crate::exterior::{compound, det_top_power};
use crate::gen::{float_matrix, rational_matrix, seeded_rng};
use crate::matrix::Matrix;
use crate::report::{compare_matrices, compare_scalars, IdentityReport};
use crate::scalar::Rational;
use rand::Rng;

pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

/// Classical minor-sum identity on random exact instances with
/// 1 <= n <= max_order and n <= N <= max_dim.
pub fn classical_rational_suite(
    seed: u64,
    count: usize,
    max_order: usize,
    max_dim: usize,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(1..=max_order);
        let big_n = rng.gen_range(n..=max_dim);
        let a = rational_matrix(&mut rng, n, big_n);
        let b = rational_matrix(&mut rng, big_n, n);
        reports.push(verify_classical(&a, &b, None, Some(seed))?);
    }
    Ok(reports)
}

pub fn classical_float_suite(
    seed: u64,
    count: usize,
    max_order: usize,
    max_dim: usize,
    tolerance: f64,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(1..=max_order);
        let big_n = rng.gen_range(n..=max_dim);
        let a = float_matrix(&mut rng, n, big_n);
        let b = float_matrix(&mut rng, big_n, n);
        reports.push(verify_classical(&a, &b, Some(tolerance), Some(seed))?);
    }
    Ok(reports)
}

/// Abstract operator identity on random exact instances, checked at every
/// level up to min(w, u, N).
pub fn abstract_suite(
    seed: u64,
    count: usize,
    max_outer: usize,
    max_dim: usize,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..count {
        let w = rng.gen_range(1..=max_outer);
        let u = rng.gen_range(1..=max_outer);
        let big_n = rng.gen_range(1..=max_dim);
        let a = rational_matrix(&mut rng, w, big_n);
        let b = rational_matrix(&mut rng, big_n, u);
        for level in 0..=w.min(u).min(big_n) {
            reports.push(verify_abstract(&a, &b, level, None, Some(seed))?);
        }
    }
    Ok(reports)
}

/// Compound multiplicativity on random composable exact pairs at all levels.
pub fn compound_multiplicativity_suite(seed: u64, count: usize) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..count {
        let r = rng.gen_range(1..=5);
        let mid = rng.gen_range(1..=5);
        let c = rng.gen_range(1..=5);
        let m = rational_matrix(&mut rng, r, mid);
        let k = rational_matrix(&mut rng, mid, c);
        let product = m.matmul(&k)?;
        for level in 0..=r.min(mid).min(c) {
            let lhs = compound(&product, level);
            let rhs = compound(&m, level).matmul(&compound(&k, level))?;
            let dev = compare_matrices(&lhs, &rhs, None);
            reports.push(IdentityReport::new::<Rational>(
                "compound_multiplicativity",
                format!("M {r}x{mid}, K {mid}x{c}, level {level}"),
                Some(seed),
                None,
                dev,
            ));
        }
    }
    Ok(reports)
}

/// Projection/embedding lemma plus the partition of identity, exhaustively
/// over every sigma with N <= max_dim and n <= max_order.
pub fn lemma_and_partition_suite(max_dim: usize, max_order: usize) -> Result<Vec<IdentityReport>> {
    let mut reports = Vec::new();
    for big_n in 1..=max_dim {
        for n in 0..=max_order.min(big_n) {
            for sigma in SubsetFamily::new(big_n, n).iter() {
                reports.push(verify_lemma1::<Rational>(big_n, &sigma)?);
            }
            reports.push(verify_partition_of_identity::<Rational>(big_n, n)?);
        }
    }
    Ok(reports)
}

pub fn pythagorean_suite(
    seed: u64,
    count: usize,
    max_order: usize,
    max_dim: usize,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(1..=max_order);
        let big_n = rng.gen_range(n..=max_dim);
        let a = rational_matrix(&mut rng, n, big_n);
        reports.push(verify_pythagorean(&a, None, Some(seed))?);
    }
    Ok(reports)
}

/// Cross-oracle determinant check: the top-compound route against direct
/// elimination, on exact and float matrices.
pub fn det_oracle_suite(
    seed: u64,
    count: usize,
    max_exact_dim: usize,
    max_float_dim: usize,
    tolerance: f64,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..count {
        let d = rng.gen_range(1..=max_exact_dim);
        let m = rational_matrix(&mut rng, d, d);
        let dev = compare_scalars(&det_top_power(&m)?, &m.det_lu()?, None);
        reports.push(IdentityReport::new::<Rational>(
            "det_top_power_vs_det_lu",
            format!("M {d}x{d}"),
            Some(seed),
            None,
            dev,
        ));
    }
    for _ in 0..count {
        let d = rng.gen_range(1..=max_float_dim);
        let m = float_matrix(&mut rng, d, d);
        let dev = compare_scalars(&det_top_power(&m)?, &m.det_lu()?, Some(tolerance));
        reports.push(IdentityReport::new::<f64>(
            "det_top_power_vs_det_lu",
            format!("M {d}x{d}"),
            Some(seed),
            Some(tolerance),
            dev,
        ));
    }
    Ok(reports)
}

pub fn phi_suite(
    seed: u64,
    count: usize,
    max_order: usize,
    max_dim: usize,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(1..=max_order);
        let big_n = rng.gen_range(n..=max_dim);
        let a = rational_matrix(&mut rng, n, big_n);
        let b = rational_matrix(&mut rng, big_n, n);
        reports.push(verify_phi_factorization(&a, &b, None, Some(seed))?);
    }
    Ok(reports)
}

/// Float-backend compound multiplicativity, used by the float invariants.
pub fn compound_multiplicativity_float_suite(
    seed: u64,
    count: usize,
    tolerance: f64,
) -> Result<Vec<IdentityReport>> {
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..count {
        let r = rng.gen_range(1..=5);
        let mid = rng.gen_range(1..=5);
        let c = rng.gen_range(1..=5);
        let m = float_matrix(&mut rng, r, mid);
        let k = float_matrix(&mut rng, mid, c);
        let product = m.matmul(&k)?;
        for level in 0..=r.min(mid).min(c) {
            let lhs = compound(&product, level);
            let rhs = compound(&m, level).matmul(&compound(&k, level))?;
            let dev = compare_matrices(&lhs, &rhs, Some(tolerance));
            reports.push(IdentityReport::new::<f64>(
                "compound_multiplicativity",
                format!("M {r}x{mid}, K {mid}x{c}, level {level}"),
                Some(seed),
                Some(tolerance),
                dev,
            ));
        }
    }
    Ok(reports)
}

/// Rank detection via minors: the level-n compound vanishes exactly when the
/// rank is below n.
pub fn compound_rank_suite(seed: u64, count: usize) -> Result<Vec<IdentityReport>> {
    use crate::report::Deviation;
    use num_traits::Zero;
    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..count {
        // rank-deficient square matrix built as a thin product
        let d = rng.gen_range(2..=5);
        let rank = rng.gen_range(1..d);
        let left: Matrix<Rational> = rational_matrix(&mut rng, d, rank);
        let right: Matrix<Rational> = rational_matrix(&mut rng, rank, d);
        let m = left.matmul(&right)?;
        let above = compound(&m, rank + 1);
        let all_zero = above.entries().all(Zero::is_zero);
        let dev = if all_zero {
            Deviation::exact_pass()
        } else {
            Deviation {
                value: 1.0,
                display: "nonzero minor above the rank".into(),
                passed: false,
            }
        };
        reports.push(IdentityReport::new::<Rational>(
            "compound_rank_vanishing",
            format!("M {d}x{d}, rank {rank}"),
            Some(seed),
            None,
            dev,
        ));
    }
    Ok(reports)
}

pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
