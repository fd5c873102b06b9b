//! Deterministic reduction of per-subset terms.
//!
//! The default is a sequential left fold in lexicographic term order. The
//! pairwise mode reduces over a fixed balanced tree, optionally splitting
//! across threads; the tree shape does not depend on the thread count, so
//! float results are identical at any parallelism level.

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reduction {
    #[default]
    Sequential,
    Pairwise,
}

const PARALLEL_CUTOFF: usize = 256;

pub fn reduce_terms<T: Scalar>(terms: Vec<T>, mode: Reduction) -> T {
    match mode {
        Reduction::Sequential => terms.into_iter().fold(T::zero(), |acc, t| acc + t),
        Reduction::Pairwise => pairwise(&terms),
    }
}

fn pairwise<T: Scalar>(terms: &[T]) -> T {
    match terms.len() {
        0 => T::zero(),
        1 => terms[0].clone(),
        n if n <= PARALLEL_CUTOFF => {
            let (lo, hi) = terms.split_at(n / 2);
            pairwise_seq(lo) + pairwise_seq(hi)
        }
        n => {
            let (lo, hi) = terms.split_at(n / 2);
            let (a, b) = rayon::join(|| pairwise(lo), || pairwise(hi));
            a + b
        }
    }
}

fn pairwise_seq<T: Scalar>(terms: &[T]) -> T {
    match terms.len() {
        0 => T::zero(),
        1 => terms[0].clone(),
        n => {
            let (lo, hi) = terms.split_at(n / 2);
            pairwise_seq(lo) + pairwise_seq(hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn modes_agree_exactly_on_rationals() {
        let terms: Vec<Rational> = (1..=1000).map(Rational::from_int).collect();
        let seq = reduce_terms(terms.clone(), Reduction::Sequential);
        let tree = reduce_terms(terms, Reduction::Pairwise);
        assert_eq!(seq, tree);
        assert_eq!(seq, Rational::from_int(500500));
    }

    #[test]
    fn pairwise_is_reproducible_on_floats() {
        let terms: Vec<f64> = (0..5000).map(|i| ((i * 37) % 101) as f64 * 1e-3).collect();
        let a = reduce_terms(terms.clone(), Reduction::Pairwise);
        let b = reduce_terms(terms, Reduction::Pairwise);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(reduce_terms(Vec::<f64>::new(), Reduction::Sequential), 0.0);
        assert_eq!(reduce_terms(Vec::<f64>::new(), Reduction::Pairwise), 0.0);
    }
}
