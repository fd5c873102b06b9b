//! Strictly increasing index tuples, their lexicographic enumeration, and the
//! combinatorial number system rank/unrank bijection.

use crate::error::{Error, Result};
use std::fmt;

/// C(n, k), exact for desk-scale arguments. Returns 0 when k > n.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - (k - i)) / i;
    }
    result as usize
}

/// A strictly increasing tuple of indices into `{0, ..., ambient-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(IndexSet { indices })
    }

    pub fn empty() -> Self {
        IndexSet { indices: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        IndexSet {
            indices: (0..n).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    pub fn check_ambient(&self, ambient: usize) -> Result<()> {
        match self.indices.last() {
            Some(&max) if max >= ambient => Err(Error::IndexOutOfRange {
                index: max,
                ambient,
            }),
            _ => Ok(()),
        }
    }

    /// Complement within `{0, ..., ambient-1}`, in increasing order.
    pub fn complement(&self, ambient: usize) -> IndexSet {
        IndexSet {
            indices: (0..ambient).filter(|i| !self.contains(*i)).collect(),
        }
    }

    /// Lexicographic rank among all subsets of the same size drawn from
    /// `{0, ..., ambient-1}` (combinatorial number system).
    pub fn rank(&self, ambient: usize) -> Result<usize> {
        self.check_ambient(ambient)?;
        let k = self.indices.len();
        let mut rank = 0usize;
        let mut start = 0usize;
        for (i, &c) in self.indices.iter().enumerate() {
            for j in start..c {
                rank += binomial(ambient - j - 1, k - i - 1);
            }
            start = c + 1;
        }
        Ok(rank)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, idx) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "}}")
    }
}

/// Inverse of [`IndexSet::rank`].
pub fn unrank(ambient: usize, size: usize, rank: usize) -> Result<IndexSet> {
    let count = binomial(ambient, size);
    if rank >= count {
        return Err(Error::RankOutOfRange {
            rank,
            ambient,
            size,
            count,
        });
    }
    let mut rank = rank;
    let mut indices = Vec::with_capacity(size);
    let mut next = 0usize;
    for i in 0..size {
        let mut c = next;
        loop {
            let below = binomial(ambient - c - 1, size - i - 1);
            if below <= rank {
                rank -= below;
                c += 1;
            } else {
                indices.push(c);
                next = c + 1;
                break;
            }
        }
    }
    Ok(IndexSet { indices })
}

/// All size-`n` subsets of `{0, ..., ambient-1}` in lexicographic order.
#[derive(Clone, Copy, Debug)]
pub struct SubsetFamily {
    pub ambient: usize,
    pub size: usize,
}

impl SubsetFamily {
    pub fn new(ambient: usize, size: usize) -> Self {
        SubsetFamily { ambient, size }
    }

    pub fn count(&self) -> usize {
        binomial(self.ambient, self.size)
    }

    pub fn iter(&self) -> Subsets {
        let current = if self.size <= self.ambient {
            Some((0..self.size).collect())
        } else {
            None
        };
        Subsets {
            ambient: self.ambient,
            size: self.size,
            current,
        }
    }
}

impl IntoIterator for SubsetFamily {
    type Item = IndexSet;
    type IntoIter = Subsets;

    fn into_iter(self) -> Subsets {
        self.iter()
    }
}

pub struct Subsets {
    ambient: usize,
    size: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        let current = self.current.take()?;
        let out = IndexSet {
            indices: current.clone(),
        };
        // Lexicographic successor: bump the rightmost index with headroom.
        let mut next = current;
        let mut i = self.size;
        while i > 0 {
            i -= 1;
            if next[i] < self.ambient - (self.size - i) {
                next[i] += 1;
                for j in i + 1..self.size {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}
