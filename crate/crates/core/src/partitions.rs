//! Multiplicity vectors `(k_1, ..., k_n)` with `k_1 + 2k_2 + ... + n k_n = n`.
//!
//! Each vector encodes one integer partition of `n` (part `i` used `k_i`
//! times). They are the index set of every partition sum in the crate.
//!
//! Enumeration order is fixed: ascending lexicographic order of the reversed
//! vector `(k_n, ..., k_1)`. For `n = 4` that is
//! `1+1+1+1, 2+1+1, 2+2, 3+1, 4`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::factorial;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    /// `k[i - 1]` is the multiplicity of part `i`; length is always `n`.
    k: Vec<u64>,
}

impl MultiplicityVector {
    /// Checked constructor; returns `None` unless `sum i*k_i == k.len()`.
    pub fn new(k: Vec<u64>) -> Option<Self> {
        let total: u64 = k.iter().enumerate().map(|(i, &m)| (i as u64 + 1) * m).sum();
        (total == k.len() as u64).then_some(MultiplicityVector { k })
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    /// Multiplicities, `as_slice()[i - 1] = k_i`.
    pub fn as_slice(&self) -> &[u64] {
        &self.k
    }

    /// Multiplicity of part `i` (1-based); 0 when `i` is out of range.
    pub fn k(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.k.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of parts, `k_1 + ... + k_n`.
    pub fn weight(&self) -> u64 {
        self.k.iter().sum()
    }

    /// `k_1! k_2! ... k_n!`
    pub fn multiplicity_factorials(&self) -> BigInt {
        self.k.iter().map(|&m| factorial(m)).product()
    }

    /// `(i, k_i)` for every part that occurs.
    pub fn parts(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.k
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }
}

impl std::fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.k.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Iterator over all multiplicity vectors of `n` in the documented order.
#[derive(Debug, Clone)]
pub struct MultiplicityVectors {
    current: Option<Vec<u64>>,
}

impl Iterator for MultiplicityVectors {
    type Item = MultiplicityVector;

    fn next(&mut self) -> Option<MultiplicityVector> {
        let k = self.current.take()?;
        self.current = successor(&k);
        Some(MultiplicityVector { k })
    }
}

/// Next vector in reversed-lexicographic order: bump the smallest part size
/// `i >= 2` whose smaller parts hold at least `i` units, clear parts
/// `2..i`, and pour what is left into `k_1`.
fn successor(k: &[u64]) -> Option<Vec<u64>> {
    let mut held = k.first().copied()?;
    for i in 2..=k.len() {
        let size = i as u64;
        if held >= size {
            let mut next = k.to_vec();
            next[i - 1] += 1;
            for slot in next.iter_mut().take(i - 1).skip(1) {
                *slot = 0;
            }
            next[0] = held - size;
            return Some(next);
        }
        held += size * k[i - 1];
    }
    None
}

/// Every solution of `k_1 + 2k_2 + ... + n k_n = n`, each exactly once.
/// `n = 0` yields a single empty vector.
pub fn enumerate_multiplicity_vectors(n: usize) -> MultiplicityVectors {
    let mut first = vec![0; n];
    if n > 0 {
        first[0] = n as u64;
    }
    MultiplicityVectors {
        current: Some(first),
    }
}

/// Partition numbers `p(0..=n)` from Euler's pentagonal number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::from(1);
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = p[m - g1].clone();
            if g2 <= m {
                term += &p[m - g2];
            }
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = acc;
    }
    p
}

/// `p(n)`, independent of the enumerator.
pub fn partition_count(n: usize) -> BigInt {
    partition_counts(n).pop().expect("non-empty")
}
