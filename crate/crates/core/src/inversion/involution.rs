//! The involution with kernel
//! `A_k(n, m) = (-1)^{n/k} binom(m/k, n/k)` when `k | n`, and `0` otherwise.
//!
//! Summed over all `m` the transform is only a finite sum when the input
//! vanishes off the multiples of `k`. That is the domain accepted here; on it
//! the transform is the classical binomial involution acting on the
//! compressed sequence `(s_0, s_k, s_2k, ...)`.

use num_traits::Zero;

use super::Sequence;
use crate::error::{domain, usage, Result};
use crate::rational::{binomial_int, rat, sign, Rational};

/// `t_n = sum_m A_k(n, m) s_m` for `n` in the index range of `s`.
///
/// `s` must start at index 0 and be supported on multiples of `k`; anything
/// else is a domain error because the defining sum would not terminate.
pub fn involution_k(k: usize, s: &Sequence) -> Result<Sequence> {
    if k == 0 {
        return usage("involution needs k >= 1");
    }
    if s.offset() != 0 {
        return usage("the involution acts on sequences starting at index 0");
    }
    if let Some(bad) = s
        .values()
        .iter()
        .enumerate()
        .find(|(m, v)| m % k != 0 && !v.is_zero())
        .map(|(m, _)| m)
    {
        return domain(format!(
            "sequence is nonzero at index {bad}, which is not a multiple of k = {k}; \
             the transform is only a finite sum on sequences supported on multiples of k"
        ));
    }
    let support: Vec<(i64, &Rational)> = s
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| ((m / k) as i64, v))
        .collect();
    let out = (0..s.len())
        .map(|n| {
            if n % k != 0 {
                return Rational::zero();
            }
            let j = (n / k) as i64;
            let acc = support.iter().fold(Rational::zero(), |acc, (mk, v)| {
                acc + Rational::from_integer(binomial_int(*mk, j)) * *v
            });
            acc * rat(sign(j as u64))
        })
        .collect();
    Ok(Sequence::zero_based(out))
}
