//! Partition-sum formulas for coefficients of an inverse series.
//!
//! With `beta(x) = x (b_0 + b_1 x + b_2 x^2 + ...)`, `b_0 != 0`, and
//! `alpha = beta^{-1}`:
//!
//! ```text
//! [x^{m+n}] alpha^m = m/(n+m)! * sum (n+m-1+K)! / (k_1! ... k_n!)
//!                       * (-1)^K b_0^{-n-m-K} b_1^{k_1} ... b_n^{k_n}
//! ```
//!
//! summed over `k_1 + 2k_2 + ... + n k_n = n`, `K = k_1 + ... + k_n`.
//!
//! Specializing to `m = 1` and leading coefficient `-1` yields a formula
//! that maps the tail of `-x + a_1 x^2 + a_2 x^3 + ...` to the tail of its
//! inverse, and is therefore its own inverse ([`inverse_pair_transform`]).

use num_traits::{One, Zero};

use crate::error::{domain, usage, Result};
use crate::partitions::{enumerate_multiplicity_vectors, MultiplicityVector};
use crate::rational::{factorial, pow_int, rat, sign, Rational};
use crate::series::Series;

/// `prod_i coeffs[i]^{k_i}` with 1-based `coeffs` (`coeffs[0]` is `c_1`).
pub(crate) fn monomial(v: &MultiplicityVector, coeffs: &[Rational]) -> Rational {
    v.parts().fold(Rational::one(), |acc, (i, ki)| {
        acc * pow_int(&coeffs[i - 1], ki as i64)
    })
}

/// `[x^{m+n}] alpha(x)^m` where `alpha` is the compositional inverse of `beta`.
pub fn reversion_power_coefficient(beta: &Series, m: usize, n: usize) -> Result<Rational> {
    if m == 0 || n == 0 {
        return usage("reversion_power_coefficient needs m >= 1 and n >= 1");
    }
    if !beta.coeff(0).is_zero() || beta.order() == 0 || beta.coeff(1).is_zero() {
        return domain("beta must look like b_0 x + b_1 x^2 + ... with b_0 != 0");
    }
    if beta.order() < n + 1 {
        return usage(format!("needs beta to order {}, got {}", n + 1, beta.order()));
    }
    let tail = &beta.coeffs()[1..];
    let b0 = &tail[0];
    let shifted = &tail[1..];
    let mut sum = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        let k = v.weight() as i64;
        let mono = monomial(&v, shifted);
        if mono.is_zero() {
            continue;
        }
        let fact = Rational::new(
            factorial((n + m - 1) as u64 + k as u64),
            v.multiplicity_factorials(),
        );
        sum += fact * mono * pow_int(b0, -(n as i64) - m as i64 - k) * rat(sign(k as u64));
    }
    Ok(sum * rat(m as i64) / Rational::from_integer(factorial((n + m) as u64)))
}

/// `(b_1, ..., b_N)` from `(a_1, ..., a_N)` where
/// `-x + b_1 x^2 + ... ` is the inverse of `-x + a_1 x^2 + ...`:
///
/// `b_n = (-1)^{n+1}/(n+1)! * sum (K+n)!/(k_1!...k_n!) a_1^{k_1}...a_n^{k_n}`.
pub fn inverse_pair_transform(alpha: &[Rational], n: usize) -> Result<Vec<Rational>> {
    if alpha.len() < n {
        return usage(format!("need {n} coefficients, got {}", alpha.len()));
    }
    Ok((1..=n)
        .map(|j| {
            let sum = weighted_partition_sum(j, alpha, false);
            sum * rat(sign(j as u64 + 1)) / Rational::from_integer(factorial(j as u64 + 1))
        })
        .collect())
}

/// `sum (K+n)!/(k_1!...k_n!) a_1^{k_1}...a_n^{k_n}` over multiplicity vectors
/// of `n`, optionally leaving out the single-part vector `k_n = 1`.
pub(crate) fn weighted_partition_sum(n: usize, coeffs: &[Rational], skip_single_part: bool) -> Rational {
    let mut sum = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        if skip_single_part && v.k(n) == 1 {
            continue;
        }
        let mono = monomial(&v, coeffs);
        if mono.is_zero() {
            continue;
        }
        let k = v.weight();
        sum += Rational::new(factorial(k + n as u64), v.multiplicity_factorials()) * mono;
    }
    sum
}

/// `-x + a_1 x^2 + ... + a_N x^{N+1}` as a series of order `N + 1`.
pub fn negated_identity_series(tail: &[Rational]) -> Series {
    let mut c = vec![Rational::zero(), -Rational::one()];
    c.extend_from_slice(tail);
    Series::new(c).expect("non-empty")
}

/// Inverse of [`negated_identity_series`]: the tail `(a_1, ..., a_{order-1})`.
pub fn from_negated_identity(s: &Series) -> Result<Vec<Rational>> {
    if s.order() == 0 || !s.coeff(0).is_zero() || *s.coeff(1) != -Rational::one() {
        return domain("series does not start with -x");
    }
    Ok(s.coeffs()[2..].to_vec())
}
