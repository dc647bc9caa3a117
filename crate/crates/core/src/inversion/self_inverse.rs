//! Series `a(x) = -x + a_1 x^2 + a_2 x^3 + ...` with `a(a(x)) = x`.
//!
//! Feeding such a series to its own inverse-pair formula gives, for each
//! `n >= 1`, with the sum over multiplicity vectors of `n` that do not use
//! the part `n` itself:
//!
//! ```text
//! sum (K+n)!/(k_1!...k_{n-1}!) a_1^{k_1}...a_{n-1}^{k_{n-1}}
//!     = 0                    if n is odd
//!     = -2 (n+1)! a_n        if n is even
//! ```
//!
//! The left side only involves `a_1..a_{n-1}`, so walking `n` upward fixes
//! every even coefficient from the odd ones, while the odd rows are
//! consistency checks.

use num_traits::Zero;

use super::reversion::{negated_identity_series, weighted_partition_sum};
use crate::error::{usage, Error, Result};
use crate::rational::{factorial, rat, Rational};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelfInverseSeries {
    /// `a_1..a_N`; `a_j` multiplies `x^{j+1}`.
    coeffs: Vec<Rational>,
}

impl SelfInverseSeries {
    /// `N`, the number of tail coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `a_j`, 1-based.
    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j - 1]
    }

    /// `-x + a_1 x^2 + ... + a_N x^{N+1}`, order `N + 1`.
    pub fn to_series(&self) -> Series {
        negated_identity_series(&self.coeffs)
    }

    /// `a(a(x)) == x` modulo `x^{N+2}`.
    pub fn is_involution(&self) -> bool {
        let s = self.to_series();
        s.compose(&s).is_ok_and(|c| c == Series::x(s.order()))
    }
}

/// Left side of the constraint at `n`, from `a_1..a_{n-1}`.
pub fn self_inverse_constraint_sum(coeffs: &[Rational], n: usize) -> Result<Rational> {
    if n == 0 || coeffs.len() + 1 < n {
        return usage(format!("constraint {n} needs coefficients a_1..a_{}", n.saturating_sub(1)));
    }
    let mut padded = coeffs[..n - 1].to_vec();
    padded.push(Rational::zero());
    Ok(weighted_partition_sum(n, &padded, true))
}

/// Completes `a_1..a_N` from the odd-indexed values `a_1, a_3, a_5, ...`.
///
/// `odd` must hold exactly `ceil(N/2)` values.
pub fn self_inverse_complete(odd: &[Rational], order: usize) -> Result<SelfInverseSeries> {
    let expected = order.div_ceil(2);
    if odd.len() != expected {
        return usage(format!(
            "order {order} needs {expected} odd-indexed coefficients, got {}",
            odd.len()
        ));
    }
    let mut coeffs: Vec<Rational> = Vec::with_capacity(order);
    for n in 1..=order {
        let sum = self_inverse_constraint_sum(&coeffs, n)?;
        if n % 2 == 1 {
            if !sum.is_zero() {
                return Err(Error::Consistency(format!(
                    "odd constraint {n} evaluates to {sum} instead of 0"
                )));
            }
            coeffs.push(odd[n / 2].clone());
        } else {
            let scale = rat(-2) * Rational::from_integer(factorial(n as u64 + 1));
            coeffs.push(sum / scale);
        }
    }
    Ok(SelfInverseSeries { coeffs })
}
