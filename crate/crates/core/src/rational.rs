//! Exact scalars and the handful of combinatorial helpers built on them.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. Its `Display` prints `p/q`, or
//! just `p` for integers, which is exactly the textual form used by the JSON
//! formats.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` in lowest terms. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`. Surrounding whitespace is ignored; floats are
/// rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Usage(format!("invalid rational {s:?}: {e}")))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Generalized binomial coefficient `x(x-1)...(x-j+1)/j!` for rational `x`.
pub fn binomial(upper: &Rational, j: u64) -> Rational {
    let mut num = Rational::one();
    let mut k = Rational::zero();
    for _ in 0..j {
        num *= upper - &k;
        k += Rational::one();
    }
    num / Rational::from_integer(factorial(j))
}

/// Binomial coefficient with integer (possibly negative) upper argument.
/// Returns 0 for negative `j`.
pub fn binomial_int(upper: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    binomial(&rat(upper), j as u64).to_integer()
}

/// `(-1)^e` as a small integer.
pub fn sign(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Integer power `base^e` for any `e`; `0^0 = 1`. Panics on `0^(negative)`.
pub fn pow_int(base: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Odd double factorial `(2n-1)!! = 1*3*...*(2n-1)`, with `(-1)!! = 1`.
pub fn odd_double_factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

/// Catalan number `binom(2n, n)/(n+1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial_int(2 * n as i64, n as i64) / (n + 1)
}

/// Demands an integral value; a fractional one means some formula route
/// went wrong, so it is reported instead of rounded.
pub fn expect_integer(value: &Rational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::Consistency(format!(
            "{what}: expected an integer, got {value}"
        )))
    }
}

/// Like [`expect_integer`] but also rejects negatives.
pub fn expect_natural(value: &Rational, what: &str) -> Result<BigInt> {
    let v = expect_integer(value, what)?;
    if v.is_negative() {
        return Err(Error::Consistency(format!(
            "{what}: expected a non-negative integer, got {v}"
        )));
    }
    Ok(v)
}
