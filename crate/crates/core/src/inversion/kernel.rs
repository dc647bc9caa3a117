//! Lower-triangular transform kernels built from powers of a series `f`.
//!
//! For `f(0) = c_0 != 0` the pair
//!
//! ```text
//! a_n = n   * sum_{m=1..n} [x^{n-m}] f(x)^m    * b_m
//! b_n = 1/n * sum_{m=1..n} [x^{n-m}] f(x)^{-n} * a_m
//! ```
//!
//! are mutually inverse. A [`TransformKernel`] stores the bracketed
//! coefficients for one direction; [`transform_apply`] adds the `n` or `1/n`
//! factor.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::Sequence;
use crate::error::{domain, usage, Error, Result};
use crate::rational::{binomial, factorial, pow_int, rat, Rational};
use crate::series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Entries `[x^{n-m}] f^m`.
    Forward,
    /// Entries `[x^{n-m}] f^{-n}`.
    Inverse,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fwd" | "forward" => Ok(Direction::Forward),
            "inv" | "inverse" => Ok(Direction::Inverse),
            _ => usage(format!("unknown direction {s:?}; expected fwd or inv")),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "fwd",
            Direction::Inverse => "inv",
        })
    }
}

/// Entries `K[n][m]` for `1 <= m <= n <= size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformKernel {
    direction: Direction,
    rows: Vec<Vec<Rational>>,
    descriptor: String,
}

impl TransformKernel {
    fn from_fn(
        size: usize,
        direction: Direction,
        descriptor: String,
        mut entry: impl FnMut(usize, usize) -> Rational,
    ) -> Self {
        let rows = (1..=size)
            .map(|n| (1..=n).map(|m| entry(n, m)).collect())
            .collect();
        TransformKernel {
            direction,
            rows,
            descriptor,
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// What produced this kernel, e.g. `"binomial_t t = 1/2, inv"`.
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// `K[n][m]` with 1-based indices; zero above the diagonal.
    pub fn entry(&self, n: usize, m: usize) -> Rational {
        if n == 0 || m == 0 || m > n {
            return Rational::zero();
        }
        self.rows[n - 1][m - 1].clone()
    }
}

/// Kernel of the given direction from the powers of `f`.
pub fn build_kernel(f: &Series, size: usize, direction: Direction) -> Result<TransformKernel> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return domain("transform kernel needs f(0) != 0");
    }
    if size == 0 {
        return Ok(TransformKernel::from_fn(0, direction, String::new(), |_, _| rat(0)));
    }
    if f.order() + 1 < size {
        return usage(format!(
            "kernel of size {size} needs a series of order >= {}, got {}",
            size - 1,
            f.order()
        ));
    }
    let f = f.truncate(size - 1)?;
    // Column powers (forward) or row powers (inverse), one exponent per index.
    let powers = (1..=size as i64)
        .map(|j| match direction {
            Direction::Forward => f.pow_i(j),
            Direction::Inverse => f.pow_i(-j),
        })
        .collect::<Result<Vec<_>>>()?;
    let descriptor = format!("series f = {f}, {direction}");
    Ok(TransformKernel::from_fn(size, direction, descriptor, |n, m| {
        match direction {
            Direction::Forward => powers[m - 1].coeff(n - m).clone(),
            Direction::Inverse => powers[n - 1].coeff(n - m).clone(),
        }
    }))
}

/// Closed form for `f = (1+x)^t`: `binom(mt, n-m)` forward and
/// `binom(-nt, n-m)` inverse.
pub fn binomial_kernel(t: &Rational, size: usize, direction: Direction) -> TransformKernel {
    let descriptor = format!("binomial_t t = {t}, {direction}");
    TransformKernel::from_fn(size, direction, descriptor, |n, m| {
        let upper = match direction {
            Direction::Forward => rat(m as i64) * t,
            Direction::Inverse => -rat(n as i64) * t,
        };
        binomial(&upper, (n - m) as u64)
    })
}

/// Closed form for `f = e^x`: `m^{n-m}/(n-m)!` forward and
/// `(-n)^{n-m}/(n-m)!` inverse.
pub fn exponential_kernel(size: usize, direction: Direction) -> TransformKernel {
    let descriptor = format!("exp, {direction}");
    TransformKernel::from_fn(size, direction, descriptor, |n, m| {
        let base = match direction {
            Direction::Forward => rat(m as i64),
            Direction::Inverse => rat(-(n as i64)),
        };
        pow_int(&base, (n - m) as i64) / Rational::from_integer(factorial((n - m) as u64))
    })
}

/// Applies one direction of the pair to a 1-based sequence. The result has
/// length `min(kernel.size(), s.len())`.
pub fn transform_apply(kernel: &TransformKernel, s: &Sequence) -> Result<Sequence> {
    if s.offset() != 1 {
        return usage("transforms act on sequences starting at index 1");
    }
    let len = kernel.size().min(s.len());
    let out = (1..=len)
        .map(|n| {
            let sum = (1..=n).fold(Rational::zero(), |acc, m| {
                acc + kernel.entry(n, m) * &s.values()[m - 1]
            });
            match kernel.direction() {
                Direction::Forward => sum * rat(n as i64),
                Direction::Inverse => sum / rat(n as i64),
            }
        })
        .collect();
    Ok(Sequence::one_based(out))
}

/// Integer-friendly rescaling of the exponential pair:
///
/// ```text
/// a_n = sum_{m=1..n} binom(n, m) m^{n-m} b_m
/// b_n = sum_{m=1..n} binom(n-1, m-1) (-n)^{n-m} a_m
/// ```
pub fn rescaled_exponential_transform(s: &Sequence, direction: Direction) -> Result<Sequence> {
    if s.offset() != 1 {
        return usage("transforms act on sequences starting at index 1");
    }
    let out = (1..=s.len() as i64)
        .map(|n| {
            (1..=n).fold(Rational::zero(), |acc, m| {
                let c = match direction {
                    Direction::Forward => binomial(&rat(n), (m) as u64) * pow_int(&rat(m), n - m),
                    Direction::Inverse => {
                        binomial(&rat(n - 1), (m - 1) as u64) * pow_int(&rat(-n), n - m)
                    }
                };
                acc + c * &s.values()[(m - 1) as usize]
            })
        })
        .collect();
    Ok(Sequence::one_based(out))
}

fn check_orthogonality_args(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return usage(format!("orthogonality sums need 1 <= k <= n, got k = {k}, n = {n}"));
    }
    Ok(())
}

/// The two sums
///
/// ```text
/// sum_{m=k..n} (1/m) [x^{n-m}] f^m * [x^{m-k}] f^{-m}
/// sum_{m=k..n}  m    [x^{m-k}] f^k * [x^{n-m}] f^{-n}
/// ```
///
/// Both vanish for `k < n`; at `k = n` they are `1/n` and `n`.
/// Needs `f(0) != 0` and `f.order() >= n - k`.
pub fn orthogonality_sums(f: &Series, k: usize, n: usize) -> Result<(Rational, Rational)> {
    check_orthogonality_args(k, n)?;
    if f.coeff(0).is_zero() {
        return domain("orthogonality sums need f(0) != 0");
    }
    if f.order() < n - k {
        return usage(format!("orthogonality sums need order >= {}", n - k));
    }
    let f = f.truncate(n - k)?;
    let f_k = f.pow_i(k as i64)?;
    let f_neg_n = f.pow_i(-(n as i64))?;
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for m in k..=n {
        let mi = m as i64;
        first += f.pow_i(mi)?.coeff(n - m) * f.pow_i(-mi)?.coeff(m - k) / rat(mi);
        second += f_k.coeff(m - k) * f_neg_n.coeff(n - m) * rat(mi);
    }
    Ok((first, second))
}

/// [`orthogonality_sums`] for `f = (1+x)^t` written with binomials:
///
/// ```text
/// sum (1/m) binom(mt, n-m) binom(-mt, m-k)
/// sum  m    binom(kt, m-k) binom(-nt, n-m)
/// ```
pub fn binomial_orthogonality_sums(t: &Rational, k: usize, n: usize) -> Result<(Rational, Rational)> {
    check_orthogonality_args(k, n)?;
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for m in k..=n {
        let mt = rat(m as i64) * t;
        first += binomial(&mt, (n - m) as u64) * binomial(&-&mt, (m - k) as u64) / rat(m as i64);
        let kt = rat(k as i64) * t;
        let nt = -rat(n as i64) * t;
        second += binomial(&kt, (m - k) as u64) * binomial(&nt, (n - m) as u64) * rat(m as i64);
    }
    Ok((first, second))
}
