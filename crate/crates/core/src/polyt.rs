//! Polynomials in a formal parameter `t` with rational coefficients.
//!
//! These carry coefficients like `[x^m] f(x)^t`, which are polynomials in `t`
//! of degree at most `m` whenever `f(0) = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{factorial, Rational};

/// Dense polynomial in `t`; `coeffs[j]` multiplies `t^j`. Trailing zeros are
/// always stripped, so the zero polynomial has no coefficients and structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyT {
    coeffs: Vec<Rational>,
}

impl PolyT {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyT { coeffs }
    }

    pub fn zero() -> Self {
        PolyT { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        PolyT::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        PolyT::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c0 + c1*t`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        PolyT::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyT::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Falling factorial `t(t-1)...(t-j+1)`, built one linear factor at a time.
    pub fn falling_factorial(j: usize) -> Self {
        Self::falling_of(&PolyT::t(), j)
    }

    /// `p(p-1)...(p-j+1)` for an arbitrary polynomial `p`.
    pub fn falling_of(p: &PolyT, j: usize) -> Self {
        let mut acc = PolyT::constant(Rational::one());
        let mut shift = Rational::zero();
        for _ in 0..j {
            acc = &acc * &(p - &PolyT::constant(shift.clone()));
            shift += Rational::one();
        }
        acc
    }

    /// Generalized binomial `binom(p, j)` with a polynomial upper argument.
    pub fn binomial(p: &PolyT, j: usize) -> Self {
        let inv = Rational::from_integer(factorial(j as u64)).recip();
        Self::falling_of(p, j).scale(&inv)
    }
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        if self.is_zero() || rhs.is_zero() {
            return PolyT::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyT::new(out)
    }
}

impl fmt::Display for PolyT {
    /// Ascending powers, e.g. `-1/2*t + 1/2*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let coef = if body == "1" { String::new() } else { format!("{body}*") };
            match j {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{j}")?,
            }
        }
        Ok(())
    }
}
