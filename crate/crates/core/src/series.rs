//! Truncated formal power series over the rationals.
//!
//! A [`Series`] of order `N` stores `c_0, ..., c_N` and stands for the class
//! of `c_0 + c_1 x + ... + c_N x^N` modulo `x^{N+1}`. Binary operations demand
//! equal orders; use [`Series::truncate`] or [`Series::pad`] to line operands
//! up explicitly.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, usage, Error, Result};
use crate::partitions::enumerate_multiplicity_vectors;
use crate::polyt::PolyT;
use crate::rational::{binomial, factorial, odd_double_factorial, parse_rational, pow_int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct Series {
    coeffs: Vec<Rational>,
}

/// Wire form: `{"order": N, "coeffs": ["c0", "c1", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl TryFrom<SeriesJson> for Series {
    type Error = Error;

    fn try_from(json: SeriesJson) -> Result<Series> {
        if json.coeffs.len() != json.order + 1 {
            return usage(format!(
                "series of order {} needs {} coefficients, got {}",
                json.order,
                json.order + 1,
                json.coeffs.len()
            ));
        }
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()?;
        Series::new(coeffs)
    }
}

impl From<Series> for SeriesJson {
    fn from(s: Series) -> SeriesJson {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs.iter().map(Rational::to_string).collect(),
        }
    }
}

impl Series {
    /// Series whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return usage("a series needs at least one coefficient");
        }
        Ok(Series { coeffs })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Series::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Polynomial given by `coeffs`, zero-padded (or truncated) to `order`.
    pub fn from_poly(coeffs: &[Rational], order: usize) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, Rational::zero());
        Series { coeffs: c }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[x^i]`, or `None` past the truncation order (the value is unknown there).
    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    /// `[x^i]`. Panics if `i > order`.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops the coefficients above `order`. Errors if that would raise the order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return usage(format!(
                "cannot truncate a series of order {} to the larger order {order}",
                self.order()
            ));
        }
        Ok(Series {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Raises the order by appending zeros. Only meaningful when the series is
    /// known to be a polynomial of degree at most its current order.
    pub fn pad(&self, order: usize) -> Self {
        Series::from_poly(&self.coeffs, order.max(self.order()))
    }

    fn check_order(&self, other: &Series, op: &str) -> Result<()> {
        if self.order() != other.order() {
            return usage(format!(
                "{op}: order mismatch ({} vs {})",
                self.order(),
                other.order()
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Self> {
        self.check_order(other, "add")?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Self> {
        self.check_order(other, "sub")?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Series) -> Result<Self> {
        self.check_order(other, "mul")?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// `f / x` for a series with `f(0) = 0`; the result has order `N - 1`.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return domain("cannot divide by x: constant term is nonzero");
        }
        if self.order() == 0 {
            return usage("cannot divide an order-0 series by x");
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `f^e` modulo `x^{N+1}`.
    ///
    /// Integer exponents are allowed for any `f` with `f(0) != 0`, and for
    /// non-negative `e` also when `f(0) = 0`. Non-integer exponents require
    /// `f(0) = 1`, otherwise the result leaves the rationals.
    pub fn pow(&self, e: &Rational) -> Result<Self> {
        let n = self.order();
        if e.is_zero() {
            return Ok(Series::one(n));
        }
        let c0 = &self.coeffs[0];
        if !e.is_integer() {
            if !c0.is_one() {
                return domain(format!(
                    "rational exponent {e} needs constant term 1, found {c0}"
                ));
            }
            return Ok(self.pow_recurrence(e, Rational::one()));
        }
        let ei = e
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Usage(format!("exponent {e} is too large")))?;
        if !c0.is_zero() {
            return Ok(self.pow_recurrence(e, pow_int(c0, ei)));
        }
        if ei < 0 {
            return domain("negative power of a series with zero constant term");
        }
        // f = x^v h with h(0) != 0, so f^e = x^{v e} h^e.
        let Some(v) = self.valuation() else {
            return Ok(Series::zero(n));
        };
        let shift = v as u64 * ei as u64;
        if shift > n as u64 {
            return Ok(Series::zero(n));
        }
        let shift = shift as usize;
        let h = Series {
            coeffs: self.coeffs[v..=v + (n - shift)].to_vec(),
        };
        let h0 = h.coeffs[0].clone();
        let he = h.pow_recurrence(e, pow_int(&h0, ei));
        let mut out = Series::zero(n);
        out.coeffs[shift..].clone_from_slice(&he.coeffs);
        Ok(out)
    }

    pub fn pow_i(&self, e: i64) -> Result<Self> {
        self.pow(&rat(e))
    }

    /// Coefficients of `g = f^e` from `f g' = e f' g`:
    /// `g_n = 1/(n f_0) * sum_{k=1..n} ((e+1)k - n) f_k g_{n-k}`.
    /// Requires `f_0 != 0`; `g0` is the caller-supplied `f_0^e`.
    fn pow_recurrence(&self, e: &Rational, g0: Rational) -> Self {
        let n = self.order();
        let inv_c0 = self.coeffs[0].recip();
        let e1 = e + Rational::one();
        let mut g = Vec::with_capacity(n + 1);
        g.push(g0);
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let fk = &self.coeffs[k];
                if fk.is_zero() {
                    continue;
                }
                let w = &e1 * rat(k as i64) - rat(m as i64);
                acc += w * fk * &g[m - k];
            }
            g.push(acc * &inv_c0 / rat(m as i64));
        }
        Series { coeffs: g }
    }

    /// `f(g(x))` by Horner's rule. Needs `g(0) = 0`.
    pub fn compose(&self, g: &Series) -> Result<Self> {
        self.check_order(g, "compose")?;
        if !g.coeffs[0].is_zero() {
            return domain("composition f(g) needs g(0) = 0");
        }
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul_unchecked(g);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    fn check_reversible(&self) -> Result<()> {
        if !self.coeffs[0].is_zero() {
            return domain("not reversible: constant term is nonzero");
        }
        if self.order() == 0 || self.coeffs[1].is_zero() {
            return domain("not reversible: linear coefficient is zero");
        }
        Ok(())
    }

    /// Compositional inverse modulo `x^{N+1}`, solved one degree at a time
    /// from `alpha(g(x)) = x`.
    ///
    /// Degree `n` of `alpha(g)` is `a_1 g_n` plus terms involving only
    /// `g_1..g_{n-1}`, so each step is a single division by `a_1`.
    pub fn reverse(&self) -> Result<Self> {
        self.check_reversible()?;
        let n = self.order();
        let a1_inv = self.coeffs[1].recip();
        let mut g = Series::zero(n);
        g.coeffs[1] = a1_inv.clone();
        for m in 2..=n {
            let alpha_m = self.truncate(m)?;
            let g_m = g.truncate(m)?;
            let residual = alpha_m.compose(&g_m)?.coeffs[m].clone();
            g.coeffs[m] = -residual * &a1_inv;
        }
        Ok(g)
    }
}

/// `[x^n] (alpha^{-1}(x))^k` by Lagrange inversion,
/// `(k/n) [x^{n-k}] (alpha(x)/x)^{-n}`, without forming the inverse series.
///
/// Returns 0 when `k > n`.
pub fn lagrange_coefficient(alpha: &Series, n: usize, k: usize) -> Result<Rational> {
    alpha.check_reversible()?;
    if n == 0 || k == 0 {
        return usage("lagrange_coefficient needs n >= 1 and k >= 1");
    }
    if n > alpha.order() {
        return usage(format!(
            "coefficient x^{n} is beyond the series order {}",
            alpha.order()
        ));
    }
    if k > n {
        return Ok(Rational::zero());
    }
    let a1 = alpha.coeffs[1].clone();
    // alpha/x = a1 * u with u(0) = 1, so (alpha/x)^{-n} = a1^{-n} u^{-n}.
    let u = alpha.div_x()?.scale(&a1.recip());
    let u_pow = u.truncate(n - k)?.pow_i(-(n as i64))?;
    Ok(u_pow.coeffs[n - k].clone() * pow_int(&a1, -(n as i64)) * rat(k as i64) / rat(n as i64))
}

/// `[x^m] f(x)^t` as a polynomial in `t`, for `f(0) = 1`:
///
/// `sum over k_1 + 2k_2 + ... + m k_m = m` of
/// `t(t-1)...(t-K+1) / (k_1! ... k_m!) * a_1^{k_1} ... a_m^{k_m}`
/// with `K = k_1 + ... + k_m`.
pub fn coeff_pow_poly_t(f: &Series, m: usize) -> Result<PolyT> {
    if !f.coeffs[0].is_one() {
        return domain(format!(
            "coeff_pow_poly_t needs constant term 1, found {}",
            f.coeffs[0]
        ));
    }
    if m > f.order() {
        return usage(format!("m = {m} exceeds the series order {}", f.order()));
    }
    let mut falling = vec![PolyT::constant(Rational::one())];
    for j in 0..m {
        let next = &falling[j] * &PolyT::linear(-rat(j as i64), Rational::one());
        falling.push(next);
    }
    let mut acc = PolyT::zero();
    for v in enumerate_multiplicity_vectors(m) {
        let mut scalar = Rational::from_integer(v.multiplicity_factorials()).recip();
        for (i, ki) in v.parts() {
            scalar *= pow_int(&f.coeffs[i], ki as i64);
        }
        if scalar.is_zero() {
            continue;
        }
        acc = &acc + &falling[v.weight() as usize].scale(&scalar);
    }
    Ok(acc)
}

/// Catalogue of closed-form expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSeries {
    /// `e^x`
    Exp,
    /// `e^x - 1`
    ExpMinus1,
    /// `log(1 + x)`
    Log1p,
    Sin,
    Arcsin,
    /// `x / (1 - x)`
    Geom,
    /// `x / (1 + x)^2`, whose inverse generates the Catalan numbers.
    CatalanBeta,
    /// `(1 + x)^t`; needs the parameter `t`.
    BinomialT,
    /// `x`
    Identity,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 9] = [
        NamedSeries::Exp,
        NamedSeries::ExpMinus1,
        NamedSeries::Log1p,
        NamedSeries::Sin,
        NamedSeries::Arcsin,
        NamedSeries::Geom,
        NamedSeries::CatalanBeta,
        NamedSeries::BinomialT,
        NamedSeries::Identity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSeries::Exp => "exp",
            NamedSeries::ExpMinus1 => "exp_minus_1",
            NamedSeries::Log1p => "log1p",
            NamedSeries::Sin => "sin",
            NamedSeries::Arcsin => "arcsin",
            NamedSeries::Geom => "geom",
            NamedSeries::CatalanBeta => "catalan_beta",
            NamedSeries::BinomialT => "binomial_t",
            NamedSeries::Identity => "identity",
        }
    }

    /// Expansion to order `n`. `param` is `t` for [`NamedSeries::BinomialT`]
    /// and ignored otherwise.
    pub fn series(self, n: usize, param: Option<&Rational>) -> Result<Series> {
        let term = |i: usize| -> Result<Rational> {
            let iu = i as u64;
            let inv_fact = || Rational::from_integer(factorial(iu)).recip();
            Ok(match self {
                NamedSeries::Exp => inv_fact(),
                NamedSeries::ExpMinus1 if i == 0 => Rational::zero(),
                NamedSeries::ExpMinus1 => inv_fact(),
                NamedSeries::Log1p if i == 0 => Rational::zero(),
                NamedSeries::Log1p => rat(if i % 2 == 1 { 1 } else { -1 }) / rat(i as i64),
                NamedSeries::Sin if i.is_multiple_of(2) => Rational::zero(),
                NamedSeries::Sin => rat(if i % 4 == 1 { 1 } else { -1 }) * inv_fact(),
                NamedSeries::Arcsin if i.is_multiple_of(2) => Rational::zero(),
                NamedSeries::Arcsin => {
                    // (2j-1)!! / ((2j+1) (2j)!!), (2j)!! = 2^j j!
                    let j = iu / 2;
                    let even_df = factorial(j) * num_bigint::BigInt::from(2u32).pow(j as u32);
                    Rational::new(odd_double_factorial(j), even_df * (2 * j + 1))
                }
                NamedSeries::Geom => rat(i.min(1) as i64),
                NamedSeries::CatalanBeta if i == 0 => Rational::zero(),
                NamedSeries::CatalanBeta => rat(if i % 2 == 1 { i as i64 } else { -(i as i64) }),
                NamedSeries::BinomialT => {
                    let t = param.ok_or_else(|| {
                        Error::Usage("binomial_t needs the parameter t".to_string())
                    })?;
                    binomial(t, iu)
                }
                NamedSeries::Identity => rat((i == 1) as i64),
            })
        };
        Series::new((0..=n).map(term).collect::<Result<Vec<_>>>()?)
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedSeries::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = NamedSeries::ALL.iter().map(|n| n.name()).collect();
                Error::Usage(format!("unknown series {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Looks a series up by name; see [`NamedSeries`].
pub fn named_series(name: &str, order: usize, param: Option<&Rational>) -> Result<Series> {
    name.parse::<NamedSeries>()?.series(order, param)
}

impl fmt::Display for Series {
    /// Human-readable form such as `1 + 1/2*x - 1/8*x^2 + O(x^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = c.abs().to_string();
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let coef = if body == "1" { String::new() } else { format!("{body}*") };
            match i {
                0 => write!(f, "{sep}{body}")?,
                1 => write!(f, "{sep}{coef}x")?,
                _ => write!(f, "{sep}{coef}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
