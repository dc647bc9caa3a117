//! Stirling numbers of both kinds, computed by independent routes.
//!
//! `s(n, k)` is the unsigned Stirling number of the first kind (permutations
//! of `n` with `k` cycles) and `S(n, k)` the Stirling number of the second kind
//! (partitions of an `n`-set into `k` blocks). The triangular recurrences are
//! the reference; the generating-function, partition-sum and shift routes are
//! checked against them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, usage, Error, Result};
use crate::partitions::enumerate_multiplicity_vectors;
use crate::rational::{binomial_int, expect_natural, factorial, rat, sign, Rational};
use crate::series::{NamedSeries, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Unsigned first kind, `s(n, k)`.
    FirstUnsigned,
    /// Second kind, `S(n, k)`.
    Second,
}

impl StirlingKind {
    /// The exponential generating base: `(base)^m / m!` generates column `m`
    /// (with alternating signs for the first kind).
    pub fn egf_base(self) -> NamedSeries {
        match self {
            StirlingKind::FirstUnsigned => NamedSeries::Log1p,
            StirlingKind::Second => NamedSeries::ExpMinus1,
        }
    }
}

impl FromStr for StirlingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "first" => Ok(StirlingKind::FirstUnsigned),
            "2" | "second" => Ok(StirlingKind::Second),
            _ => usage(format!("unknown Stirling kind {s:?}; expected 1 or 2")),
        }
    }
}

impl fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StirlingKind::FirstUnsigned => "1",
            StirlingKind::Second => "2",
        })
    }
}

/// Triangle of Stirling numbers for `0 <= k <= n <= max_n`, filled once from
/// the recurrences and read-only afterwards:
///
/// * `S(n, k) = S(n-1, k-1) + k S(n-1, k)`
/// * `s(n, k) = s(n-1, k-1) + (n-1) s(n-1, k)`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn build(kind: StirlingKind, max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let diag = &prev[k - 1];
                let side = prev.get(k).cloned().unwrap_or_default();
                let mult = match kind {
                    StirlingKind::Second => k,
                    StirlingKind::FirstUnsigned => n - 1,
                };
                row[k] = diag + side * mult;
            }
            rows.push(row);
        }
        StirlingTable { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`, or `None` if `k > n` or `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.rows.get(n)?.get(k)
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }
}

/// Reference value from the triangular recurrence.
pub fn stirling_recurrence(kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return usage(format!("Stirling number needs k <= n, got n = {n}, k = {k}"));
    }
    Ok(StirlingTable::build(kind, n).rows[n][k].clone())
}

/// `n! [x^n] base(x)^m / m!`, sign-corrected for the first kind.
pub fn stirling_via_gf(kind: StirlingKind, n: usize, m: usize) -> Result<BigInt> {
    if m > n {
        return usage(format!("Stirling number needs m <= n, got n = {n}, m = {m}"));
    }
    let base = kind.egf_base().series(n, None)?;
    let coeff = base.pow_i(m as i64)?.coeff(n).clone();
    let mut value = coeff * Rational::from_integer(factorial(n as u64))
        / Rational::from_integer(factorial(m as u64));
    if kind == StirlingKind::FirstUnsigned {
        value *= rat(sign((n - m) as u64));
    }
    expect_natural(&value, "generating-function route")
}

/// `S(n+m, m)` or `s(n+m, m)` as a sum over partitions of `n`:
///
/// `(-1)^n / (m-1)! * sum (-1)^K (K+n+m-1)! / prod_i (w_i^{k_i} k_i!)`
///
/// where `K = k_1 + ... + k_n` and the part weight is `w_i = i+1` for the
/// second kind, `w_i = (i+1)!` for the first.
///
/// `n = 0` is accepted and gives 1 (the empty partition).
pub fn stirling_partition_formula(kind: StirlingKind, n: usize, m: usize) -> Result<BigInt> {
    if m == 0 {
        return usage("partition formula needs m >= 1");
    }
    let mut sum = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        let weight = v.weight();
        let mut den = v.multiplicity_factorials();
        for (i, ki) in v.parts() {
            let w = match kind {
                StirlingKind::Second => BigInt::from(i + 1),
                StirlingKind::FirstUnsigned => factorial(i as u64 + 1),
            };
            den *= num_traits::pow(w, ki as usize);
        }
        let num = factorial(weight + (n + m) as u64 - 1) * sign(weight);
        sum += Rational::new(num, den);
    }
    let value = sum * rat(sign(n as u64)) / Rational::from_integer(factorial(m as u64 - 1));
    expect_natural(&value, "partition-sum route")
}

/// `S(n+k, n)` (or `s(n+k, n)`) from the column values `S(k+r, r)`,
/// `1 <= r <= k`:
///
/// `sum_{r=1..k} binom(k-n, k-r) binom(k+n, k+r) S(k+r, r)`.
///
/// The first binomial has a possibly negative upper argument and is taken in
/// the generalized sense.
pub fn stirling_shift(kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return usage("shift identity needs n >= 1 and k >= 1");
    }
    let table = StirlingTable::build(kind, 2 * k);
    let (ni, ki) = (n as i64, k as i64);
    let mut acc = BigInt::zero();
    for r in 1..=ki {
        let c = binomial_int(ki - ni, ki - r) * binomial_int(ki + ni, ki + r);
        acc += c * &table.rows[(ki + r) as usize][r as usize];
    }
    Ok(acc)
}

/// Alternating sum `sum_{r=0..m} binom(m, r) (-1)^{m-r} r^{m+n}`, which counts
/// surjections from an `(m+n)`-set onto an `m`-set.
pub fn surjection_sum(m: usize, n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for r in 0..=m as i64 {
        let term = binomial_int(m as i64, r) * BigInt::from(r).pow((m + n) as u32);
        acc += term * sign((m as i64 - r) as u64);
    }
    acc
}

/// A way of computing `S(n, k)` / `s(n, k)` for given `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingMethod {
    Recurrence,
    Gf,
    Partition,
    Shift,
}

impl StirlingMethod {
    pub const ALL: [StirlingMethod; 4] = [
        StirlingMethod::Recurrence,
        StirlingMethod::Gf,
        StirlingMethod::Partition,
        StirlingMethod::Shift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StirlingMethod::Recurrence => "recurrence",
            StirlingMethod::Gf => "gf",
            StirlingMethod::Partition => "partition",
            StirlingMethod::Shift => "shift",
        }
    }

    /// Value of the `(n, k)` entry by this route. Routes that do not cover
    /// the entry (the partition sum for `k = 0`, the shift identity for
    /// `k = 0` or `n = k`) return a usage error.
    pub fn compute(self, kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return usage(format!("Stirling number needs k <= n, got n = {n}, k = {k}"));
        }
        match self {
            StirlingMethod::Recurrence => stirling_recurrence(kind, n, k),
            StirlingMethod::Gf => stirling_via_gf(kind, n, k),
            StirlingMethod::Partition => stirling_partition_formula(kind, n - k, k),
            StirlingMethod::Shift => {
                if n == k {
                    return usage("shift identity does not cover the diagonal n = k");
                }
                stirling_shift(kind, k, n - k)
            }
        }
    }
}

impl FromStr for StirlingMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StirlingMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown method {s:?}")))
    }
}

fn check_egf_base(a: &Series) -> Result<()> {
    if !a.coeff(0).is_zero() || a.order() == 0 || !a.coeff(1).is_one() {
        return domain("EGF triangle base must look like x + a_2 x^2 + ...");
    }
    Ok(())
}

/// `a(n, m) = n!/m! [x^n] a(x)^m`, i.e. `a(x)^m / m! = sum_n a(n, m) x^n / n!`.
pub fn egf_entry(a: &Series, n: usize, m: usize) -> Result<Rational> {
    check_egf_base(a)?;
    if n > a.order() {
        return usage(format!("a({n}, {m}) needs order >= {n}, got {}", a.order()));
    }
    let p = a.truncate(n)?.pow_i(m as i64)?;
    Ok(p.coeff(n).clone() * Rational::from_integer(factorial(n as u64))
        / Rational::from_integer(factorial(m as u64)))
}

/// Lower-triangular array `a(n, m)`, `0 <= m <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfTriangle {
    base: Series,
    rows: Vec<Vec<Rational>>,
}

impl EgfTriangle {
    pub fn build(a: &Series, max_n: usize) -> Result<Self> {
        check_egf_base(a)?;
        let base = a.truncate(max_n).map_err(|_| {
            Error::Usage(format!("triangle up to {max_n} needs order >= {max_n}"))
        })?;
        let mut rows = vec![Vec::new(); max_n + 1];
        let mut power = Series::one(max_n);
        for m in 0..=max_n {
            let inv_mfact = Rational::from_integer(factorial(m as u64)).recip();
            for (n, row) in rows.iter_mut().enumerate().skip(m) {
                let nfact = Rational::from_integer(factorial(n as u64));
                row.push(power.coeff(n) * &nfact * &inv_mfact);
            }
            power = power.mul(&base)?;
        }
        Ok(EgfTriangle { base, rows })
    }

    pub fn base(&self) -> &Series {
        &self.base
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, m: usize) -> Option<&Rational> {
        self.rows.get(n)?.get(m)
    }
}

/// `a(n+k, n)` computed directly from `a(x)^n`.
pub fn egf_triangle_shift(a: &Series, n: usize, k: usize) -> Result<Rational> {
    if n == 0 || k == 0 {
        return usage("egf_triangle_shift needs n >= 1 and k >= 1");
    }
    egf_entry(a, n + k, n)
}

/// `a(n+k, n)` from the entries `a(k+r, r)` through
/// `sum_{r=1..k} binom(k-n, k-r) binom(k+n, k+r) a(k+r, r)`.
pub fn egf_shift_identity(a: &Series, n: usize, k: usize) -> Result<Rational> {
    if n == 0 || k == 0 {
        return usage("egf_shift_identity needs n >= 1 and k >= 1");
    }
    if a.order() < 2 * k {
        return usage(format!("shift identity needs order >= {}", 2 * k));
    }
    let tri = EgfTriangle::build(a, 2 * k)?;
    let (ni, ki) = (n as i64, k as i64);
    let mut acc = Rational::zero();
    for r in 1..=ki {
        let c = binomial_int(ki - ni, ki - r) * binomial_int(ki + ni, ki + r);
        acc += Rational::from_integer(c) * &tri.rows[(ki + r) as usize][r as usize];
    }
    Ok(acc)
}

/// Signed first-kind value `(-1)^{n-k} s(n, k)`.
pub fn signed_first_kind(n: usize, k: usize) -> Result<BigInt> {
    Ok(stirling_recurrence(StirlingKind::FirstUnsigned, n, k)? * sign((n - k) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::series::named_series;
    use StirlingKind::{FirstUnsigned, Second};

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Expands `x^n` into falling factorials by solving a triangular system
    /// at the points `x = 0..n`.
    fn second_kind_from_definition(n: usize) -> Vec<BigInt> {
        // x^n = sum_k S(n,k) x(x-1)...(x-k+1); at x = j only k <= j survive.
        let mut s = vec![BigInt::zero(); n + 1];
        for j in 0..=n {
            let mut rest = BigInt::from(j).pow(n as u32);
            let mut ff = BigInt::one();
            for (k, sk) in s.iter().enumerate().take(j) {
                rest -= sk * &ff;
                ff *= j - k;
            }
            s[j] = rest / ff;
        }
        s
    }

    /// Expands `x(x-1)...(x-n+1)` directly.
    fn first_kind_from_definition(n: usize) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for j in 0..n as i64 {
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * j;
            }
            poly = next;
        }
        poly.iter()
            .enumerate()
            .map(|(k, c)| c * sign((n - k) as u64))
            .collect()
    }

    #[test]
    fn recurrence_matches_definitions() {
        for n in 0..=12 {
            let second = StirlingTable::build(Second, n);
            let first = StirlingTable::build(FirstUnsigned, n);
            assert_eq!(second.row(n).unwrap(), second_kind_from_definition(n).as_slice());
            assert_eq!(first.row(n).unwrap(), first_kind_from_definition(n).as_slice());
        }
        assert_eq!(stirling_recurrence(Second, 4, 2).unwrap(), b(7));
        assert_eq!(stirling_recurrence(FirstUnsigned, 4, 2).unwrap(), b(11));
        assert_eq!(stirling_recurrence(Second, 6, 6).unwrap(), b(1));
        assert!(stirling_recurrence(Second, 2, 3).is_err());
    }

    #[test]
    fn table_invariants() {
        for kind in [Second, FirstUnsigned] {
            let t = StirlingTable::build(kind, 15);
            for n in 0..=15 {
                assert_eq!(t.get(n, n), Some(&b(1)));
                if n >= 1 {
                    assert_eq!(t.get(n, 0), Some(&b(0)));
                }
                assert_eq!(t.row(n).unwrap().len(), n + 1);
            }
        }
    }

    #[test]
    fn generating_function_route() {
        assert_eq!(stirling_via_gf(Second, 5, 2).unwrap(), b(15));
        assert_eq!(stirling_via_gf(FirstUnsigned, 3, 1).unwrap(), b(2));
        assert_eq!(stirling_via_gf(FirstUnsigned, 7, 7).unwrap(), b(1));
        assert_eq!(stirling_via_gf(Second, 4, 0).unwrap(), b(0));
    }

    #[test]
    fn partition_route() {
        assert_eq!(stirling_partition_formula(Second, 1, 4).unwrap(), b(10));
        assert_eq!(stirling_partition_formula(Second, 3, 2).unwrap(), b(15));
        assert_eq!(stirling_partition_formula(FirstUnsigned, 2, 2).unwrap(), b(11));
        assert_eq!(stirling_partition_formula(Second, 0, 3).unwrap(), b(1));
        for m in 1..=10 {
            let binom = binomial_int(m as i64 + 1, 2);
            assert_eq!(stirling_partition_formula(Second, 1, m).unwrap(), binom);
        }
    }

    #[test]
    fn shift_route() {
        assert_eq!(stirling_shift(Second, 3, 2).unwrap(), b(25));
        assert_eq!(stirling_shift(FirstUnsigned, 1, 1).unwrap(), b(1));
        assert_eq!(stirling_shift(Second, 2, 3).unwrap(), b(15));
    }

    #[test]
    fn all_routes_agree_on_small_triangle() {
        for kind in [Second, FirstUnsigned] {
            let table = StirlingTable::build(kind, 14);
            for n in 1..=14 {
                for k in 1..=n {
                    let want = table.get(n, k).unwrap();
                    for method in StirlingMethod::ALL {
                        match method.compute(kind, n, k) {
                            Ok(v) => assert_eq!(&v, want, "{kind} {method:?} ({n},{k})"),
                            Err(_) => assert!(method == StirlingMethod::Shift && n == k),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn surjections() {
        assert_eq!(surjection_sum(2, 1), b(6));
        assert_eq!(surjection_sum(1, 7), b(1));
        assert_eq!(surjection_sum(3, 1), b(36));
        for m in 1..=8 {
            for n in 1..=8 {
                let s = stirling_recurrence(Second, n + m, m).unwrap();
                assert_eq!(surjection_sum(m, n), s * factorial(m as u64));
            }
        }
    }

    /// Lah numbers `n!/m! binom(n-1, m-1)`.
    fn lah(n: usize, m: usize) -> Rational {
        Rational::from_integer(
            factorial(n as u64) / factorial(m as u64) * binomial_int(n as i64 - 1, m as i64 - 1),
        )
    }

    #[test]
    fn egf_triangles() {
        let geom = named_series("geom", 12, None).unwrap();
        assert_eq!(egf_entry(&geom, 3, 2).unwrap(), rat(6));
        let tri = EgfTriangle::build(&geom, 12).unwrap();
        for n in 1..=12 {
            for m in 1..=n {
                assert_eq!(tri.get(n, m).unwrap(), &lah(n, m));
            }
        }

        let expm1 = named_series("exp_minus_1", 12, None).unwrap();
        let second = StirlingTable::build(Second, 12);
        let log1p = named_series("log1p", 12, None).unwrap();
        let first = StirlingTable::build(FirstUnsigned, 12);
        let t2 = EgfTriangle::build(&expm1, 12).unwrap();
        let t1 = EgfTriangle::build(&log1p, 12).unwrap();
        for n in 0..=12 {
            for m in 0..=n {
                assert_eq!(t2.get(n, m).unwrap(), &Rational::from_integer(second.get(n, m).unwrap().clone()));
                let signed = first.get(n, m).unwrap() * sign((n - m) as u64);
                assert_eq!(t1.get(n, m).unwrap(), &Rational::from_integer(signed));
            }
        }

        let x = Series::x(6);
        assert_eq!(egf_entry(&x, 4, 4).unwrap(), rat(1));
        assert_eq!(egf_entry(&x, 5, 3).unwrap(), rat(0));
    }

    #[test]
    fn egf_shift_identity_on_lah_triangle() {
        let geom = named_series("geom", 24, None).unwrap();
        for n in 1..=12 {
            for k in 1..=12 {
                let direct = egf_triangle_shift(&geom, n, k).unwrap();
                assert_eq!(direct, lah(n + k, n));
                assert_eq!(egf_shift_identity(&geom, n, k).unwrap(), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn egf_errors() {
        let bad = Series::new(vec![rat(0), ratio(1, 2), rat(0)]).unwrap();
        assert!(matches!(egf_entry(&bad, 2, 1), Err(Error::Domain(_))));
        let short = named_series("geom", 3, None).unwrap();
        assert!(matches!(egf_triangle_shift(&short, 2, 2), Err(Error::Usage(_))));
    }

    #[test]
    fn parses_kinds_and_methods() {
        assert_eq!("1".parse::<StirlingKind>().unwrap(), FirstUnsigned);
        assert_eq!("2".parse::<StirlingKind>().unwrap(), Second);
        assert!("3".parse::<StirlingKind>().is_err());
        assert_eq!("gf".parse::<StirlingMethod>().unwrap(), StirlingMethod::Gf);
        assert_eq!(signed_first_kind(3, 1).unwrap(), b(2));
        assert_eq!(signed_first_kind(4, 1).unwrap(), b(-6));
    }
}
