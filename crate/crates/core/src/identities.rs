//! Verification harness: every identity the crate implements, re-derived
//! from the primitives and compared exactly.
//!
//! Each check yields a [`CheckResult`] with both sides rendered as text.
//! [`run_suite`] sweeps all of them at a chosen size with seeded random
//! inputs; identical `(max_n, seed)` always gives identical results.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{usage, Result};
use crate::inversion::{
    binomial_kernel, binomial_orthogonality_sums, build_kernel, exponential_kernel,
    from_negated_identity, involution_k, inverse_pair_transform, negated_identity_series,
    orthogonality_sums, reversion_power_coefficient, self_inverse_complete,
    self_inverse_constraint_sum, transform_apply, Direction, Sequence, TransformKernel,
};
use crate::partitions::{enumerate_multiplicity_vectors, partition_counts};
use crate::polyt::PolyT;
use crate::rational::{
    binomial, binomial_int, catalan, factorial, odd_double_factorial, pow_int, rat, ratio, sign,
    Rational,
};
use crate::series::{coeff_pow_poly_t, lagrange_coefficient, NamedSeries, Series};
use crate::stirling::{
    egf_shift_identity, egf_triangle_shift, stirling_partition_formula, stirling_recurrence,
    stirling_shift, stirling_via_gf, surjection_sum, StirlingKind,
};

/// Every identity id a full report contains.
pub const CATALOG: &[&str] = &[
    "thm2.1",
    "cor2.1",
    "thm2.2",
    "thm2.3",
    "thm3.1",
    "thm3.2-roundtrip",
    "thm3.3-roundtrip",
    "thm3.4",
    "cor3.1",
    "thm4.1-lagrange",
    "cor4.1",
    "cor4.2",
    "cor4.3",
    "thm4.2",
    "cor4.4",
    "eq4.1",
    "thm4.3",
    "thm4.4",
    "eq4.2",
    "eq4.3",
    "partition-count",
    "series-ring",
    "series-pow",
    "series-reverse",
    "stirling-gf",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub identity_id: String,
    pub parameters: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckResult {
    /// Exact comparison; `pass` is `lhs == rhs`.
    pub fn compare<T: PartialEq + Display>(
        id: &str,
        parameters: &[(&str, String)],
        lhs: T,
        rhs: T,
    ) -> Self {
        CheckResult {
            identity_id: id.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// A check whose inputs were rejected; always a failure.
    fn errored(id: &str, parameters: &[(&str, String)], err: impl Display) -> Self {
        let mut r = CheckResult::compare(id, parameters, "error".to_string(), err.to_string());
        r.pass = false;
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub counts: Counts,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    fn new(results: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        let pass = results.iter().filter(|r| r.pass).count();
        let counts = Counts {
            total: results.len(),
            pass,
            fail: results.len() - pass,
        };
        SuiteReport {
            results,
            counts,
            elapsed_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.counts.fail == 0
    }

    /// Distinct identity ids present, sorted.
    pub fn identity_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.results.iter().map(|r| r.identity_id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

fn p(name: &'static str, v: impl Display) -> (&'static str, String) {
    (name, v.to_string())
}

// ---------------------------------------------------------------------------
// Individual identities

/// `[x^m] f^t` against `sum_{r=1..m} binom(m-t, m-r) binom(t, r) [x^m] f^r`
/// as polynomials in `t`. Also samples both at `t = 0..m` against direct
/// integer powers.
pub fn check_power_interpolation(f: &Series, m: usize) -> Result<CheckResult> {
    let lhs = coeff_pow_poly_t(f, m)?;
    let mut rhs = PolyT::zero();
    let mut sampled_ok = true;
    for r in 1..=m {
        let fr = f.pow_i(r as i64)?.coeff(m).clone();
        let upper = PolyT::linear(rat(m as i64), rat(-1));
        let term = &PolyT::binomial(&upper, m - r) * &PolyT::binomial(&PolyT::t(), r);
        rhs = &rhs + &term.scale(&fr);
    }
    for r in 0..=m as i64 {
        let direct = f.pow_i(r)?.coeff(m).clone();
        sampled_ok &= lhs.eval(&rat(r)) == direct && rhs.eval(&rat(r)) == direct;
    }
    let mut res = CheckResult::compare("thm2.1", &[p("m", m), p("f", f)], lhs, rhs);
    res.pass &= sampled_ok;
    Ok(res)
}

/// `sum_{r=1..m} binom(m+a, m-r) (-1)^{m-r} binom(a+r-1, r) r^m = a^m`.
pub fn check_exp_power_sum(m: usize, a: &Rational) -> CheckResult {
    let mut lhs = Rational::zero();
    for r in 1..=m {
        let ri = rat(r as i64);
        lhs += binomial(&(rat(m as i64) + a), (m - r) as u64)
            * rat(sign((m - r) as u64))
            * binomial(&(a + &ri - rat(1)), r as u64)
            * pow_int(&ri, m as i64);
    }
    CheckResult::compare("cor2.1", &[p("m", m), p("a", a)], lhs, pow_int(a, m as i64))
}

/// `sum (-1)^K (K+m+n-1)! / ((m+n-1)! k_1!...k_n!) = (-1)^n binom(m+n, m)`.
pub fn check_geometric_reversion_sum(m: usize, n: usize) -> CheckResult {
    let mut lhs = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        let k = v.weight();
        let num = factorial(k + (m + n) as u64 - 1) * sign(k);
        let den = factorial((m + n) as u64 - 1) * v.multiplicity_factorials();
        lhs += Rational::new(num, den);
    }
    let rhs = Rational::from_integer(binomial_int((m + n) as i64, m as i64) * sign(n as u64));
    CheckResult::compare("cor4.1", &[p("m", m), p("n", n)], lhs, rhs)
}

/// `sum (K+n)!/(k_1!...k_n!) (-1)^K 2^{k_1} 3^{k_2} ... (n+1)^{k_n}
///  = (-1)^n (n+1)! C_{n+1}` with `C` the Catalan numbers.
pub fn check_catalan_sum(n: usize) -> CheckResult {
    let mut lhs = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        let k = v.weight();
        let mut num = factorial(k + n as u64) * sign(k);
        for (i, ki) in v.parts() {
            num *= BigInt::from(i + 1).pow(ki as u32);
        }
        lhs += Rational::new(num, v.multiplicity_factorials());
    }
    let rhs = factorial(n as u64 + 1) * catalan(n as u64 + 1) * sign(n as u64);
    CheckResult::compare("cor4.2", &[p("n", n)], lhs, Rational::from_integer(rhs))
}

/// `sum (K+2n)!/(k_1!...k_n!) (-1)^{K+n} / (3!^{k_1} 5!^{k_2} ... (2n+1)!^{k_n})
///  = ((2n-1)!!)^2`.
pub fn check_arcsin_sum(n: usize) -> CheckResult {
    let mut lhs = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        let k = v.weight();
        let num = factorial(k + 2 * n as u64) * sign(k + n as u64);
        let mut den = v.multiplicity_factorials();
        for (i, ki) in v.parts() {
            den *= factorial(2 * i as u64 + 1).pow(ki as u32);
        }
        lhs += Rational::new(num, den);
    }
    let df = odd_double_factorial(n as u64);
    CheckResult::compare("cor4.3", &[p("n", n)], lhs, Rational::from_integer(&df * &df))
}

/// `sum_r binom(m, r) (-1)^{m-r} r^{m+n}
///  = m sum (-1)^{K+n} (K+n+m-1)! / (2^{k_1} k_1! 3^{k_2} k_2! ... )`.
pub fn check_surjection_sum(m: usize, n: usize) -> CheckResult {
    let mut rhs = Rational::zero();
    for v in enumerate_multiplicity_vectors(n) {
        let k = v.weight();
        let num = factorial(k + (n + m) as u64 - 1) * sign(k + n as u64);
        let mut den = v.multiplicity_factorials();
        for (i, ki) in v.parts() {
            den *= BigInt::from(i + 1).pow(ki as u32);
        }
        rhs += Rational::new(num, den);
    }
    rhs *= rat(m as i64);
    let lhs = Rational::from_integer(surjection_sum(m, n));
    CheckResult::compare("cor4.4", &[p("m", m), p("n", n)], lhs, rhs)
}

/// The four partition-sum corollaries at `(n, m)`.
pub fn check_partition_corollaries(n: usize, m: usize) -> Vec<CheckResult> {
    vec![
        check_geometric_reversion_sum(m, n),
        check_catalan_sum(n),
        check_arcsin_sum(n),
        check_surjection_sum(m, n),
    ]
}

type StirlingFn = fn(StirlingKind, usize, usize) -> Result<BigInt>;

/// The Stirling routes the suite compares. Swappable so that the harness
/// itself can be shown to catch a broken route.
#[derive(Debug, Clone, Copy)]
pub struct StirlingRoutes {
    /// `(kind, n, k) -> S(n, k)`; the reference.
    pub recurrence: StirlingFn,
    /// `(kind, n, m) -> S(n, m)`.
    pub gf: StirlingFn,
    /// `(kind, n, m) -> S(n + m, m)`.
    pub partition: StirlingFn,
    /// `(kind, n, k) -> S(n + k, n)`.
    pub shift: StirlingFn,
}

impl Default for StirlingRoutes {
    fn default() -> Self {
        StirlingRoutes {
            recurrence: stirling_recurrence,
            gf: stirling_via_gf,
            partition: stirling_partition_formula,
            shift: stirling_shift,
        }
    }
}

fn compare_route(
    id: &str,
    params: &[(&str, String)],
    got: Result<BigInt>,
    want: &BigInt,
) -> CheckResult {
    match got {
        Ok(v) => CheckResult::compare(id, params, v, want.clone()),
        Err(e) => CheckResult::errored(id, params, e),
    }
}

/// Generating-function, partition-sum and shift routes for entry `(n, k)`
/// against the recurrence. The shift route is skipped on the diagonal.
pub fn check_stirling_routes(
    kind: StirlingKind,
    n: usize,
    k: usize,
    routes: &StirlingRoutes,
) -> Vec<CheckResult> {
    let params = [p("kind", kind), p("n", n), p("k", k)];
    let want = match (routes.recurrence)(kind, n, k) {
        Ok(w) => w,
        Err(e) => return vec![CheckResult::errored("stirling-gf", &params, e)],
    };
    let mut out = vec![
        compare_route("stirling-gf", &params, (routes.gf)(kind, n, k), &want),
        compare_route("thm4.2", &params, (routes.partition)(kind, n - k, k), &want),
    ];
    if n > k {
        out.push(compare_route("thm2.3", &params, (routes.shift)(kind, k, n - k), &want));
    }
    out
}

/// `S(m+3, m) = binom(m+1, 2) binom(m+3, 4)` and
/// `s(m+3, m) = binom(m+3, 2) binom(m+3, 4)`.
pub fn check_stirling_closed_forms(m: usize) -> Result<Vec<CheckResult>> {
    let mi = m as i64;
    let second = stirling_recurrence(StirlingKind::Second, m + 3, m)?;
    let first = stirling_recurrence(StirlingKind::FirstUnsigned, m + 3, m)?;
    Ok(vec![
        CheckResult::compare(
            "eq4.1",
            &[p("kind", 2), p("m", m)],
            second,
            binomial_int(mi + 1, 2) * binomial_int(mi + 3, 4),
        ),
        CheckResult::compare(
            "eq4.1",
            &[p("kind", 1), p("m", m)],
            first,
            binomial_int(mi + 3, 2) * binomial_int(mi + 3, 4),
        ),
    ])
}

/// `a(n+k, n)` directly against the shift identity.
pub fn check_egf_shift(a: &Series, label: &str, n: usize, k: usize) -> Result<CheckResult> {
    Ok(CheckResult::compare(
        "thm2.2",
        &[p("a", label), p("n", n), p("k", k)],
        egf_triangle_shift(a, n, k)?,
        egf_shift_identity(a, n, k)?,
    ))
}

/// Double application of the step-`k` involution.
pub fn check_involution(k: usize, s: &Sequence) -> Result<CheckResult> {
    let twice = involution_k(k, &involution_k(k, s)?)?;
    Ok(CheckResult::compare(
        "thm3.1",
        &[p("k", k), p("len", s.len())],
        render_sequence(&twice),
        render_sequence(s),
    ))
}

fn render_sequence(s: &Sequence) -> String {
    let v: Vec<String> = s.values().iter().map(Rational::to_string).collect();
    format!("[{}]", v.join(","))
}

/// `inverse(forward(b)) == b` and `forward(inverse(b)) == b`.
pub fn check_round_trip(
    id: &str,
    label: &str,
    fwd: &TransformKernel,
    inv: &TransformKernel,
    b: &Sequence,
) -> Result<Vec<CheckResult>> {
    let there_back = transform_apply(inv, &transform_apply(fwd, b)?)?;
    let back_there = transform_apply(fwd, &transform_apply(inv, b)?)?;
    let params = |dir: &str| [p("f", label), p("len", b.len()), p("order", dir)];
    Ok(vec![
        CheckResult::compare(id, &params("inv.fwd"), render_sequence(&there_back), render_sequence(b)),
        CheckResult::compare(id, &params("fwd.inv"), render_sequence(&back_there), render_sequence(b)),
    ])
}

fn pair_string(pair: &(Rational, Rational)) -> String {
    format!("({}, {})", pair.0, pair.1)
}

/// Both orthogonality sums against `(0, 0)` for `k < n`, `(1/n, n)` at `k = n`.
pub fn check_orthogonality(f: &Series, label: &str, k: usize, n: usize) -> Result<CheckResult> {
    let got = orthogonality_sums(f, k, n)?;
    Ok(CheckResult::compare(
        "thm3.4",
        &[p("f", label), p("k", k), p("n", n)],
        pair_string(&got),
        pair_string(&expected_orthogonality(k, n)),
    ))
}

/// Binomial form of the orthogonality sums for `(1+x)^t`.
pub fn check_binomial_orthogonality(t: &Rational, k: usize, n: usize) -> Result<CheckResult> {
    let got = binomial_orthogonality_sums(t, k, n)?;
    Ok(CheckResult::compare(
        "cor3.1",
        &[p("t", t), p("k", k), p("n", n)],
        pair_string(&got),
        pair_string(&expected_orthogonality(k, n)),
    ))
}

fn expected_orthogonality(k: usize, n: usize) -> (Rational, Rational) {
    if k == n {
        (ratio(1, n as i64), rat(n as i64))
    } else {
        (Rational::zero(), Rational::zero())
    }
}

/// Partition-sum coefficient vs Lagrange inversion vs full reversion, for
/// all `m, n >= 1` with `m + n <= beta.order()`.
pub fn check_reversion_coefficients(beta: &Series, label: &str) -> Result<Vec<CheckResult>> {
    let order = beta.order();
    let inverse = beta.reverse()?;
    let mut out = Vec::new();
    for m in 1..order {
        let power = inverse.pow_i(m as i64)?;
        for n in 1..=order - m {
            let formula = reversion_power_coefficient(beta, m, n)?;
            let lagrange = lagrange_coefficient(beta, m + n, m)?;
            let mut res = CheckResult::compare(
                "thm4.1-lagrange",
                &[p("beta", label), p("m", m), p("n", n)],
                &formula,
                &lagrange,
            );
            res.pass &= &formula == power.coeff(m + n);
            out.push(res);
        }
    }
    Ok(out)
}

/// The inverse-pair formula is its own inverse, and matches full reversion.
pub fn check_inverse_pair(alpha: &[Rational]) -> Result<Vec<CheckResult>> {
    let n = alpha.len();
    let beta = inverse_pair_transform(alpha, n)?;
    let back = inverse_pair_transform(&beta, n)?;
    let full = from_negated_identity(&negated_identity_series(alpha).reverse()?)?;
    let render = |v: &[Rational]| {
        let s: Vec<String> = v.iter().map(Rational::to_string).collect();
        format!("[{}]", s.join(","))
    };
    Ok(vec![
        CheckResult::compare("thm4.3", &[p("check", "involutive"), p("n", n)], render(&back), render(alpha)),
        CheckResult::compare("thm4.3", &[p("check", "reversion"), p("n", n)], render(&beta), render(&full)),
    ])
}

/// Even coefficients `a_2, a_4, a_6, a_8` in closed form from the odd ones.
pub fn self_inverse_closed_forms(odd: &[Rational]) -> Vec<Rational> {
    let a = |j: usize| odd.get(j / 2).cloned().unwrap_or_else(Rational::zero);
    let (a1, a3, a5, a7) = (a(1), a(3), a(5), a(7));
    let pw = |x: &Rational, e: i64| pow_int(x, e);
    vec![
        -pw(&a1, 2),
        rat(2) * pw(&a1, 4) - rat(3) * &a1 * &a3,
        rat(-13) * pw(&a1, 6) - rat(4) * &a1 * &a5 - rat(2) * pw(&a3, 2)
            + rat(18) * pw(&a1, 3) * &a3,
        rat(145) * pw(&a1, 8) - rat(221) * pw(&a1, 5) * &a3 + rat(50) * pw(&a1, 2) * pw(&a3, 2)
            + rat(35) * pw(&a1, 3) * &a5
            - rat(5) * &a3 * &a5
            - rat(5) * &a1 * &a7,
    ]
}

/// Completion from odd coefficients: involution check, constraint sums and
/// closed forms for the first even coefficients.
pub fn check_self_inverse(odd: &[Rational], order: usize) -> Result<Vec<CheckResult>> {
    let s = self_inverse_complete(odd, order)?;
    let series = s.to_series();
    let mut out = vec![CheckResult::compare(
        "thm4.4",
        &[p("order", order)],
        series.compose(&series)?,
        Series::x(series.order()),
    )];
    out.extend(check_constraint_sums(s.coeffs(), "completed")?);
    let closed = self_inverse_closed_forms(odd);
    for (idx, want) in closed.iter().enumerate() {
        let j = 2 * (idx + 1);
        if j > order {
            break;
        }
        out.push(CheckResult::compare(
            "eq4.3",
            &[p("j", j), p("order", order)],
            s.coeff(j).clone(),
            want.clone(),
        ));
    }
    Ok(out)
}

/// Constraint sums of a known self-inverse tail: 0 at odd `n`,
/// `-2 (n+1)! a_n` at even `n`.
pub fn check_constraint_sums(coeffs: &[Rational], label: &str) -> Result<Vec<CheckResult>> {
    (1..=coeffs.len())
        .map(|n| {
            let lhs = self_inverse_constraint_sum(coeffs, n)?;
            let rhs = if n % 2 == 1 {
                Rational::zero()
            } else {
                rat(-2) * Rational::from_integer(factorial(n as u64 + 1)) * &coeffs[n - 1]
            };
            Ok(CheckResult::compare("eq4.2", &[p("series", label), p("n", n)], lhs, rhs))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Suite

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Restrict to these identity ids; empty means everything.
    pub only: Vec<String>,
    pub stirling_routes: StirlingRoutes,
}

impl SuiteOptions {
    pub fn new(max_n: usize, seed: u64) -> Self {
        SuiteOptions {
            max_n,
            seed,
            only: Vec::new(),
            stirling_routes: StirlingRoutes::default(),
        }
    }
}

/// Runs the whole catalogue with default options.
pub fn run_suite(max_n: usize, seed: u64) -> Result<SuiteReport> {
    run_suite_with(&SuiteOptions::new(max_n, seed))
}

struct Family {
    ids: &'static [&'static str],
    run: fn(&Ctx, &mut ChaCha8Rng) -> Result<Vec<CheckResult>>,
}

struct Ctx<'a> {
    n: usize,
    routes: &'a StirlingRoutes,
}

const FAMILIES: &[Family] = &[
    Family { ids: &["partition-count"], run: fam_partitions },
    Family { ids: &["series-ring", "series-pow", "series-reverse"], run: fam_series },
    Family { ids: &["thm2.1"], run: fam_power_interpolation },
    Family { ids: &["cor2.1"], run: fam_exp_power_sum },
    Family { ids: &["thm2.2"], run: fam_egf_shift },
    Family { ids: &["stirling-gf", "thm4.2", "thm2.3"], run: fam_stirling },
    Family { ids: &["eq4.1"], run: fam_closed_forms },
    Family { ids: &["thm3.1"], run: fam_involution },
    Family { ids: &["thm3.2-roundtrip", "thm3.3-roundtrip"], run: fam_round_trips },
    Family { ids: &["thm3.4", "cor3.1"], run: fam_orthogonality },
    Family { ids: &["thm4.1-lagrange"], run: fam_reversion },
    Family { ids: &["cor4.1", "cor4.2", "cor4.3", "cor4.4"], run: fam_corollaries },
    Family { ids: &["thm4.3"], run: fam_inverse_pair },
    Family { ids: &["thm4.4", "eq4.2", "eq4.3"], run: fam_self_inverse },
];

/// Runs the selected families. `max_n` scales every sweep; each family draws
/// from its own generator seeded from `seed`, so filtering with `only` does
/// not change the checks that remain.
pub fn run_suite_with(opts: &SuiteOptions) -> Result<SuiteReport> {
    if opts.max_n < 4 {
        return usage(format!("max_n must be at least 4, got {}", opts.max_n));
    }
    if let Some(bad) = opts.only.iter().find(|id| !CATALOG.contains(&id.as_str())) {
        return usage(format!("unknown identity id {bad:?}"));
    }
    let wanted = |id: &str| opts.only.is_empty() || opts.only.iter().any(|o| o == id);
    let start = Instant::now();
    let ctx = Ctx {
        n: opts.max_n,
        routes: &opts.stirling_routes,
    };
    let mut results = Vec::new();
    for (idx, fam) in FAMILIES.iter().enumerate() {
        if !fam.ids.iter().any(|id| wanted(id)) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ((idx as u64 + 1) << 32));
        let out = (fam.run)(&ctx, &mut rng)?;
        results.extend(out.into_iter().filter(|r| wanted(&r.identity_id)));
    }
    let elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(SuiteReport::new(results, elapsed_ms))
}

/// Numerator in `[-9, 9]`, denominator in `[1, 9]`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random series of the given order with a prescribed constant term.
pub fn random_series(rng: &mut impl Rng, order: usize, c0: Rational) -> Series {
    let mut c = vec![c0];
    c.extend((0..order).map(|_| random_rational(rng)));
    Series::new(c).expect("non-empty")
}

/// Random `a_1 x + a_2 x^2 + ...` with `a_1 != 0`.
pub fn random_reversible(rng: &mut impl Rng, order: usize) -> Series {
    let mut c = vec![Rational::zero(), random_nonzero_rational(rng)];
    c.extend((1..order).map(|_| random_rational(rng)));
    Series::new(c).expect("non-empty")
}

pub fn random_sequence(rng: &mut impl Rng, len: usize) -> Sequence {
    Sequence::one_based((0..len).map(|_| random_rational(rng)).collect())
}

/// Zero-based sequence supported on multiples of `k`.
pub fn random_sparse_sequence(rng: &mut impl Rng, len: usize, k: usize) -> Sequence {
    Sequence::zero_based(
        (0..len)
            .map(|i| if i % k == 0 { random_rational(rng) } else { Rational::zero() })
            .collect(),
    )
}

fn fam_partitions(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let top = 5 * ctx.n;
    let counts = partition_counts(top);
    Ok((0..=top)
        .map(|n| {
            let enumerated = enumerate_multiplicity_vectors(n)
                .filter(|v| v.parts().map(|(i, k)| i as u64 * k).sum::<u64>() == n as u64)
                .count();
            CheckResult::compare("partition-count", &[p("n", n)], BigInt::from(enumerated), counts[n].clone())
        })
        .collect())
}

fn fam_series(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let mut out = Vec::new();
    for trial in 0..3 {
        let c0 = random_rational(rng);
        let f = random_series(rng, n, c0);
        let c0 = random_rational(rng);
        let g = random_series(rng, n, c0);
        let c0 = random_rational(rng);
        let h = random_series(rng, n, c0);
        let params = [p("trial", trial), p("order", n)];
        let fg_h = f.mul(&g)?.mul(&h)?;
        let f_gh = f.mul(&g.mul(&h)?)?;
        out.push(CheckResult::compare("series-ring", &params, fg_h, f_gh));
        out.push(CheckResult::compare("series-ring", &params, f.mul(&g)?, g.mul(&f)?));
        let dist_l = f.mul(&g.add(&h)?)?;
        let dist_r = f.mul(&g)?.add(&f.mul(&h)?)?;
        out.push(CheckResult::compare("series-ring", &params, dist_l, dist_r));

        let u = random_series(rng, n, Rational::one());
        let (a, b) = (random_rational(rng), random_rational(rng));
        let lhs = u.pow(&a)?.mul(&u.pow(&b)?)?;
        out.push(CheckResult::compare("series-pow", &[p("trial", trial), p("a", &a), p("b", &b)], lhs, u.pow(&(&a + &b))?));
        let root = u.pow(&ratio(1, 2))?;
        out.push(CheckResult::compare("series-pow", &[p("trial", trial), p("check", "sqrt")], root.pow_i(2)?, u));

        let alpha = random_reversible(rng, n);
        let inv = alpha.reverse()?;
        out.push(CheckResult::compare("series-reverse", &[p("trial", trial)], alpha.compose(&inv)?, Series::x(n)));
        for k in 1..=n {
            let pk = inv.pow_i(k as i64)?;
            for m in k..=n {
                out.push(CheckResult::compare(
                    "series-reverse",
                    &[p("trial", trial), p("n", m), p("k", k)],
                    lagrange_coefficient(&alpha, m, k)?,
                    pk.coeff(m).clone(),
                ));
            }
        }
    }
    Ok(out)
}

fn fam_power_interpolation(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let mut fs = vec![
        NamedSeries::Exp.series(n, None)?,
        Series::from_ints(&[1, 1])?.pad(n),
        Series::from_ints(&[1, 1, 5, 7])?.pad(n),
    ];
    fs.extend((0..3).map(|_| random_series(rng, n, Rational::one())));
    let mut out = Vec::new();
    for f in &fs {
        for m in 1..=n {
            out.push(check_power_interpolation(f, m)?);
        }
    }
    Ok(out)
}

fn fam_exp_power_sum(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let mut params = vec![rat(1), rat(2), ratio(1, 2), ratio(-3, 7)];
    params.push(random_rational(rng));
    Ok((1..=ctx.n)
        .flat_map(|m| params.iter().map(move |a| check_exp_power_sum(m, a)))
        .collect())
}

fn fam_egf_shift(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let mut out = Vec::new();
    for base in [NamedSeries::Geom, NamedSeries::ExpMinus1, NamedSeries::Log1p] {
        let a = base.series(2 * n, None)?;
        for i in 1..=n {
            for k in 1..=n {
                out.push(check_egf_shift(&a, base.name(), i, k)?);
            }
        }
    }
    Ok(out)
}

fn fam_stirling(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let top = 2 * ctx.n;
    let mut out = Vec::new();
    for kind in [StirlingKind::Second, StirlingKind::FirstUnsigned] {
        for n in 1..=top {
            for k in 1..=n {
                out.extend(check_stirling_routes(kind, n, k, ctx.routes));
            }
        }
    }
    Ok(out)
}

fn fam_closed_forms(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=3 * ctx.n {
        out.extend(check_stirling_closed_forms(m)?);
    }
    Ok(out)
}

fn fam_involution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let len = (4 * ctx.n).min(30);
    let mut out = Vec::new();
    for k in 1..=3 {
        for _ in 0..3 {
            out.push(check_involution(k, &random_sparse_sequence(rng, len, k))?);
        }
    }
    Ok(out)
}

/// Series kernels used by the round-trip and orthogonality sweeps.
fn kernel_series(order: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(String, Series)>> {
    Ok(vec![
        ("exp".to_string(), NamedSeries::Exp.series(order, None)?),
        ("1+x+x^2".to_string(), Series::from_ints(&[1, 1, 1])?.pad(order)),
        ("2+x".to_string(), Series::from_ints(&[2, 1])?.pad(order)),
        ("random".to_string(), random_series(rng, order, Rational::one())),
    ])
}

const BINOMIAL_PARAMS: [(i64, i64); 4] = [(1, 1), (2, 1), (1, 2), (-1, 3)];

fn fam_round_trips(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let len = 2 * ctx.n + 1;
    let mut out = Vec::new();
    for (label, f) in kernel_series(len - 1, rng)? {
        let fwd = build_kernel(&f, len, Direction::Forward)?;
        let inv = build_kernel(&f, len, Direction::Inverse)?;
        for _ in 0..2 {
            out.extend(check_round_trip("thm3.2-roundtrip", &label, &fwd, &inv, &random_sequence(rng, len))?);
        }
    }
    for (num, den) in BINOMIAL_PARAMS {
        let t = ratio(num, den);
        let fwd = binomial_kernel(&t, len, Direction::Forward);
        let inv = binomial_kernel(&t, len, Direction::Inverse);
        let label = format!("binomial_t t={t}");
        for _ in 0..2 {
            out.extend(check_round_trip("thm3.3-roundtrip", &label, &fwd, &inv, &random_sequence(rng, len))?);
        }
        // Closed form against the generic series construction.
        let f = NamedSeries::BinomialT.series(len - 1, Some(&t))?;
        let generic = build_kernel(&f, len, Direction::Inverse)?;
        let same = (1..=len).all(|n| (1..=n).all(|m| generic.entry(n, m) == inv.entry(n, m)));
        out.push(CheckResult::compare("thm3.3-roundtrip", &[p("f", &label), p("check", "closed-form")], same, true));
    }
    let fwd = exponential_kernel(len, Direction::Forward);
    let inv = exponential_kernel(len, Direction::Inverse);
    out.extend(check_round_trip("thm3.2-roundtrip", "exp closed form", &fwd, &inv, &random_sequence(rng, len))?);
    Ok(out)
}

fn fam_orthogonality(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let top = ctx.n + 4;
    let mut out = Vec::new();
    let mut fs = kernel_series(top, rng)?;
    for (num, den) in BINOMIAL_PARAMS {
        let t = ratio(num, den);
        fs.push((format!("binomial_t t={t}"), NamedSeries::BinomialT.series(top, Some(&t))?));
    }
    for (label, f) in &fs {
        for n in 1..=top {
            for k in 1..=n {
                out.push(check_orthogonality(f, label, k, n)?);
            }
        }
    }
    for (num, den) in BINOMIAL_PARAMS {
        let t = ratio(num, den);
        for n in 1..=top {
            for k in 1..=n {
                out.push(check_binomial_orthogonality(&t, k, n)?);
            }
        }
    }
    Ok(out)
}

fn fam_reversion(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let order = ctx.n + 4;
    let mut betas: Vec<(String, Series)> = [
        NamedSeries::Geom,
        NamedSeries::CatalanBeta,
        NamedSeries::Sin,
        NamedSeries::ExpMinus1,
        NamedSeries::Log1p,
    ]
    .iter()
    .map(|b| Ok((b.name().to_string(), b.series(order, None)?)))
    .collect::<Result<_>>()?;
    betas.push(("random".to_string(), random_reversible(rng, order)));
    let mut out = Vec::new();
    for (label, beta) in &betas {
        out.extend(check_reversion_coefficients(beta, label)?);
    }
    Ok(out)
}

fn fam_corollaries(ctx: &Ctx, _: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let n = ctx.n;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(check_catalan_sum(i));
        out.push(check_arcsin_sum(i));
        for m in 1..=n {
            out.push(check_geometric_reversion_sum(m, i));
            out.push(check_surjection_sum(m, i));
        }
    }
    Ok(out)
}

fn fam_inverse_pair(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for _ in 0..5 {
        let alpha: Vec<Rational> = (0..ctx.n).map(|_| random_rational(rng)).collect();
        out.extend(check_inverse_pair(&alpha)?);
    }
    let alt: Vec<Rational> = (0..ctx.n).map(|i| rat(if i % 2 == 0 { 1 } else { -1 })).collect();
    out.extend(check_inverse_pair(&alt)?);
    Ok(out)
}

fn fam_self_inverse(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let order = ctx.n;
    let mut out = Vec::new();
    for _ in 0..4 {
        let odd: Vec<Rational> = (0..order.div_ceil(2)).map(|_| random_rational(rng)).collect();
        out.extend(check_self_inverse(&odd, order)?);
    }
    // -x/(1 - c x) is an involution for every c; its tail is (c, c^2, c^3, ...).
    let c = random_nonzero_rational(rng);
    let tail: Vec<Rational> = (1..=order as i64).map(|j| -pow_int(&c, j)).collect();
    let mobius = negated_identity_series(&tail);
    out.push(CheckResult::compare("thm4.4", &[p("series", "mobius")], mobius.compose(&mobius)?, Series::x(order + 1)));
    out.extend(check_constraint_sums(&tail, "mobius")?);
    Ok(out)
}
