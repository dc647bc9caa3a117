//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serinv::identities::{
    check_arcsin_sum, check_binomial_orthogonality, check_catalan_sum, check_egf_shift,
    check_exp_power_sum, check_geometric_reversion_sum, check_involution, check_orthogonality,
    check_power_interpolation, check_reversion_coefficients, check_round_trip,
    check_self_inverse, check_stirling_closed_forms, check_surjection_sum, random_rational,
    random_sequence, random_series, random_sparse_sequence, CheckResult,
};
use serinv::inversion::{binomial_kernel, exponential_kernel, Direction};
use serinv::rational::{rat, ratio, Rational};
use serinv::series::NamedSeries;
use serinv::stirling::{StirlingKind, StirlingMethod};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn summarize(results: &[CheckResult]) -> Outcome {
    match results.iter().find(|r| !r.pass) {
        Some(r) => Err(format!(
            "{} {:?}: {} != {}",
            r.identity_id, r.parameters, r.lhs, r.rhs
        )),
        None => Ok(format!("{} checks", results.len())),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn binomial_params() -> Vec<Rational> {
    vec![rat(1), rat(2), ratio(1, 2), ratio(-1, 3)]
}

fn stirling_four_routes() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for kind in [StirlingKind::FirstUnsigned, StirlingKind::Second] {
        for n in 1..=22 {
            for m in 1..=n {
                let mut values = Vec::new();
                for method in StirlingMethod::ALL {
                    if method == StirlingMethod::Shift && m == n {
                        continue;
                    }
                    values.push(method.compute(kind, n, m).map_err(|e| e.to_string())?);
                }
                if values.windows(2).any(|w| w[0] != w[1]) {
                    return Err(format!("kind {kind}, n = {n}, m = {m}: {values:?}"));
                }
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{checked} entries in {} ms", elapsed.as_millis()))
}

fn stirling_closed_forms() -> Outcome {
    let mut results = Vec::new();
    for m in 1..=30 {
        results.extend(check_stirling_closed_forms(m).map_err(|e| e.to_string())?);
    }
    summarize(&results)
}

fn transform_round_trips() -> Outcome {
    let len = 25;
    let mut kernels = Vec::new();
    for t in binomial_params() {
        kernels.push((
            format!("binomial_t t={t}"),
            binomial_kernel(&t, len, Direction::Forward),
            binomial_kernel(&t, len, Direction::Inverse),
        ));
    }
    kernels.push((
        "exp".to_string(),
        exponential_kernel(len, Direction::Forward),
        exponential_kernel(len, Direction::Inverse),
    ));
    let mut rng = rng(3);
    let mut results = Vec::new();
    for (label, fwd, inv) in &kernels {
        for _ in 0..20 {
            let b = random_sequence(&mut rng, len);
            let r = check_round_trip("thm3.2-roundtrip", label, fwd, inv, &b)
                .map_err(|e| e.to_string())?;
            results.extend(r);
        }
    }
    summarize(&results)
}

fn orthogonality() -> Outcome {
    let top = 15;
    let mut series = vec![("exp".to_string(), NamedSeries::Exp.series(top, None))];
    for t in binomial_params() {
        series.push((format!("binomial_t t={t}"), NamedSeries::BinomialT.series(top, Some(&t))));
    }
    let mut results = Vec::new();
    for (label, f) in series {
        let f = f.map_err(|e| e.to_string())?;
        for n in 1..=top {
            for k in 1..=n {
                results.push(check_orthogonality(&f, &label, k, n).map_err(|e| e.to_string())?);
            }
        }
    }
    for t in binomial_params() {
        for n in 1..=top {
            for k in 1..=n {
                results.push(check_binomial_orthogonality(&t, k, n).map_err(|e| e.to_string())?);
            }
        }
    }
    summarize(&results)
}

fn lagrange_consistency() -> Outcome {
    let mut results = Vec::new();
    for beta in [
        NamedSeries::Geom,
        NamedSeries::CatalanBeta,
        NamedSeries::Sin,
        NamedSeries::ExpMinus1,
        NamedSeries::Log1p,
    ] {
        let s = beta.series(12, None).map_err(|e| e.to_string())?;
        results.extend(check_reversion_coefficients(&s, beta.name()).map_err(|e| e.to_string())?);
    }
    summarize(&results)
}

fn scalar_corollaries() -> Outcome {
    let mut results = Vec::new();
    for m in 1..=10 {
        for a in [rat(1), rat(2), ratio(1, 2), ratio(-3, 7)] {
            results.push(check_exp_power_sum(m, &a));
        }
        for n in 1..=10 {
            results.push(check_geometric_reversion_sum(m, n));
            results.push(check_surjection_sum(m, n));
        }
    }
    for n in 1..=12 {
        results.push(check_catalan_sum(n));
        results.push(check_arcsin_sum(n));
    }
    summarize(&results)
}

fn power_interpolation_and_lah() -> Outcome {
    let mut rng = rng(7);
    let mut results = Vec::new();
    for _ in 0..10 {
        let f = random_series(&mut rng, 10, rat(1));
        for m in 1..=10 {
            results.push(check_power_interpolation(&f, m).map_err(|e| e.to_string())?);
        }
    }
    let geom = NamedSeries::Geom.series(24, None).map_err(|e| e.to_string())?;
    for n in 1..=12 {
        for k in 1..=12 {
            results.push(check_egf_shift(&geom, "geom", n, k).map_err(|e| e.to_string())?);
        }
    }
    summarize(&results)
}

fn self_inverse_completion() -> Outcome {
    let mut rng = rng(8);
    let mut results = Vec::new();
    for i in 0..10 {
        let order: usize = 8 + i % 3;
        let odd: Vec<Rational> = (0..order.div_ceil(2)).map(|_| random_rational(&mut rng)).collect();
        let r = check_self_inverse(&odd, order).map_err(|e| e.to_string())?;
        if r.iter().filter(|c| c.identity_id == "eq4.3").count() != 4 {
            return Err(format!("expected four closed-form checks at order {order}"));
        }
        results.extend(r);
    }
    summarize(&results)
}

fn involution() -> Outcome {
    let mut rng = rng(9);
    let mut results = Vec::new();
    for k in 1..=3 {
        for _ in 0..5 {
            let s = random_sparse_sequence(&mut rng, 30, k);
            results.push(check_involution(k, &s).map_err(|e| e.to_string())?);
        }
    }
    summarize(&results)
}

fn cli_verify() -> Outcome {
    let json = std::env::temp_dir().join(format!("serinv-acceptance-{}.json", std::process::id()));
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_serinv"))
        .args(["verify", "--max-n", "8", "--seed", "42", "--json"])
        .arg(&json)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let text = std::fs::read_to_string(&json).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&json);
    let report: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let fail = report["counts"]["fail"].as_u64().unwrap_or(u64::MAX);
    let mut ids: Vec<&str> = report["results"]
        .as_array()
        .map(|a| a.iter().filter_map(|r| r["identity_id"].as_str()).collect())
        .unwrap_or_default();
    ids.sort_unstable();
    ids.dedup();
    if !out.status.success() || fail != 0 {
        return Err(format!("exit {:?}, {fail} failures", out.status.code()));
    }
    if ids.len() < 20 {
        return Err(format!("only {} identity ids", ids.len()));
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} ids, {} ms", ids.len(), elapsed.as_millis()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Stirling routes agree, n <= 22, under 30 s", stirling_four_routes),
        ("Stirling closed forms, m <= 30", stirling_closed_forms),
        ("transform round trips, length 25", transform_round_trips),
        ("orthogonality sums, n <= 15", orthogonality),
        ("reversion coefficients, m + n <= 12", lagrange_consistency),
        ("scalar corollaries", scalar_corollaries),
        ("power interpolation and Lah shift", power_interpolation_and_lah),
        ("self-inverse completion", self_inverse_completion),
        ("involution on multiples of k", involution),
        ("verify --max-n 8 --seed 42", cli_verify),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
