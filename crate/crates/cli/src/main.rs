use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serinv::error::Error;
use serinv::identities::{run_suite_with, SuiteOptions};
use serinv::inversion::{build_kernel, self_inverse_complete, transform_apply, Direction, Sequence};
use serinv::partitions::{enumerate_multiplicity_vectors, partition_count};
use serinv::rational::{parse_rational, Rational};
use serinv::series::{coeff_pow_poly_t, lagrange_coefficient, NamedSeries, Series};
use serinv::stirling::{StirlingKind, StirlingMethod};

#[derive(Parser)]
#[command(name = "serinv", version, about = "Exact power series inversion toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stirling numbers by one route or all of them.
    Stirling {
        /// 1 (unsigned first kind) or 2 (second kind).
        #[arg(long)]
        kind: StirlingKind,
        /// recurrence, gf, partition, shift or all.
        #[arg(long, default_value = "recurrence")]
        method: String,
        n: usize,
        k: usize,
    },
    /// A single coefficient of a power of a series.
    Coeff(CoeffArgs),
    /// Compositional inverse of a series given as JSON.
    Reverse {
        /// Series JSON file; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Compose with the input and require the identity.
        #[arg(long)]
        check: bool,
    },
    /// Apply a transform kernel to a sequence.
    Transform {
        /// Named series or path to a series JSON file.
        #[arg(long)]
        f: String,
        /// Parameter for binomial_t.
        #[arg(long)]
        t: Option<String>,
        /// fwd or inv.
        #[arg(long, default_value = "fwd")]
        dir: Direction,
        /// Sequence JSON file; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete a self-inverse series from its odd coefficients.
    Selfinverse {
        /// Comma-separated a1,a3,a5,...
        #[arg(long, allow_hyphen_values = true)]
        odd: String,
        #[arg(long)]
        order: usize,
    },
    /// Partitions of n as multiplicity vectors.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
    },
    /// Run the identity verification suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Restrict to an identity id; repeatable.
        #[arg(long)]
        only: Vec<String>,
        /// Write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CoeffArgs {
    /// Named series or path to a series JSON file.
    #[arg(long)]
    f: String,
    /// Parameter for binomial_t.
    #[arg(long)]
    t: Option<String>,
    /// Coefficient index.
    #[arg(long)]
    n: usize,
    /// Exponent (rational); `t` prints the coefficient as a polynomial in t.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "reverse_power")]
    power: Option<String>,
    /// Coefficient of the k-th power of the inverse series instead.
    #[arg(long)]
    reverse_power: Option<usize>,
}

enum Failure {
    Cli(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Cli(e)
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Io(msg)) => {
            eprintln!("serinv: I/O error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Cli(e)) => {
            eprintln!("serinv: {e}");
            ExitCode::from(match e {
                Error::Usage(_) => 2,
                Error::Domain(_) | Error::Consistency(_) => 1,
            })
        }
    }
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::Stirling { kind, method, n, k } => cmd_stirling(kind, &method, n, k),
        Command::Coeff(args) => cmd_coeff(&args),
        Command::Reverse { input, check } => cmd_reverse(input.as_deref(), check),
        Command::Transform { f, t, dir, input, out } => {
            cmd_transform(&f, t.as_deref(), dir, input.as_deref(), out.as_deref())
        }
        Command::Selfinverse { odd, order } => cmd_selfinverse(&odd, order),
        Command::Partitions { n, count } => Ok(cmd_partitions(n, count)),
        Command::Verify { max_n, seed, only, json } => cmd_verify(max_n, seed, only, json.as_deref()),
    }
}

fn cmd_stirling(kind: StirlingKind, method: &str, n: usize, k: usize) -> Out {
    if method != "all" {
        let m: StirlingMethod = method.parse()?;
        return Ok(format!("{}\n", m.compute(kind, n, k)?));
    }
    let mut out = String::new();
    let mut values = Vec::new();
    for m in StirlingMethod::ALL {
        match m.compute(kind, n, k) {
            Ok(v) => {
                out.push_str(&format!("{v}\n"));
                values.push(v);
            }
            Err(Error::Usage(_)) if m == StirlingMethod::Shift && n == k => out.push_str("n/a\n"),
            Err(e) => return Err(e.into()),
        }
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    out.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
    Ok(out)
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| io_err(p, e)),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text)
        .map_err(|e| Failure::Cli(Error::Usage(format!("invalid {what} JSON: {e}"))))
}

/// A named series at the given order, or a series read from a JSON file.
fn load_series(spec: &str, t: Option<&str>, order: usize) -> Result<Series, Failure> {
    let param = t.map(parse_rational).transpose()?;
    if let Ok(named) = spec.parse::<NamedSeries>() {
        return Ok(named.series(order, param.as_ref())?);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::Usage(format!("{spec:?} is neither a named series nor a file")).into());
    }
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_json(&text, "series")
}

fn cmd_coeff(args: &CoeffArgs) -> Out {
    let f = load_series(&args.f, args.t.as_deref(), args.n)?;
    if let Some(k) = args.reverse_power {
        return Ok(format!("{}\n", lagrange_coefficient(&f, args.n, k)?));
    }
    let power = args.power.as_deref().unwrap_or("1");
    if power == "t" {
        return Ok(format!("{}\n", coeff_pow_poly_t(&f, args.n)?));
    }
    let e = parse_rational(power)?;
    let g = f.truncate(args.n)?;
    let value = if e.is_integer() {
        let e = i64::try_from(e.to_integer())
            .map_err(|_| Error::Usage(format!("exponent {power} out of range")))?;
        g.pow_i(e)?
    } else {
        g.pow(&e)?
    };
    Ok(format!("{}\n", value.coeff(args.n)))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn cmd_reverse(input: Option<&Path>, check: bool) -> Out {
    let alpha: Series = parse_json(&read_input(input)?, "series")?;
    let inv = alpha.reverse()?;
    if check {
        let composed = alpha.compose(&inv)?;
        if composed != Series::x(alpha.order()) {
            return Err(Error::Consistency(format!("composition gave {composed}")).into());
        }
        eprintln!("check: composition is the identity");
    }
    Ok(to_json(&inv))
}

fn cmd_transform(
    f: &str,
    t: Option<&str>,
    dir: Direction,
    input: Option<&Path>,
    out: Option<&Path>,
) -> Out {
    let seq: Sequence = parse_json(&read_input(input)?, "sequence")?;
    let size = seq.len();
    if size == 0 {
        return Err(Error::Usage("empty sequence".into()).into());
    }
    let series = load_series(f, t, size - 1)?;
    let kernel = build_kernel(&series, size, dir)?;
    let json = to_json(&transform_apply(&kernel, &seq)?);
    match out {
        Some(path) => {
            fs::File::create(path)
                .and_then(|mut file| file.write_all(json.as_bytes()))
                .map_err(|e| io_err(path, e))?;
            Ok(String::new())
        }
        None => Ok(json),
    }
}

fn cmd_selfinverse(odd: &str, order: usize) -> Out {
    let odd: Vec<Rational> = odd
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<_, _>>()?;
    let s = self_inverse_complete(&odd, order)?;
    let parts: Vec<String> = s.coeffs().iter().map(Rational::to_string).collect();
    Ok(format!("{}\n", parts.join(",")))
}

fn cmd_partitions(n: usize, count: bool) -> String {
    if count {
        return format!("{}\n", partition_count(n));
    }
    enumerate_multiplicity_vectors(n)
        .map(|v| format!("{v}\n"))
        .collect()
}

fn cmd_verify(max_n: usize, seed: u64, only: Vec<String>, json: Option<&Path>) -> Out {
    let mut opts = SuiteOptions::new(max_n, seed);
    opts.only = only;
    let report = run_suite_with(&opts)?;
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report).expect("serializable");
        fs::write(path, text + "\n").map_err(|e| io_err(path, e))?;
    }
    let mut out = String::new();
    for r in report.failures() {
        out.push_str(&format!(
            "FAIL {} {:?}: {} != {}\n",
            r.identity_id, r.parameters, r.lhs, r.rhs
        ));
    }
    out.push_str(&format!(
        "identities: {}\nchecks: {} passed, {} failed, {} total\n",
        report.identity_ids().len(),
        report.counts.pass,
        report.counts.fail,
        report.counts.total
    ));
    if report.all_passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Error::Consistency(format!("{} checks failed", report.counts.fail)).into())
    }
}
