//! Command-line front end. The binary only forwards `std::env::args` to
//! [`run`]; everything else lives here so it can be tested in-process.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification or benchmark cross-check finds a mismatch.

pub mod bench;
pub mod figure;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::curve::{CurveParams, DEFAULT_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::explicit;
use crate::field::{FieldModulus, OpCount};
use crate::group::{self, OpCounters};
use crate::mumford::{DivisorJson, MumfordDivisor};
use crate::poly::RawCoeffs;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Arithmetic on Jacobians of genus-2 curves y^2 = f(x), deg f = 5.
#[derive(Debug, Parser)]
#[command(name = "genus2", version)]
pub struct Cli {
    /// Field characteristic (odd prime, 5 <= p < 2^127).
    #[arg(long = "p", global = true)]
    pub p: Option<u128>,
    /// Quintic f as ascending coefficients, e.g. [1,0,0,0,0,1]. Requires --p.
    #[arg(long = "f", global = true)]
    pub f: Option<RawCoeffs>,
    /// File with `p=<prime>` and `f=[..]` lines.
    #[arg(long, global = true, conflicts_with_all = ["p", "f"])]
    pub curve: Option<PathBuf>,
    /// Seed for every random choice (curve generation, benchmark operands).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest p for which exhaustive enumeration is allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub bound: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// D1 + D2 with the explicit formulas.
    Add { d1: String, d2: String },
    /// 2D.
    Double { d: String },
    /// N * D by double-and-add.
    Mul { n: u128, d: String },
    /// Compare explicit addition with Cantor's algorithm on every pair.
    Verify,
    /// Field-operation counts and timings against Cantor.
    Bench {
        #[arg(long, default_value_t = 1000)]
        iterations: usize,
    },
    /// Write an SVG sketch of one construction over the reals.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        case: u8,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(code: i32, stderr: String) -> Self {
        Outcome { stdout: String::new(), stderr, code }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::error(EXIT_USAGE, text) } else { Outcome::ok(text) };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::error(EXIT_USAGE, format!("error: {e}\n")),
    }
}

/// Default curve for everything except `bench`: `y^2 = x^5 + 1` over F_7.
pub fn default_curve() -> CurveParams {
    CurveParams::from_ints(FieldModulus::new(7).expect("7 is prime"), &[1, 0, 0, 0, 0, 1]).expect("squarefree")
}

/// Resolves the curve from the flags. With `--p` alone, or for `bench`
/// without any curve flags, a random squarefree quintic is drawn from `seed`.
pub fn resolve_curve(cli: &Cli) -> Result<CurveParams> {
    if let Some(path) = &cli.curve {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        return CurveParams::parse_header(&text);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match (cli.p, &cli.f) {
        (Some(p), Some(f)) => CurveParams::from_ints(FieldModulus::new(p)?, &f.0),
        (Some(p), None) => Ok(CurveParams::random(FieldModulus::new(p)?, &mut rng)),
        (None, Some(_)) => Err(Error::Parse("--f requires --p".into())),
        (None, _) if matches!(cli.command, Command::Bench { .. }) => {
            Ok(CurveParams::random(FieldModulus::mersenne_127(), &mut rng))
        }
        (None, _) => Ok(default_curve()),
    }
}

/// Accepts either `u=[..] v=[..]` or `{"u":[..],"v":[..]}`.
pub fn parse_divisor(curve: &CurveParams, s: &str) -> Result<MumfordDivisor> {
    if s.trim_start().starts_with('{') {
        let j: DivisorJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MumfordDivisor::from_json(curve, &j)
    } else {
        MumfordDivisor::parse(curve, s)
    }
}

#[derive(Serialize)]
struct ArithmeticJson<'a> {
    u: Vec<u128>,
    v: Vec<u128>,
    case: String,
    counts: &'a OpCounters,
}

fn arithmetic_output(cli: &Cli, result: &MumfordDivisor, case: String, counters: &OpCounters) -> String {
    if cli.json {
        let j = result.to_json();
        let body = ArithmeticJson { u: j.u, v: j.v, case, counts: counters };
        return serde_json::to_string(&body).expect("serializable") + "\n";
    }
    let mut s = format!("{result}\ncase: {case}\n");
    s += &format!(
        "field ops: {} mult, {} inv, {} sqrt\n",
        counters.field_mults, counters.field_invs, counters.field_sqrts
    );
    s
}

fn single_addition(cli: &Cli, curve: &CurveParams, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<Outcome> {
    let mut ops = OpCount::default();
    let (r, case) = explicit::add_with(curve, d1, d2, &mut ops)?;
    let mut counters = OpCounters::default();
    counters.record(&case, ops);
    Ok(Outcome::ok(arithmetic_output(cli, &r, case.to_string(), &counters)))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    if let Command::Figure { case, output } = &cli.command {
        let fig = figure::Figure::build(*case)?;
        std::fs::write(output, fig.to_svg())
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", output.display())))?;
        let msg = if cli.json {
            json!({ "case": case, "output": output.display().to_string() }).to_string() + "\n"
        } else {
            format!("wrote {}\n", output.display())
        };
        return Ok(Outcome::ok(msg));
    }

    let curve = resolve_curve(cli)?;
    match &cli.command {
        Command::Add { d1, d2 } => {
            let (d1, d2) = (parse_divisor(&curve, d1)?, parse_divisor(&curve, d2)?);
            single_addition(cli, &curve, &d1, &d2)
        }
        Command::Double { d } => {
            let d = parse_divisor(&curve, d)?;
            single_addition(cli, &curve, &d, &d)
        }
        Command::Mul { n, d } => {
            let d = parse_divisor(&curve, d)?;
            let mut counters = OpCounters::default();
            let r = group::scalar_mul_with(&curve, *n, &d, &mut counters)?;
            Ok(Outcome::ok(arithmetic_output(cli, &r, "ScalarMul".into(), &counters)))
        }
        Command::Verify => {
            let report = group::oracle_sweep(&curve, cli.bound)?;
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                report.render_text()
            };
            let code = if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH };
            Ok(Outcome { stdout, stderr: String::new(), code })
        }
        Command::Bench { iterations } => {
            let report = bench::run_bench(&curve, *iterations, cli.seed)?;
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                report.render_table()
            };
            let code = if report.mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH };
            Ok(Outcome { stdout, stderr: String::new(), code })
        }
        Command::Figure { .. } => unreachable!("handled above"),
    }
}
