//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code, so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 on success, 1 for computation errors and failed checks,
//! 2 for usage errors.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{
    baseline_bounds, rho_bounds, ring_coefficients, ring_lower_bound, sigma_lower, PuncturedDomain,
};
use crate::elliptic::{ellip_k, mu};
use crate::error::Error;
use crate::hyp2f1::{f21, HypParams};
use crate::metric::{big_h, big_h_prime, c0, h, lambda01_neg, phi_func, varphi};
use crate::pqfun::{
    m_func, n_func, p_func, p_prime, q_func, q_log, q_log_prime, slope_g, ZeroBalancedPair,
};
use crate::specfun::{beta, digamma, gamma, log_gamma, ramanujan_r, EULER_GAMMA};
use crate::verify::{manifest, manifest_for, ManifestEntry, Profile, PropertyReport};

/// Functions accepted by `eval`, with the flags each one needs.
pub const EVAL_FUNCTIONS: &[(&str, &str)] = &[
    ("f21", "--a --b --c --x"),
    ("K", "--r"),
    ("mu", "--r"),
    ("lambda", "--x"),
    ("phi", "--x"),
    ("h", "--t"),
    ("H", "--t"),
    ("Hprime", "--t"),
    ("varphi", "--t"),
    ("P", "--a --b --t"),
    ("Pprime", "--a --b --t"),
    ("G", "--a --b --t"),
    ("Q", "--a --b --t"),
    ("q", "--a --b --t"),
    ("qprime", "--a --b --t"),
    ("N", "--a --b --c --x"),
    ("M", "--a --b --c --x"),
    ("gamma", "--x"),
    ("lgamma", "--x"),
    ("digamma", "--x"),
    ("beta", "--a --b"),
    ("R", "--a --b"),
];

#[derive(Debug, Parser)]
#[command(
    name = "punctured-metric",
    version,
    about = "Hyperbolic metric of the twice-punctured plane and related hypergeometric inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function and print {value, ...} as JSON.
    Eval(EvalArgs),
    /// Run named property checks and print one report per line.
    Verify(VerifyArgs),
    /// Distance and density bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Print reference constants as JSON.
    Constants,
    /// Emit the Figure 1 curves as CSV.
    Figure1(FigureArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Function name; see the list in the crate documentation.
    function: String,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Tolerance profile; overrides PUNCTURED_METRIC_TOL.
    #[arg(long)]
    suite: Option<String>,
    /// Run only the manifest entries of this check.
    #[arg(long)]
    check: Option<String>,
    /// Print reports as JSON lines.
    #[arg(long)]
    json: bool,
    /// List the registered check names and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Debug, Subcommand)]
enum BoundsCommand {
    /// Ring-sequence lower bound A log(r2/r1) − B, clamped at 0.
    Ring {
        #[arg(long)]
        c: f64,
        #[arg(long)]
        r1: f64,
        #[arg(long)]
        r2: f64,
        /// Also evaluate the two baseline coefficient sets.
        #[arg(long)]
        compare: bool,
    },
    /// Two-sided density bounds in a finitely punctured plane.
    Rho {
        /// JSON file holding a list of [re, im] punctures.
        #[arg(long)]
        domain: PathBuf,
        /// Point as RE,IM.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Lower bound for the density from all puncture pairs.
    Sigma {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long, default_value_t = 0.05)]
    c_lo: f64,
    #[arg(long, default_value_t = 10.0)]
    c_hi: f64,
    #[arg(long, default_value_t = 200)]
    count: usize,
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM, got `{s}`"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("real part `{re}`: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("imaginary part `{im}`: {e}"))?;
    Ok(Complex64::new(re, im))
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::UnknownCheck(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parse `args` (including the program name) and execute the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bounds(b) => cmd_bounds(&b, out),
        Command::Constants => cmd_constants(out),
        Command::Figure1(f) => cmd_figure1(&f, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            1
        }
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Outcome {
    let line = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{line}").map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(0)
}

fn need(v: Option<f64>, function: &str, flag: &str) -> std::result::Result<f64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("eval {function} requires --{flag}")))
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Outcome {
    let f = args.function.as_str();
    if !EVAL_FUNCTIONS.iter().any(|(n, _)| *n == f) {
        let names: Vec<&str> = EVAL_FUNCTIONS.iter().map(|(n, _)| *n).collect();
        return Err(Failure::Usage(format!(
            "unknown function `{f}`; expected one of {}",
            names.join(", ")
        )));
    }
    let a = || need(args.a, f, "a");
    let b = || need(args.b, f, "b");
    let c = || need(args.c, f, "c");
    let x = || need(args.x, f, "x");
    let t = || need(args.t, f, "t");
    let r = || need(args.r, f, "r");
    let pair = || -> std::result::Result<ZeroBalancedPair, Failure> {
        Ok(ZeroBalancedPair::new(a()?, b()?)?)
    };
    let value = match f {
        "f21" => {
            let res = f21(&HypParams::new(a()?, b()?, c()?)?, x()?)?;
            let body = json!({
                "function": f,
                "value": res.value,
                "abs_err_estimate": res.abs_err_estimate,
                "terms_used": res.terms_used,
                "method": res.method.as_str(),
            });
            return emit(out, &body);
        }
        "K" => ellip_k(r()?)?,
        "mu" => mu(r()?)?,
        "lambda" => lambda01_neg(x()?)?,
        "phi" => phi_func(x()?)?,
        "h" => h(t()?)?,
        "H" => big_h(t()?)?,
        "Hprime" => big_h_prime(t()?)?,
        "varphi" => varphi(t()?)?,
        "P" => p_func(&pair()?, t()?)?,
        "Pprime" => p_prime(&pair()?, t()?)?,
        "G" => slope_g(&pair()?, t()?)?,
        "Q" => q_func(&pair()?, t()?)?,
        "q" => q_log(&pair()?, t()?)?,
        "qprime" => q_log_prime(&pair()?, t()?)?,
        "N" => n_func(a()?, b()?, c()?, x()?)?,
        "M" => m_func(a()?, b()?, c()?, x()?)?,
        "gamma" => gamma(x()?)?,
        "lgamma" => log_gamma(x()?)?,
        "digamma" => digamma(x()?)?,
        "beta" => beta(a()?, b()?)?,
        "R" => ramanujan_r(a()?, b()?)?,
        _ => unreachable!("name checked against EVAL_FUNCTIONS"),
    };
    emit(out, &json!({ "function": f, "value": value }))
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    if args.list {
        for name in crate::verify::check_names() {
            writeln!(out, "{name}").map_err(|e| Failure::Usage(e.to_string()))?;
        }
        return Ok(0);
    }
    let profile = match &args.suite {
        Some(s) => s.parse::<Profile>()?,
        None => Profile::from_env()?,
    };
    let entries: Vec<ManifestEntry> = match &args.check {
        Some(name) => manifest_for(name)?,
        None => manifest(),
    };
    let reports: Vec<PropertyReport> = if args.check.is_some() {
        entries.iter().map(|m| m.run(profile)).collect()
    } else {
        crate::verify::run_suite(profile)
    };
    for r in &reports {
        if args.json {
            emit(out, r)?;
        } else {
            let status = if r.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {:<24} worst_margin={:.3e} tol={:.0e} {}",
                r.name, r.worst_margin, r.tolerance, r.notes
            )
            .map_err(|e| Failure::Usage(e.to_string()))?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    })
}

fn load_domain(path: &PathBuf) -> std::result::Result<PuncturedDomain, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(PuncturedDomain::from_json(&text)?)
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn cmd_bounds(cmd: &BoundsCommand, out: &mut dyn Write) -> Outcome {
    match cmd {
        BoundsCommand::Ring { c, r1, r2, compare } => {
            let k = ring_coefficients(*c)?;
            let bound = ring_lower_bound(*c, *r1, *r2)?;
            let mut body = json!({
                "c": k.c, "A": k.a, "B": k.b, "r1": r1, "r2": r2, "lower_bound": bound,
            });
            if *compare {
                let base = baseline_bounds(*c)?;
                let log_ratio = (r2 / r1).ln();
                body["baselines"] = json!({
                    "sv512_A": base.sv512_a,
                    "sv512_bound": base.sv512_a * log_ratio,
                    "bp_A": base.bp_a,
                    "bp_B": base.bp_b,
                    "bp_bound": (base.bp_a * log_ratio - base.bp_b).max(0.0),
                });
            }
            emit(out, &body)
        }
        BoundsCommand::Rho { domain, z } => {
            let dom = load_domain(domain)?;
            let r = rho_bounds(&dom, *z)?;
            emit(
                out,
                &json!({ "lower": r.lower, "upper": finite_or_null(r.upper) }),
            )
        }
        BoundsCommand::Sigma { domain, z } => {
            let dom = load_domain(domain)?;
            emit(out, &json!({ "lower": sigma_lower(&dom, *z)? }))
        }
    }
}

fn cmd_constants(out: &mut dyn Write) -> Outcome {
    let k = c0();
    let half = ZeroBalancedPair::elliptic();
    let body = json!({
        "C0": k,
        "ln16": 16f64.ln(),
        "pi": PI,
        "euler_gamma": EULER_GAMMA,
        "one_over_2C0": 1.0 / (2.0 * k),
        "2C0+pi/2": 2.0 * k + 0.5 * PI,
        "H(pi/4)": big_h(0.25 * PI)?,
        "R(1/2,1/2)-C0": half.ramanujan() - k,
    });
    emit(out, &body)
}

/// One labelled curve of the Figure 1 data.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotSeries {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

/// φ(c)/c, h(c/2) and log(1 + c/(2C₀))/c on a linear c-grid.
pub fn figure1_series(c_lo: f64, c_hi: f64, count: usize) -> crate::Result<Vec<PlotSeries>> {
    if !(c_lo > 0.0 && c_lo < c_hi && c_hi.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "figure1 needs 0 < c_lo < c_hi, got [{c_lo}, {c_hi}]"
        )));
    }
    if count < 2 {
        return Err(Error::InvalidInput(format!(
            "figure1 needs count >= 2, got {count}"
        )));
    }
    let step = (c_hi - c_lo) / (count - 1) as f64;
    let mut series: Vec<PlotSeries> = ["phi_over_c", "h_half", "bp_log"]
        .iter()
        .map(|l| PlotSeries {
            label: l.to_string(),
            points: Vec::with_capacity(count),
        })
        .collect();
    for i in 0..count {
        let c = if i + 1 == count {
            c_hi
        } else {
            c_lo + step * i as f64
        };
        let ring = ring_coefficients(c)?;
        let base = baseline_bounds(c)?;
        for (s, v) in series.iter_mut().zip([ring.a, base.sv512_a, base.bp_a]) {
            s.points.push((c, v));
        }
    }
    Ok(series)
}

/// Figure 1 data as CSV with header `c,phi_over_c,h_half,bp_log`.
pub fn figure1_csv(c_lo: f64, c_hi: f64, count: usize) -> crate::Result<String> {
    let series = figure1_series(c_lo, c_hi, count)?;
    let mut csv = String::from("c");
    for s in &series {
        csv.push(',');
        csv.push_str(&s.label);
    }
    csv.push('\n');
    for i in 0..count {
        csv.push_str(&format!("{:.16e}", series[0].points[i].0));
        for s in &series {
            csv.push_str(&format!(",{:.16e}", s.points[i].1));
        }
        csv.push('\n');
    }
    Ok(csv)
}

fn cmd_figure1(args: &FigureArgs, out: &mut dyn Write) -> Outcome {
    let csv = figure1_csv(args.c_lo, args.c_hi, args.count)?;
    out.write_all(csv.as_bytes())
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(0)
}
