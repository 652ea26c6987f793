//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::Command;

use num_complex::Complex64;
use punctured_metric::bounds::{rho_bounds, sigma_lower, PuncturedDomain};
use punctured_metric::elliptic::ellip_k;
use punctured_metric::hyp2f1::{f21, HypParams};
use punctured_metric::metric::{
    big_h, big_h_prime, c0, k_at_inv_sqrt2, lambda01_neg, phi_func, varphi,
};
use punctured_metric::pqfun::{p_func, p_prime, q_func, q_log, q_log_prime, ZeroBalancedPair};
use punctured_metric::specfun::ramanujan_r;
use punctured_metric::verify::{
    extremum_g, find_t0, max_weighted_h, run_check, run_suite, weighted_h, CheckParams, GridSpec,
    Profile,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: punctured_metric::Error) -> String {
    e.to_string()
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    GridSpec::linear(lo, hi, n).unwrap().points()
}

fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    GridSpec::log(lo, hi, n).unwrap().points()
}

fn constants() -> Outcome {
    let k = c0();
    ensure((k - 4.37688).abs() <= 5e-6, format!("C0 = {k}"))?;
    let kk = k_at_inv_sqrt2().map_err(err)?;
    let alt = 4.0 / PI * kk * kk;
    ensure(
        (k - alt).abs() <= 1e-12 * k,
        format!("C0 = {k}, (4/pi)K^2 = {alt}"),
    )?;
    Ok(format!(
        "C0 = {k:.12}, |C0 - (4/pi)K(1/sqrt2)^2| = {:.1e}",
        (k - alt).abs()
    ))
}

fn extremum() -> Outcome {
    let t0 = find_t0().map_err(err)?;
    ensure((t0 - 2.56944).abs() <= 5e-4, format!("t0 = {t0}"))?;
    let ext = max_weighted_h().map_err(err)?;
    ensure(
        (ext.max_value - 1.24477).abs() <= 5e-4,
        format!("max = {}", ext.max_value),
    )?;
    ensure(ext.max_value < 1.25, "maximum not below 1.25")?;
    let mut brute = f64::NEG_INFINITY;
    for t in linspace(0.0, 20.0, 2001) {
        brute = brute.max(weighted_h(t).map_err(err)?);
    }
    let diff = (brute - ext.max_value).abs();
    ensure(
        diff <= 1e-4,
        format!("grid max {brute} vs {}", ext.max_value),
    )?;
    Ok(format!(
        "t0 = {t0:.8}, max = {:.8}, brute-force grid max = {brute:.8}",
        ext.max_value
    ))
}

fn g_sign() -> Outcome {
    let g = extremum_g(2.56).map_err(err)?;
    ensure(g > 0.02, format!("g(2.56) = {g}"))?;
    Ok(format!("g(2.56) = {g:.6}"))
}

fn h_values() -> Outcome {
    let v = big_h(PI / 4.0).map_err(err)?;
    ensure((v - 9.0157).abs() <= 5e-4, format!("H(pi/4) = {v}"))?;
    let w = 2.0 * c0() + PI / 2.0;
    ensure((w - 10.3246).abs() <= 5e-4, format!("2C0 + pi/2 = {w}"))?;
    Ok(format!("H(pi/4) = {v:.6}, 2C0 + pi/2 = {w:.6}"))
}

fn ramanujan_gap() -> Outcome {
    let d = ramanujan_r(0.5, 0.5).map_err(err)? - c0();
    ensure((d + 1.6043).abs() <= 5e-4, format!("R - C0 = {d}"))?;
    Ok(format!("R(1/2,1/2) - C0 = {d:.6}"))
}

fn oracle_equivalence() -> Outcome {
    let p = HypParams::new(0.5, 0.5, 1.0).map_err(err)?;
    let mut worst: f64 = 0.0;
    for r in linspace(0.01, 0.95, 20) {
        let k = ellip_k(r).map_err(err)?;
        let f = f21(&p, r * r).map_err(err)?.value;
        let d = (2.0 / PI * k - f).abs();
        ensure(d <= 1e-12 * k, format!("r = {r}: |2K/pi - F| = {d}"))?;
        worst = worst.max(d / k);
    }
    Ok(format!("20 moduli, worst relative gap {worst:.1e}"))
}

fn sandwich() -> Outcome {
    let grid = GridSpec::log(1e-2, 100.0, 200).map_err(err)?;
    let rep = run_check("thm_c212_5", &CheckParams::default(), &grid, 0.0).map_err(err)?;
    ensure(rep.passed && rep.worst_margin > 0.0, format!("{:?}", rep))?;
    // Plain differences agree wherever double precision resolves the upper gap.
    for t in logspace(1e-2, 15.0, 60) {
        let two_h = 2.0 / big_h(t).map_err(err)?;
        ensure(1.0 / (t + c0()) < two_h, format!("lower fails at t = {t}"))?;
        ensure(
            two_h < 1.0 / (t + 16f64.ln()),
            format!("upper fails at t = {t}"),
        )?;
    }
    Ok(format!(
        "200 log-spaced t in [0.01, 100], worst margin {:.3e}",
        rep.worst_margin
    ))
}

fn asymptotics() -> Outcome {
    let half = ZeroBalancedPair::elliptic();
    let t = 30.0;
    let a = (PI * p_func(&half, t).map_err(err)? - t - 16f64.ln()).abs();
    let b = (PI * p_prime(&half, t).map_err(err)? - 1.0).abs();
    ensure(a <= 1e-8, format!("|pi P - t - ln 16| = {a}"))?;
    ensure(b <= 1e-8, format!("|pi P' - 1| = {b}"))?;
    Ok(format!("at t = 30: {a:.1e} and {b:.1e}"))
}

fn identity_web() -> Outcome {
    let half = ZeroBalancedPair::elliptic();
    let general = ZeroBalancedPair::new(1.5, 1.2).map_err(err)?;
    for t in linspace(-20.0, 20.0, 81) {
        for pr in [&half, &general] {
            let prod = q_func(pr, t).map_err(err)? * q_func(pr, -t).map_err(err)?;
            ensure(
                (prod - 1.0).abs() <= 1e-12,
                format!("Q(t)Q(-t) = {prod} at t = {t}"),
            )?;
        }
        let hh = big_h(t).map_err(err)?;
        let pp = 2.0 * PI * p_func(&half, t).map_err(err)?;
        ensure(
            ((hh - pp) / pp).abs() <= 1e-11,
            format!("H != 2 pi P at t = {t}"),
        )?;
    }
    for x in logspace(1e-2, 1e2, 41) {
        let s = phi_func(1.0 / x).map_err(err)? + phi_func(x).map_err(err)?;
        ensure(
            s.abs() <= 1e-12,
            format!("Phi(1/x) + Phi(x) = {s} at x = {x}"),
        )?;
    }
    for t in logspace(1e-2, 60.0, 41) {
        let v = varphi(t).map_err(err)?;
        let q = q_log(&half, t / 2.0).map_err(err)?;
        let elliptic = 2.0 * phi_func((t / 2.0).exp()).map_err(err)?;
        ensure(
            (v - q).abs() <= 1e-12,
            format!("varphi != q(t/2) at t = {t}"),
        )?;
        ensure(
            (v - elliptic).abs() <= 1e-12,
            format!("varphi != 2 Phi(e^(t/2)) at t = {t}"),
        )?;
    }
    Ok("Q(t)Q(-t) = 1, Phi(1/x) = -Phi(x), H = 2 pi P, varphi(t) = q(t/2)".into())
}

fn central(f: impl Fn(f64) -> f64, t: f64) -> f64 {
    let s = 1e-5;
    (f(t + s) - f(t - s)) / (2.0 * s)
}

fn derivatives() -> Outcome {
    let pts = linspace(-9.5, 9.5, 20);
    let mut worst: f64 = 0.0;
    for pr in [
        ZeroBalancedPair::elliptic(),
        ZeroBalancedPair::new(1.5, 1.2).map_err(err)?,
    ] {
        for &t in &pts {
            let d1 = p_prime(&pr, t).map_err(err)? - central(|s| p_func(&pr, s).unwrap(), t);
            let d2 = q_log_prime(&pr, t).map_err(err)? - central(|s| q_log(&pr, s).unwrap(), t);
            for (what, d) in [("P'", d1), ("q'", d2)] {
                ensure(d.abs() <= 1e-6, format!("{what} off by {d} at t = {t}"))?;
                worst = worst.max(d.abs());
            }
        }
    }
    for &t in &pts {
        let d = big_h_prime(t).map_err(err)? - central(|s| big_h(s).unwrap(), t);
        ensure(d.abs() <= 1e-6, format!("H' off by {d} at t = {t}"))?;
        worst = worst.max(d.abs());
    }
    Ok(format!("P', q', H' at 20 points, worst {worst:.1e}"))
}

fn full_suite() -> Outcome {
    let reports = run_suite(Profile::Default);
    let mut names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
    names.dedup();
    ensure(
        names.len() >= 21,
        format!("only {} named checks", names.len()),
    )?;
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{} ({:.3e})", r.name, r.worst_margin))
        .collect();
    ensure(failed.is_empty(), format!("failed: {}", failed.join(", ")))?;
    Ok(format!(
        "{} reports over {} checks",
        reports.len(),
        names.len()
    ))
}

fn bounds_engine() -> Outcome {
    let dom = PuncturedDomain::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
        .map_err(err)?;
    let mut finite_uppers = 0;
    for x in logspace(1e-2, 1e2, 20) {
        let z = Complex64::new(-x, 0.0);
        let exact = lambda01_neg(x).map_err(err)?;
        let s = sigma_lower(&dom, z).map_err(err)?;
        ensure(
            ((s - exact) / exact).abs() <= 1e-12,
            format!("sigma {s} vs {exact} at x = {x}"),
        )?;
        let r = rho_bounds(&dom, z).map_err(err)?;
        // rounding slack only: the lower bound is attained at x = 1
        ensure(
            r.lower <= exact * (1.0 + 1e-13),
            format!("lower {} > {exact}", r.lower),
        )?;
        if r.upper.is_finite() {
            finite_uppers += 1;
            ensure(exact <= r.upper, format!("upper {} < {exact}", r.upper))?;
        }
    }
    Ok(format!(
        "20 points on the negative axis, {finite_uppers} finite upper bounds"
    ))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_punctured-metric"))
        .args(args)
        .env_remove("PUNCTURED_METRIC_TOL")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.success(),
        format!("{args:?} exited with {}", out.status),
    )?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn cli_value(args: &[&str], key: &str) -> Result<f64, String> {
    let text = cli(args)?;
    let v: serde_json::Value = serde_json::from_str(text.trim()).map_err(|e| e.to_string())?;
    v[key]
        .as_f64()
        .ok_or_else(|| format!("no `{key}` in {text}"))
}

fn figure1() -> Outcome {
    let csv = cli(&["figure1", "--c-lo", "0.05", "--c-hi", "10"])?;
    let mut lines = csv.lines();
    ensure(
        lines.next() == Some("c,phi_over_c,h_half,bp_log"),
        "bad header",
    )?;
    let rows: Vec<(String, [f64; 3])> = lines
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            let v = |i: usize| cells[i].parse::<f64>().unwrap();
            (cells[0].to_string(), [v(1), v(2), v(3)])
        })
        .collect();
    ensure(rows.len() >= 2, "too few rows")?;
    for col in 0..3 {
        for w in rows.windows(2) {
            ensure(w[0].1[col] > 0.0 && w[1].1[col] > 0.0, "non-positive value")?;
            ensure(
                w[1].1[col] < w[0].1[col],
                format!("column {col} not decreasing at c = {}", w[1].0),
            )?;
        }
    }
    let (c_text, vals) = rows
        .iter()
        .min_by(|a, b| {
            let da = (a.0.parse::<f64>().unwrap() - 1.0).abs();
            let db = (b.0.parse::<f64>().unwrap() - 1.0).abs();
            da.total_cmp(&db)
        })
        .unwrap();
    let c: f64 = c_text.parse().unwrap();
    ensure(
        (c - 1.0).abs() < 1e-12,
        format!("no row at c = 1 (closest {c})"),
    )?;
    let phi = cli_value(&["eval", "varphi", "--t", c_text], "value")? / c;
    let half = format!("{:e}", c / 2.0);
    let hh = cli_value(&["eval", "h", "--t", &half], "value")?;
    let k = cli_value(&["constants"], "C0")?;
    let bp = (c / (2.0 * k)).ln_1p() / c;
    for (name, got, want) in [
        ("phi_over_c", vals[0], phi),
        ("h_half", vals[1], hh),
        ("bp_log", vals[2], bp),
    ] {
        ensure(
            (got - want).abs() <= 1e-12,
            format!("{name}: csv {got} vs eval {want}"),
        )?;
    }
    Ok(format!(
        "{} rows, all columns positive and decreasing; c = 1 row matches eval",
        rows.len()
    ))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("constants C0", constants),
        ("extremum t0 and maximum of 2(|t|+C0)h(t)", extremum),
        ("g(2.56) > 0.02", g_sign),
        ("H(pi/4) and 2C0 + pi/2", h_values),
        ("R(1/2,1/2) - C0", ramanujan_gap),
        ("K versus F(1/2,1/2;1;r^2)", oracle_equivalence),
        ("sandwich bounds on 2h(t)", sandwich),
        ("asymptotics of P and P' at t = 30", asymptotics),
        ("identity web", identity_web),
        (
            "analytic derivatives versus finite differences",
            derivatives,
        ),
        ("full verify suite at default tolerances", full_suite),
        ("bounds engine on C minus {0, 1}", bounds_engine),
        ("figure1 CSV", figure1),
    ];
    let mut failures = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
