//! Named property checks over sampling grids.
//!
//! Each check samples one claim about the functions of this crate and
//! reduces it to a single worst margin. The shared conventions:
//!
//! * identities contribute `-|error|`;
//! * strict inequalities contribute `gap - floor`, where the floor is
//!   [`STRICT_FLOOR`] for gaps formed by subtracting two computed values and
//!   zero for gaps that are computed directly (for instance through
//!   [`p_excess`]);
//! * non-strict inequalities contribute the raw gap.
//!
//! A report passes when `worst_margin > -tolerance`. Passing is sampled
//! evidence at the stated grid, not a proof.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyp2f1::{
    eval_raw, f21, f21_at_one, f21_derivative_split, finite_difference_table, ratio_coeffs,
    HypParams, SplitArg,
};
use crate::metric::{big_h, big_h_prime, c0, h, varphi};
use crate::pqfun::{
    m_func, n_func, p_excess, p_func, p_prime, q_func, q_log, q_log_prime, scaled_derivative,
    slope_g, ZeroBalancedPair,
};
use crate::specfun::log_gamma;

/// Floor subtracted from gaps that are differences of computed values.
pub const STRICT_FLOOR: f64 = 1e-12;
const DIRECT: f64 = 0.0;

/// Environment variable selecting the default tolerance profile.
pub const TOL_ENV: &str = "PUNCTURED_METRIC_TOL";

/// Bracket for the zero of g(t) = H(t) − (t + C₀)H′(t).
pub const T0_BRACKET: (f64, f64) = (2.0, 3.0);
const T0_TOL: f64 = 1e-10;

const LEMMA_COEFF_TERMS: usize = 60;
const CONCAVE_DEPTH: usize = 30;
const LIMIT_DECAY: f64 = 1e-3;
const WEIGHTED_BOUND: f64 = 1.25;
const WEIGHTED_BOUND_SHARP: f64 = 1.248;
const G_AT_T1: (f64, f64) = (2.56, 0.02);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Linear,
    Log,
}

/// `count` sample points between `lo` and `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    lo: f64,
    hi: f64,
    count: usize,
    scale: Scale,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, count: usize, scale: Scale) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidInput(format!(
                "grid needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        if count < 3 {
            return Err(Error::InvalidInput(format!(
                "grid needs at least 3 points, got {count}"
            )));
        }
        if scale == Scale::Log && lo <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "log grid needs lo > 0, got {lo}"
            )));
        }
        Ok(Self {
            lo,
            hi,
            count,
            scale,
        })
    }

    pub fn linear(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new(lo, hi, count, Scale::Linear)
    }

    pub fn log(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new(lo, hi, count, Scale::Log)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    /// The same interval with `factor` times as many points.
    pub fn densified(&self, factor: usize) -> Self {
        Self {
            count: self.count * factor.max(1),
            ..*self
        }
    }

    /// Sample points in increasing order; both end points are exact.
    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        let mut pts: Vec<f64> = (0..self.count)
            .map(|i| {
                let s = i as f64 / last;
                match self.scale {
                    Scale::Linear => self.lo + (self.hi - self.lo) * s,
                    Scale::Log => (self.lo.ln() + (self.hi / self.lo).ln() * s).exp(),
                }
            })
            .collect();
        pts[0] = self.lo;
        pts[self.count - 1] = self.hi;
        pts
    }

    fn require_within(&self, claim: &str, lo: f64, hi: f64) -> Result<()> {
        if self.lo >= lo && self.hi <= hi && (self.lo > lo || lo == f64::NEG_INFINITY) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{claim} samples ({lo}, {hi}], got grid [{}, {}]",
                self.lo, self.hi
            )))
        }
    }
}

/// Parameters shared by the checks; each check reads the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Seed for the random-pair samplers.
    pub seed: u64,
    /// Number of random pairs.
    pub samples: usize,
    /// Depth of finite-difference tables.
    pub depth: usize,
}

impl Default for CheckParams {
    fn default() -> Self {
        Self {
            a: 0.5,
            b: 0.5,
            c: 1.0,
            seed: 0x05ee_d2f1,
            samples: 1000,
            depth: 6,
        }
    }
}

impl CheckParams {
    pub fn triple(a: f64, b: f64, c: f64) -> Self {
        Self {
            a,
            b,
            c,
            ..Self::default()
        }
    }

    /// Zero-balanced pair, c = a + b.
    pub fn pair(a: f64, b: f64) -> Self {
        Self::triple(a, b, a + b)
    }

    fn hyp(&self) -> Result<HypParams> {
        HypParams::new(self.a, self.b, self.c)
    }

    fn zb(&self) -> Result<ZeroBalancedPair> {
        ZeroBalancedPair::new(self.a, self.b)
    }
}

/// Location of the worst margin: a sample point, or a pair of them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum WorstPoint {
    Point(f64),
    Pair([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub grid: GridSpec,
    pub worst_point: Option<WorstPoint>,
    pub worst_margin: f64,
    pub tolerance: f64,
    pub notes: String,
}

#[derive(Default)]
struct Tracker {
    worst: Option<(WorstPoint, f64)>,
    notes: Vec<String>,
}

impl Tracker {
    fn record(&mut self, at: WorstPoint, margin: f64) {
        let m = if margin.is_nan() {
            f64::NEG_INFINITY
        } else {
            margin
        };
        match self.worst {
            Some((_, w)) if w <= m => {}
            _ => self.worst = Some((at, m)),
        }
    }

    fn identity(&mut self, at: f64, err: f64) {
        self.record(WorstPoint::Point(at), -err.abs());
    }

    fn strict(&mut self, at: WorstPoint, gap: f64, floor: f64) {
        self.record(at, gap - floor);
    }

    fn weak(&mut self, at: WorstPoint, gap: f64) {
        self.record(at, gap);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn increasing(&mut self, xs: &[f64], ys: &[f64], floor: f64) {
        for i in 1..xs.len() {
            self.strict(
                WorstPoint::Pair([xs[i - 1], xs[i]]),
                ys[i] - ys[i - 1],
                floor,
            );
        }
    }

    fn decreasing(&mut self, xs: &[f64], ys: &[f64], floor: f64) {
        for i in 1..xs.len() {
            self.strict(
                WorstPoint::Pair([xs[i - 1], xs[i]]),
                ys[i - 1] - ys[i],
                floor,
            );
        }
    }

    /// Strict convexity (`sign = 1`) or concavity (`sign = -1`) on
    /// consecutive triples.
    fn curvature(&mut self, xs: &[f64], ys: &[f64], sign: f64, floor: f64) {
        for i in 1..xs.len().saturating_sub(1) {
            let gap = chord_gap([xs[i - 1], xs[i], xs[i + 1]], [ys[i - 1], ys[i], ys[i + 1]]);
            self.strict(WorstPoint::Point(xs[i]), sign * gap, floor);
        }
    }
}

/// Height of the chord through the outer points above the middle value;
/// positive for strictly convex data. On a uniform grid this is the
/// midpoint inequality.
fn chord_gap(x: [f64; 3], y: [f64; 3]) -> f64 {
    let w = (x[1] - x[0]) / (x[2] - x[0]);
    y[0] + w * (y[2] - y[0]) - y[1]
}

/// Chord gap of |t|, exactly zero when the triple does not straddle 0.
fn abs_chord_gap(x: [f64; 3]) -> f64 {
    if x[0] >= 0.0 || x[2] <= 0.0 {
        0.0
    } else {
        chord_gap(x, [x[0].abs(), x[1].abs(), x[2].abs()])
    }
}

/// Chord gap of P. The linear part (|t| + R)/B is handled exactly and the
/// remainder through `p_excess`, so the gap keeps its relative accuracy
/// where P is nearly linear.
fn p_chord_gap(pr: &ZeroBalancedPair, x: [f64; 3]) -> Result<f64> {
    let e = [
        p_excess(pr, x[0])?,
        p_excess(pr, x[1])?,
        p_excess(pr, x[2])?,
    ];
    Ok(pr.inv_beta() * abs_chord_gap(x) + chord_gap(x, e))
}

fn map_grid(xs: &[f64], f: impl Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
    xs.iter().map(|&x| f(x)).collect()
}

fn random_pairs(params: &CheckParams, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..params.samples)
        .map(|_| (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)))
        .collect()
}

fn hypothesis(claim: &str, detail: String) -> Error {
    Error::Hypothesis {
        claim: claim.to_string(),
        detail,
    }
}

fn unit_interval(claim: &str, grid: &GridSpec) -> Result<()> {
    if grid.lo > 0.0 && grid.hi < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{claim} samples x in (0, 1), got grid [{}, {}]",
            grid.lo, grid.hi
        )))
    }
}

// ---------------------------------------------------------------------------
// (1 − x) F(a,b;c;x)

/// 1, −1 or 0 for the increasing, decreasing and constant cases; `None`
/// when the two conditions disagree.
fn vaman_case(a: f64, b: f64, c: f64) -> Option<i8> {
    let d1 = a * b - c;
    let d2 = a + b - c - 1.0;
    if d1 == 0.0 && d2 == 0.0 {
        Some(0)
    } else if d1 >= 0.0 && d2 >= 0.0 {
        Some(1)
    } else if d1 <= 0.0 && d2 <= 0.0 {
        Some(-1)
    } else {
        None
    }
}

fn vaman(params: &CheckParams, grid: &GridSpec, expected: i8, claim: &str) -> Result<Tracker> {
    let p = params.hyp()?;
    let case = vaman_case(p.a, p.b, p.c);
    if case != Some(expected) {
        let want = match expected {
            1 => "ab >= c and a + b >= c + 1, one strictly",
            -1 => "ab <= c and a + b <= c + 1, one strictly",
            _ => "ab = c and a + b = c + 1",
        };
        return Err(hypothesis(
            claim,
            format!("need {want}, got ({}, {}, {})", p.a, p.b, p.c),
        ));
    }
    unit_interval(claim, grid)?;
    let xs = grid.points();
    let mut tr = Tracker::default();
    let mut fs = Vec::with_capacity(xs.len());
    for &x in &xs {
        let arg = SplitArg::new(x)?;
        let v = f21(&p, x)?.value;
        let f = arg.one_minus_x() * v;
        fs.push(f);
        match expected {
            0 => tr.identity(x, f - 1.0),
            _ => {
                // f′ = (1 − x) v′ − v
                let df = arg.one_minus_x() * f21_derivative_split(&p, arg)? - v;
                tr.strict(WorstPoint::Point(x), f64::from(expected) * df, STRICT_FLOOR);
            }
        }
    }
    match expected {
        1 => tr.increasing(&xs, &fs, STRICT_FLOOR),
        -1 => tr.decreasing(&xs, &fs, STRICT_FLOOR),
        _ => {}
    }

    // Coefficients of (1 − x) Σ Tₙ xⁿ are Tₙ − Tₙ₋₁.
    let mut t_prev = 1.0;
    let mut first_strict = None;
    for n in 1..=LEMMA_COEFF_TERMS {
        let m = (n - 1) as f64;
        let t = t_prev * (p.a + m) * (p.b + m) / ((p.c + m) * (m + 1.0));
        let bn = t - t_prev;
        match expected {
            0 => tr.identity(n as f64, bn),
            _ => tr.weak(WorstPoint::Point(n as f64), f64::from(expected) * bn),
        }
        if first_strict.is_none() && bn != 0.0 {
            first_strict = Some(n);
        }
        t_prev = t;
    }
    match first_strict {
        Some(n) => tr.note(format!(
            "coefficients of (1-x)F checked for n <= {LEMMA_COEFF_TERMS}; first strict index n = {n}"
        )),
        None => tr.note(format!("coefficients of (1-x)F vanish for 1 <= n <= {LEMMA_COEFF_TERMS}")),
    }
    Ok(tr)
}

fn lem_vaman_1(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    vaman(params, grid, 1, "lem_vaman_1")
}

fn lem_vaman_2(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    vaman(params, grid, -1, "lem_vaman_2")
}

fn lem_vaman_3(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    vaman(params, grid, 0, "lem_vaman_3")
}

// ---------------------------------------------------------------------------
// x(1 − x) v′/v, N(x) and M(x)

fn log_derivative_scaled(p: &HypParams, arg: SplitArg) -> Result<f64> {
    Ok(scaled_derivative(p, arg)? / eval_raw(p.a, p.b, p.c, arg)?.value)
}

fn lem_concave_coeffs(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let p = params.hyp()?;
    if p.a.max(p.b) >= p.c {
        return Err(hypothesis(
            "lem_concave_coeffs",
            format!("need max(a, b) < c, got ({}, {}, {})", p.a, p.b, p.c),
        ));
    }
    unit_interval("lem_concave_coeffs", grid)?;
    let mut tr = Tracker::default();
    // v′/v = (ab/c) Σ qₙ xⁿ, so f = (ab/c)[q₀x + Σ (qₙ − qₙ₋₁) xⁿ⁺¹].
    let k = p.a * p.b / p.c;
    let q = ratio_coeffs(p.a, p.b, p.c, CONCAVE_DEPTH)?;
    let q = q.values();
    tr.strict(WorstPoint::Point(1.0), k * q[0], DIRECT);
    for n in 1..=CONCAVE_DEPTH {
        tr.strict(
            WorstPoint::Point((n + 1) as f64),
            k * (q[n - 1] - q[n]),
            STRICT_FLOOR,
        );
    }
    tr.note(format!(
        "Maclaurin coefficients through x^{}; coefficient claims report the power as the point",
        CONCAVE_DEPTH + 1
    ));
    let xs = grid.points();
    let fs = map_grid(&xs, |x| log_derivative_scaled(&p, SplitArg::new(x)?))?;
    for (&x, &f) in xs.iter().zip(&fs) {
        tr.strict(WorstPoint::Point(x), f, DIRECT);
    }
    tr.curvature(&xs, &fs, -1.0, STRICT_FLOOR);
    Ok(tr)
}

fn cor_concave_shape(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let p = params.hyp()?;
    unit_interval("cor_concave_shape", grid)?;
    let xs = grid.points();
    let ns = map_grid(&xs, |x| n_func(p.a, p.b, p.c, x))?;
    let mut tr = Tracker::default();
    if p.a.max(p.b) == p.c {
        let level = p.a.min(p.b);
        for (&x, &n) in xs.iter().zip(&ns) {
            tr.identity(x, n - level);
        }
        tr.note(format!("max(a, b) = c: N is the constant {level}"));
        return Ok(tr);
    }
    for (&x, &n) in xs.iter().zip(&ns) {
        tr.strict(WorstPoint::Point(x), n, DIRECT);
        tr.identity(x, n - n_func(p.a, p.b, p.c, 1.0 - x)?);
    }
    tr.curvature(&xs, &ns, -1.0, STRICT_FLOOR);
    let split = xs.partition_point(|&x| x <= 0.5);
    tr.increasing(&xs[..split], &ns[..split], STRICT_FLOOR);
    let from = split.saturating_sub(usize::from(xs[..split].last() == Some(&0.5)));
    tr.decreasing(&xs[from..], &ns[from..], STRICT_FLOOR);
    Ok(tr)
}

fn lem_hlvv_sign(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let p = params.hyp()?;
    unit_interval("lem_hlvv_sign", grid)?;
    let sign = (p.a + p.b - 1.0) * (p.c - p.b);
    let xs = grid.points();
    let ms = map_grid(&xs, |x| m_func(p.a, p.b, p.c, x))?;
    let mut tr = Tracker::default();
    for (&x, &m) in xs.iter().zip(&ms) {
        tr.identity(x, m - m_func(p.a, p.b, p.c, 1.0 - x)?);
    }
    if sign > 0.0 {
        tr.curvature(&xs, &ms, 1.0, STRICT_FLOOR);
        tr.note(format!("(a+b-1)(c-b) = {sign:.6} > 0: convex"));
    } else if sign < 0.0 {
        tr.curvature(&xs, &ms, -1.0, STRICT_FLOOR);
        tr.note(format!("(a+b-1)(c-b) = {sign:.6} < 0: concave"));
    } else {
        let level = m_func(p.a, p.b, p.c, 0.5)?;
        for (&x, &m) in xs.iter().zip(&ms) {
            tr.identity(x, m - level);
        }
        tr.note(format!("(a+b-1)(c-b) = 0: constant M = {level:.15}"));
    }
    Ok(tr)
}

// ---------------------------------------------------------------------------
// F(x) F(1 − x)

fn genconv_product(p: &HypParams, arg: SplitArg) -> Result<f64> {
    Ok(eval_raw(p.a, p.b, p.c, arg)?.value * eval_raw(p.a, p.b, p.c, arg.mirror())?.value)
}

fn thm_genconv_logconvex(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let p = params.hyp()?;
    if p.a * p.b / (p.a + p.b + 1.0) >= p.c {
        return Err(hypothesis(
            "thm_genconv_logconvex",
            format!("need ab/(a+b+1) < c, got ({}, {}, {})", p.a, p.b, p.c),
        ));
    }
    unit_interval("thm_genconv_logconvex", grid)?;
    let u = |arg: SplitArg| -> Result<f64> {
        Ok(f21_derivative_split(&p, arg)? / eval_raw(p.a, p.b, p.c, arg)?.value)
    };
    let ell = |x: f64| -> Result<f64> {
        let arg = SplitArg::new(x)?;
        Ok(u(arg)? - u(arg.mirror())?)
    };
    let xs = grid.points();
    let ls = map_grid(&xs, ell)?;
    let mut tr = Tracker::default();
    tr.increasing(&xs, &ls, STRICT_FLOOR);
    tr.identity(0.5, ell(0.5)?);
    let f_half = genconv_product(&p, SplitArg::new(0.5)?)?;
    let fs = map_grid(&xs, |x| genconv_product(&p, SplitArg::new(x)?))?;
    for (&x, &f) in xs.iter().zip(&fs) {
        if x != 0.5 {
            tr.strict(WorstPoint::Point(x), f - f_half, STRICT_FLOOR);
        }
    }
    let split = xs.partition_point(|&x| x < 0.5);
    tr.decreasing(&xs[..split], &fs[..split], STRICT_FLOOR);
    let from = xs.partition_point(|&x| x <= 0.5);
    tr.increasing(&xs[from..], &fs[from..], STRICT_FLOOR);
    tr.note(format!("minimum f(1/2) = {f_half:.15}"));
    Ok(tr)
}

/// Limits of F(x)F(1−x) as x → 1. The grid samples y = 1 − x.
fn thm_genconv_limits(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let p = params.hyp()?;
    grid.require_within("thm_genconv_limits", 0.0, 1.0)?;
    let gap = p.c - p.a - p.b;
    let ys = grid.points();
    let mut errs = Vec::with_capacity(ys.len());
    let mut tr = Tracker::default();
    let mut extra = 0.0_f64;
    for &y in &ys {
        let arg = SplitArg::from_complement(y)?;
        let f = genconv_product(&p, arg)?;
        let err = if gap > 0.0 {
            let target = f21_at_one(&p)?;
            ((f - target) / target).abs()
        } else if gap == 0.0 {
            let pr = params.zb()?;
            let target = pr.inv_beta() * (-arg.ln_one_minus_x() + pr.ramanujan());
            extra = extra.max((f - target).abs() / (y * arg.ln_one_minus_x().abs()));
            ((f - target) / target).abs()
        } else {
            let log_coef = log_gamma(p.c)? + log_gamma(-gap)? - log_gamma(p.a)? - log_gamma(p.b)?;
            let main = (log_coef + gap * arg.ln_one_minus_x()).exp();
            (f / main - 1.0).abs()
        };
        errs.push(err);
    }
    // The error shrinks as y decreases, by at least LIMIT_DECAY overall.
    tr.increasing(&ys, &errs, DIRECT);
    let (first, last) = (errs[0], errs[errs.len() - 1]);
    tr.strict(WorstPoint::Point(ys[0]), LIMIT_DECAY * last - first, DIRECT);
    let form = if gap > 0.0 {
        "relative error to F(1)"
    } else if gap == 0.0 {
        "relative error to (-log(1-x) + R(a,b))/B(a,b)"
    } else {
        "relative error to the leading power (1-x)^(c-a-b); checked in relative form"
    };
    tr.note(format!(
        "{form}: {last:.3e} at 1-x = {:.1e}, {first:.3e} at 1-x = {:.1e}",
        ys[ys.len() - 1],
        ys[0]
    ));
    if gap == 0.0 {
        tr.note(format!("max |remainder| / ((1-x)|log(1-x)|) = {extra:.4}"));
    }
    Ok(tr)
}

// ---------------------------------------------------------------------------
// P(t)

fn p_pair(params: &CheckParams, claim: &str) -> Result<ZeroBalancedPair> {
    let pr = params.zb()?;
    if pr.a() * pr.b() >= pr.a() + pr.b() {
        return Err(hypothesis(
            claim,
            format!("need ab < a + b, got a = {}, b = {}", pr.a(), pr.b()),
        ));
    }
    Ok(pr)
}

fn thm_main_parity(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = p_pair(params, "thm_main_parity")?;
    let xs = grid.points();
    let ps = map_grid(&xs, |t| p_func(&pr, t))?;
    let mut tr = Tracker::default();
    for (&t, &pv) in xs.iter().zip(&ps) {
        tr.identity(t, pv - p_func(&pr, -t)?);
        tr.identity(t, p_prime(&pr, t)? + p_prime(&pr, -t)?);
    }
    tr.identity(0.0, p_prime(&pr, 0.0)?);
    let neg = xs.partition_point(|&t| t <= 0.0);
    tr.decreasing(&xs[..neg], &ps[..neg], STRICT_FLOOR);
    let pos = xs.partition_point(|&t| t < 0.0);
    tr.increasing(&xs[pos..], &ps[pos..], STRICT_FLOOR);
    Ok(tr)
}

fn convexity_samples(
    tr: &mut Tracker,
    params: &CheckParams,
    grid: &GridSpec,
    scale: f64,
    pr: &ZeroBalancedPair,
) -> Result<()> {
    let xs = grid.points();
    for w in xs.windows(3) {
        let x = [w[0], w[1], w[2]];
        tr.strict(WorstPoint::Point(x[1]), scale * p_chord_gap(pr, x)?, DIRECT);
    }
    for (s, t) in random_pairs(params, grid.lo, grid.hi) {
        if s == t {
            continue;
        }
        let (lo, hi) = (s.min(t), s.max(t));
        let gap = p_chord_gap(pr, [lo, 0.5 * (lo + hi), hi])?;
        tr.strict(WorstPoint::Pair([s, t]), scale * gap, DIRECT);
    }
    tr.note(format!(
        "midpoint convexity on the grid and on {} random pairs (seed {})",
        params.samples, params.seed
    ));
    Ok(())
}

fn thm_main_convex(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = p_pair(params, "thm_main_convex")?;
    let mut tr = Tracker::default();
    convexity_samples(&mut tr, params, grid, 1.0, &pr)?;
    Ok(tr)
}

fn thm_main_pprime_bounds(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = p_pair(params, "thm_main_pprime_bounds")?;
    let inv_b = pr.inv_beta();
    let xs = grid.points();
    let ds = map_grid(&xs, |t| p_prime(&pr, t))?;
    let mut tr = Tracker::default();
    tr.increasing(&xs, &ds, STRICT_FLOOR);
    for (&t, &d) in xs.iter().zip(&ds) {
        tr.strict(WorstPoint::Point(t), inv_b - d.abs(), STRICT_FLOOR);
    }
    tr.identity(0.0, p_prime(&pr, 0.0)?);
    let sup = ds.iter().fold(0.0_f64, |m, d| m.max(d.abs()));
    tr.note(format!("max |P'| on grid = {sup:.15}, 1/B = {inv_b:.15}"));
    Ok(tr)
}

fn thm_main_slopes(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = p_pair(params, "thm_main_slopes")?;
    let inv_b = pr.inv_beta();
    let xs = grid.points();
    let es = map_grid(&xs, |t| p_excess(&pr, t))?;
    let e0 = p_excess(&pr, 0.0)?;
    let mut tr = Tracker::default();
    // P ∓ t/B = (|t| ∓ t)/B + R/B + E(t); the differences are formed
    // without touching the large linear part.
    for i in 1..xs.len() {
        let (s, t) = (xs[i - 1], xs[i]);
        let at = WorstPoint::Pair([s, t]);
        let minus = inv_b * ((s.abs() - s) - (t.abs() - t)) + (es[i - 1] - es[i]);
        tr.strict(at, minus, DIRECT);
        let plus = inv_b * ((t.abs() + t) - (s.abs() + s)) + (es[i] - es[i - 1]);
        tr.strict(at, plus, DIRECT);
    }
    for w in xs.windows(3) {
        let x = [w[0], w[1], w[2]];
        tr.strict(WorstPoint::Point(x[1]), p_chord_gap(&pr, x)?, DIRECT);
    }
    for (&t, &e) in xs.iter().zip(&es) {
        tr.strict(WorstPoint::Point(t), e, DIRECT);
        tr.weak(WorstPoint::Point(t), e0 - e);
    }
    let nonzero: Vec<f64> = xs.iter().copied().filter(|&t| t != 0.0).collect();
    let gs = map_grid(&nonzero, |t| slope_g(&pr, t))?;
    tr.increasing(&nonzero, &gs, STRICT_FLOOR);
    for (&t, &g) in nonzero.iter().zip(&gs) {
        tr.strict(WorstPoint::Point(t), inv_b - g.abs(), STRICT_FLOOR);
    }
    tr.note("convexity of P -/+ t/B is the convexity of P; remainders via P - (|t| + R)/B");
    Ok(tr)
}

// ---------------------------------------------------------------------------
// Q(t) and q(t)

fn thm_main2_qq(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = params.zb()?;
    let xs = grid.points();
    let qs = map_grid(&xs, |t| q_func(&pr, t))?;
    let mut tr = Tracker::default();
    for (&t, &q) in xs.iter().zip(&qs) {
        tr.identity(t, q * q_func(&pr, -t)? - 1.0);
        tr.identity(t, q_log(&pr, t)? + q_log(&pr, -t)?);
        tr.strict(WorstPoint::Point(t), q, DIRECT);
    }
    tr.increasing(&xs, &qs, STRICT_FLOOR);
    Ok(tr)
}

fn thm_main2_subadd(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = params.zb()?;
    grid.require_within("thm_main2_subadd", 0.0, f64::INFINITY)?;
    let xs = grid.points();
    let qs = map_grid(&xs, |t| q_log(&pr, t))?;
    let ds = map_grid(&xs, |t| q_log_prime(&pr, t))?;
    let peak = q_log_prime(&pr, 0.0)?;
    let mut tr = Tracker::default();
    tr.increasing(&xs, &qs, STRICT_FLOOR);
    tr.decreasing(&xs, &ds, STRICT_FLOOR);
    for (&t, &d) in xs.iter().zip(&ds) {
        tr.identity(t, d - q_log_prime(&pr, -t)?);
        tr.strict(WorstPoint::Point(t), peak - d, STRICT_FLOOR);
    }
    let ratios: Vec<f64> = xs.iter().zip(&qs).map(|(&t, &q)| q / t).collect();
    tr.decreasing(&xs, &ratios, STRICT_FLOOR);
    for (s, t) in random_pairs(params, grid.lo, grid.hi) {
        let gap = q_log(&pr, s)? + q_log(&pr, t)? - q_log(&pr, s + t)?;
        tr.weak(WorstPoint::Pair([s, t]), gap);
    }
    tr.note(format!(
        "q' even with peak {peak:.15} at 0; subadditivity on {} random pairs (seed {})",
        params.samples, params.seed
    ));
    Ok(tr)
}

fn thm_main2_qbounds(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let pr = params.zb()?;
    if pr.c() < 1.0 {
        return Err(hypothesis(
            "thm_main2_qbounds",
            format!("need a + b >= 1, got {}", pr.c()),
        ));
    }
    grid.require_within("thm_main2_qbounds", 0.0, f64::INFINITY)?;
    let inv_b = pr.inv_beta();
    let r = pr.ramanujan();
    let xs = grid.points();
    let qs = map_grid(&xs, |t| q_func(&pr, t))?;
    let shifted: Vec<f64> = xs.iter().zip(&qs).map(|(&t, &q)| q - t * inv_b).collect();
    let mut tr = Tracker::default();
    tr.decreasing(&xs, &shifted, STRICT_FLOOR);
    tr.curvature(&xs, &shifted, 1.0, STRICT_FLOOR);
    for (&t, &d) in xs.iter().zip(&shifted) {
        tr.strict(WorstPoint::Point(t), d - r * inv_b, STRICT_FLOOR);
        tr.strict(WorstPoint::Point(t), 1.0 - d, STRICT_FLOOR);
    }
    Ok(tr)
}

// ---------------------------------------------------------------------------
// h(t) and H(t)

fn thm_c212_1(_: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    grid.require_within("thm_c212_1", 0.0, f64::INFINITY)?;
    let xs = grid.points();
    let vs = map_grid(&xs, |t| Ok(t * h(t)?))?;
    let mut tr = Tracker::default();
    tr.increasing(&xs, &vs, STRICT_FLOOR);
    for (&t, &v) in xs.iter().zip(&vs) {
        tr.strict(WorstPoint::Point(t), v, DIRECT);
        tr.strict(WorstPoint::Point(t), 0.5 - v, STRICT_FLOOR);
    }
    tr.note(format!(
        "t h(t) runs from {:.3e} to {:.15}",
        vs[0],
        vs[vs.len() - 1]
    ));
    Ok(tr)
}

fn thm_c212_2(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let xs = grid.points();
    let hs = map_grid(&xs, big_h)?;
    let mut tr = Tracker::default();
    for (&t, &v) in xs.iter().zip(&hs) {
        tr.identity(t, v - big_h(-t)?);
    }
    let pos = xs.partition_point(|&t| t < 0.0);
    tr.increasing(&xs[pos..], &hs[pos..], STRICT_FLOOR);
    convexity_samples(
        &mut tr,
        params,
        grid,
        2.0 * PI,
        &ZeroBalancedPair::elliptic(),
    )?;
    tr.note("convexity through H = 2 pi P with a = b = 1/2");
    Ok(tr)
}

fn thm_c212_3(_: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let xs = grid.points();
    let ds = map_grid(&xs, big_h_prime)?;
    let mut tr = Tracker::default();
    tr.increasing(&xs, &ds, STRICT_FLOOR);
    for (&t, &d) in xs.iter().zip(&ds) {
        tr.identity(t, d + big_h_prime(-t)?);
        tr.strict(WorstPoint::Point(t), 2.0 - d.abs(), STRICT_FLOOR);
    }
    let sup = ds.iter().fold(0.0_f64, |m, d| m.max(d.abs()));
    tr.note(format!(
        "range (-2, 2); max |H'| on grid = {sup:.15}, 2 - max = {:.3e}",
        2.0 - sup
    ));
    Ok(tr)
}

/// 2(|t| + C₀) h(t).
pub fn weighted_h(t: f64) -> Result<f64> {
    Ok(2.0 * (t.abs() + c0()) * h(t)?)
}

/// g(t) = H(t) − (t + C₀) H′(t), whose zero locates the maximum of
/// [`weighted_h`].
pub fn extremum_g(t: f64) -> Result<f64> {
    Ok(big_h(t)? - (t + c0()) * big_h_prime(t)?)
}

/// Zero of [`extremum_g`] in [`T0_BRACKET`]: bisection down to a narrow
/// bracket, then bracketed secant steps.
pub fn find_t0() -> Result<f64> {
    let (mut lo, mut hi) = T0_BRACKET;
    let (mut g_lo, mut g_hi) = (extremum_g(lo)?, extremum_g(hi)?);
    if !(g_lo > 0.0 && g_hi < 0.0) {
        return Err(Error::Bracket {
            func: "extremum_g",
            lo,
            hi,
        });
    }
    while hi - lo > 1e-3 {
        let mid = 0.5 * (lo + hi);
        let g = extremum_g(mid)?;
        if g > 0.0 {
            (lo, g_lo) = (mid, g);
        } else {
            (hi, g_hi) = (mid, g);
        }
    }
    // Secant steps on the bracket; halving the stale end (Illinois rule)
    // keeps both ends moving.
    let mut last_side = 0i8;
    for _ in 0..100 {
        if hi - lo <= T0_TOL {
            break;
        }
        let next = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
        let next = if next > lo && next < hi {
            next
        } else {
            0.5 * (lo + hi)
        };
        let g = extremum_g(next)?;
        if g == 0.0 {
            return Ok(next);
        }
        if g > 0.0 {
            (lo, g_lo) = (next, g);
            if last_side == 1 {
                g_hi *= 0.5;
            }
            last_side = 1;
        } else {
            (hi, g_hi) = (next, g);
            if last_side == -1 {
                g_lo *= 0.5;
            }
            last_side = -1;
        }
    }
    Ok(if g_lo.abs() <= g_hi.abs() { lo } else { hi })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Extremum {
    pub t0: f64,
    pub max_value: f64,
}

/// max over t of 2(|t| + C₀) h(t) = 2 / H′(t₀).
pub fn max_weighted_h() -> Result<Extremum> {
    let t0 = find_t0()?;
    let max_value = 2.0 / big_h_prime(t0)?;
    // written so that NaN also fails
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(max_value < WEIGHTED_BOUND) {
        return Err(hypothesis(
            "max_weighted_h",
            format!("2(|t|+C0)h(t) reaches {max_value}, not below {WEIGHTED_BOUND}"),
        ));
    }
    Ok(Extremum { t0, max_value })
}

fn thm_c212_4(_: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let ext = max_weighted_h()?;
    let xs = grid.points();
    let ws = map_grid(&xs, weighted_h)?;
    let mut tr = Tracker::default();
    let mut grid_max = (f64::NEG_INFINITY, 0.0);
    for (&t, &w) in xs.iter().zip(&ws) {
        tr.strict(WorstPoint::Point(t), WEIGHTED_BOUND - w, STRICT_FLOOR);
        if w > grid_max.0 {
            grid_max = (w, t);
        }
    }
    tr.weak(
        WorstPoint::Point(grid_max.1),
        ext.max_value + 1e-6 - grid_max.0,
    );
    tr.strict(
        WorstPoint::Point(ext.t0),
        WEIGHTED_BOUND_SHARP - ext.max_value,
        DIRECT,
    );
    let (t1, g_floor) = G_AT_T1;
    let g1 = extremum_g(t1)?;
    tr.strict(WorstPoint::Point(t1), g1 - g_floor, DIRECT);
    tr.note(format!(
        "t0 = {:.10}, max = {:.10}, grid max = {:.10} at t = {}, g({t1}) = {g1:.6}",
        ext.t0, ext.max_value, grid_max.0, grid_max.1
    ));
    Ok(tr)
}

fn thm_c212_5(_: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let half = ZeroBalancedPair::elliptic();
    let e0 = p_excess(&half, 0.0)?;
    let ln16 = 16f64.ln();
    let mut tr = Tracker::default();
    let mut worst = (f64::INFINITY, f64::INFINITY);
    for t in grid.points() {
        // 2h = 1/(πP) and πP − |t| − ln 16 = πE, so both gaps are explicit.
        let e = p_excess(&half, t)?;
        let p = p_func(&half, t)?;
        let lower = (e0 - e) / (p * (t.abs() + c0()));
        let upper = e / (p * (t.abs() + ln16));
        tr.strict(WorstPoint::Point(t), lower, DIRECT);
        tr.strict(WorstPoint::Point(t), upper, DIRECT);
        worst = (worst.0.min(lower), worst.1.min(upper));
    }
    tr.note(format!(
        "min lower gap {:.3e}, min upper gap {:.3e}; 2h = 1/(pi P)",
        worst.0, worst.1
    ));
    Ok(tr)
}

// ---------------------------------------------------------------------------
// Coefficient sequences and φ

/// The grid indexes n = 0, …, count − 1.
fn kustner_total_monotone(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    let n_max = grid.count - 1;
    let seq = ratio_coeffs(params.a, params.b, params.c, n_max)?;
    let table = finite_difference_table(&seq, params.depth)?;
    let (min, k, n) = table.min_entry();
    let mut tr = Tracker::default();
    tr.weak(WorstPoint::Pair([k as f64, n as f64]), min);
    tr.note(format!(
        "depth k <= {}, n <= {n_max}; min entry {min:.3e} at (k, n) = ({k}, {n})",
        params.depth
    ));
    Ok(tr)
}

fn cor_phi_decreasing(params: &CheckParams, grid: &GridSpec) -> Result<Tracker> {
    grid.require_within("cor_phi_decreasing", 0.0, f64::INFINITY)?;
    let xs = grid.points();
    let ratios = map_grid(&xs, |t| Ok(varphi(t)? / t))?;
    let mut tr = Tracker::default();
    tr.decreasing(&xs, &ratios, STRICT_FLOOR);
    for (s, t) in random_pairs(params, grid.lo, grid.hi) {
        let gap = varphi(s)? + varphi(t)? - varphi(s + t)?;
        tr.weak(WorstPoint::Pair([s, t]), gap);
    }
    tr.note(format!(
        "subadditivity on {} random pairs (seed {})",
        params.samples, params.seed
    ));
    Ok(tr)
}

// ---------------------------------------------------------------------------
// Registry and suite

type CheckFn = fn(&CheckParams, &GridSpec) -> Result<Tracker>;

const REGISTRY: [(&str, CheckFn); 22] = [
    ("lem_vaman_1", lem_vaman_1),
    ("lem_vaman_2", lem_vaman_2),
    ("lem_vaman_3", lem_vaman_3),
    ("lem_concave_coeffs", lem_concave_coeffs),
    ("cor_concave_shape", cor_concave_shape),
    ("lem_hlvv_sign", lem_hlvv_sign),
    ("thm_genconv_logconvex", thm_genconv_logconvex),
    ("thm_genconv_limits", thm_genconv_limits),
    ("thm_main_parity", thm_main_parity),
    ("thm_main_convex", thm_main_convex),
    ("thm_main_pprime_bounds", thm_main_pprime_bounds),
    ("thm_main_slopes", thm_main_slopes),
    ("thm_main2_qq", thm_main2_qq),
    ("thm_main2_subadd", thm_main2_subadd),
    ("thm_main2_qbounds", thm_main2_qbounds),
    ("thm_c212_1", thm_c212_1),
    ("thm_c212_2", thm_c212_2),
    ("thm_c212_3", thm_c212_3),
    ("thm_c212_4", thm_c212_4),
    ("thm_c212_5", thm_c212_5),
    ("kustner_total_monotone", kustner_total_monotone),
    ("cor_phi_decreasing", cor_phi_decreasing),
];

/// Names of all registered checks.
pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(n, _)| *n).collect()
}

fn lookup(name: &str) -> Option<CheckFn> {
    REGISTRY.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
}

fn describe(params: &CheckParams) -> String {
    format!("a = {}, b = {}, c = {}", params.a, params.b, params.c)
}

/// Run one named check.
pub fn run_check(
    name: &str,
    params: &CheckParams,
    grid: &GridSpec,
    tol: f64,
) -> Result<PropertyReport> {
    let check = lookup(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let tr = check(params, grid)?;
    let (worst_point, worst_margin) = match tr.worst {
        Some((p, m)) => (Some(p), m),
        None => (None, f64::NEG_INFINITY),
    };
    let mut notes = vec![describe(params)];
    notes.extend(tr.notes);
    Ok(PropertyReport {
        name: name.to_string(),
        passed: worst_margin > -tol,
        grid: *grid,
        worst_point,
        worst_margin,
        tolerance: tol,
        notes: notes.join("; "),
    })
}

/// Tolerance profile of the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    #[default]
    Default,
    /// Tolerances divided by 10, grids and random samples four times denser.
    Strict,
}

impl Profile {
    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Default => "default",
            Profile::Strict => "strict",
        }
    }

    /// Profile named by [`TOL_ENV`], or the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(TOL_ENV) {
            Ok(v) => v.parse(),
            Err(std::env::VarError::NotPresent) => Ok(Profile::Default),
            Err(e) => Err(Error::InvalidInput(format!("{TOL_ENV}: {e}"))),
        }
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Profile::Default),
            "strict" => Ok(Profile::Strict),
            other => Err(Error::InvalidInput(format!(
                "unknown tolerance profile `{other}` (expected strict or default)"
            ))),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One frozen suite entry. A check may appear several times with
/// different parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ManifestEntry {
    pub name: &'static str,
    pub params: CheckParams,
    pub grid: GridSpec,
    pub tol: f64,
}

impl ManifestEntry {
    fn resolved(&self, profile: Profile) -> (CheckParams, GridSpec, f64) {
        match profile {
            Profile::Default => (self.params, self.grid, self.tol),
            Profile::Strict => {
                let mut params = self.params;
                params.samples *= 4;
                (params, self.grid.densified(4), self.tol / 10.0)
            }
        }
    }

    /// Run the entry; computation errors become failed reports.
    pub fn run(&self, profile: Profile) -> PropertyReport {
        let (params, grid, tol) = self.resolved(profile);
        run_check(self.name, &params, &grid, tol).unwrap_or_else(|e| PropertyReport {
            name: self.name.to_string(),
            passed: false,
            grid,
            worst_point: None,
            worst_margin: f64::NEG_INFINITY,
            tolerance: tol,
            notes: format!("{}; error: {e}", describe(&params)),
        })
    }
}

fn lin(lo: f64, hi: f64, n: usize) -> GridSpec {
    GridSpec::linear(lo, hi, n).expect("manifest grid")
}

fn logg(lo: f64, hi: f64, n: usize) -> GridSpec {
    GridSpec::log(lo, hi, n).expect("manifest grid")
}

/// The canonical parameter sets and grids.
pub fn manifest() -> Vec<ManifestEntry> {
    let e = |name, params, grid, tol| ManifestEntry {
        name,
        params,
        grid,
        tol,
    };
    let t3 = CheckParams::triple;
    let zb = CheckParams::pair;
    let unit = lin(0.02, 0.98, 49);
    vec![
        e("lem_vaman_1", t3(2.0, 1.5, 1.2), lin(0.01, 0.95, 50), 1e-12),
        e(
            "lem_vaman_2",
            t3(0.5, 0.75, 1.5),
            lin(0.01, 0.98, 50),
            1e-12,
        ),
        e(
            "lem_vaman_3",
            t3(1.0, 2.0, 2.0),
            lin(0.0198, 0.99, 50),
            1e-13,
        ),
        e("lem_concave_coeffs", t3(0.5, 0.5, 1.0), unit, 1e-12),
        e("lem_concave_coeffs", t3(0.7, 1.1, 2.5), unit, 1e-12),
        e("cor_concave_shape", t3(0.5, 0.5, 1.0), unit, 1e-12),
        e("cor_concave_shape", t3(0.75, 1.5, 2.0), unit, 1e-12),
        e("cor_concave_shape", t3(0.4, 1.0, 1.0), unit, 1e-12),
        e(
            "lem_hlvv_sign",
            t3(1.0, 1.0, 2.0),
            lin(0.05, 0.95, 37),
            1e-12,
        ),
        e(
            "lem_hlvv_sign",
            t3(0.3, 0.3, 1.0),
            lin(0.05, 0.95, 37),
            1e-12,
        ),
        e(
            "lem_hlvv_sign",
            t3(0.5, 0.5, 1.0),
            lin(0.05, 0.95, 37),
            1e-12,
        ),
        e("thm_genconv_logconvex", t3(0.5, 0.5, 1.0), unit, 1e-12),
        e("thm_genconv_logconvex", t3(1.5, 2.0, 1.0), unit, 1e-12),
        e(
            "thm_genconv_limits",
            t3(0.5, 0.5, 2.0),
            logg(1e-12, 1e-3, 37),
            0.0,
        ),
        e(
            "thm_genconv_limits",
            t3(0.5, 0.5, 1.0),
            logg(1e-12, 1e-3, 37),
            0.0,
        ),
        e(
            "thm_genconv_limits",
            t3(1.5, 1.5, 2.0),
            logg(1e-12, 1e-3, 37),
            0.0,
        ),
        e("thm_main_parity", zb(0.5, 0.5), lin(0.0, 20.0, 101), 1e-12),
        e("thm_main_parity", zb(1.5, 1.2), lin(0.0, 20.0, 101), 1e-12),
        e("thm_main_convex", zb(0.5, 0.5), lin(-20.0, 20.0, 101), 0.0),
        e("thm_main_convex", zb(1.5, 1.2), lin(-20.0, 20.0, 101), 0.0),
        e(
            "thm_main_pprime_bounds",
            zb(0.5, 0.5),
            lin(-20.0, 20.0, 101),
            1e-12,
        ),
        e(
            "thm_main_pprime_bounds",
            zb(1.5, 1.2),
            lin(-20.0, 20.0, 101),
            1e-12,
        ),
        e(
            "thm_main_slopes",
            zb(0.5, 0.5),
            lin(-20.0, 20.0, 100),
            1e-12,
        ),
        e(
            "thm_main_slopes",
            zb(1.5, 1.2),
            lin(-20.0, 20.0, 100),
            1e-12,
        ),
        e("thm_main2_qq", zb(0.5, 0.5), lin(-10.0, 10.0, 101), 1e-12),
        e("thm_main2_qq", zb(1.0, 2.0), lin(-10.0, 10.0, 101), 1e-12),
        e(
            "thm_main2_subadd",
            zb(0.5, 0.5),
            logg(0.01, 50.0, 100),
            1e-12,
        ),
        e(
            "thm_main2_subadd",
            zb(1.0, 2.0),
            logg(0.01, 50.0, 100),
            1e-12,
        ),
        e(
            "thm_main2_qbounds",
            zb(0.5, 0.5),
            lin(0.05, 15.0, 100),
            1e-12,
        ),
        e(
            "thm_main2_qbounds",
            zb(1.0, 2.0),
            lin(0.05, 15.0, 100),
            1e-12,
        ),
        e(
            "thm_c212_1",
            CheckParams::default(),
            logg(1e-3, 50.0, 200),
            1e-12,
        ),
        e(
            "thm_c212_2",
            CheckParams::default(),
            lin(-20.0, 20.0, 101),
            1e-12,
        ),
        e(
            "thm_c212_3",
            CheckParams::default(),
            lin(-20.0, 20.0, 101),
            1e-12,
        ),
        e(
            "thm_c212_4",
            CheckParams::default(),
            lin(0.0, 20.0, 2001),
            1e-12,
        ),
        e(
            "thm_c212_5",
            CheckParams::default(),
            logg(0.01, 100.0, 200),
            0.0,
        ),
        e(
            "kustner_total_monotone",
            t3(0.5, 0.5, 1.0),
            lin(0.0, 40.0, 41),
            1e-12,
        ),
        e(
            "kustner_total_monotone",
            t3(-0.5, 1.0, 2.0),
            lin(0.0, 40.0, 41),
            1e-12,
        ),
        e(
            "kustner_total_monotone",
            t3(-1.0, 0.5, 1.5),
            lin(0.0, 40.0, 41),
            1e-12,
        ),
        e(
            "kustner_total_monotone",
            t3(1.0, 1.0, 2.0),
            lin(0.0, 40.0, 41),
            1e-12,
        ),
        e(
            "cor_phi_decreasing",
            CheckParams::default(),
            logg(0.01, 50.0, 100),
            1e-12,
        ),
    ]
}

/// Manifest entries for one check name.
pub fn manifest_for(name: &str) -> Result<Vec<ManifestEntry>> {
    if lookup(name).is_none() {
        return Err(Error::UnknownCheck(name.to_string()));
    }
    Ok(manifest().into_iter().filter(|m| m.name == name).collect())
}

/// Run the whole manifest in parallel. Reports are sorted by name, with
/// manifest order kept among entries of the same check.
pub fn run_suite(profile: Profile) -> Vec<PropertyReport> {
    let mut reports: Vec<PropertyReport> = manifest().par_iter().map(|m| m.run(profile)).collect();
    reports.sort_by(|x, y| x.name.cmp(&y.name));
    reports
}
