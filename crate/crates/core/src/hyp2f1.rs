//! Gauss hypergeometric function F(a,b;c;x) for real parameters and
//! x ∈ [0, 1).
//!
//! Evaluation strategy:
//!
//! * x ≤ 0.5: the defining power series.
//! * x > 0.5, c = a + b: the logarithmic expansion in powers of 1 − x
//!   (Ramanujan's zero-balanced case).
//! * x > 0.5, c − a − b = m a positive integer: the logarithmic expansion
//!   for an integer parameter gap.
//! * x > 0.5, c < a + b: Euler's transformation
//!   F(a,b;c;x) = (1−x)^{c−a−b} F(c−a,c−b;c;x), then one of the above.
//! * anything else: the power series with an extended term cap.
//!
//! All routines that need 1 − x accept it separately through [`SplitArg`], so
//! callers sitting near x = 1 never form the difference themselves.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::specfun::{digamma_unchecked, log_beta_unchecked, log_gamma, EULER_GAMMA};

/// Switch point between the direct series and the continuations around 1.
pub const X_SWITCH: f64 = 0.5;
/// Relative tolerance of the stopping rule.
pub const SERIES_TOL: f64 = 1e-15;
/// Hard cap on the number of terms of the direct series.
pub const DIRECT_TERM_CAP: usize = 1_000_000;
/// Hard cap on the number of terms of the logarithmic expansions.
pub const LOG_SERIES_TERM_CAP: usize = 200;
/// Consecutive small terms required before stopping.
const SMALL_RUN: usize = 3;
/// Parameter gaps closer than this to an integer are treated as integers.
const INTEGER_GAP_TOL: f64 = 1e-13;

/// Positive parameter triple (a, b, c).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !(v > 0.0 && v.is_finite()) {
                return domain("HypParams", format!("{name} must be positive, got {v}"));
            }
        }
        Ok(Self { a, b, c })
    }

    /// Zero-balanced triple (a, b, a + b).
    pub fn zero_balanced(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, a + b)
    }

    /// Sign of c − a − b, selecting the behaviour at x = 1.
    pub fn balanced_sign(&self) -> i8 {
        let gap = self.c - self.a - self.b;
        if gap.abs() <= INTEGER_GAP_TOL * (1.0 + self.c) {
            0
        } else if gap > 0.0 {
            1
        } else {
            -1
        }
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectSeries,
    ZbLogSeries,
    IntegerGapLogSeries,
    GaussLimit,
    Agm,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct_series",
            Method::ZbLogSeries => "zb_log_series",
            Method::IntegerGapLogSeries => "integer_gap_log_series",
            Method::GaussLimit => "gauss_limit",
            Method::Agm => "agm",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// A value together with the truncation/rounding error estimate of the
/// routine that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err_estimate: f64,
    pub terms_used: usize,
    pub method: Method,
}

impl EvalResult {
    fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_err_estimate: self.abs_err_estimate * factor.abs(),
            ..self
        }
    }
}

/// A point x of [0, 1) carried together with its complement 1 − x and the
/// logarithms of both, so callers near x = 1 never form 1 − x by
/// subtraction. The complement may underflow to zero while its logarithm
/// stays exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitArg {
    x: f64,
    one_minus_x: f64,
    ln_x: f64,
    ln_one_minus_x: f64,
}

impl SplitArg {
    pub fn new(x: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&x) {
            return domain("SplitArg", format!("x must lie in [0, 1), got {x}"));
        }
        // 1 − x is exact for x ≥ 1/2.
        let y = 1.0 - x;
        Ok(Self {
            x,
            one_minus_x: y,
            ln_x: x.ln(),
            ln_one_minus_x: (-x).ln_1p(),
        })
    }

    /// Point given through its complement y = 1 − x ∈ (0, 1].
    pub fn from_complement(y: f64) -> Result<Self> {
        if !(y > 0.0 && y <= 1.0) {
            return domain("SplitArg", format!("1 - x must lie in (0, 1], got {y}"));
        }
        Ok(Self {
            x: 1.0 - y,
            one_minus_x: y,
            ln_x: (-y).ln_1p(),
            ln_one_minus_x: y.ln(),
        })
    }

    /// x = eᵗ/(1+eᵗ) with both halves and their logarithms computed
    /// without subtraction.
    pub fn logistic(t: f64) -> Self {
        let e = (-t.abs()).exp();
        let big = 1.0 / (1.0 + e);
        let small = e / (1.0 + e);
        let ln_big = -e.ln_1p();
        let ln_small = -t.abs() + ln_big;
        let s = Self {
            x: big,
            one_minus_x: small,
            ln_x: ln_big,
            ln_one_minus_x: ln_small,
        };
        if t >= 0.0 {
            s
        } else {
            s.mirror()
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn one_minus_x(&self) -> f64 {
        self.one_minus_x
    }

    pub fn ln_x(&self) -> f64 {
        self.ln_x
    }

    pub fn ln_one_minus_x(&self) -> f64 {
        self.ln_one_minus_x
    }

    /// The mirrored point 1 − x.
    pub fn mirror(&self) -> Self {
        Self {
            x: self.one_minus_x,
            one_minus_x: self.x,
            ln_x: self.ln_one_minus_x,
            ln_one_minus_x: self.ln_x,
        }
    }
}

/// Finite sequence of reals a₀ … a_N.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffSeq {
    values: Vec<f64>,
}

impl CoeffSeq {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return domain("CoeffSeq", "sequence must have at least one entry");
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Rows Δ⁰ … Δ^{k_max}; row k holds Δᵏaₙ for n = 0 … len − 1 − k.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiffTable {
    pub rows: Vec<Vec<f64>>,
}

impl DiffTable {
    /// Smallest entry together with its (k, n) position.
    pub fn min_entry(&self) -> (f64, usize, usize) {
        let mut best = (f64::INFINITY, 0, 0);
        for (k, row) in self.rows.iter().enumerate() {
            for (n, &v) in row.iter().enumerate() {
                if v < best.0 {
                    best = (v, k, n);
                }
            }
        }
        best
    }
}

/// Neumaier compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn new(init: f64) -> Self {
        Self {
            sum: init,
            comp: 0.0,
        }
    }

    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

fn rounding_bound(abs_sum: f64, terms: usize) -> f64 {
    f64::EPSILON * (4.0 + (3.0 * terms as f64).sqrt()) * abs_sum
}

fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && (v - v.round()).abs() <= INTEGER_GAP_TOL
}

/// Σ_{n≥1} (a,n)(b,n)/((c,n) n!) xⁿ, i.e. the series minus its leading 1.
///
/// Returns (tail, abs_err, terms).
pub(crate) fn direct_tail(a: f64, b: f64, c: f64, x: f64, cap: usize) -> Result<(f64, f64, usize)> {
    let mut term = 1.0;
    let mut sum = CompensatedSum::new(0.0);
    let mut abs_sum = 1.0;
    let mut run = 0;
    let mut n = 0usize;
    while n < cap {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
        term *= ratio * x;
        n += 1;
        if term == 0.0 {
            // Terminating (polynomial) series or x = 0.
            let tail = sum.value();
            return Ok((tail, rounding_bound(abs_sum, n), n));
        }
        sum.add(term);
        abs_sum += term.abs();
        let total = (1.0 + sum.value()).abs();
        if term.abs() <= SERIES_TOL * total {
            run += 1;
        } else {
            run = 0;
        }
        if run >= SMALL_RUN {
            let next = n as f64;
            let next_ratio = ((a + next) * (b + next) / ((c + next) * (next + 1.0))).abs();
            let rho = x.abs() * next_ratio.max(1.0);
            if rho < 1.0 {
                let trunc = term.abs() * rho / (1.0 - rho);
                if trunc <= SERIES_TOL * total {
                    let tail = sum.value();
                    return Ok((tail, trunc + rounding_bound(abs_sum, n), n));
                }
            }
        }
    }
    Err(Error::NonConvergence {
        func: "f21 direct series",
        terms: cap,
    })
}

fn direct_series(a: f64, b: f64, c: f64, x: f64, cap: usize) -> Result<EvalResult> {
    let (tail, err, terms) = direct_tail(a, b, c, x, cap)?;
    Ok(EvalResult {
        value: 1.0 + tail,
        abs_err_estimate: err,
        terms_used: terms + 1,
        method: Method::DirectSeries,
    })
}

/// Pieces of the zero-balanced expansion around x = 1:
///
/// F(a,b;a+b;x) = scale · [R(a,b) + L + tail],  L = −ln(1−x),
///
/// where `tail` collects the n ≥ 1 terms of
/// Σ (a,n)(b,n)/(n!)² (1−x)ⁿ [2Ψ(n+1) − Ψ(a+n) − Ψ(b+n) + L].
#[derive(Debug, Clone, Copy)]
pub(crate) struct ZbExpansion {
    pub scale: f64,
    pub ramanujan: f64,
    pub tail: f64,
    pub abs_err: f64,
    pub terms: usize,
}

impl ZbExpansion {
    pub(crate) fn value(&self, neg_log_y: f64) -> f64 {
        self.scale * (self.ramanujan + neg_log_y + self.tail)
    }
}

pub(crate) fn zb_expansion(a: f64, b: f64, y: f64, neg_log_y: f64) -> Result<ZbExpansion> {
    let scale = (-log_beta_unchecked(a, b)).exp();
    let ramanujan = -2.0 * EULER_GAMMA - digamma_unchecked(a) - digamma_unchecked(b);
    let mut coeff = 1.0;
    let mut d = ramanujan;
    let mut ypow = 1.0;
    let mut tail = CompensatedSum::new(0.0);
    let mut abs_sum = (ramanujan + neg_log_y).abs();
    let mut run = 0;
    for n in 0..LOG_SERIES_TERM_CAP {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0));
        coeff *= ratio;
        d += 2.0 / (nf + 1.0) - 1.0 / (a + nf) - 1.0 / (b + nf);
        ypow *= y;
        let term = coeff * ypow * (d + neg_log_y);
        tail.add(term);
        abs_sum += term.abs();
        let total = (ramanujan + neg_log_y + tail.value()).abs();
        if term.abs() <= SERIES_TOL * total {
            run += 1;
        } else {
            run = 0;
        }
        if run >= SMALL_RUN || term == 0.0 {
            let m = nf + 1.0;
            let next_ratio = (a + m) * (b + m) / ((m + 1.0) * (m + 1.0));
            // The bracket grows by at most a factor (1 + 2/(m+1)/L) per step.
            let bracket_growth = 1.0 + 2.0 / ((m + 1.0) * neg_log_y.max(f64::MIN_POSITIVE));
            let rho = y * next_ratio.max(1.0) * bracket_growth;
            if rho < 1.0 {
                let trunc = term.abs() * rho / (1.0 - rho);
                if trunc <= SERIES_TOL * total {
                    return Ok(ZbExpansion {
                        scale,
                        ramanujan,
                        tail: tail.value(),
                        abs_err: scale * (trunc + rounding_bound(abs_sum, n + 1)),
                        terms: n + 2,
                    });
                }
            }
        }
    }
    Err(Error::NonConvergence {
        func: "zero-balanced log series",
        terms: LOG_SERIES_TERM_CAP,
    })
}

/// F(a,b;a+b+m;x) for a, b > 0 and an integer m ≥ 1 via the logarithmic
/// expansion in powers of y = 1 − x.
fn integer_gap_series(a: f64, b: f64, m: usize, y: f64, neg_log_y: f64) -> Result<EvalResult> {
    let mf = m as f64;
    let c = a + b + mf;

    // Finite part: Γ(m)Γ(c)/(Γ(a+m)Γ(b+m)) Σ_{n<m} (a,n)(b,n)/(n!(1−m,n)) yⁿ.
    let finite_scale =
        (log_gamma(mf)? + log_gamma(c)? - log_gamma(a + mf)? - log_gamma(b + mf)?).exp();
    let mut finite = CompensatedSum::new(0.0);
    let mut t = 1.0;
    for n in 0..m {
        finite.add(t);
        let nf = n as f64;
        t *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * y;
    }
    let finite_value = finite_scale * finite.value();

    // Log part: (−1)^m yᵐ Γ(c)/(Γ(a)Γ(b)) Σ g_n yⁿ (L + e_n).
    let log_scale = (log_gamma(c)? - log_gamma(a)? - log_gamma(b)?).exp();
    let inv_m_fact = (-log_gamma(mf + 1.0)?).exp();
    let mut g = inv_m_fact;
    let mut e = digamma_unchecked(1.0) + digamma_unchecked(mf + 1.0)
        - digamma_unchecked(a + mf)
        - digamma_unchecked(b + mf);
    let mut ypow = 1.0;
    let mut sum = CompensatedSum::new(0.0);
    let mut abs_sum = 0.0;
    let mut run = 0;
    for n in 0..LOG_SERIES_TERM_CAP {
        let nf = n as f64;
        let term = g * ypow * (neg_log_y + e);
        sum.add(term);
        abs_sum += term.abs();
        let total = sum.value().abs();
        if term.abs() <= SERIES_TOL * total {
            run += 1;
        } else {
            run = 0;
        }
        let ratio = (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (nf + mf + 1.0));
        if run >= SMALL_RUN {
            let rho = y * ratio.max(1.0) * (1.0 + 2.0 / ((nf + 1.0) * neg_log_y));
            if rho < 1.0 {
                let trunc = term.abs() * rho / (1.0 - rho);
                if trunc <= SERIES_TOL * total {
                    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
                    let log_factor = sign * y.powi(m as i32) * log_scale;
                    let value = finite_value + log_factor * sum.value();
                    let err = log_factor.abs() * (trunc + rounding_bound(abs_sum, n + 1))
                        + rounding_bound(finite_value.abs(), m);
                    return Ok(EvalResult {
                        value,
                        abs_err_estimate: err,
                        terms_used: n + 1 + m,
                        method: Method::IntegerGapLogSeries,
                    });
                }
            }
        }
        g *= ratio;
        e += 1.0 / (nf + 1.0) + 1.0 / (nf + mf + 1.0) - 1.0 / (a + mf + nf) - 1.0 / (b + mf + nf);
        ypow *= y;
    }
    Err(Error::NonConvergence {
        func: "integer-gap log series",
        terms: LOG_SERIES_TERM_CAP,
    })
}

/// Core evaluator for raw real parameters. Requires c > 0; a and b may be
/// any reals (a non-positive integer makes the series terminate).
pub(crate) fn eval_raw(a: f64, b: f64, c: f64, arg: SplitArg) -> Result<EvalResult> {
    let x = arg.x;
    let y = arg.one_minus_x;
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) || x <= X_SWITCH {
        return direct_series(a, b, c, x, DIRECT_TERM_CAP);
    }
    let gap = c - a - b;
    let rounded = gap.round();
    let near_integer = (gap - rounded).abs() <= INTEGER_GAP_TOL * (1.0 + c);
    let neg_log_y = -arg.ln_one_minus_x;
    if near_integer && rounded == 0.0 && a > 0.0 && b > 0.0 {
        let zb = zb_expansion(a, b, y, neg_log_y)?;
        return Ok(EvalResult {
            value: zb.value(neg_log_y),
            abs_err_estimate: zb.abs_err,
            terms_used: zb.terms,
            method: Method::ZbLogSeries,
        });
    }
    if rounded < 0.0 || (gap < 0.0 && !near_integer) {
        let inner = eval_raw(c - a, c - b, c, arg)?;
        return Ok(inner.scaled((gap * arg.ln_one_minus_x).exp()));
    }
    if near_integer && a > 0.0 && b > 0.0 {
        return integer_gap_series(a, b, rounded as usize, y, neg_log_y);
    }
    direct_series(a, b, c, x, DIRECT_TERM_CAP)
}

/// F(a,b;c;x) for x ∈ [0, 1).
pub fn f21(p: &HypParams, x: f64) -> Result<EvalResult> {
    f21_split(p, SplitArg::new(x)?)
}

/// F(a,b;c;x) with 1 − x supplied by the caller.
pub fn f21_split(p: &HypParams, arg: SplitArg) -> Result<EvalResult> {
    eval_raw(p.a, p.b, p.c, arg)
}

/// Value at x = 1 by Gauss's formula, defined for c > a + b.
pub fn f21_at_one(p: &HypParams) -> Result<f64> {
    let gap = p.c - p.a - p.b;
    if gap <= 0.0 {
        return domain(
            "f21_at_one",
            format!("requires c > a + b, got c - a - b = {gap}"),
        );
    }
    let log_value =
        log_gamma(p.c)? + log_gamma(gap)? - log_gamma(p.c - p.a)? - log_gamma(p.c - p.b)?;
    Ok(log_value.exp())
}

fn check_zb(func: &'static str, a: f64, b: f64) -> Result<()> {
    if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
        Ok(())
    } else {
        domain(func, format!("a and b must be positive, got ({a}, {b})"))
    }
}

/// F(a,b;a+b;x) from the logarithmic expansion around x = 1.
///
/// Intended for x > 1/2; closer to 1/2 the expansion converges slowly and
/// gives up after 200 terms.
pub fn zb_near_one(a: f64, b: f64, x: f64) -> Result<EvalResult> {
    let arg = SplitArg::new(x)?;
    if x <= 0.0 {
        return domain("zb_near_one", "x must be positive");
    }
    zb_near_one_split(a, b, arg)
}

pub fn zb_near_one_split(a: f64, b: f64, arg: SplitArg) -> Result<EvalResult> {
    check_zb("zb_near_one", a, b)?;
    let y = arg.one_minus_x;
    let neg_log_y = -arg.ln_one_minus_x;
    let zb = zb_expansion(a, b, y, neg_log_y)?;
    Ok(EvalResult {
        value: zb.value(neg_log_y),
        abs_err_estimate: zb.abs_err,
        terms_used: zb.terms,
        method: Method::ZbLogSeries,
    })
}

/// d/dx F(a,b;c;x) = (ab/c) F(a+1,b+1;c+1;x).
pub fn f21_derivative(p: &HypParams, x: f64) -> Result<f64> {
    let arg = SplitArg::new(x)?;
    f21_derivative_split(p, arg)
}

pub fn f21_derivative_split(p: &HypParams, arg: SplitArg) -> Result<f64> {
    let shifted = eval_raw(p.a + 1.0, p.b + 1.0, p.c + 1.0, arg)?;
    Ok(p.a * p.b / p.c * shifted.value)
}

/// (1 − x) · d/dx F(a,b;a+b;x) = (ab/(a+b)) F(a,b;a+b+1;x).
pub fn zb_scaled_derivative(a: f64, b: f64, arg: SplitArg) -> Result<f64> {
    check_zb("zb_derivative", a, b)?;
    let w = eval_raw(a, b, a + b + 1.0, arg)?;
    Ok(a * b / (a + b) * w.value)
}

/// d/dx F(a,b;a+b;x) through the zero-balanced derivative identity.
pub fn zb_derivative(a: f64, b: f64, x: f64) -> Result<f64> {
    let arg = SplitArg::new(x)?;
    Ok(zb_scaled_derivative(a, b, arg)? / arg.one_minus_x)
}

/// Maclaurin coefficient of xⁿ in F(a,b;c;x), for n = 0 … n_max.
fn series_coefficients(a: f64, b: f64, c: f64, n_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut t = 1.0;
    out.push(t);
    for n in 0..n_max {
        let nf = n as f64;
        t *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
        out.push(t);
    }
    out
}

/// Maclaurin coefficients of F(a+1,b+1;c+1;x) / F(a,b;c;x) up to xⁿᵐᵃˣ.
///
/// Valid under −1 ≤ a ≤ c and 0 < b ≤ c, where these coefficients form a
/// totally monotone sequence.
pub fn ratio_coeffs(a: f64, b: f64, c: f64, n_max: usize) -> Result<CoeffSeq> {
    if !(a >= -1.0 && a <= c && b > 0.0 && b <= c) {
        return Err(Error::Hypothesis {
            claim: "ratio_coeffs".into(),
            detail: format!("need -1 <= a <= c and 0 < b <= c, got ({a}, {b}, {c})"),
        });
    }
    if n_max > 200 {
        return domain(
            "ratio_coeffs",
            format!("n_max must be at most 200, got {n_max}"),
        );
    }
    let num = series_coefficients(a + 1.0, b + 1.0, c + 1.0, n_max);
    let den = series_coefficients(a, b, c, n_max);
    let mut q = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = CompensatedSum::new(num[n]);
        for k in 1..=n {
            acc.add(-den[k] * q[n - k]);
        }
        q.push(acc.value());
    }
    CoeffSeq::new(q)
}

/// Iterated differences Δ^{k+1}aₙ = Δᵏaₙ − Δᵏaₙ₊₁ for k ≤ k_max.
pub fn finite_difference_table(s: &CoeffSeq, k_max: usize) -> Result<DiffTable> {
    if k_max >= s.len() {
        return domain(
            "finite_difference_table",
            format!("k_max = {k_max} needs more than {} entries", s.len()),
        );
    }
    let mut rows = Vec::with_capacity(k_max + 1);
    rows.push(s.values.clone());
    for k in 0..k_max {
        let prev: &Vec<f64> = &rows[k];
        let next = prev.windows(2).map(|w| w[0] - w[1]).collect();
        rows.push(next);
    }
    Ok(DiffTable { rows })
}
