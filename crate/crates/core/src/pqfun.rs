//! Products and quotients of zero-balanced hypergeometric functions on the
//! logistic scale x = eᵗ/(1+eᵗ):
//!
//! * P(t) = v(x) v(1−x) and its derivative,
//! * Q(t) = v(x) / v(1−x), q(t) = log Q(t) and q′(t),
//! * the Legendre M-function and N(x) for a general triple (a, b, c),
//!
//! with v = F(a,b;a+b;·) and w = F(a,b;a+b+1;·). Derivatives use the
//! zero-balanced identity (1−x) v′(x) = (ab/(a+b)) w(x), so no numerical
//! differentiation happens here.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::hyp2f1::{
    direct_tail, eval_raw, f21_derivative_split, zb_expansion, zb_scaled_derivative, HypParams,
    SplitArg,
};
use crate::specfun::{log_beta_unchecked, ramanujan_r_unchecked};

/// Positive pair (a, b) parameterising F(a,b;a+b;·).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroBalancedPair {
    a: f64,
    b: f64,
}

impl ZeroBalancedPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return domain(
                "ZeroBalancedPair",
                format!("a and b must be positive, got ({a}, {b})"),
            );
        }
        Ok(Self { a, b })
    }

    /// The pair a = b = 1/2 behind the complete elliptic integral.
    pub fn elliptic() -> Self {
        Self { a: 0.5, b: 0.5 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.a + self.b
    }

    /// 1 / B(a, b).
    pub fn inv_beta(&self) -> f64 {
        (-log_beta_unchecked(self.a, self.b)).exp()
    }

    /// R(a, b).
    pub fn ramanujan(&self) -> f64 {
        ramanujan_r_unchecked(self.a, self.b)
    }

    fn require_p_hypothesis(&self, func: &str) -> Result<()> {
        if self.a * self.b < self.a + self.b {
            Ok(())
        } else {
            Err(Error::Hypothesis {
                claim: func.to_string(),
                detail: format!("need ab < a + b, got a = {}, b = {}", self.a, self.b),
            })
        }
    }

    fn v(&self, arg: SplitArg) -> Result<f64> {
        Ok(eval_raw(self.a, self.b, self.c(), arg)?.value)
    }

    fn w(&self, arg: SplitArg) -> Result<f64> {
        Ok(eval_raw(self.a, self.b, self.c() + 1.0, arg)?.value)
    }
}

fn check_t(func: &'static str, t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        domain(func, format!("t must be finite, got {t}"))
    }
}

/// P(t) = F(a,b;a+b;x) F(a,b;a+b;1−x), x = eᵗ/(1+eᵗ).
pub fn p_func(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    check_t("p_func", t)?;
    pr.require_p_hypothesis("p_func")?;
    let arg = SplitArg::logistic(t);
    Ok(pr.v(arg)? * pr.v(arg.mirror())?)
}

/// P′(t) = (ab/c) [L(x) − L(1−x)] with L(x) = x v(1−x) w(x).
pub fn p_prime(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    check_t("p_prime", t)?;
    pr.require_p_hypothesis("p_prime")?;
    let arg = SplitArg::logistic(t);
    let mir = arg.mirror();
    let (vx, vy) = (pr.v(arg)?, pr.v(mir)?);
    let (wx, wy) = (pr.w(arg)?, pr.w(mir)?);
    let l_x = arg.x() * vy * wx;
    let l_y = mir.x() * vx * wy;
    Ok(pr.a * pr.b / pr.c() * (l_x - l_y))
}

/// P(t) − (|t| + R(a,b))/B(a,b), which is positive and O(|t| e^{−|t|}).
///
/// For |t| ≥ 1 the value is assembled from the non-leading parts of both
/// expansions, so it keeps full relative accuracy when it is far below the
/// size of P(t) itself.
pub fn p_excess(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    check_t("p_excess", t)?;
    pr.require_p_hypothesis("p_excess")?;
    let s = t.abs();
    let inv_b = pr.inv_beta();
    let r = pr.ramanujan();
    if s < 1.0 {
        return Ok(p_func(pr, t)? - (s + r) * inv_b);
    }
    let arg = SplitArg::logistic(s);
    let y = arg.one_minus_x();
    let e = (-s).exp();
    // −ln y = s + ln(1 + e^{−s})
    let log_corr = e.ln_1p();
    let zb = zb_expansion(pr.a, pr.b, y, s + log_corr)?;
    let delta1 = zb.scale * (log_corr + zb.tail);
    let (delta2, _, _) = direct_tail(pr.a, pr.b, pr.c(), y, crate::hyp2f1::DIRECT_TERM_CAP)?;
    Ok(inv_b * (s + r) * delta2 + delta1 * (1.0 + delta2))
}

/// G(t) = (P(t) − P(0)) / t for t ≠ 0.
pub fn slope_g(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    if t == 0.0 {
        return domain("slope_g", "t must be non-zero");
    }
    Ok((p_func(pr, t)? - p_func(pr, 0.0)?) / t)
}

/// Q(t) = F(a,b;a+b;x) / F(a,b;a+b;1−x).
pub fn q_func(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    check_t("q_func", t)?;
    let arg = SplitArg::logistic(t);
    Ok(pr.v(arg)? / pr.v(arg.mirror())?)
}

/// q(t) = log Q(t), written as a difference of logs so q(−t) = −q(t)
/// holds bit-for-bit.
pub fn q_log(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    check_t("q_log", t)?;
    let arg = SplitArg::logistic(t);
    Ok(pr.v(arg)?.ln() - pr.v(arg.mirror())?.ln())
}

/// q′(t) = N(x) for the zero-balanced triple (a, b, a + b).
pub fn q_log_prime(pr: &ZeroBalancedPair, t: f64) -> Result<f64> {
    check_t("q_log_prime", t)?;
    let arg = SplitArg::logistic(t);
    let mir = arg.mirror();
    let k = pr.a * pr.b / pr.c();
    let left = arg.x() * pr.w(arg)? / pr.v(arg)?;
    let right = mir.x() * pr.w(mir)? / pr.v(mir)?;
    Ok(k * (left + right))
}

/// x(1−x) v′(x) for v = F(a,b;c;·).
pub(crate) fn scaled_derivative(p: &HypParams, arg: SplitArg) -> Result<f64> {
    if p.balanced_sign() == 0 {
        Ok(arg.x() * zb_scaled_derivative(p.a, p.b, arg)?)
    } else {
        Ok(arg.x() * arg.one_minus_x() * f21_derivative_split(p, arg)?)
    }
}

fn open_unit(func: &'static str, x: f64) -> Result<SplitArg> {
    if !(x > 0.0 && x < 1.0) {
        return domain(func, format!("x must lie in (0, 1), got {x}"));
    }
    SplitArg::new(x)
}

/// N(x) = x(1−x) [v′(x)/v(x) + v′(1−x)/v(1−x)] for max(a, b) ≤ c.
pub fn n_func(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let p = HypParams::new(a, b, c)?;
    if a.max(b) > c {
        return Err(Error::Hypothesis {
            claim: "n_func".into(),
            detail: format!("need max(a, b) <= c, got ({a}, {b}, {c})"),
        });
    }
    let arg = open_unit("n_func", x)?;
    n_func_split(&p, arg)
}

pub(crate) fn n_func_split(p: &HypParams, arg: SplitArg) -> Result<f64> {
    let mir = arg.mirror();
    let left = scaled_derivative(p, arg)? / eval_raw(p.a, p.b, p.c, arg)?.value;
    let right = scaled_derivative(p, mir)? / eval_raw(p.a, p.b, p.c, mir)?.value;
    Ok(left + right)
}

/// Legendre M-function M(x) = x(1−x) [v′(x) v(1−x) + v(x) v′(1−x)].
pub fn m_func(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let p = HypParams::new(a, b, c)?;
    let arg = open_unit("m_func", x)?;
    m_func_split(&p, arg)
}

pub(crate) fn m_func_split(p: &HypParams, arg: SplitArg) -> Result<f64> {
    let mir = arg.mirror();
    let vx = eval_raw(p.a, p.b, p.c, arg)?.value;
    let vy = eval_raw(p.a, p.b, p.c, mir)?.value;
    Ok(scaled_derivative(p, arg)? * vy + vx * scaled_derivative(p, mir)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const C0: f64 = 4.376_879_230_452_953;

    fn half() -> ZeroBalancedPair {
        ZeroBalancedPair::elliptic()
    }

    fn fd<F: Fn(f64) -> f64>(f: F, t: f64) -> f64 {
        let h = 1e-5;
        (f(t + h) - f(t - h)) / (2.0 * h)
    }

    #[test]
    fn p_at_zero_and_parity() {
        let p0 = p_func(&half(), 0.0).unwrap();
        assert!((p0 - C0 / PI).abs() < 1e-12);
        assert!((p0 - 1.393_203).abs() < 1e-6);
        let a = p_func(&half(), 3.0).unwrap();
        let b = p_func(&half(), -3.0).unwrap();
        assert!((a - b).abs() < 1e-13);
    }

    #[test]
    fn p_asymptotics() {
        let t = 30.0;
        let p = p_func(&half(), t).unwrap();
        assert!((p - (t + 16f64.ln()) / PI).abs() < 1e-8);
        let d = p_prime(&half(), t).unwrap();
        assert!((d - 1.0 / PI).abs() < 1e-8);
    }

    #[test]
    fn p_prime_examples() {
        assert_eq!(p_prime(&half(), 0.0).unwrap(), 0.0);
        let d = p_prime(&half(), 1.0).unwrap();
        let f = fd(|t| p_func(&half(), t).unwrap(), 1.0);
        assert!((d - f).abs() < 1e-7);
        let other = ZeroBalancedPair::new(0.8, 1.7).unwrap();
        for &t in &[-4.0, -0.5, 2.2, 9.0] {
            let d = p_prime(&other, t).unwrap();
            let f = fd(|s| p_func(&other, s).unwrap(), t);
            assert!((d - f).abs() < 1e-7, "t = {t}");
        }
    }

    #[test]
    fn p_hypothesis_enforced() {
        let pr = ZeroBalancedPair::new(3.0, 3.0).unwrap();
        assert!(matches!(p_func(&pr, 0.0), Err(Error::Hypothesis { .. })));
        assert!(q_func(&pr, 1.0).is_ok());
        assert!(ZeroBalancedPair::new(0.0, 1.0).is_err());
    }

    #[test]
    fn p_excess_matches_direct_difference() {
        for &t in &[0.0, 0.5, 1.0, 3.0, 8.0, -6.0] {
            let ex = p_excess(&half(), t).unwrap();
            let direct = p_func(&half(), t).unwrap() - (t.abs() + 16f64.ln()) / PI;
            assert!((ex - direct).abs() < 1e-13, "t = {t}: {ex} vs {direct}");
            assert!(ex > 0.0);
        }
        // O(t e^{-t}) with full precision far beyond cancellation range
        let ex = p_excess(&half(), 100.0).unwrap();
        assert!(ex > 0.0 && ex < 1e-40);
    }

    #[test]
    fn slope_examples() {
        assert!(slope_g(&half(), 1e-4).unwrap().abs() < 1e-3);
        // P(t) = (t + ln 16)/π + O(t e⁻ᵗ), so G(t) − 1/π = (ln 16/π − P(0))/t up to e⁻ᵗ
        let t = 50.0;
        let offset = (16f64.ln() / PI - p_func(&half(), 0.0).unwrap()) / t;
        assert!((slope_g(&half(), t).unwrap() - 1.0 / PI - offset).abs() < 1e-12);
        assert!(slope_g(&half(), 1e6).unwrap() < 1.0 / PI);
        assert!((slope_g(&half(), 1e6).unwrap() - 1.0 / PI).abs() < 1e-6);
        let g = slope_g(&half(), 2.0).unwrap();
        assert!((slope_g(&half(), -2.0).unwrap() + g).abs() < 1e-15);
        assert!(slope_g(&half(), 0.0).is_err());
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_func(&half(), 0.0).unwrap(), 1.0);
        let prod = q_func(&half(), 2.0).unwrap() * q_func(&half(), -2.0).unwrap();
        assert!((prod - 1.0).abs() < 1e-13);
        let t = 40.0;
        assert!((q_func(&half(), t).unwrap() - (t + 16f64.ln()) / PI).abs() < 1e-8);
        assert_eq!(q_log(&half(), 0.0).unwrap(), 0.0);
        assert!((q_log(&half(), 3.0).unwrap() + q_log(&half(), -3.0).unwrap()).abs() < 1e-13);
        let t = 1e6;
        assert!((q_log(&half(), t).unwrap() - (t.ln() - PI.ln())).abs() < 1e-4);
    }

    #[test]
    fn q_prime_examples() {
        let peak = q_log_prime(&half(), 0.0).unwrap();
        assert!((peak - n_func(0.5, 0.5, 1.0, 0.5).unwrap()).abs() < 1e-14);
        let d = q_log_prime(&half(), 1.0).unwrap();
        assert!((d - fd(|t| q_log(&half(), t).unwrap(), 1.0)).abs() < 1e-7);
        assert!(
            (q_log_prime(&half(), 2.0).unwrap() - q_log_prime(&half(), -2.0).unwrap()).abs()
                < 1e-15
        );
        assert!(q_log_prime(&half(), 2.0).unwrap() < peak);
    }

    #[test]
    fn n_examples() {
        for &x in &[0.05, 0.3, 0.5, 0.97] {
            assert!(
                (n_func(0.5, 1.0, 1.0, x).unwrap() - 0.5).abs() < 1e-13,
                "x = {x}"
            );
        }
        let l = n_func(0.5, 0.5, 1.0, 0.3).unwrap();
        let r = n_func(0.5, 0.5, 1.0, 0.7).unwrap();
        assert!((l - r).abs() < 1e-13);
        let mid = n_func(0.5, 0.5, 1.0, 0.5).unwrap();
        for i in 1..100 {
            let x = i as f64 / 100.0;
            assert!(n_func(0.5, 0.5, 1.0, x).unwrap() <= mid + 1e-15);
        }
        assert!(n_func(1.5, 0.5, 1.0, 0.5).is_err());
        assert!(n_func(0.5, 0.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn m_examples() {
        let a = m_func(0.5, 0.5, 1.0, 0.25).unwrap();
        let b = m_func(0.5, 0.5, 1.0, 0.75).unwrap();
        assert!((a - b).abs() < 1e-14);
        // Legendre's relation makes M constant 1/π for (1/2, 1/2, 1)
        assert!((a - 1.0 / PI).abs() < 1e-13);
        let near = m_func(0.5, 0.5, 1.0, 1.0 - 1e-9).unwrap();
        assert!((near - 1.0 / PI).abs() < 1e-9);
        let x = 0.4;
        let p = HypParams::new(0.5, 0.5, 1.0).unwrap();
        let vx = crate::hyp2f1::f21(&p, x).unwrap().value;
        let vy = crate::hyp2f1::f21(&p, 1.0 - x).unwrap().value;
        let n = n_func(0.5, 0.5, 1.0, x).unwrap();
        assert!((n - m_func(0.5, 0.5, 1.0, x).unwrap() / (vx * vy)).abs() < 1e-12);
    }
}
