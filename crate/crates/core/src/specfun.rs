//! Gamma-family scalar functions for positive real arguments.
//!
//! `log_gamma` uses the Lanczos approximation (g = 7, nine coefficients) with
//! the reflection formula below 1/2; `digamma` shifts the argument upward to
//! at least 8 and then applies the Stirling-type asymptotic series.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // published coefficients, kept verbatim
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Threshold above which the digamma asymptotic series is used directly.
const DIGAMMA_SHIFT: f64 = 8.0;

// B_{2k} / (2k) for k = 1..7.
const DIGAMMA_ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

fn check_positive(func: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        domain(
            func,
            format!("argument must be positive and finite, got {x}"),
        )
    }
}

fn lanczos_log_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection keeps the Lanczos sum away from its poles.
        (PI / (PI * x).sin()).ln() - lanczos_log_gamma(1.0 - x)
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS_COEFFS[0];
        for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
    }
}

/// Natural logarithm of Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive("log_gamma", x)?;
    Ok(lanczos_log_gamma(x))
}

/// Γ(x) for x > 0, computed as `exp(log_gamma(x))`.
pub fn gamma(x: f64) -> Result<f64> {
    check_positive("gamma", x)?;
    let v = lanczos_log_gamma(x).exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow {
            func: "gamma",
            arg: x,
        })
    }
}

/// Ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("digamma", x)?;
    Ok(digamma_unchecked(x))
}

pub(crate) fn digamma_unchecked(mut x: f64) -> f64 {
    let mut shift = 0.0;
    while x < DIGAMMA_SHIFT {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    for c in DIGAMMA_ASYMPTOTIC {
        series += c * pow;
        pow *= inv2;
    }
    shift + x.ln() - 0.5 / x - series
}

/// Beta function B(a, b) = Γ(a)Γ(b)/Γ(a+b).
pub fn beta(a: f64, b: f64) -> Result<f64> {
    check_positive("beta", a)?;
    check_positive("beta", b)?;
    Ok(log_beta_unchecked(a, b).exp())
}

pub(crate) fn log_beta_unchecked(a: f64, b: f64) -> f64 {
    // Sum the two small logs first so beta(a, b) == beta(b, a) bit-for-bit.
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lanczos_log_gamma(lo) + lanczos_log_gamma(hi) - lanczos_log_gamma(a + b)
}

/// Ramanujan's constant R(a, b) = −2γ − Ψ(a) − Ψ(b).
pub fn ramanujan_r(a: f64, b: f64) -> Result<f64> {
    check_positive("ramanujan_r", a)?;
    check_positive("ramanujan_r", b)?;
    Ok(ramanujan_r_unchecked(a, b))
}

pub(crate) fn ramanujan_r_unchecked(a: f64, b: f64) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    -2.0 * EULER_GAMMA - digamma_unchecked(lo) - digamma_unchecked(hi)
}
