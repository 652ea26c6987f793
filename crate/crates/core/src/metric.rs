//! Hyperbolic metric of the twice-punctured plane ℂ∖{0,1} on the negative
//! real axis, and the derived functions h, H, Φ and φ.
//!
//! On the negative axis the density and distance have closed forms in terms
//! of K(r)K(r′) with r = √(x/(1+x)). Off the axis only the lower bounds
//! λ₀,₁(−|z|) ≤ λ₀,₁(z) and d₀,₁(−|z|,−|w|) ≤ d₀,₁(z,w) are provided.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::elliptic::{ellip_k, ModulusPair};
use crate::error::{domain, range, Result};
use crate::hyp2f1::SplitArg;
use crate::pqfun::{p_prime, q_log, ZeroBalancedPair};
use crate::specfun::gamma;

/// Largest |t| accepted by [`h`] and the functions built on it.
pub const MAX_ABS_T: f64 = 700.0;

/// C₀ = Γ(1/4)⁴/(4π²) = 1/(2λ₀,₁(−1)).
pub fn c0() -> f64 {
    static C0: OnceLock<f64> = OnceLock::new();
    *C0.get_or_init(|| {
        let g = gamma(0.25).expect("gamma(1/4) is finite");
        g.powi(4) / (4.0 * PI * PI)
    })
}

/// A point −x of the negative real axis, x > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegAxisPoint {
    x: f64,
}

impl NegAxisPoint {
    pub fn new(x: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return domain("NegAxisPoint", format!("x must be positive, got {x}"));
        }
        Ok(Self { x })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn moduli(&self) -> Result<ModulusPair> {
        ModulusPair::from_neg_axis(self.x)
    }
}

/// λ₀,₁(−x) = π / (8 x K(r) K(r′)).
pub fn lambda01_neg(x: f64) -> Result<f64> {
    let pt = NegAxisPoint::new(x)?;
    let pair = pt.moduli()?;
    Ok(PI / (8.0 * x * pair.k()? * pair.k_prime()?))
}

/// Φ(x) = ½ log(K(r)/K(r′)); d₀,₁(−x, −1) = |Φ(x)|.
pub fn phi_func(x: f64) -> Result<f64> {
    let pair = NegAxisPoint::new(x)?.moduli()?;
    Ok(0.5 * (pair.k()? / pair.k_prime()?).ln())
}

/// d₀,₁(−x, −y) = |Φ(x) − Φ(y)|.
pub fn d01_neg(x: f64, y: f64) -> Result<f64> {
    if x == y {
        NegAxisPoint::new(x)?;
        return Ok(0.0);
    }
    Ok((phi_func(x)? - phi_func(y)?).abs())
}

fn check_t(func: &'static str, t: f64) -> Result<()> {
    if t.is_nan() {
        return domain(func, "t is NaN");
    }
    if t.abs() > MAX_ABS_T {
        return range(func, format!("|t| = {} exceeds {MAX_ABS_T}", t.abs()));
    }
    Ok(())
}

/// h(t) = eᵗ λ₀,₁(−eᵗ) = π [8 K(1/√(1+eᵗ)) K(1/√(1+e⁻ᵗ))]⁻¹.
pub fn h(t: f64) -> Result<f64> {
    check_t("h", t)?;
    let arg = SplitArg::logistic(t);
    // r² = 1/(1+eᵗ), r′² = eᵗ/(1+eᵗ)
    let pair = ModulusPair::from_squares(arg.one_minus_x(), arg.x());
    Ok(PI / (8.0 * pair.k()? * pair.k_prime()?))
}

/// H(t) = 1/h(t).
pub fn big_h(t: f64) -> Result<f64> {
    Ok(1.0 / h(t)?)
}

/// H′(t) = 2π P′(t) for a = b = 1/2.
pub fn big_h_prime(t: f64) -> Result<f64> {
    check_t("big_h_prime", t)?;
    Ok(2.0 * PI * p_prime(&ZeroBalancedPair::elliptic(), t)?)
}

/// φ(t) = 2Φ(e^{t/2}) for t > 0.
///
/// Evaluated as log F(½,½;1;x)/F(½,½;1;1−x) at x = e^{t/2}/(1+e^{t/2}),
/// which stays finite long after e^{t/2} itself overflows.
pub fn varphi(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return domain("varphi", format!("t must be positive, got {t}"));
    }
    q_log(&ZeroBalancedPair::elliptic(), 0.5 * t)
}

fn check_not_puncture(func: &'static str, z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return domain(func, format!("{z} is not finite"));
    }
    if z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0) {
        return domain(func, format!("{z} is a puncture of C \\ {{0, 1}}"));
    }
    Ok(())
}

/// Lower bound λ₀,₁(−|z|) ≤ λ₀,₁(z); tight on the negative real axis.
pub fn lambda01_lower(z: Complex64) -> Result<f64> {
    check_not_puncture("lambda01_lower", z)?;
    lambda01_neg(z.norm())
}

/// Lower bound d₀,₁(−|z|, −|w|) ≤ d₀,₁(z, w).
pub fn d01_lower(z: Complex64, w: Complex64) -> Result<f64> {
    check_not_puncture("d01_lower", z)?;
    check_not_puncture("d01_lower", w)?;
    d01_neg(z.norm(), w.norm())
}

/// K(1/√2), used by the constant cross-checks.
pub fn k_at_inv_sqrt2() -> Result<f64> {
    ellip_k(std::f64::consts::FRAC_1_SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pqfun::p_func;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn c0_value_and_consistency() {
        assert!((c0() - 4.37688).abs() < 5e-6);
        assert!(rel(1.0 / (2.0 * c0()), lambda01_neg(1.0).unwrap()) < 1e-12);
        let k = k_at_inv_sqrt2().unwrap();
        assert!(rel(c0(), 4.0 / PI * k * k) < 1e-12);
    }

    #[test]
    fn lambda_examples() {
        assert!((lambda01_neg(1.0).unwrap() - 0.114_236_6).abs() < 1e-7);
        for &x in &[0.01, 0.7, 3.0, 250.0] {
            let a = lambda01_neg(1.0 / x).unwrap() / x;
            let b = lambda01_neg(x).unwrap() * x;
            assert!(rel(a, b) < 1e-13, "x = {x}");
        }
        let x: f64 = 10.0;
        assert!(rel(lambda01_neg(x).unwrap(), h(x.ln()).unwrap() / x) < 1e-13);
        assert!(lambda01_neg(0.0).is_err());
        assert!(lambda01_neg(-2.0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_func(1.0).unwrap(), 0.0);
        let x = 3.2;
        assert!((phi_func(1.0 / x).unwrap() + phi_func(x).unwrap()).abs() < 1e-12);
        assert_eq!(phi_func(4.0).unwrap(), d01_neg(4.0, 1.0).unwrap());
        // 2Φ(x) = −log(2μ(r)/π)
        let r: f64 = 0.6;
        let x = r * r / (1.0 - r * r);
        let lhs = 2.0 * phi_func(x).unwrap();
        let rhs = -(2.0 * crate::elliptic::mu(r).unwrap() / PI).ln();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(d01_neg(1.0, 1.0).unwrap(), 0.0);
        let x = 2.0;
        assert!((d01_neg(x, 1.0 / x).unwrap() - 2.0 * phi_func(x).unwrap().abs()).abs() < 1e-13);
        assert_eq!(d01_neg(2.0, 5.0).unwrap(), d01_neg(5.0, 2.0).unwrap());
    }

    #[test]
    fn h_examples() {
        assert!((h(0.0).unwrap() - 0.114_237).abs() < 1e-6);
        assert_eq!(h(1.7).unwrap(), h(-1.7).unwrap());
        let t = 30.0;
        let v = 2.0 * h(t).unwrap() * (t + 16f64.ln());
        assert!(v < 1.0 && 1.0 - v < 1e-8);
        assert!(h(700.0).is_ok());
        assert!(matches!(h(701.0), Err(crate::Error::Range { .. })));
    }

    #[test]
    fn big_h_examples() {
        assert!((big_h(0.0).unwrap() - 2.0 * c0()).abs() < 1e-12);
        assert!((big_h(0.0).unwrap() - 8.75376).abs() < 1e-5);
        assert!((big_h(PI / 4.0).unwrap() - 9.0157).abs() < 5e-4);
        let t = 5.0;
        let hp = 2.0 * PI * p_func(&ZeroBalancedPair::elliptic(), t).unwrap();
        assert!(rel(big_h(t).unwrap(), hp) < 1e-11);
    }

    #[test]
    fn big_h_prime_examples() {
        assert_eq!(big_h_prime(0.0).unwrap(), 0.0);
        let v = big_h_prime(30.0).unwrap();
        assert!(v < 2.0 && 2.0 - v < 1e-8);
        let step = 1e-5;
        let fd = (big_h(1.0 + step).unwrap() - big_h(1.0 - step).unwrap()) / (2.0 * step);
        assert!((big_h_prime(1.0).unwrap() - fd).abs() < 1e-7);
    }

    #[test]
    fn varphi_examples() {
        assert!(varphi(1e-12).unwrap().abs() < 1e-12);
        let q = q_log(&ZeroBalancedPair::elliptic(), 1.0).unwrap();
        assert!((varphi(2.0).unwrap() - q).abs() < 1e-12);
        // φ(t) = q(t/2) ~ log(t/2) − log π
        let t: f64 = 1e6;
        assert!((varphi(t).unwrap() - (0.5 * t).ln() + PI.ln()).abs() < 1e-4);
        // agrees with the elliptic route
        for &t in &[0.1f64, 1.0, 7.5, 60.0] {
            let elliptic = 2.0 * phi_func((0.5f64 * t).exp()).unwrap();
            assert!((varphi(t).unwrap() - elliptic).abs() < 1e-12, "t = {t}");
        }
        assert!(varphi(0.0).is_err());
    }

    #[test]
    fn lower_bounds() {
        let l = lambda01_lower(Complex64::new(-1.0, 0.0)).unwrap();
        assert!(rel(l, 1.0 / (2.0 * c0())) < 1e-12);
        assert_eq!(
            lambda01_lower(Complex64::new(0.0, 1.0)).unwrap(),
            lambda01_neg(1.0).unwrap()
        );
        assert_eq!(
            lambda01_lower(Complex64::new(-5.0, 0.0)).unwrap(),
            lambda01_neg(5.0).unwrap()
        );
        assert!(lambda01_lower(Complex64::new(1.0, 0.0)).is_err());
        assert!(lambda01_lower(Complex64::new(0.0, 0.0)).is_err());
        let z = Complex64::new(0.3, -0.8);
        assert_eq!(d01_lower(z, z).unwrap(), 0.0);
        assert_eq!(
            d01_lower(Complex64::new(-2.0, 0.0), Complex64::new(-3.0, 0.0)).unwrap(),
            d01_neg(2.0, 3.0).unwrap()
        );
        assert_eq!(
            d01_lower(Complex64::new(0.0, 2.0), Complex64::new(-2.0, 0.0)).unwrap(),
            0.0
        );
    }
}
