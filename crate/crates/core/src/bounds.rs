//! Density and distance bounds for plane domains with finitely many
//! punctures, and the ring-sequence lower bound for hyperbolic distance.
//!
//! A ring sequence 0 = a₀, a₁, a₂, … with |aₙ₊₁| ≤ e^c |aₙ| and |aₙ| → ∞
//! gives, for e^{−c/2}|a₁| ≤ |z₁| ≤ |z₂|,
//!
//! ```text
//! d(z₁, z₂) ≥ A log(|z₂|/|z₁|) − B,   A = φ(c)/c,  B = φ(c) − φ(c/2).
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::metric::{c0, h, lambda01_lower, varphi};

/// Finite set of at least two distinct punctures; the domain is its
/// complement in ℂ.
#[derive(Debug, Clone, PartialEq)]
pub struct PuncturedDomain {
    punctures: Vec<Complex64>,
}

impl PuncturedDomain {
    pub fn new(punctures: Vec<Complex64>) -> Result<Self> {
        if punctures.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "a hyperbolic domain needs at least 2 punctures, got {}",
                punctures.len()
            )));
        }
        for (i, p) in punctures.iter().enumerate() {
            if !(p.re.is_finite() && p.im.is_finite()) {
                return Err(Error::InvalidInput(format!("puncture {p} is not finite")));
            }
            if punctures[..i].contains(p) {
                return Err(Error::InvalidInput(format!("puncture {p} is repeated")));
            }
        }
        Ok(Self { punctures })
    }

    /// Parse a JSON list of `[re, im]` pairs.
    pub fn from_json(text: &str) -> Result<Self> {
        let pairs: Vec<[f64; 2]> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("domain file: {e}")))?;
        Self::new(
            pairs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        )
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    fn require_interior(&self, func: &'static str, z: Complex64) -> Result<()> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return domain(func, format!("{z} is not finite"));
        }
        if self.punctures.contains(&z) {
            return domain(func, format!("{z} is a puncture"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RingBoundParams {
    pub c: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
}

fn require_c(func: &'static str, c: f64) -> Result<()> {
    if c > 0.0 && c.is_finite() {
        Ok(())
    } else {
        domain(func, format!("c must be positive, got {c}"))
    }
}

/// A = φ(c)/c and B = φ(c) − φ(c/2).
pub fn ring_coefficients(c: f64) -> Result<RingBoundParams> {
    require_c("ring_coefficients", c)?;
    let full = varphi(c)?;
    let half = varphi(0.5 * c)?;
    Ok(RingBoundParams {
        c,
        a: full / c,
        b: full - half,
    })
}

/// max(0, A log(r₂/r₁) − B) for radii r₁ ≤ r₂.
///
/// The caller is responsible for e^{−c/2}|a₁| ≤ r₁; [`RingSequence`]
/// checks it.
pub fn ring_lower_bound(c: f64, r1: f64, r2: f64) -> Result<f64> {
    if !(r1 > 0.0 && r2.is_finite() && r1 <= r2) {
        return domain(
            "ring_lower_bound",
            format!("need 0 < r1 <= r2, got r1 = {r1}, r2 = {r2}"),
        );
    }
    let k = ring_coefficients(c)?;
    Ok((k.a * (r2 / r1).ln() - k.b).max(0.0))
}

/// Earlier coefficient sets for the same inequality, kept for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BaselineBounds {
    /// A = h(c/2), B = 0.
    #[serde(rename = "sv512_A")]
    pub sv512_a: f64,
    /// A = log(1 + c/(2C₀))/c.
    #[serde(rename = "bp_A")]
    pub bp_a: f64,
    /// B = c/(4π).
    #[serde(rename = "bp_B")]
    pub bp_b: f64,
}

pub fn baseline_bounds(c: f64) -> Result<BaselineBounds> {
    require_c("baseline_bounds", c)?;
    Ok(BaselineBounds {
        sv512_a: h(0.5 * c)?,
        bp_a: (c / (2.0 * c0())).ln_1p() / c,
        bp_b: c / (4.0 * PI),
    })
}

/// Two-sided bound on ρ(z); `upper` is +∞ when no finite candidate exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoBounds {
    pub lower: f64,
    pub upper: f64,
}

/// h(m)/|z−a| ≤ ρ(z) ≤ π/(4m|z−a|) over punctures a, with
/// m = min over the other punctures b of |log|z−a| − log|b−a||.
pub fn rho_bounds(dom: &PuncturedDomain, z: Complex64) -> Result<RhoBounds> {
    dom.require_interior("rho_bounds", z)?;
    let pts = dom.punctures();
    let mut lower = 0.0_f64;
    let mut upper = f64::INFINITY;
    for (i, &a) in pts.iter().enumerate() {
        let d = (z - a).norm();
        let s = d.ln();
        let m = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &b)| (s - (b - a).norm().ln()).abs())
            .fold(f64::INFINITY, f64::min);
        lower = lower.max(h(m)? / d);
        if m > 0.0 {
            upper = upper.min(PI / (4.0 * m * d));
        }
    }
    Ok(RhoBounds { lower, upper })
}

/// max over ordered pairs (a, b) of λ₀,₁((z−a)/(b−a)) / |b−a|, each term
/// bounded below through λ₀,₁(−|w|) ≤ λ₀,₁(w).
pub fn sigma_lower(dom: &PuncturedDomain, z: Complex64) -> Result<f64> {
    dom.require_interior("sigma_lower", z)?;
    let pts = dom.punctures();
    let mut best = 0.0_f64;
    for &a in pts {
        for &b in pts {
            if a == b {
                continue;
            }
            let scale = b - a;
            best = best.max(lambda01_lower((z - a) / scale)? / scale.norm());
        }
    }
    Ok(best)
}

/// Punctures 0 = a₀, a₁, …, a_N in order of non-decreasing modulus, as in
/// the ring-sequence bound. Only the listed terms are checked; continuing
/// the sequence to infinity with the same ratio bound is the caller's
/// claim.
#[derive(Debug, Clone, PartialEq)]
pub struct RingSequence {
    moduli: Vec<f64>,
    c: f64,
}

impl RingSequence {
    pub fn new(points: &[Complex64]) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "a ring sequence needs a0 = 0 and at least two more terms, got {}",
                points.len()
            )));
        }
        if points[0] != Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidInput(format!(
                "a0 must be 0, got {}",
                points[0]
            )));
        }
        let moduli: Vec<f64> = points.iter().map(|p| p.norm()).collect();
        let mut c = 0.0_f64;
        for w in moduli[1..].windows(2) {
            if !(w[0] > 0.0 && w[1] >= w[0] && w[1].is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "moduli must be positive and non-decreasing, got {} then {}",
                    w[0], w[1]
                )));
            }
            c = c.max((w[1] / w[0]).ln());
        }
        if c <= 0.0 {
            return Err(Error::InvalidInput(
                "all moduli are equal; no ratio gap".into(),
            ));
        }
        Ok(Self { moduli, c })
    }

    /// Smallest c with |aₙ₊₁| ≤ e^c |aₙ| over the listed terms.
    pub fn min_c(&self) -> f64 {
        self.c
    }

    pub fn moduli(&self) -> &[f64] {
        &self.moduli
    }

    /// Ring lower bound for d(z₁, z₂) with the sequence's minimal c.
    pub fn lower_bound(&self, z1: Complex64, z2: Complex64) -> Result<f64> {
        let (r1, r2) = {
            let (p, q) = (z1.norm(), z2.norm());
            if p <= q {
                (p, q)
            } else {
                (q, p)
            }
        };
        let threshold = (-0.5 * self.c).exp() * self.moduli[1];
        if r1 < threshold {
            return Err(Error::Hypothesis {
                claim: "ring_lower_bound".into(),
                detail: format!("need e^(-c/2)|a1| = {threshold} <= |z1|, got {r1}"),
            });
        }
        ring_lower_bound(self.c, r1, r2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::lambda01_neg;

    fn pts(list: &[(f64, f64)]) -> Vec<Complex64> {
        list.iter()
            .map(|&(re, im)| Complex64::new(re, im))
            .collect()
    }

    fn zero_one() -> PuncturedDomain {
        PuncturedDomain::new(pts(&[(0.0, 0.0), (1.0, 0.0)])).unwrap()
    }

    #[test]
    fn domain_validation() {
        assert!(PuncturedDomain::new(pts(&[(0.0, 0.0)])).is_err());
        assert!(PuncturedDomain::new(pts(&[(0.0, 0.0), (0.0, 0.0)])).is_err());
        assert!(PuncturedDomain::new(pts(&[(0.0, 0.0), (f64::NAN, 0.0)])).is_err());
        let d = PuncturedDomain::from_json("[[0, 0], [1, 0], [0, 1]]").unwrap();
        assert_eq!(d.punctures().len(), 3);
        assert!(PuncturedDomain::from_json("[[0, 0]").is_err());
        assert!(PuncturedDomain::from_json("[[0, 0, 1], [1, 0]]").is_err());
    }

    #[test]
    fn ring_coefficient_examples() {
        let c = 2f64.ln();
        let k = ring_coefficients(c).unwrap();
        assert_eq!(k.a, varphi(c).unwrap() / c);
        assert_eq!(k.b, varphi(c).unwrap() - varphi(0.5 * c).unwrap());
        assert!(k.a > 0.0 && k.b > 0.0);
        let mut prev = f64::INFINITY;
        for i in 1..=40 {
            let a = ring_coefficients(0.25 * i as f64).unwrap().a;
            assert!(a < prev);
            prev = a;
        }
        assert!(ring_coefficients(1e-8).unwrap().b < 1e-8);
        assert!(ring_coefficients(0.0).is_err());
    }

    #[test]
    fn ring_bound_examples() {
        let c = 2f64.ln();
        assert_eq!(ring_lower_bound(c, 3.0, 3.0).unwrap(), 0.0);
        let k = ring_coefficients(c).unwrap();
        let v = ring_lower_bound(c, 1.0, 1024.0).unwrap();
        assert!((v - (k.a * 1024f64.ln() - k.b)).abs() < 1e-14);
        assert!(v > 0.0);
        let base = baseline_bounds(c).unwrap();
        let bp = (base.bp_a * 1024f64.ln() - base.bp_b).max(0.0);
        assert!(v > bp);
        assert!(ring_lower_bound(c, 2.0, 1.0).is_err());
        assert!(ring_lower_bound(c, 0.0, 1.0).is_err());
    }

    #[test]
    fn baseline_examples() {
        let b = baseline_bounds(1.0).unwrap();
        assert_eq!(b.sv512_a, h(0.5).unwrap());
        // ln(1 + 1/(2C₀)) = 0.1081695…
        assert!((b.bp_a - 0.108_169_5).abs() < 1e-7);
        assert_eq!(b.bp_b, 1.0 / (4.0 * PI));
        let small = baseline_bounds(1e-9).unwrap();
        assert!((small.sv512_a - 1.0 / (2.0 * c0())).abs() < 1e-9);
    }

    #[test]
    fn rho_examples() {
        let r = rho_bounds(&zero_one(), Complex64::new(-1.0, 0.0)).unwrap();
        assert!((r.lower - 1.0 / (2.0 * c0())).abs() < 1e-12);
        assert!((r.lower - lambda01_neg(1.0).unwrap()).abs() < 1e-12);
        assert!((r.upper - PI / (8.0 * 2f64.ln())).abs() < 1e-12);
        assert!((r.upper - 0.5665).abs() < 1e-4);
        let three = PuncturedDomain::new(pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])).unwrap();
        let r = rho_bounds(&three, Complex64::new(10.0, 0.0)).unwrap();
        assert!(r.upper.is_finite() && r.lower <= r.upper);
        assert!(rho_bounds(&three, Complex64::new(0.0, 1.0)).is_err());
    }

    #[test]
    fn rho_skips_vanishing_m() {
        // |i - 0| = |1 - 0|, so a = 0 gives m = 0 and only a = 1 bounds above
        let z = Complex64::new(0.0, 1.0);
        let r = rho_bounds(&zero_one(), z).unwrap();
        let d = 2f64.sqrt();
        assert!((r.upper - PI / (4.0 * d.ln() * d)).abs() < 1e-14);
        assert!((r.lower - h(0.0).unwrap()).abs() < 1e-15);
        assert!(r.lower <= r.upper);
    }

    #[test]
    fn sigma_examples() {
        let s = sigma_lower(&zero_one(), Complex64::new(-1.0, 0.0)).unwrap();
        assert!((s - 1.0 / (2.0 * c0())).abs() < 1e-12);
        let s2 = sigma_lower(&zero_one(), Complex64::new(2.0, 0.0)).unwrap();
        assert!((s2 - 1.0 / (2.0 * c0())).abs() < 1e-12);
        let p = pts(&[(0.0, 0.0), (1.0, 0.0), (0.3, 2.0)]);
        let z = Complex64::new(-0.7, 0.4);
        let mut rev = p.clone();
        rev.reverse();
        let a = sigma_lower(&PuncturedDomain::new(p).unwrap(), z).unwrap();
        let b = sigma_lower(&PuncturedDomain::new(rev).unwrap(), z).unwrap();
        assert_eq!(a, b);
        assert!(sigma_lower(&zero_one(), Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn ring_sequence_helper() {
        let seq: Vec<Complex64> = std::iter::once(Complex64::new(0.0, 0.0))
            .chain((0..8).map(|n| Complex64::from_polar(2f64.powi(n), n as f64)))
            .collect();
        let rs = RingSequence::new(&seq).unwrap();
        assert!((rs.min_c() - 2f64.ln()).abs() < 1e-15);
        let v = rs
            .lower_bound(Complex64::new(1.0, 0.0), Complex64::new(0.0, 1024.0))
            .unwrap();
        assert_eq!(v, ring_lower_bound(rs.min_c(), 1.0, 1024.0).unwrap());
        // e^{-c/2}|a1| = 1/sqrt(2)
        assert!(rs
            .lower_bound(Complex64::new(0.7, 0.0), Complex64::new(5.0, 0.0))
            .is_err());
        assert!(rs
            .lower_bound(Complex64::new(0.71, 0.0), Complex64::new(5.0, 0.0))
            .is_ok());
        assert!(RingSequence::new(&seq[1..]).is_err());
        let bad = pts(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        assert!(RingSequence::new(&bad).is_err());
    }
}
