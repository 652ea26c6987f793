//! Complete elliptic integral of the first kind via the arithmetic-geometric
//! mean, and the Grötzsch ring modulus μ(r).

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, range, Result};

/// Largest modulus accepted by [`ellip_k`]. Closer to 1 the complement
/// √(1−r²) can no longer be recovered from r; use [`ModulusPair`] instead.
pub const MAX_MODULUS: f64 = 1.0 - 1e-12;

const AGM_MAX_ITER: usize = 60;
const AGM_REL_TOL: f64 = 1e-16;

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()) {
        return domain("agm", format!("arguments must be positive, got ({x}, {y})"));
    }
    // Order the pair so agm(x, y) and agm(y, x) run identical iterations.
    let (mut a, mut b) = if x >= y { (x, y) } else { (y, x) };
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= AGM_REL_TOL * a {
            break;
        }
        let next_a = 0.5 * (a + b);
        let next_b = (a * b).sqrt();
        if next_a == a && next_b == b {
            break;
        }
        a = next_a;
        b = next_b;
    }
    Ok(0.5 * (a + b))
}

/// A modulus r together with its complement r′ = √(1 − r²), each stored
/// directly so neither is recovered by cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusPair {
    r: f64,
    r_prime: f64,
}

impl ModulusPair {
    pub fn from_modulus(r: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&r) {
            return domain("ModulusPair", format!("r must lie in [0, 1), got {r}"));
        }
        Ok(Self {
            r,
            r_prime: ((1.0 - r) * (1.0 + r)).sqrt(),
        })
    }

    /// Pair with the given complementary modulus r′ ∈ (0, 1].
    pub fn from_complement(r_prime: f64) -> Result<Self> {
        if !(r_prime > 0.0 && r_prime <= 1.0) {
            return domain(
                "ModulusPair",
                format!("r' must lie in (0, 1], got {r_prime}"),
            );
        }
        Ok(Self {
            r: ((1.0 - r_prime) * (1.0 + r_prime)).sqrt(),
            r_prime,
        })
    }

    /// r = √(x/(1+x)), r′ = √(1/(1+x)): the moduli attached to the point −x.
    pub fn from_neg_axis(x: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return domain("ModulusPair", format!("x must be positive, got {x}"));
        }
        let (r, r_prime) = if x >= 1.0 {
            let u = 1.0 / x;
            ((1.0 / (1.0 + u)).sqrt(), (u / (1.0 + u)).sqrt())
        } else {
            ((x / (1.0 + x)).sqrt(), (1.0 / (1.0 + x)).sqrt())
        };
        if r_prime == 0.0 || r == 0.0 {
            return range("ModulusPair", format!("x = {x} leaves a zero modulus"));
        }
        Ok(Self { r, r_prime })
    }

    /// r = √s, r′ = √(1−s) for s ∈ (0, 1) given with its complement.
    pub(crate) fn from_squares(s: f64, one_minus_s: f64) -> Self {
        Self {
            r: s.sqrt(),
            r_prime: one_minus_s.sqrt(),
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r_prime(&self) -> f64 {
        self.r_prime
    }

    pub fn swapped(&self) -> Self {
        Self {
            r: self.r_prime,
            r_prime: self.r,
        }
    }

    /// K(r).
    pub fn k(&self) -> Result<f64> {
        if self.r_prime == 0.0 {
            return range("ellip_k", "modulus equals 1");
        }
        Ok(PI / (2.0 * agm(1.0, self.r_prime)?))
    }

    /// K(r′).
    pub fn k_prime(&self) -> Result<f64> {
        self.swapped().k()
    }
}

/// K(r) = ∫₀¹ dt / √((1−t²)(1−r²t²)) for 0 ≤ r ≤ 1 − 10⁻¹².
pub fn ellip_k(r: f64) -> Result<f64> {
    if r < 0.0 || r.is_nan() {
        return domain("ellip_k", format!("r must be non-negative, got {r}"));
    }
    if r > MAX_MODULUS {
        return range("ellip_k", format!("r = {r} exceeds {MAX_MODULUS}"));
    }
    if r == 0.0 {
        return Ok(FRAC_PI_2);
    }
    ModulusPair::from_modulus(r)?.k()
}

/// Modulus of the Grötzsch ring: μ(r) = (π/2) K(r′)/K(r).
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return domain("mu", format!("r must lie in (0, 1), got {r}"));
    }
    if r > MAX_MODULUS {
        return range("mu", format!("r = {r} exceeds {MAX_MODULUS}"));
    }
    let pair = ModulusPair::from_modulus(r)?;
    Ok(FRAC_PI_2 * pair.k_prime()? / pair.k()?)
}
