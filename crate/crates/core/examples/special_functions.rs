//! Scalar special functions: gamma family, AGM, K(r), μ(r) and 2F1.

use std::f64::consts::PI;

use punctured_metric::elliptic::{agm, ellip_k, mu};
use punctured_metric::hyp2f1::{f21, HypParams};
use punctured_metric::specfun::{beta, digamma, gamma, ramanujan_r};

fn main() -> punctured_metric::Result<()> {
    println!("gamma(1/4)      = {:.15}", gamma(0.25)?);
    println!("digamma(1)      = {:.15}", digamma(1.0)?);
    println!("beta(1/2, 1/2)  = {:.15}  (pi = {PI:.15})", beta(0.5, 0.5)?);
    println!(
        "R(1/2, 1/2)     = {:.15}  (ln 16 = {:.15})",
        ramanujan_r(0.5, 0.5)?,
        16f64.ln()
    );
    println!("agm(1, sqrt 2)  = {:.15}", agm(1.0, 2f64.sqrt())?);

    println!(
        "\n{:>6} {:>20} {:>20} {:>20}",
        "r", "K(r)", "(pi/2)F(1/2,1/2;1;r^2)", "mu(r)"
    );
    let p = HypParams::new(0.5, 0.5, 1.0)?;
    for r in [0.1, 0.5, 0.9, 0.99] {
        let f = f21(&p, r * r)?;
        println!(
            "{r:>6} {:>20.15} {:>20.15} {:>20.15}",
            ellip_k(r)?,
            0.5 * PI * f.value,
            mu(r)?
        );
    }

    println!("\nF(1/2,1/2;1;x) near x = 1 switches method:");
    for x in [0.3, 0.9, 1.0 - 1e-9] {
        let f = f21(&p, x)?;
        println!(
            "  x = {x:<14} F = {:<20.15} method = {:<16} terms = {} err ~ {:.1e}",
            f.value,
            f.method.as_str(),
            f.terms_used,
            f.abs_err_estimate
        );
    }
    Ok(())
}
