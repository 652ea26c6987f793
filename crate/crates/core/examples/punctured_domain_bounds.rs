//! Density bounds in a finitely punctured plane and the ring-sequence
//! distance bound.

use num_complex::Complex64;
use punctured_metric::bounds::{
    baseline_bounds, rho_bounds, ring_coefficients, sigma_lower, PuncturedDomain, RingSequence,
};

fn main() -> punctured_metric::Result<()> {
    let dom = PuncturedDomain::from_json("[[0, 0], [1, 0], [0, 2]]")?;
    let listed: Vec<String> = dom.punctures().iter().map(|p| p.to_string()).collect();
    println!("punctures: {}", listed.join(", "));
    for z in [
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.5, 0.5),
        Complex64::new(3.0, -2.0),
    ] {
        let r = rho_bounds(&dom, z)?;
        println!(
            "z = {z:<10} sigma >= {:.6}  {:.6} <= rho <= {:.6}",
            sigma_lower(&dom, z)?,
            r.lower,
            r.upper
        );
    }

    for c in [0.5, 1.0, 4.0] {
        let k = ring_coefficients(c)?;
        let base = baseline_bounds(c)?;
        println!(
            "c = {c}: A = {:.6}, B = {:.6}; baselines h(c/2) = {:.6}, log(1+c/(2C0))/c = {:.6}",
            k.a, k.b, base.sv512_a, base.bp_a
        );
    }

    let pts: Vec<Complex64> = (0..6)
        .map(|n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::from_polar(2f64.powi(n), n as f64)
            }
        })
        .collect();
    let seq = RingSequence::new(&pts)?;
    let z1 = Complex64::new(1.5, 0.0);
    let z2 = Complex64::new(0.0, 40.0);
    println!(
        "\nring sequence with c = {:.6}: d({z1}, {z2}) >= {:.6}",
        seq.min_c(),
        seq.lower_bound(z1, z2)?
    );
    Ok(())
}
