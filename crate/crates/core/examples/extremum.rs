//! Maximum of 2(|t| + C0) h(t) and the sign of its derivative numerator.

use punctured_metric::verify::{extremum_g, find_t0, max_weighted_h, weighted_h};

fn main() -> punctured_metric::Result<()> {
    for t in [0.0, 1.0, 2.0, 2.5, 3.0, 5.0, 10.0] {
        println!(
            "t = {t:>4}: 2(|t|+C0)h = {:.10}, g = {:+.6}",
            weighted_h(t)?,
            extremum_g(t)?
        );
    }
    let t0 = find_t0()?;
    let ext = max_weighted_h()?;
    println!("\nroot of g: t0 = {t0:.10}");
    println!("maximum:   {:.10} at t = {:.10}", ext.max_value, ext.t0);
    Ok(())
}
