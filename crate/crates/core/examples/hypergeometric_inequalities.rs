//! Zero-balanced quotients P, Q, q and the coefficient tests behind them.

use punctured_metric::hyp2f1::{finite_difference_table, ratio_coeffs};
use punctured_metric::pqfun::{p_func, p_prime, q_func, q_log, slope_g, ZeroBalancedPair};

fn main() -> punctured_metric::Result<()> {
    for (a, b) in [(0.5, 0.5), (1.5, 1.2)] {
        let pr = ZeroBalancedPair::new(a, b)?;
        println!(
            "a = {a}, b = {b}: 1/B = {:.12}, R = {:.12}",
            pr.inv_beta(),
            pr.ramanujan()
        );
        println!(
            "  {:>5} {:>18} {:>18} {:>18} {:>18}",
            "t", "P", "P'", "G", "Q(t)Q(-t)"
        );
        for t in [0.0, 1.0, 4.0, 12.0] {
            println!(
                "  {t:>5} {:>18.12} {:>18.12} {:>18.12} {:>18.15}",
                p_func(&pr, t)?,
                p_prime(&pr, t)?,
                if t > 0.0 { slope_g(&pr, t)? } else { f64::NAN },
                q_func(&pr, t)? * q_func(&pr, -t)?
            );
        }
        println!("  q(3) = {:.12}", q_log(&pr, 3.0)?);
    }

    // coefficient ratios of F(a,b;c;x)/F(a,b;c;0) and their difference table
    let seq = ratio_coeffs(0.5, 0.5, 1.0, 30)?;
    let table = finite_difference_table(&seq, 6)?;
    let (min, k, n) = table.min_entry();
    println!("\nfirst coefficients: {:?}", &seq.values()[..5]);
    println!("smallest difference up to order 6: {min:.3e} at k = {k}, n = {n}");
    Ok(())
}
