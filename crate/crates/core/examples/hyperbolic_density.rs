//! Density and distance of the twice-punctured plane on the negative axis,
//! and the functions h, H and φ built from them.

use num_complex::Complex64;
use punctured_metric::metric::{
    big_h, c0, d01_lower, d01_neg, h, lambda01_lower, lambda01_neg, varphi,
};

fn main() -> punctured_metric::Result<()> {
    println!(
        "C0 = {:.15}, 1/(2 C0) = lambda(-1) = {:.15}",
        c0(),
        lambda01_neg(1.0)?
    );
    println!("\n{:>8} {:>22} {:>22}", "x", "lambda(-x)", "d(-x, -1)");
    for x in [1e-3, 0.1, 1.0, 10.0, 1e3] {
        println!(
            "{x:>8} {:>22.15e} {:>22.15}",
            lambda01_neg(x)?,
            d01_neg(x, 1.0)?
        );
    }

    println!(
        "\n{:>6} {:>20} {:>20} {:>20}",
        "t", "h(t)", "H(t)", "varphi(t)"
    );
    for t in [0.5, 1.0, 5.0, 20.0, 100.0] {
        println!(
            "{t:>6} {:>20.15} {:>20.12} {:>20.15}",
            h(t)?,
            big_h(t)?,
            varphi(t)?
        );
    }

    // off the axis only the radial lower bounds are available
    let z = Complex64::new(0.5, 2.0);
    let w = Complex64::new(-3.0, 1.0);
    println!("\nlambda({z}) >= {:.15}", lambda01_lower(z)?);
    println!("d({z}, {w}) >= {:.15}", d01_lower(z, w)?);
    Ok(())
}
