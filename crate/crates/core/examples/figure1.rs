//! Data for the comparison of the three ring-bound coefficients.

use punctured_metric::cli::figure1_series;

fn main() -> punctured_metric::Result<()> {
    let series = figure1_series(0.05, 10.0, 12)?;
    print!("{:>8}", "c");
    for s in &series {
        print!(" {:>14}", s.label);
    }
    println!();
    for i in 0..series[0].points.len() {
        print!("{:>8.4}", series[0].points[i].0);
        for s in &series {
            print!(" {:>14.10}", s.points[i].1);
        }
        println!();
    }
    Ok(())
}
