//! Head-to-head scaling of the three (mode, schedule) combinations over a
//! small size range: imaginary time + linear ramp scales like ln N, the
//! gap-adapted ramps like sqrt(N) in either mode.

use grover_anneal::experiments::schedule_comparison;

fn main() {
    let sizes: Vec<u64> = (8..=15).map(|e| 1u64 << e).collect();
    let table = schedule_comparison(&sizes, 0.99).unwrap();

    println!("{:>6} {:>12} {:>12} {:>12}", "N", "IT linear", "IT adapted", "RT adapted");
    for row in &table.rows {
        println!(
            "{:>6} {:>12.3} {:>12.3} {:>12.3}",
            row.n, row.tau_it_linear, row.tau_it_adiabatic, row.tau_rt_adiabatic
        );
    }
    println!(
        "\nIT linear:  tau* = {:.3} ln N + {:.3}",
        table.fit_it_linear.slope, table.fit_it_linear.intercept
    );
    println!(
        "IT adapted: tau* = {:.3} N^{:.3}",
        table.fit_it_adiabatic.prefactor, table.fit_it_adiabatic.exponent
    );
    println!(
        "RT adapted: tau* = {:.3} N^{:.3}",
        table.fit_rt_adiabatic.prefactor, table.fit_rt_adiabatic.exponent
    );
}
