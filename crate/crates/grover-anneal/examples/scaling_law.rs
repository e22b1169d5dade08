//! Measure tau*(N) for the imaginary-time linear ramp and fit it against
//! ln N. The fitted line grows logarithmically — exponentially faster than
//! the sqrt(N) real-time optimum.

use grover_anneal::experiments::scaling_study;
use grover_anneal::{Mode, ScheduleKind};

fn main() {
    let sizes: Vec<u64> = (4..=14).map(|e| 1u64 << e).collect();
    let fit = scaling_study(&sizes, 0.99, Mode::ImaginaryTime, ScheduleKind::Linear).unwrap();

    println!("{:>8} {:>10}", "N", "tau*");
    for &(ln_n, tau) in &fit.points {
        println!("{:>8} {tau:>10.3}", ln_n.exp().round() as u64);
    }
    println!(
        "\ntau* = {:.3} ln N + {:.3}   (rms residual {:.3})",
        fit.slope, fit.intercept, fit.rms_residual
    );
}
