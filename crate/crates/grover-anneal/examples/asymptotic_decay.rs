//! Fit the long-time decay of the success-probability deficit 1 - P_opt.
//! For the imaginary-time linear ramp the deficit falls off as 1/tau^2.

use grover_anneal::experiments::asymptotic_slope;
use grover_anneal::{Mode, ProblemSize, ScheduleKind};

fn main() {
    let n = ProblemSize::new(64).unwrap();
    let taus = [200.0, 400.0, 800.0, 1600.0];
    let fit = asymptotic_slope(n, &taus, Mode::ImaginaryTime, ScheduleKind::Linear).unwrap();

    println!("{:>8} {:>14}", "tau", "1 - P_opt");
    for &(tau, deficit) in &fit.points {
        println!("{tau:>8.0} {deficit:>14.6e}");
    }
    println!(
        "\n1 - P ~ {:.3e} * tau^{:.3}   (rms residual in log-log: {:.3})",
        fit.prefactor, fit.exponent, fit.rms_residual
    );
}
