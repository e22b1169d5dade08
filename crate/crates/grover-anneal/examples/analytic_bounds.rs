//! Evaluate the closed-form bounds on the excited-state coefficient and
//! check them against a simulated imaginary-time run.

use grover_anneal::bounds;
use grover_anneal::grover::eigenbasis_projection;
use grover_anneal::integrator::{default_steps, evolve_sampled};
use grover_anneal::{Mode, ProblemSize, ScheduleSpec};

fn main() {
    let n = ProblemSize::new(10_000).unwrap();
    println!("{:>5} {:>12} {:>12} {:>14} {:>14}", "tau", "sim ratio", "ratio bound", "D1 upper", "D1 asympt");
    for tau in [5.0, 10.0, 20.0, 40.0] {
        let spec = ScheduleSpec::linear(tau).unwrap();
        let traj =
            evolve_sampled(n, &spec, Mode::ImaginaryTime, default_steps(tau), u64::MAX).unwrap();
        let (c0, c1) = eigenbasis_projection(&traj.final_state, n, 1.0).unwrap();
        let report = bounds::bound_report(n, tau, 0.1).unwrap();
        println!(
            "{tau:>5.0} {:>12.4e} {:>12.4e} {:>14.4e} {:>14.4e}",
            c1.norm() / c0.norm(),
            report.ratio_bound,
            report.d1_upper,
            report.d1_asymptotic
        );
    }

    let delta = bounds::amplitude_ratio_for_target(0.99).unwrap();
    let needed = bounds::required_tau(n, delta).unwrap();
    println!("\nsufficient time for P >= 0.99 at N = 10^4: tau = {needed:.2}");
}
