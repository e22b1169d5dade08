//! Propagate one annealing run in each mode and watch the success
//! probability. Real time conserves the norm; imaginary time damps the
//! excited state, so P_opt climbs monotonically.

use grover_anneal::integrator::{default_steps, evolve_sampled};
use grover_anneal::{Mode, ProblemSize, ScheduleSpec};

fn main() {
    let n = ProblemSize::new(64).unwrap();
    let tau = 20.0;
    let spec = ScheduleSpec::linear(tau).unwrap();
    let steps = default_steps(tau);

    for mode in [Mode::ImaginaryTime, Mode::RealTime] {
        let traj = evolve_sampled(n, &spec, mode, steps, steps / 10).unwrap();
        println!("{mode:?}, N = 64, tau = {tau}:");
        println!("{:>8} {:>8} {:>12} {:>12}", "t", "s", "p_opt", "log_norm");
        for s in &traj.samples {
            println!("{:>8.2} {:>8.3} {:>12.6} {:>12.4}", s.t, s.s, s.p_opt, s.log_norm);
        }
        println!();
    }
}
