//! Compare the linear ramp with the gap-adapted ramp. The adapted
//! schedule spends most of the annealing time near s = 1/2, where the gap
//! bottoms out at 1/sqrt(N).

use grover_anneal::schedule::build_local_adiabatic;
use grover_anneal::{ProblemSize, ScheduleSpec};

fn main() {
    let n = ProblemSize::new(1024).unwrap();
    let tau = 100.0;
    let linear = ScheduleSpec::linear(tau).unwrap();
    let adapted = build_local_adiabatic(n, tau, 1e-9).unwrap();

    println!("s(t) for N = 1024, tau = {tau}:");
    println!("{:>8} {:>10} {:>10}", "t", "linear", "adapted");
    for i in 0..=10 {
        let t = tau * i as f64 / 10.0;
        println!(
            "{t:>8.1} {:>10.4} {:>10.4}",
            linear.evaluate(t).unwrap(),
            adapted.evaluate(t).unwrap()
        );
    }

    // Fraction of the run spent inside the narrow-gap window |s - 1/2| < 0.05.
    let inside = adapted.time_at(0.55).unwrap() - adapted.time_at(0.45).unwrap();
    println!(
        "\nadapted ramp spends {:.1}% of the time in |s - 1/2| < 0.05 (linear: 10%)",
        100.0 * inside / tau
    );
}
