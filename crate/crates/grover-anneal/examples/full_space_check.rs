//! Validate the two-level reduction: propagate the full N-dimensional
//! state with the matrix-free Hamiltonian and compare the final success
//! probability with the reduced dynamics.

use grover_anneal::integrator::{
    default_steps, evolve_full, final_probability, FULL_STATE_CAP,
};
use grover_anneal::{Mode, ProblemSize, ScheduleSpec};

fn main() {
    println!("{:>5} {:>4} {:>5} {:>12} {:>12} {:>10}", "N", "mode", "tau", "P full", "P 2d", "diff");
    for nv in [8u64, 64, 512] {
        let n = ProblemSize::new(nv).unwrap();
        for mode in [Mode::RealTime, Mode::ImaginaryTime] {
            for tau in [5.0, 50.0] {
                let spec = ScheduleSpec::linear(tau).unwrap();
                let steps = default_steps(tau);
                let p_full = evolve_full(n, &spec, mode, steps, FULL_STATE_CAP).unwrap();
                let p_red = final_probability(n, &spec, mode, steps).unwrap();
                let label = match mode {
                    Mode::RealTime => "rt",
                    Mode::ImaginaryTime => "it",
                };
                println!(
                    "{nv:>5} {label:>4} {tau:>5.0} {p_full:>12.8} {p_red:>12.8} {:>10.2e}",
                    (p_full - p_red).abs()
                );
            }
        }
    }
}
