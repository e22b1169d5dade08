//! Sweep the instantaneous two-level spectrum and locate the minimum gap.

use grover_anneal::grover::{gap, spectral_data};
use grover_anneal::ProblemSize;

fn main() {
    for nv in [16u64, 256, 4096, 65536] {
        let n = ProblemSize::new(nv).unwrap();
        let mut min_gap = f64::INFINITY;
        let mut at = 0.0;
        for i in 0..=2000 {
            let s = i as f64 / 2000.0;
            let g = gap(n, s);
            if g < min_gap {
                min_gap = g;
                at = s;
            }
        }
        println!(
            "N = {nv:>6}: min gap {min_gap:.6} at s = {at:.3} (1/sqrt(N) = {:.6})",
            1.0 / (nv as f64).sqrt()
        );
    }

    let n = ProblemSize::new(64).unwrap();
    println!("\nspectrum at N = 64:");
    println!("{:>5} {:>10} {:>10} {:>10}", "s", "eps0", "eps1", "gap");
    for i in 0..=10 {
        let s = i as f64 / 10.0;
        let sd = spectral_data(n, s).unwrap();
        println!("{s:>5.2} {:>10.6} {:>10.6} {:>10.6}", sd.eps0, sd.eps1, sd.gap);
    }
}
