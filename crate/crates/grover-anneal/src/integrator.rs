//! Fixed-step RK4 propagation of the reduced two-level state under
//! real-time (dpsi/dt = -i H psi) and imaginary-time (dpsi/dt = -H psi)
//! dynamics, with success-probability tracking.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grover::{self, ProblemSize};
use crate::schedule::ScheduleSpec;

/// Default cap on the full-space state size.
pub const FULL_STATE_CAP: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    RealTime,
    ImaginaryTime,
}

/// Two amplitudes on the {|0>, |Psi>} basis plus the log of the norm shed
/// by per-step renormalization (imaginary time only).
#[derive(Debug, Clone, Copy)]
pub struct EffectiveState {
    pub a_opt: Complex64,
    pub a_rest: Complex64,
    pub log_norm: f64,
}

impl EffectiveState {
    pub fn from_amplitudes(a_opt: Complex64, a_rest: Complex64) -> Self {
        EffectiveState { a_opt, a_rest, log_norm: 0.0 }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a_opt.norm_sqr() + self.a_rest.norm_sqr()
    }
}

/// One sampled point along a trajectory.
#[derive(Debug, Clone, Copy)]
pub struct Sample {
    pub t: f64,
    pub s: f64,
    pub p_opt: f64,
    pub log_norm: f64,
    pub gap: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub final_state: EffectiveState,
}

/// The uniform superposition |Psi0> in the reduced basis.
pub fn initial_state(n: ProblemSize) -> EffectiveState {
    let nf = n.as_f64();
    EffectiveState::from_amplitudes(
        Complex64::new(1.0 / nf.sqrt(), 0.0),
        Complex64::new((1.0 - 1.0 / nf).sqrt(), 0.0),
    )
}

/// Normalized probability of measuring the marked item.
pub fn success_probability(state: &EffectiveState) -> f64 {
    state.a_opt.norm_sqr() / state.norm_sqr()
}

fn generator_apply(
    h: &grover::EffectiveHamiltonian,
    mode: Mode,
    a_opt: Complex64,
    a_rest: Complex64,
) -> (Complex64, Complex64) {
    let (h_opt, h_rest) = h.apply(a_opt, a_rest);
    match mode {
        Mode::RealTime => {
            let minus_i = Complex64::new(0.0, -1.0);
            (minus_i * h_opt, minus_i * h_rest)
        }
        Mode::ImaginaryTime => (-h_opt, -h_rest),
    }
}

/// RK4 update given the Hamiltonians at the stage times t, t + dt/2, and
/// t + dt; the midpoint serves both interior stages.
fn rk4_update(
    h0: &grover::EffectiveHamiltonian,
    h_mid: &grover::EffectiveHamiltonian,
    h1: &grover::EffectiveHamiltonian,
    mode: Mode,
    dt: f64,
    state: &EffectiveState,
) -> EffectiveState {
    let (a, b) = (state.a_opt, state.a_rest);
    let (k1a, k1b) = generator_apply(h0, mode, a, b);
    let (k2a, k2b) = generator_apply(h_mid, mode, a + k1a * (0.5 * dt), b + k1b * (0.5 * dt));
    let (k3a, k3b) = generator_apply(h_mid, mode, a + k2a * (0.5 * dt), b + k2b * (0.5 * dt));
    let (k4a, k4b) = generator_apply(h1, mode, a + k3a * dt, b + k3b * dt);

    let sixth = dt / 6.0;
    let mut out = EffectiveState {
        a_opt: a + (k1a + (k2a + k3a) * 2.0 + k4a) * sixth,
        a_rest: b + (k1b + (k2b + k3b) * 2.0 + k4b) * sixth,
        log_norm: state.log_norm,
    };
    if mode == Mode::ImaginaryTime {
        let norm = out.norm_sqr().sqrt();
        out.a_opt /= norm;
        out.a_rest /= norm;
        out.log_norm += norm.ln();
    }
    out
}

fn hamiltonian_at(
    n: ProblemSize,
    spec: &ScheduleSpec,
    t: f64,
) -> Result<grover::EffectiveHamiltonian> {
    grover::effective_hamiltonian(n, spec.evaluate(t)?)
}

/// One classical RK4 step from t to t + dt. In imaginary time the result
/// is renormalized and the shed log-norm accumulated.
pub fn rk4_step(
    n: ProblemSize,
    spec: &ScheduleSpec,
    mode: Mode,
    t: f64,
    dt: f64,
    state: &EffectiveState,
) -> Result<EffectiveState> {
    if dt <= 0.0 {
        return Err(Error::domain(format!("step size must be positive, got {dt}")));
    }
    let h0 = hamiltonian_at(n, spec, t)?;
    let h_mid = hamiltonian_at(n, spec, t + 0.5 * dt)?;
    let h1 = hamiltonian_at(n, spec, t + dt)?;
    Ok(rk4_update(&h0, &h_mid, &h1, mode, dt, state))
}

/// Propagate the reduced state over the whole schedule with uniform
/// dt = tau/steps, recording a sample every `stride` steps (and always at
/// t = 0 and t = tau). tau = 0 returns the initial state unevolved.
pub fn evolve_sampled(
    n: ProblemSize,
    spec: &ScheduleSpec,
    mode: Mode,
    steps: u64,
    stride: u64,
) -> Result<Trajectory> {
    if steps < 1 {
        return Err(Error::domain("step count must be >= 1".to_string()));
    }
    let stride = stride.max(1);
    let tau = spec.tau();
    let mut state = initial_state(n);

    let sample_at = |t: f64, state: &EffectiveState| -> Result<Sample> {
        let s = spec.evaluate(t)?;
        Ok(Sample {
            t,
            s,
            p_opt: success_probability(state),
            log_norm: state.log_norm,
            gap: grover::gap(n, s),
        })
    };

    let mut samples = vec![sample_at(0.0, &state)?];
    if tau > 0.0 {
        let dt = tau / steps as f64;
        // the endpoint Hamiltonian of one step is the start of the next
        let mut h0 = hamiltonian_at(n, spec, 0.0)?;
        for i in 0..steps {
            let t = i as f64 * dt;
            let h_mid = hamiltonian_at(n, spec, t + 0.5 * dt)?;
            let h1 = hamiltonian_at(n, spec, (t + dt).min(tau))?;
            state = rk4_update(&h0, &h_mid, &h1, mode, dt, &state);
            h0 = h1;
            if (i + 1) % stride == 0 || i + 1 == steps {
                samples.push(sample_at(((i + 1) as f64 * dt).min(tau), &state)?);
            }
        }
    }
    Ok(Trajectory { samples, final_state: state })
}

/// As [`evolve_sampled`] but records every step.
pub fn evolve(n: ProblemSize, spec: &ScheduleSpec, mode: Mode, steps: u64) -> Result<Trajectory> {
    evolve_sampled(n, spec, mode, steps, 1)
}

/// Default step count for a given annealing time: 50 steps per unit time,
/// at least 10^4.
pub fn default_steps(tau: f64) -> u64 {
    10_000u64.max((50.0 * tau).ceil() as u64)
}

/// Final success probability with the step count certified by doubling:
/// steps are doubled until the final probability moves by less than
/// `p_tol`. Returns (probability, steps used).
pub fn final_probability_certified(
    n: ProblemSize,
    spec: &ScheduleSpec,
    mode: Mode,
    p_tol: f64,
) -> Result<(f64, u64)> {
    let mut steps = default_steps(spec.tau());
    let mut p = final_probability(n, spec, mode, steps)?;
    for _ in 0..20 {
        let p_fine = final_probability(n, spec, mode, steps * 2)?;
        if (p_fine - p).abs() < p_tol {
            return Ok((p_fine, steps * 2));
        }
        steps *= 2;
        p = p_fine;
    }
    Ok((p, steps))
}

/// Final success probability at a fixed step count (no sampling overhead).
pub fn final_probability(
    n: ProblemSize,
    spec: &ScheduleSpec,
    mode: Mode,
    steps: u64,
) -> Result<f64> {
    let traj = evolve_sampled(n, spec, mode, steps, steps.max(1))?;
    Ok(success_probability(&traj.final_state))
}

/// Propagate the full N-dimensional state with the same RK4 scheme via the
/// matrix-free Hamiltonian, starting from the uniform superposition.
/// Returns the final success probability. Validates the 2D reduction.
pub fn evolve_full(
    n: ProblemSize,
    spec: &ScheduleSpec,
    mode: Mode,
    steps: u64,
    cap: u64,
) -> Result<f64> {
    if n.get() > cap {
        return Err(Error::StateCapExceeded { n: n.get(), cap });
    }
    if steps < 1 {
        return Err(Error::domain("step count must be >= 1".to_string()));
    }
    let size = n.get() as usize;
    let inv_sqrt_n = 1.0 / n.as_f64().sqrt();
    let mut v = vec![Complex64::new(inv_sqrt_n, 0.0); size];
    let tau = spec.tau();
    if tau == 0.0 {
        return Ok(v[0].norm_sqr() / v.iter().map(|x| x.norm_sqr()).sum::<f64>());
    }

    let factor = |mode: Mode| -> Complex64 {
        match mode {
            Mode::RealTime => Complex64::new(0.0, -1.0),
            Mode::ImaginaryTime => Complex64::new(-1.0, 0.0),
        }
    };
    let f = factor(mode);
    let dt = tau / steps as f64;

    let deriv = |t: f64, y: &[Complex64]| -> Result<Vec<Complex64>> {
        let s = spec.evaluate(t)?;
        let hy = grover::full_hamiltonian_apply(n, s, y)?;
        Ok(hy.into_iter().map(|x| x * f).collect())
    };

    let axpy = |y: &[Complex64], k: &[Complex64], c: f64| -> Vec<Complex64> {
        y.iter().zip(k).map(|(&a, &b)| a + b * c).collect()
    };

    for i in 0..steps {
        let t = i as f64 * dt;
        let k1 = deriv(t, &v)?;
        let k2 = deriv(t + 0.5 * dt, &axpy(&v, &k1, 0.5 * dt))?;
        let k3 = deriv(t + 0.5 * dt, &axpy(&v, &k2, 0.5 * dt))?;
        let k4 = deriv(t + dt, &axpy(&v, &k3, dt))?;
        for j in 0..size {
            v[j] += (k1[j] + (k2[j] + k3[j]) * 2.0 + k4[j]) * (dt / 6.0);
        }
        if mode == Mode::ImaginaryTime {
            let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
    }
    Ok(v[0].norm_sqr() / v.iter().map(|x| x.norm_sqr()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn n(v: u64) -> ProblemSize {
        ProblemSize::new(v).unwrap()
    }

    #[test]
    fn initial_state_components() {
        let st = initial_state(n(4));
        assert_abs_diff_eq!(st.a_opt.re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(st.a_rest.re, 0.75f64.sqrt(), epsilon = 1e-15);
        let st2 = initial_state(n(2));
        assert_abs_diff_eq!(st2.a_opt.re, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(st2.a_rest.re, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-12);
    }

    #[test]
    fn success_probability_values() {
        let one = EffectiveState::from_amplitudes(1.0.into(), 0.0.into());
        assert_eq!(success_probability(&one), 1.0);
        let half = EffectiveState::from_amplitudes(
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        );
        assert_abs_diff_eq!(success_probability(&half), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(
            success_probability(&initial_state(n(1024))),
            1.0 / 1024.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn real_time_step_preserves_norm() {
        let spec = ScheduleSpec::linear(10.0).unwrap();
        let mut st = initial_state(n(64));
        for i in 0..100 {
            st = rk4_step(n(64), &spec, Mode::RealTime, i as f64 * 0.01, 0.01, &st).unwrap();
        }
        assert_abs_diff_eq!(st.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn imaginary_time_step_on_eigenvectors() {
        // H(s=1) = diag(0, 1): the marked state is stationary with zero
        // eigenvalue, the rest decays at rate 1. A linear schedule stepped
        // over the last dt of the ramp keeps s within dt of 1, so the
        // closed-form propagator exp(-H dt) is the oracle up to O(dt^2).
        let marked = EffectiveState::from_amplitudes(1.0.into(), 0.0.into());
        let nn = n(1_000_000_000); // 1/N negligible
        let spec1 = ScheduleSpec::linear(1.0).unwrap();
        let dt = 1e-3;
        let out = rk4_step(nn, &spec1, Mode::ImaginaryTime, 1.0 - dt, dt, &marked).unwrap();
        assert_abs_diff_eq!(success_probability(&out), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(out.log_norm, 0.0, epsilon = 1e-6);

        let rest = EffectiveState::from_amplitudes(0.0.into(), 1.0.into());
        let out = rk4_step(nn, &spec1, Mode::ImaginaryTime, 1.0 - dt, dt, &rest).unwrap();
        // eigenvalue ~1 at s~1: log-norm drops by ~dt
        assert_abs_diff_eq!(out.log_norm, -dt, epsilon = 1e-5);
        assert_abs_diff_eq!(out.norm_sqr(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn zero_time_returns_initial_state() {
        let spec = ScheduleSpec::linear(0.0).unwrap();
        let traj = evolve(n(16), &spec, Mode::ImaginaryTime, 1).unwrap();
        assert_eq!(traj.samples.len(), 1);
        assert_abs_diff_eq!(traj.samples[0].p_opt, 1.0 / 16.0, epsilon = 1e-12);
    }

    #[test]
    fn long_imaginary_anneal_succeeds() {
        let spec = ScheduleSpec::linear(40.0).unwrap();
        let traj = evolve_sampled(n(16), &spec, Mode::ImaginaryTime, 4000, 100).unwrap();
        let p = success_probability(&traj.final_state);
        assert!(p >= 0.99, "final probability {p}");
        // reference run at 4x finer dt agrees
        let p_ref = final_probability(n(16), &spec, Mode::ImaginaryTime, 16_000).unwrap();
        assert_abs_diff_eq!(p, p_ref, epsilon = 1e-8);
    }

    #[test]
    fn real_time_norm_conservation() {
        let spec = ScheduleSpec::linear(40.0).unwrap();
        let traj = evolve_sampled(n(16), &spec, Mode::RealTime, default_steps(40.0), 1_000_000).unwrap();
        let norm = traj.final_state.norm_sqr().sqrt();
        assert!((norm - 1.0).abs() <= 1e-9, "norm drift {}", (norm - 1.0).abs());
    }

    #[test]
    fn imaginary_time_probability_is_monotone() {
        let spec = ScheduleSpec::linear(20.0).unwrap();
        let traj = evolve(n(256), &spec, Mode::ImaginaryTime, 2000).unwrap();
        for w in traj.samples.windows(2) {
            assert!(w[1].p_opt - w[0].p_opt >= -1e-10);
        }
        assert!(success_probability(&traj.final_state) >= 1.0 / 256.0);
        // log-norm never increases past zero in imaginary time
        for s in &traj.samples {
            assert!(s.log_norm <= 1e-12);
        }
    }

    #[test]
    fn trajectory_starts_at_uniform_probability() {
        let spec = ScheduleSpec::linear(5.0).unwrap();
        let traj = evolve_sampled(n(64), &spec, Mode::RealTime, 500, 50).unwrap();
        assert_abs_diff_eq!(traj.samples[0].p_opt, 1.0 / 64.0, epsilon = 1e-12);
        assert_eq!(traj.samples.last().unwrap().t, 5.0);
        for w in traj.samples.windows(2) {
            assert!(w[1].t > w[0].t);
        }
    }

    #[test]
    fn full_space_matches_reduced() {
        let spec = ScheduleSpec::linear(10.0).unwrap();
        let steps = 2000;
        let p2 = final_probability(n(8), &spec, Mode::ImaginaryTime, steps).unwrap();
        let pf = evolve_full(n(8), &spec, Mode::ImaginaryTime, steps, FULL_STATE_CAP).unwrap();
        assert_abs_diff_eq!(p2, pf, epsilon = 1e-8);

        let spec = ScheduleSpec::linear(20.0).unwrap();
        let p2 = final_probability(n(64), &spec, Mode::RealTime, 2000).unwrap();
        let pf = evolve_full(n(64), &spec, Mode::RealTime, 2000, FULL_STATE_CAP).unwrap();
        assert_abs_diff_eq!(p2, pf, epsilon = 1e-8);

        let spec0 = ScheduleSpec::linear(0.0).unwrap();
        let p2 = final_probability(n(8), &spec0, Mode::ImaginaryTime, 1).unwrap();
        let pf = evolve_full(n(8), &spec0, Mode::ImaginaryTime, 1, FULL_STATE_CAP).unwrap();
        assert_abs_diff_eq!(p2, 1.0 / 8.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pf, 1.0 / 8.0, epsilon = 1e-12);
    }

    #[test]
    fn full_space_cap_is_enforced() {
        let spec = ScheduleSpec::linear(1.0).unwrap();
        assert!(matches!(
            evolve_full(n(8192), &spec, Mode::RealTime, 10, FULL_STATE_CAP),
            Err(Error::StateCapExceeded { .. })
        ));
    }

    #[test]
    fn step_halving_converges_at_fourth_order() {
        let nn = n(64);
        let spec = ScheduleSpec::linear(10.0).unwrap();
        let p_ref = final_probability(nn, &spec, Mode::ImaginaryTime, 102_400).unwrap();
        let e1 = (final_probability(nn, &spec, Mode::ImaginaryTime, 200).unwrap() - p_ref).abs();
        let e2 = (final_probability(nn, &spec, Mode::ImaginaryTime, 400).unwrap() - p_ref).abs();
        let ratio = e1 / e2;
        assert!((12.0..=20.0).contains(&ratio), "halving error ratio {ratio}");
    }
}
