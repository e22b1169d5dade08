//! Closed-form analytic bounds on the excited-state coefficient and the
//! annealing time, plus quadrature cross-checks of the integrals behind
//! them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grover::{gap, spectral_data, ProblemSize};
use crate::quad;

/// Scalar bound evaluations for one (N, tau, delta).
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub d1_upper: f64,
    pub d1_asymptotic: f64,
    pub ratio_bound: f64,
    pub tau_required: f64,
}

fn check_s(s: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::domain(format!("annealing parameter {s} outside [0, 1]")));
    }
    Ok(())
}

/// Accumulated phase phi_k(s): integral of eps_k from 0 to s, by adaptive
/// quadrature to relative tolerance `tol`.
pub fn phi_exact(n: ProblemSize, s: f64, level: u8, tol: f64) -> Result<f64> {
    check_s(s)?;
    if level > 1 {
        return Err(Error::domain(format!("eigenlevel must be 0 or 1, got {level}")));
    }
    quad::integrate_split(
        |x| {
            let sd = spectral_data(n, x).expect("x in [0, 1]");
            if level == 0 {
                sd.eps0
            } else {
                sd.eps1
            }
        },
        0.0,
        s,
        &[0.5],
        tol,
    )
}

/// Accumulated gap Delta phi_10(s): integral of the gap from 0 to s.
pub fn delta_phi_exact(n: ProblemSize, s: f64, tol: f64) -> Result<f64> {
    check_s(s)?;
    quad::integrate_split(|x| gap(n, x), 0.0, s, &[0.5], tol)
}

/// Large-N closed-form approximation of the accumulated gap:
/// (1/2)(s - 1/2) gap(s) + 1/4.
pub fn delta_phi_approx(n: ProblemSize, s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(0.5 * (s - 0.5) * gap(n, s) + 0.25)
}

/// Quadrature of I1(s_b, s_a): integral of gap^-5 (s - 1/2)
/// exp(tau (s - 1/2)|s - 1/2|) over [s_a, s_b], using the simplified
/// large-N exponent.
pub fn i1_quadrature(n: ProblemSize, tau: f64, s_a: f64, s_b: f64, tol: f64) -> Result<f64> {
    check_s(s_a)?;
    check_s(s_b)?;
    if s_a > s_b {
        return Err(Error::domain(format!("integration bounds out of order: [{s_a}, {s_b}]")));
    }
    quad::integrate_split(
        |s| {
            let u = s - 0.5;
            gap(n, s).powi(-5) * u * (tau * u * u.abs()).exp()
        },
        s_a,
        s_b,
        &[0.5],
        tol,
    )
}

/// Closed-form upper bound on I1(1/2, 0) from the three-fold integration
/// by parts of J1.
pub fn i1_lower_half_upper_bound(n: ProblemSize, tau: f64) -> f64 {
    let nf = n.as_f64();
    let r = (nf.sqrt() - 1.0) / (nf.sqrt() + 1.0);
    -nf.powf(2.5) / (12.0 * (nf - 1.0)) * (1.0 - 0.5 * r * tau / (nf - 1.0))
        + nf / (12.0 * (nf - 1.0)) * (-tau / 4.0).exp() * (1.0 + 0.5 * r * nf * tau / (nf - 1.0))
}

/// Closed-form upper bound on I1(1, 1/2), obtained the same way.
pub fn i1_upper_half_upper_bound(n: ProblemSize, tau: f64) -> f64 {
    let nf = n.as_f64();
    let r = (nf.sqrt() - 1.0) / (nf.sqrt() + 1.0);
    -nf / (12.0 * (nf - 1.0)) * (tau / 4.0).exp() * (1.0 - 0.5 * r * nf * tau / (nf - 1.0))
        + nf.powf(2.5) / (12.0 * (nf - 1.0)) * (1.0 + 0.5 * r * tau / (nf - 1.0))
}

/// Short-time upper bound on the end-of-anneal excited-state coefficient
/// factor: 1/(2 sqrt(N)) + exp(-tau/4).
pub fn d1_upper_bound(n: ProblemSize, tau: f64) -> Result<f64> {
    if tau < 0.0 {
        return Err(Error::domain(format!("annealing time must be >= 0, got {tau}")));
    }
    Ok(0.5 / n.as_f64().sqrt() + (-tau / 4.0).exp())
}

/// Adiabatic-limit form of the same factor:
/// (1/tau)(sqrt(N-1)/N)(1 - exp(-tau/2)). Its square predicts the
/// 1 - P_opt ~ 1/tau^2 law.
pub fn d1_asymptotic(n: ProblemSize, tau: f64) -> Result<f64> {
    if tau <= 0.0 {
        return Err(Error::domain(format!("annealing time must be positive, got {tau}")));
    }
    let nf = n.as_f64();
    Ok((nf - 1.0).sqrt() / nf / tau * (1.0 - (-tau / 2.0).exp()))
}

/// Upper bound on the end-state excited-to-ground coefficient ratio:
/// 1/2 + sqrt(N) exp(-tau/4).
pub fn ratio_bound(n: ProblemSize, tau: f64) -> Result<f64> {
    if tau < 0.0 {
        return Err(Error::domain(format!("annealing time must be >= 0, got {tau}")));
    }
    Ok(0.5 + n.as_f64().sqrt() * (-tau / 4.0).exp())
}

/// Annealing time after which sqrt(N) exp(-tau/4) falls to the amplitude
/// ratio `delta`: tau = 2 ln(N / delta^2).
pub fn required_tau(n: ProblemSize, delta: f64) -> Result<f64> {
    if delta <= 0.0 {
        return Err(Error::domain(format!("amplitude ratio must be positive, got {delta}")));
    }
    Ok(2.0 * (n.as_f64() / (delta * delta)).ln())
}

/// Amplitude-ratio target equivalent to a success-probability target:
/// P = 1/(1 + delta^2) inverted.
pub fn amplitude_ratio_for_target(p: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&p) || p <= 0.0 {
        return Err(Error::domain(format!("target probability must lie in (0, 1), got {p}")));
    }
    Ok(((1.0 - p) / p).sqrt())
}

/// Evaluate all scalar bounds at one (N, tau, delta).
pub fn bound_report(n: ProblemSize, tau: f64, delta: f64) -> Result<BoundReport> {
    Ok(BoundReport {
        d1_upper: d1_upper_bound(n, tau)?,
        d1_asymptotic: d1_asymptotic(n, tau)?,
        ratio_bound: ratio_bound(n, tau)?,
        tau_required: required_tau(n, delta)?,
    })
}
