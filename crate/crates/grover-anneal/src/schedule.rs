//! Annealing schedules s(t) on [0, tau]: the linear ramp and the
//! gap-adapted ramp that slows down near the minimum gap.

use crate::error::{Error, Result};
use crate::grover::{gap, ProblemSize};
use crate::quad;

/// Default number of knots for tabulated schedules (Chebyshev-spaced in s).
pub const DEFAULT_KNOTS: usize = 8193;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleKind {
    Linear,
    LocalAdiabatic,
}

/// Monotone cubic (Fritsch-Carlson) interpolant through strictly
/// increasing knots. Preserves monotonicity of the data.
#[derive(Debug, Clone)]
struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    slope: Vec<f64>,
}

impl MonotoneCubic {
    fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        let n = x.len();
        assert!(n >= 2);
        let h: Vec<f64> = (0..n - 1).map(|i| x[i + 1] - x[i]).collect();
        let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();

        let mut slope = vec![0.0; n];
        for i in 1..n - 1 {
            if delta[i - 1] * delta[i] > 0.0 {
                let w1 = 2.0 * h[i] + h[i - 1];
                let w2 = h[i] + 2.0 * h[i - 1];
                slope[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        slope[0] = Self::endpoint_slope(h[0], h.get(1).copied().unwrap_or(h[0]), delta[0], delta.get(1).copied().unwrap_or(delta[0]));
        slope[n - 1] = Self::endpoint_slope(
            h[n - 2],
            if n >= 3 { h[n - 3] } else { h[n - 2] },
            delta[n - 2],
            if n >= 3 { delta[n - 3] } else { delta[n - 2] },
        );
        MonotoneCubic { x, y, slope }
    }

    fn endpoint_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
        let mut d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if d * d0 <= 0.0 {
            d = 0.0;
        } else if d0 * d1 < 0.0 && d.abs() > 3.0 * d0.abs() {
            d = 3.0 * d0;
        }
        d
    }

    fn eval(&self, xv: f64) -> f64 {
        let n = self.x.len();
        if xv <= self.x[0] {
            return self.y[0];
        }
        if xv >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let i = match self.x.partition_point(|&x| x <= xv) {
            0 => 0,
            k => k - 1,
        };
        let h = self.x[i + 1] - self.x[i];
        let t = (xv - self.x[i]) / h;
        let h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
        let h10 = t * (1.0 - t) * (1.0 - t);
        let h01 = t * t * (3.0 - 2.0 * t);
        let h11 = t * t * (t - 1.0);
        self.y[i] * h00 + h * self.slope[i] * h10 + self.y[i + 1] * h01 + h * self.slope[i + 1] * h11
    }
}

#[derive(Debug, Clone)]
enum Repr {
    Linear,
    Table {
        /// (t, s) knots, strictly increasing in both coordinates.
        knots: Vec<(f64, f64)>,
        t_to_s: MonotoneCubic,
        s_to_t: MonotoneCubic,
    },
}

/// A monotone map t -> s(t) on [0, tau] with s(0) = 0 and s(tau) = 1.
#[derive(Debug, Clone)]
pub struct ScheduleSpec {
    kind: ScheduleKind,
    tau: f64,
    repr: Repr,
}

impl ScheduleSpec {
    /// The linear ramp s(t) = t/tau.
    pub fn linear(tau: f64) -> Result<Self> {
        if tau < 0.0 || !tau.is_finite() {
            return Err(Error::domain(format!("annealing time must be >= 0, got {tau}")));
        }
        Ok(ScheduleSpec { kind: ScheduleKind::Linear, tau, repr: Repr::Linear })
    }

    pub fn kind(&self) -> ScheduleKind {
        self.kind
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Tabulated (t, s) knots, if this is a tabulated schedule.
    pub fn knots(&self) -> Option<&[(f64, f64)]> {
        match &self.repr {
            Repr::Linear => None,
            Repr::Table { knots, .. } => Some(knots),
        }
    }

    /// s at time t. Errors outside [0, tau] (a tiny slack absorbs
    /// integrator rounding at the final step).
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        let slack = 1e-9 * self.tau.max(1.0);
        if t < -slack || t > self.tau + slack {
            return Err(Error::domain(format!(
                "time {t} outside the schedule interval [0, {}]",
                self.tau
            )));
        }
        let t = t.clamp(0.0, self.tau);
        let s = match &self.repr {
            Repr::Linear => {
                if self.tau == 0.0 {
                    0.0
                } else {
                    t / self.tau
                }
            }
            Repr::Table { t_to_s, .. } => t_to_s.eval(t),
        };
        Ok(s.clamp(0.0, 1.0))
    }

    /// The same schedule shape stretched to a new total time. The
    /// gap-adapted rate law fixes its constant by the boundary condition
    /// s(tau) = 1, so t(s) scales linearly with tau and the tabulated
    /// profile can be reused across annealing times.
    pub fn rescaled(&self, tau: f64) -> Result<ScheduleSpec> {
        match &self.repr {
            Repr::Linear => ScheduleSpec::linear(tau),
            Repr::Table { knots, .. } => {
                if tau <= 0.0 || !tau.is_finite() {
                    return Err(Error::domain(format!(
                        "annealing time must be positive, got {tau}"
                    )));
                }
                let scale = tau / self.tau;
                let t_knots: Vec<f64> = knots.iter().map(|&(t, _)| t * scale).collect();
                let s_knots: Vec<f64> = knots.iter().map(|&(_, s)| s).collect();
                let knots = t_knots.iter().copied().zip(s_knots.iter().copied()).collect();
                let t_to_s = MonotoneCubic::new(t_knots.clone(), s_knots.clone());
                let s_to_t = MonotoneCubic::new(s_knots, t_knots);
                Ok(ScheduleSpec {
                    kind: self.kind,
                    tau,
                    repr: Repr::Table { knots, t_to_s, s_to_t },
                })
            }
        }
    }

    /// Inverse map: the time at which the schedule reaches `s`.
    pub fn time_at(&self, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::domain(format!("annealing parameter {s} outside [0, 1]")));
        }
        let t = match &self.repr {
            Repr::Linear => s * self.tau,
            Repr::Table { s_to_t, .. } => s_to_t.eval(s),
        };
        Ok(t.clamp(0.0, self.tau))
    }
}

/// Build the gap-adapted schedule for `n` items over total time `tau`.
///
/// The rate law is ds/dt = c gap(s)^2 / M(s) with coupling
/// M(s) = (sqrt(N-1)/N) / gap(s), i.e. ds/dt = c gap(s)^3 N / sqrt(N-1).
/// The constant c is fixed by s(tau) = 1, so
/// t(s) = tau * T(s) / T(1) with T(s) = integral of gap^-3 from 0 to s,
/// evaluated by adaptive quadrature to relative tolerance `tol`.
pub fn build_local_adiabatic(n: ProblemSize, tau: f64, tol: f64) -> Result<ScheduleSpec> {
    build_local_adiabatic_with_knots(n, tau, tol, DEFAULT_KNOTS)
}

/// As [`build_local_adiabatic`] with an explicit knot count (>= 1024
/// recommended; must be odd so a knot lands exactly on s = 1/2).
pub fn build_local_adiabatic_with_knots(
    n: ProblemSize,
    tau: f64,
    tol: f64,
    num_knots: usize,
) -> Result<ScheduleSpec> {
    if tau <= 0.0 || !tau.is_finite() {
        return Err(Error::domain(format!("annealing time must be positive, got {tau}")));
    }
    if tol <= 0.0 {
        return Err(Error::domain(format!("quadrature tolerance must be positive, got {tol}")));
    }
    if num_knots < 3 {
        return Err(Error::domain("need at least 3 knots".to_string()));
    }

    // Chebyshev-Lobatto points on [0, 1]; symmetric about 1/2.
    let m = num_knots;
    let s_knots: Vec<f64> = (0..m)
        .map(|j| 0.5 * (1.0 - (std::f64::consts::PI * j as f64 / (m - 1) as f64).cos()))
        .collect();

    let rate_inverse = |s: f64| gap(n, s).powi(-3);
    let mut cumulative = Vec::with_capacity(m);
    cumulative.push(0.0f64);
    let mut acc = 0.0;
    for w in s_knots.windows(2) {
        acc += quad::integrate(rate_inverse, w[0], w[1], tol)?;
        cumulative.push(acc);
    }
    let total = acc;

    let mut t_knots: Vec<f64> = cumulative.iter().map(|&c| tau * c / total).collect();
    *t_knots.last_mut().expect("non-empty") = tau;

    let knots: Vec<(f64, f64)> = t_knots.iter().copied().zip(s_knots.iter().copied()).collect();
    let t_to_s = MonotoneCubic::new(t_knots.clone(), s_knots.clone());
    let s_to_t = MonotoneCubic::new(s_knots, t_knots);
    Ok(ScheduleSpec {
        kind: ScheduleKind::LocalAdiabatic,
        tau,
        repr: Repr::Table { knots, t_to_s, s_to_t },
    })
}
