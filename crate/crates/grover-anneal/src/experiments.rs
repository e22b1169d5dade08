//! Experiment harness: annealing-time scans to a target success
//! probability, scaling-law fits, asymptotic-decay fits, and the
//! linear-vs-gap-adapted schedule comparison.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fit::linear_least_squares;
use crate::grover::ProblemSize;
use crate::integrator::{final_probability, final_probability_certified, Mode};
use crate::schedule::{build_local_adiabatic, ScheduleKind, ScheduleSpec};

/// Tunables for [`scan_tau`]. The defaults match the rest of the crate.
#[derive(Debug, Clone)]
pub struct ScanSettings {
    /// Relative width at which bisection stops.
    pub rel_tol: f64,
    /// Abort the geometric bracket search above this annealing time.
    pub tau_cap: f64,
    /// Certification tolerance on the final probability per evolve.
    pub p_tol: f64,
    /// Quadrature tolerance for building gap-adapted schedules.
    pub schedule_tol: f64,
}

impl Default for ScanSettings {
    fn default() -> Self {
        // p_tol only has to resolve threshold crossings at the scan's own
        // rel_tol; 1e-5 is far below any oscillation near the target
        ScanSettings { rel_tol: 1e-3, tau_cap: 1e7, p_tol: 1e-5, schedule_tol: 1e-9 }
    }
}

/// Least-squares line through (ln N, tau*) points.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
    /// (ln N, tau*) pairs, sorted by N.
    pub points: Vec<(f64, f64)>,
}

/// Power law y = prefactor * x^exponent fitted in log-log space.
#[derive(Debug, Clone, Serialize)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub prefactor: f64,
    pub rms_residual: f64,
    /// (x, y) pairs used for the fit.
    pub points: Vec<(f64, f64)>,
}

/// One row of the schedule-comparison table.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRow {
    pub n: u64,
    pub tau_it_linear: f64,
    pub tau_it_adiabatic: f64,
    pub tau_rt_adiabatic: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
    pub fit_it_linear: ScalingFit,
    pub fit_it_adiabatic: PowerLawFit,
    pub fit_rt_adiabatic: PowerLawFit,
}

fn build_schedule(
    n: ProblemSize,
    tau: f64,
    kind: ScheduleKind,
    schedule_tol: f64,
) -> Result<ScheduleSpec> {
    match kind {
        ScheduleKind::Linear => ScheduleSpec::linear(tau),
        ScheduleKind::LocalAdiabatic => build_local_adiabatic(n, tau, schedule_tol),
    }
}

/// Certified final success probability for one (N, tau, mode, schedule).
pub fn final_probability_at(
    n: ProblemSize,
    tau: f64,
    mode: Mode,
    kind: ScheduleKind,
    settings: &ScanSettings,
) -> Result<f64> {
    let spec = build_schedule(n, tau, kind, settings.schedule_tol)?;
    Ok(final_probability_certified(n, &spec, mode, settings.p_tol)?.0)
}

fn check_target(p_target: f64) -> Result<()> {
    if !(p_target > 0.0 && p_target < 1.0) {
        return Err(Error::domain(format!(
            "target probability must lie in (0, 1), got {p_target}"
        )));
    }
    Ok(())
}

/// Smallest annealing time reaching `p_target`, by geometric bracketing
/// (doubling from tau = 1) followed by bisection to relative width
/// `rel_tol`. Falls back to a dense geometric grid if the bracket samples
/// are not monotone in tau.
pub fn scan_tau(
    n: ProblemSize,
    p_target: f64,
    mode: Mode,
    kind: ScheduleKind,
    rel_tol: f64,
) -> Result<f64> {
    let settings = ScanSettings { rel_tol, ..ScanSettings::default() };
    scan_tau_with(n, p_target, mode, kind, &settings)
}

pub fn scan_tau_with(
    n: ProblemSize,
    p_target: f64,
    mode: Mode,
    kind: ScheduleKind,
    settings: &ScanSettings,
) -> Result<f64> {
    check_target(p_target)?;
    if settings.rel_tol <= 0.0 {
        return Err(Error::domain("scan tolerance must be positive".to_string()));
    }
    if 1.0 / n.as_f64() >= p_target {
        return Ok(0.0);
    }

    // the schedule shape is tau-independent, so build it once and rescale
    let base = build_schedule(n, 1.0, kind, settings.schedule_tol)?;
    let probe = |tau: f64| -> Result<f64> {
        let spec = base.rescaled(tau)?;
        Ok(final_probability_certified(n, &spec, mode, settings.p_tol)?.0)
    };

    // geometric bracket: tau = 1, 2, 4, ...
    let mut samples: Vec<(f64, f64)> = vec![(0.0, 1.0 / n.as_f64())];
    let mut hi = 1.0;
    loop {
        if hi > settings.tau_cap {
            return Err(Error::BracketNotFound { cap: settings.tau_cap });
        }
        let p = probe(hi)?;
        samples.push((hi, p));
        if p >= p_target {
            break;
        }
        hi *= 2.0;
    }

    let monotone = samples.windows(2).all(|w| w[1].1 >= w[0].1 - 1e-9);
    if !monotone {
        return grid_scan(n, p_target, mode, &base, settings);
    }

    let mut lo = if samples.len() >= 2 { samples[samples.len() - 2].0 } else { 0.0 };
    while hi - lo > settings.rel_tol * hi {
        let mid = 0.5 * (lo + hi);
        if probe(mid)? >= p_target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Dense geometric grid fallback for non-monotone brackets: successively
/// finer geometric passes localize the first crossing down to rel_tol.
fn grid_scan(
    n: ProblemSize,
    p_target: f64,
    mode: Mode,
    base: &ScheduleSpec,
    settings: &ScanSettings,
) -> Result<f64> {
    let probe = |tau: f64| -> Result<f64> {
        let spec = base.rescaled(tau)?;
        Ok(final_probability_certified(n, &spec, mode, settings.p_tol)?.0)
    };

    let mut lo = 0.5;
    let mut hi = f64::INFINITY;
    for ratio in [2f64.powf(1.0 / 8.0), 2f64.powf(1.0 / 64.0), 1.0 + settings.rel_tol] {
        let mut tau = lo;
        loop {
            if tau > settings.tau_cap {
                return Err(Error::BracketNotFound { cap: settings.tau_cap });
            }
            if probe(tau)? >= p_target {
                hi = tau;
                break;
            }
            lo = tau;
            tau *= ratio;
            if tau >= hi {
                // crossing sits inside (lo, hi) from the previous pass
                break;
            }
        }
    }
    Ok(hi)
}

/// Scan every size and fit a line through (ln N, tau*).
pub fn scaling_study(
    n_list: &[u64],
    p_target: f64,
    mode: Mode,
    kind: ScheduleKind,
) -> Result<ScalingFit> {
    check_target(p_target)?;
    if n_list.len() < 3 {
        return Err(Error::InsufficientPoints { needed: 3, got: n_list.len() });
    }
    let mut sizes = n_list.to_vec();
    sizes.sort_unstable();
    let points: Vec<(f64, f64)> = sizes
        .par_iter()
        .map(|&nv| {
            let n = ProblemSize::new(nv)?;
            let tau = scan_tau(n, p_target, mode, kind, ScanSettings::default().rel_tol)?;
            Ok(((nv as f64).ln(), tau))
        })
        .collect::<Result<Vec<_>>>()?;
    scaling_fit_from_points(points)
}

/// Fit a line through already-measured (ln N, tau*) points.
pub fn scaling_fit_from_points(points: Vec<(f64, f64)>) -> Result<ScalingFit> {
    let fit = linear_least_squares(&points)?;
    Ok(ScalingFit {
        slope: fit.slope,
        intercept: fit.intercept,
        rms_residual: fit.rms_residual,
        points,
    })
}

/// Fit y = a x^p through positive points in log-log space.
pub fn power_law_fit(points: Vec<(f64, f64)>) -> Result<PowerLawFit> {
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return Err(Error::domain("power-law fit requires positive coordinates".to_string()));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let fit = linear_least_squares(&logs)?;
    Ok(PowerLawFit {
        exponent: fit.slope,
        prefactor: fit.intercept.exp(),
        rms_residual: fit.rms_residual,
        points,
    })
}

/// Decay exponent of 1 - P_opt(tau) over a list of annealing times in the
/// adiabatic regime (final P > 0.9). Runs near the precision floor are
/// excluded.
pub fn asymptotic_slope(
    n: ProblemSize,
    tau_list: &[f64],
    mode: Mode,
    kind: ScheduleKind,
) -> Result<PowerLawFit> {
    let settings = ScanSettings::default();
    let deficits: Vec<(f64, f64)> = tau_list
        .par_iter()
        .map(|&tau| {
            let spec = build_schedule(n, tau, kind, settings.schedule_tol)?;
            // first certify at a strict baseline, then tighten further so
            // the small deficit 1 - P is itself resolved to three digits
            let base_tol = 1e-9;
            let (p, steps) = final_probability_certified(n, &spec, mode, base_tol)?;
            let deficit_tol = ((1.0 - p) * 1e-3).clamp(1e-13, base_tol);
            let p = if deficit_tol < base_tol {
                refine_probability(n, &spec, mode, p, steps, deficit_tol)?
            } else {
                p
            };
            if p <= 0.9 {
                return Err(Error::domain(format!(
                    "tau = {tau} is outside the adiabatic regime (P = {p})"
                )));
            }
            Ok((tau, 1.0 - p))
        })
        .collect::<Result<Vec<_>>>()?;

    let usable: Vec<(f64, f64)> = deficits.into_iter().filter(|&(_, d)| d > 1e-12).collect();
    if usable.len() < 3 {
        return Err(Error::InsufficientPoints { needed: 3, got: usable.len() });
    }
    power_law_fit(usable)
}

fn refine_probability(
    n: ProblemSize,
    spec: &ScheduleSpec,
    mode: Mode,
    mut p: f64,
    mut steps: u64,
    tol: f64,
) -> Result<f64> {
    for _ in 0..12 {
        let p_fine = final_probability(n, spec, mode, steps * 2)?;
        if (p_fine - p).abs() < tol {
            return Ok(p_fine);
        }
        steps *= 2;
        p = p_fine;
    }
    Ok(p)
}

/// Scan tau* for the three (mode, schedule) columns over `n_list` and fit
/// each column: linear-in-ln N for the imaginary-time linear ramp,
/// power laws for the gap-adapted columns.
pub fn schedule_comparison(n_list: &[u64], p_target: f64) -> Result<ComparisonTable> {
    check_target(p_target)?;
    if n_list.len() < 3 {
        return Err(Error::InsufficientPoints { needed: 3, got: n_list.len() });
    }
    let mut sizes = n_list.to_vec();
    sizes.sort_unstable();
    let rel_tol = ScanSettings::default().rel_tol;

    let rows: Vec<ComparisonRow> = sizes
        .par_iter()
        .map(|&nv| {
            let n = ProblemSize::new(nv)?;
            Ok(ComparisonRow {
                n: nv,
                tau_it_linear: scan_tau(n, p_target, Mode::ImaginaryTime, ScheduleKind::Linear, rel_tol)?,
                tau_it_adiabatic: scan_tau(n, p_target, Mode::ImaginaryTime, ScheduleKind::LocalAdiabatic, rel_tol)?,
                tau_rt_adiabatic: scan_tau(n, p_target, Mode::RealTime, ScheduleKind::LocalAdiabatic, rel_tol)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let fit_it_linear = scaling_fit_from_points(
        rows.iter().map(|r| ((r.n as f64).ln(), r.tau_it_linear)).collect(),
    )?;
    let fit_it_adiabatic =
        power_law_fit(rows.iter().map(|r| (r.n as f64, r.tau_it_adiabatic)).collect())?;
    let fit_rt_adiabatic =
        power_law_fit(rows.iter().map(|r| (r.n as f64, r.tau_rt_adiabatic)).collect())?;

    Ok(ComparisonTable { rows, fit_it_linear, fit_it_adiabatic, fit_rt_adiabatic })
}
