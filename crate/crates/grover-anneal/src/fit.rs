//! Least-squares line fits used by the experiment harness.

use crate::error::{Error, Result};

/// Ordinary least squares line y = slope * x + intercept.
#[derive(Debug, Clone, Copy)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
}

pub fn linear_least_squares(points: &[(f64, f64)]) -> Result<LineFit> {
    let m = points.len();
    if m < 3 {
        return Err(Error::InsufficientPoints { needed: 3, got: m });
    }
    let mf = m as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / mf;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / mf;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::domain("all abscissae identical; cannot fit a line".to_string()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - slope * p.0 - intercept).powi(2))
        .sum();
    Ok(LineFit { slope, intercept, rms_residual: (ss_res / mf).sqrt() })
}
