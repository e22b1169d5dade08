//! Closed-form Grover annealing Hamiltonian, its reduction to the
//! {|0>, |Psi>} subspace, and instantaneous spectral data.
//!
//! The interpolating Hamiltonian is H(s) = s H0 + (1 - s) Hq with
//! H0 = I - |0><0| and Hq = I - |Psi0><Psi0|, |Psi0> the uniform
//! superposition over N items. Starting from |Psi0>, the dynamics stay in
//! the two-dimensional span of the marked item |0> and the uniform
//! superposition |Psi> over the remaining N - 1 items, so everything here
//! works with the 2x2 block.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::integrator::EffectiveState;

/// Number of items in the searched database.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProblemSize(u64);

impl ProblemSize {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("problem size must be >= 2, got {n}")));
        }
        Ok(ProblemSize(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64
    }
}

/// The symmetric 2x2 block of H(s) in the {|0>, |Psi>} basis.
/// Only the upper triangle is stored.
#[derive(Debug, Clone, Copy)]
pub struct EffectiveHamiltonian {
    pub h00: f64,
    pub h01: f64,
    pub h11: f64,
    pub s: f64,
}

impl EffectiveHamiltonian {
    /// Matrix-vector product on a pair of amplitudes.
    pub fn apply(&self, a_opt: Complex64, a_rest: Complex64) -> (Complex64, Complex64) {
        (
            a_opt * self.h00 + a_rest * self.h01,
            a_opt * self.h01 + a_rest * self.h11,
        )
    }
}

/// Instantaneous eigenvalues, gap, and ground-state components at one s.
///
/// The ground state is P|0> + Q|Psi>, the excited state -Q|0> + P|Psi>.
#[derive(Debug, Clone, Copy)]
pub struct SpectralData {
    pub eps0: f64,
    pub eps1: f64,
    pub gap: f64,
    pub p_coeff: f64,
    pub q_coeff: f64,
}

fn check_s(s: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::domain(format!(
            "annealing parameter must lie in [0, 1], got {s}"
        )));
    }
    Ok(())
}

/// Clamp tiny negative radicands produced by cancellation before sqrt.
fn safe_sqrt(x: f64) -> f64 {
    if x < 0.0 {
        debug_assert!(x >= -1e-14, "radicand {x} below clamp threshold");
        0.0
    } else {
        x.sqrt()
    }
}

/// Build the 2x2 block of H(s) for a database of `n` items.
pub fn effective_hamiltonian(n: ProblemSize, s: f64) -> Result<EffectiveHamiltonian> {
    check_s(s)?;
    let nf = n.as_f64();
    Ok(EffectiveHamiltonian {
        h00: (1.0 - s) * (1.0 - 1.0 / nf),
        h01: -(1.0 - s) * (nf - 1.0).sqrt() / nf,
        h11: s + (1.0 - s) / nf,
        s,
    })
}

/// Energy gap eps1 - eps0 at annealing parameter `s`.
pub fn gap(n: ProblemSize, s: f64) -> f64 {
    let nf = n.as_f64();
    safe_sqrt(1.0 - 4.0 * (1.0 - 1.0 / nf) * s * (1.0 - s))
}

/// Eigenvalues and ground-state components of the 2x2 block at `s`.
pub fn spectral_data(n: ProblemSize, s: f64) -> Result<SpectralData> {
    check_s(s)?;
    let nf = n.as_f64();
    let gap = gap(n, s);
    // P^2 - Q^2 = (1 - 2(1 - 1/N)(1 - s)) / gap
    let skew = (0.5 - (1.0 - 1.0 / nf) * (1.0 - s)) / gap;
    Ok(SpectralData {
        eps0: 0.5 * (1.0 - gap),
        eps1: 0.5 * (1.0 + gap),
        gap,
        p_coeff: safe_sqrt(0.5 + skew),
        q_coeff: safe_sqrt(0.5 - skew),
    })
}

/// Off-diagonal matrix element <1(s)| dH/dt |0(s)> for the linear schedule
/// s(t) = t/tau.
pub fn coupling_matrix_element(n: ProblemSize, s: f64, tau: f64) -> Result<f64> {
    check_s(s)?;
    if tau <= 0.0 {
        return Err(Error::domain(format!("annealing time must be positive, got {tau}")));
    }
    let nf = n.as_f64();
    Ok((nf - 1.0).sqrt() / nf / (tau * gap(n, s)))
}

/// Expand a reduced-basis state in the instantaneous eigenbasis at `s`:
/// returns (ground, excited) coefficients.
pub fn eigenbasis_projection(
    state: &EffectiveState,
    n: ProblemSize,
    s: f64,
) -> Result<(Complex64, Complex64)> {
    let sd = spectral_data(n, s)?;
    Ok((
        state.a_opt * sd.p_coeff + state.a_rest * sd.q_coeff,
        -state.a_opt * sd.q_coeff + state.a_rest * sd.p_coeff,
    ))
}

/// Apply the full N-dimensional H(s) to a state vector without
/// materializing the matrix. H(s) = I - s|0><0| - (1-s)|Psi0><Psi0|,
/// so the product is O(N).
pub fn full_hamiltonian_apply(
    n: ProblemSize,
    s: f64,
    v: &[Complex64],
) -> Result<Vec<Complex64>> {
    check_s(s)?;
    let len = n.get() as usize;
    if v.len() != len {
        return Err(Error::Dimension { expected: len, got: v.len() });
    }
    let inv_sqrt_n = 1.0 / n.as_f64().sqrt();
    let uniform_overlap: Complex64 = v.iter().sum::<Complex64>() * inv_sqrt_n;
    let mut out: Vec<Complex64> = v
        .iter()
        .map(|&x| x - uniform_overlap * ((1.0 - s) * inv_sqrt_n))
        .collect();
    out[0] -= v[0] * s;
    Ok(out)
}
