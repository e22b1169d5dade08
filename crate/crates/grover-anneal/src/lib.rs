//! Numerical laboratory for quantum annealing of Grover's search.
//!
//! The library simulates annealing of the Grover search Hamiltonian
//! H(s) = s (I - |0><0|) + (1 - s)(I - |Psi0><Psi0|) under both the
//! real-time and the imaginary-time Schrodinger equation, evaluates the
//! closed-form bounds on the excited-state coefficient, and fits the
//! resulting scaling laws: annealing time growing like log N for the
//! imaginary-time linear ramp and like sqrt(N) for gap-adapted ramps.
//!
//! Entry points:
//! - [`grover`]: the 2x2 reduced Hamiltonian and its spectrum.
//! - [`schedule`]: linear and gap-adapted ramps s(t).
//! - [`integrator`]: RK4 propagation and success-probability tracking.
//! - [`bounds`]: analytic bounds plus quadrature cross-checks.
//! - [`experiments`]: annealing-time scans and scaling fits.
//! - [`cli`]: the subcommand front end used by the `grover-anneal` binary.
//!
//! See the crate `examples/` directory for one runnable example per
//! capability.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod fit;
pub mod grover;
pub mod integrator;
pub mod quad;
pub mod schedule;

pub use error::{Error, Result};
pub use grover::ProblemSize;
pub use integrator::Mode;
pub use schedule::{ScheduleKind, ScheduleSpec};
