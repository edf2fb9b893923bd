//! Casimir force on a piston in I×N geometries for a massless scalar field
//! under general U(2)×U(2) self-adjoint boundary conditions, computed through
//! spectral zeta-function regularization of one-dimensional scattering data.
//!
//! The computation pipeline:
//!
//! 1. [`boundary`] — Euler-parametrized boundary unitaries, admissibility
//!    (bound-state) classification, and the piston configuration.
//! 2. [`scattering`] — point-interaction amplitudes of the wall and their
//!    ρ/τ numerators.
//! 3. [`secular`] — the secular function h(k, a) whose zeros are the
//!    longitudinal eigen-wavenumbers, in an overflow-safe form on the
//!    imaginary axis, plus an independent 4×4 determinant oracle.
//! 4. [`asymptotics`] — closed-form large-z expansion of ln[z⁻²h(iz)] used to
//!    extend the zeta function's analyticity.
//! 5. [`spectra`] — transverse spectra (d-sphere, Dirichlet disk, point
//!    manifold, user files), including a self-contained Bessel-zero solver.
//! 6. [`zeta_force`] — analytic continuation, energy decomposition with its
//!    explicit regularization ambiguity, and the Casimir force.

pub mod asymptotics;
pub mod boundary;
pub mod error;
pub mod quad;
pub mod scattering;
pub mod secular;
pub mod spectra;
pub mod util;
pub mod zeta_force;

pub use boundary::{BoundaryUnitary, PistonConfig};
pub use error::{PistonError, Result};
pub use spectra::{TransverseMode, TransverseSpectrum};
pub use zeta_force::{EnergyReport, ForceResult, ZetaNData};
