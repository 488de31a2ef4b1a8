//! Numerical model of dark and bright Frenkel excitons in a linear atomic
//! super-lattice (two atoms per unit cell) coupled to a one-dimensional
//! nanophotonic waveguide.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: dipole couplings, symmetric/antisymmetric levels and bands.
//! * [`waveguide`]: photon dispersion and exciton-photon couplings.
//! * [`polariton`]: 2x2 Hopfield diagonalization and resonance finding.
//! * [`kinematic`]: bosonization interaction constants and vertices.
//! * [`pumpprobe`]: mean-field pump-probe steady states, spectra, dynamics.
//! * [`bogolon`]: Bogoliubov treatment of correlated dark-exciton pairs.
//! * [`oracle`]: exact diagonalization of the two-level-atom Hamiltonian.
//! * [`datasets`]: figure-style sweeps shared by the CLI and the tests.
//!
//! Units throughout: energies in eV, lengths in Å, wavenumbers in Å⁻¹,
//! angles in radians, times in ħ/eV.

pub mod bogolon;
pub mod constants;
pub mod datasets;
pub mod error;
pub mod kinematic;
pub mod lattice;
pub mod oracle;
pub mod polariton;
pub mod preset;
pub mod pumpprobe;
pub mod waveguide;

mod rk4;

pub use num_complex::Complex64;

pub use bogolon::BogoliubovCoeffs;
pub use constants::{PhysicalConstants, CONSTANTS};
pub use error::{ModelError, Result};
pub use kinematic::{InteractionParams, VertexSet};
pub use lattice::{ExcitonLevels, SuperLatticeConfig};
pub use polariton::{Branch, HopfieldMode};
pub use preset::Setup;
pub use pumpprobe::{
    DriveConfig, PumpMode, PumpProbe, PumpState, SpectrumPoint, SteadyState, TrajectoryPoint,
};
pub use waveguide::WaveguideConfig;
