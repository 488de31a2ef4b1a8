//! Paired lattice/waveguide configuration and the reference parameter set.
//!
//! Reference values: E_A = 1.5 eV, a = 1000 Å, R = 100 Å, μ = 2.5 e·Å,
//! θ = 80°, u(b) = 0.25, S̄ = πa², ε = 2, photon resonant with E_A at q = 0,
//! L ≈ 1 cm. Damping ħΓ_ph = 10⁻¹⁰ eV, ħΓ_s = 10⁻⁸ eV, ħΓ_a = 10⁻¹² eV and a
//! pump occupation of one polariton.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::kinematic::{interaction_params, InteractionParams};
use crate::lattice::{antisymmetric_energy, SuperLatticeConfig};
use crate::polariton::{find_resonance_k, hopfield, Branch, HopfieldMode};
use crate::pumpprobe::{DriveConfig, PumpMode, PumpProbe};
use crate::waveguide::WaveguideConfig;

/// Cell count of the reference lattice. N must be odd, so L = N a is one
/// cell longer than 1 cm.
pub const REFERENCE_N_CELLS: usize = 100_001;

pub const REFERENCE_GAMMA_PH: f64 = 1e-10;
pub const REFERENCE_GAMMA_S: f64 = 1e-8;
pub const REFERENCE_GAMMA_A: f64 = 1e-12;
pub const REFERENCE_OCCUPATION: f64 = 1.0;

/// A lattice together with the waveguide it sits next to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Setup {
    pub lattice: SuperLatticeConfig,
    pub waveguide: WaveguideConfig,
}

impl Setup {
    pub fn new(lattice: SuperLatticeConfig, waveguide: WaveguideConfig) -> Result<Self> {
        lattice.validate()?;
        waveguide.validate_with(&lattice)?;
        Ok(Self { lattice, waveguide })
    }

    pub fn reference() -> Self {
        let a = 1000.0;
        let lattice = SuperLatticeConfig {
            transition_energy: 1.5,
            cell_spacing: a,
            atom_spacing: 100.0,
            dipole: 2.5,
            theta: 80f64.to_radians(),
            n_cells: REFERENCE_N_CELLS,
        };
        let waveguide = WaveguideConfig::resonant_with(1.5, 2.0, 0.25, PI * a * a, lattice.length())
            .expect("reference waveguide is valid");
        Self { lattice, waveguide }
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.lattice.theta = theta;
        self
    }

    pub fn hopfield(&self, k: f64) -> Result<HopfieldMode> {
        hopfield(k, &self.waveguide, &self.lattice)
    }

    pub fn dark_energy(&self) -> f64 {
        antisymmetric_energy(&self.lattice)
    }

    /// Wavenumber where the lower polariton is resonant with the dark level.
    pub fn dark_resonance_k(&self) -> Result<f64> {
        find_resonance_k(self.dark_energy(), Branch::Lower, &self.waveguide, &self.lattice)
    }

    pub fn interaction_at(&self, k: f64) -> Result<InteractionParams> {
        let mode = self.hopfield(k)?;
        interaction_params(
            &self.waveguide,
            &self.lattice,
            mode.exciton_fraction(Branch::Lower),
        )
    }

    /// Pump-probe model with the pump on the lower branch at `k_pump`.
    pub fn pump_probe(&self, k_pump: f64) -> Result<PumpProbe> {
        PumpProbe::new(&self.lattice, &self.waveguide, k_pump)
    }
}

/// Reference drive: pump and probe at `E = E_a`, pump at the dark resonance
/// wavenumber with a prescribed occupation, unit real probe at `k + q`.
pub fn reference_drive(setup: &Setup) -> Result<DriveConfig> {
    let k_pump = setup.dark_resonance_k()?;
    Ok(DriveConfig {
        energy: setup.dark_energy(),
        pump: Complex64::new(0.0, 0.0),
        probe_plus: Complex64::new(1.0, 0.0),
        probe_minus: Complex64::new(0.0, 0.0),
        gamma_ph: REFERENCE_GAMMA_PH,
        gamma_s: REFERENCE_GAMMA_S,
        gamma_a: REFERENCE_GAMMA_A,
        k_pump,
        q: 10.0 * k_pump,
        pump_mode: PumpMode::Prescribed {
            occupation: REFERENCE_OCCUPATION,
        },
    })
}
