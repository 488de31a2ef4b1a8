//! Waveguide photons and their coupling to the on-cell exciton states.

use crate::constants::CONSTANTS;
use crate::error::{ModelError, Result};
use crate::lattice::SuperLatticeConfig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveguideConfig {
    /// Effective dielectric constant ε.
    pub epsilon: f64,
    /// Confinement wavenumber q₀ (Å⁻¹).
    pub q0: f64,
    /// Mode function at the lattice position, u(b).
    pub mode_amplitude: f64,
    /// Effective photon cross-section S̄ (Å²).
    pub cross_section: f64,
    /// Waveguide (and lattice) length L (Å).
    pub length: f64,
}

impl WaveguideConfig {
    pub fn new(epsilon: f64, q0: f64, mode_amplitude: f64, cross_section: f64, length: f64) -> Result<Self> {
        let wg = Self {
            epsilon,
            q0,
            mode_amplitude,
            cross_section,
            length,
        };
        wg.validate()?;
        Ok(wg)
    }

    /// Choose q₀ so that the photon at q = 0 is resonant with `transition_energy`,
    /// i.e. `q0 = √ε E_A / ħc`.
    pub fn resonant_with(
        transition_energy: f64,
        epsilon: f64,
        mode_amplitude: f64,
        cross_section: f64,
        length: f64,
    ) -> Result<Self> {
        let q0 = epsilon.sqrt() * transition_energy / CONSTANTS.hbar_c;
        Self::new(epsilon, q0, mode_amplitude, cross_section, length)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(ModelError::InvalidConfig(msg));
        if !(self.epsilon >= 1.0) {
            return bad(format!("epsilon must be >= 1, got {}", self.epsilon));
        }
        if !(self.q0 > 0.0) {
            return bad(format!("q0 must be positive, got {}", self.q0));
        }
        if !(self.mode_amplitude > 0.0 && self.mode_amplitude <= 1.0) {
            return bad(format!("u(b) must lie in (0, 1], got {}", self.mode_amplitude));
        }
        if !(self.cross_section > 0.0) {
            return bad(format!(
                "cross-section must be positive, got {}",
                self.cross_section
            ));
        }
        if !(self.length > 0.0) {
            return bad(format!("length must be positive, got {}", self.length));
        }
        Ok(())
    }

    /// Checks `L = N a` against the paired lattice.
    pub fn validate_with(&self, lattice: &SuperLatticeConfig) -> Result<()> {
        self.validate()?;
        let expected = lattice.length();
        if (self.length - expected).abs() > 1e-9 * expected {
            return Err(ModelError::InvalidConfig(format!(
                "waveguide length {} does not match N*a = {}",
                self.length, expected
            )));
        }
        Ok(())
    }

    /// Photon quantisation volume `V = S̄ N a`.
    pub fn photon_volume(&self) -> f64 {
        self.cross_section * self.length
    }
}

/// `E_ph(q) = (ħc/√ε) √(q₀² + q²)`.
pub fn photon_dispersion(q: f64, wg: &WaveguideConfig) -> f64 {
    CONSTANTS.hbar_c / wg.epsilon.sqrt() * wg.q0.hypot(q)
}

/// Common prefactor `√(E_ph(k)/(ε₀ S̄ a)) u(b) μ` of both couplings.
pub fn coupling_prefactor(k: f64, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> f64 {
    let e_ph = photon_dispersion(k, wg);
    (e_ph * CONSTANTS.inverse_permittivity() / (wg.cross_section * cfg.cell_spacing)).sqrt()
        * wg.mode_amplitude
        * cfg.dipole
}

/// |f_k^s|: symmetric (bright) exciton to photon coupling.
pub fn coupling_bright(k: f64, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> f64 {
    coupling_prefactor(k, wg, cfg) * (0.5 * k * cfg.atom_spacing).cos().abs()
}

/// |f_k^a|: antisymmetric (dark) exciton to photon coupling.
pub fn coupling_dark(k: f64, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> f64 {
    coupling_prefactor(k, wg, cfg) * (0.5 * k * cfg.atom_spacing).sin().abs()
}

/// Small-k form of the bright coupling (`cos(kR/2) → 1`).
pub fn coupling_bright_small_k(k: f64, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> f64 {
    coupling_prefactor(k, wg, cfg)
}

/// Small-k form of the dark coupling (`sin(kR/2) → kR/2`).
pub fn coupling_dark_small_k(k: f64, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> f64 {
    coupling_prefactor(k, wg, cfg) * 0.5 * (k * cfg.atom_spacing).abs()
}

/// `|f_k^a| / |f_k^s| = |tan(kR/2)|`, infinite where the bright coupling vanishes.
pub fn dark_to_bright_ratio(k: f64, cfg: &SuperLatticeConfig) -> f64 {
    let x = 0.5 * k * cfg.atom_spacing;
    let c = x.cos().abs();
    if c == 0.0 {
        f64::INFINITY
    } else {
        x.sin().abs() / c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn lattice() -> SuperLatticeConfig {
        SuperLatticeConfig::new(1.5, 1000.0, 100.0, 2.5, 80f64.to_radians(), 100_001).unwrap()
    }

    fn guide() -> WaveguideConfig {
        let a = 1000.0;
        WaveguideConfig::resonant_with(1.5, 2.0, 0.25, PI * a * a, 100_001.0 * a).unwrap()
    }

    #[test]
    fn confinement_from_transition_energy() {
        let wg = guide();
        assert_relative_eq!(wg.q0, 1.075028026709541e-3, max_relative = 1e-12);
        assert_relative_eq!(photon_dispersion(0.0, &wg), 1.5, max_relative = 1e-14);
    }

    #[test]
    fn dispersion_limits() {
        let wg = guide();
        let slope = CONSTANTS.hbar_c / wg.epsilon.sqrt();
        let q = 1e3 * wg.q0;
        let numeric = (photon_dispersion(q + 1e-6, &wg) - photon_dispersion(q - 1e-6, &wg)) / 2e-6;
        assert_relative_eq!(numeric, slope, max_relative = 1e-5);
        assert_relative_eq!(
            photon_dispersion(wg.q0, &wg),
            2f64.sqrt() * photon_dispersion(0.0, &wg),
            max_relative = 1e-14
        );
    }

    #[test]
    fn bright_coupling_reference_value() {
        let f = coupling_bright(0.0, &guide(), &lattice());
        assert_relative_eq!(f, 1.8370946619254545e-4, max_relative = 1e-10);
    }

    #[test]
    fn bright_coupling_vanishes_at_pi_over_r() {
        let cfg = lattice();
        let k = PI / cfg.atom_spacing;
        assert!(coupling_bright(k, &guide(), &cfg) < 1e-18);
        let dark = coupling_dark(k, &guide(), &cfg);
        assert_relative_eq!(dark, coupling_prefactor(k, &guide(), &cfg), max_relative = 1e-14);
    }

    #[test]
    fn dark_coupling_small_k() {
        let (wg, cfg) = (guide(), lattice());
        assert_eq!(coupling_dark(0.0, &wg, &cfg), 0.0);
        let k = 1.4e-5;
        let ratio = coupling_dark(k, &wg, &cfg) / coupling_bright(k, &wg, &cfg);
        assert_relative_eq!(ratio, 7.0e-4, max_relative = 1e-6);
        assert_relative_eq!(ratio, dark_to_bright_ratio(k, &cfg), max_relative = 1e-12);
        // Dropping the dark coupling in the polariton problem is justified.
        assert!(ratio < 1e-3);
    }

    #[test]
    fn small_k_error_bound() {
        let (wg, cfg) = (guide(), lattice());
        for i in 1..=100 {
            let k = 1e-3 * i as f64 / cfg.atom_spacing; // kR up to 0.1
            let kr = k * cfg.atom_spacing;
            let exact = coupling_bright(k, &wg, &cfg);
            let approx = coupling_bright_small_k(k, &wg, &cfg);
            assert!((exact - approx).abs() / exact < kr * kr / 4.0);
            let exact = coupling_dark(k, &wg, &cfg);
            let approx = coupling_dark_small_k(k, &wg, &cfg);
            assert!((exact - approx).abs() / exact < kr * kr / 4.0);
        }
    }

    #[test]
    fn length_pairing() {
        let wg = guide();
        assert!(wg.validate_with(&lattice()).is_ok());
        let mut short = lattice();
        short.n_cells = 99_999;
        assert!(wg.validate_with(&short).is_err());
    }

    #[test]
    fn validation() {
        assert!(WaveguideConfig::new(0.5, 1e-3, 0.25, 1.0, 1.0).is_err());
        assert!(WaveguideConfig::new(2.0, 0.0, 0.25, 1.0, 1.0).is_err());
        assert!(WaveguideConfig::new(2.0, 1e-3, 1.5, 1.0, 1.0).is_err());
        assert!(WaveguideConfig::new(2.0, 1e-3, 0.25, -1.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn couplings_obey_pythagoras(k in -3e-3f64..3e-3, r in 1.0f64..900.0) {
            let mut cfg = lattice();
            cfg.atom_spacing = r;
            let wg = guide();
            let p = coupling_prefactor(k, &wg, &cfg);
            let b = coupling_bright(k, &wg, &cfg);
            let d = coupling_dark(k, &wg, &cfg);
            prop_assert!((b * b + d * d - p * p).abs() <= 1e-12 * p * p);
        }

        #[test]
        fn dispersion_even_and_increasing(q in 0.0f64..1.0, dq in 1e-9f64..1e-2) {
            let wg = guide();
            prop_assert_eq!(photon_dispersion(q, &wg), photon_dispersion(-q, &wg));
            prop_assert!(photon_dispersion(q + dq, &wg) > photon_dispersion(q, &wg));
        }
    }
}
