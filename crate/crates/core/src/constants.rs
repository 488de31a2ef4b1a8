//! Physical constants in the eV / Å / e·Å unit system.

/// Constants shared by every module.
///
/// `coulomb` is 1/(4πε₀) expressed so that `coulomb * mu * mu / r^3` is an
/// energy in eV for a dipole `mu` in e·Å and a distance `r` in Å.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// ħc in eV·Å.
    pub hbar_c: f64,
    /// 1/(4πε₀) in eV·Å³ per (e·Å)².
    pub coulomb: f64,
}

impl PhysicalConstants {
    /// 1/ε₀ in the same units, i.e. 4π·`coulomb`.
    pub fn inverse_permittivity(&self) -> f64 {
        4.0 * std::f64::consts::PI * self.coulomb
    }
}

/// CODATA-derived values used throughout the crate.
pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    hbar_c: 1973.269804,
    coulomb: 14.399645,
};
