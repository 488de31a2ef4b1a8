//! Bogoliubov treatment of correlated dark-exciton pairs.
//!
//! The pump couples dark excitons at `k + p` and `k - p` through the
//! anomalous term `V_mf (B₊† B₋† + h.c.)`. The transformation
//!
//! ```text
//! C₊ = u B₊ + v B₋†,    C₋ = u B₋ + v B₊†,    u² - v² = 1
//! ```
//!
//! removes that term and leaves dispersion-less bogolon-excitons with energy
//! `Ē₀ = √((Ẽ_a - E)² - V_mf²)` in the frame rotating at the drive energy.
//! Operators are represented by their mean-field amplitudes.

use num_complex::Complex64;

use crate::error::{ModelError, Result};

/// Relative tolerance for the condition that removes the anomalous term.
const ANOMALOUS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovCoeffs {
    pub u: f64,
    pub v: f64,
    /// Ẽ₀ = ½ Ē₀.
    pub e0_tilde: f64,
    /// Ē₀, the bogolon excitation energy.
    pub e0_bar: f64,
    /// Ẽ_a, renormalized dark level.
    pub dark_energy: f64,
    /// V_mf.
    pub coupling: f64,
    /// Drive energy E.
    pub drive_energy: f64,
}

impl BogoliubovCoeffs {
    /// Ẽ_a - E.
    pub fn detuning(&self) -> f64 {
        self.dark_energy - self.drive_energy
    }

    /// Constant c-number shift `½(Ē₀ - Ẽ_a + E)` per pair mode left over by
    /// the transformation. It shifts no observable.
    pub fn ground_state_shift(&self) -> f64 {
        0.5 * (self.e0_bar - self.detuning())
    }
}

/// Bogoliubov coefficients for the stable regime `Ẽ_a - E > V_mf ≥ 0`.
pub fn coefficients(dark_energy: f64, coupling: f64, drive_energy: f64) -> Result<BogoliubovCoeffs> {
    if !(coupling >= 0.0) {
        return Err(ModelError::Domain(format!(
            "anomalous coupling must be non-negative, got {coupling}"
        )));
    }
    let d = dark_energy - drive_energy;
    if d < 0.0 {
        return Err(ModelError::SignRegime { detuning: d });
    }
    let (gap2, v2) = (d * d, coupling * coupling);
    if !(gap2 > v2) {
        return Err(ModelError::Instability { gap2, v2 });
    }
    // (d - V)(d + V) avoids cancellation when V is close to d.
    let e0_bar = ((d - coupling) * (d + coupling)).sqrt();
    if e0_bar == 0.0 {
        return Err(ModelError::Instability { gap2, v2 });
    }
    let ratio = d / e0_bar;
    let u = (0.5 * (ratio + 1.0)).sqrt();
    // d/Ē₀ - 1 = V² / (Ē₀ (d + Ē₀)), free of cancellation for small V.
    let v = (0.5 * v2 / (e0_bar * (d + e0_bar))).sqrt();

    let lhs = 0.5 * coupling * (u * u + v * v);
    let rhs = d * u * v;
    if (lhs - rhs).abs() > ANOMALOUS_TOLERANCE * lhs.abs().max(rhs.abs()) {
        return Err(ModelError::Domain(format!(
            "anomalous term not cancelled: V/2 (u² + v²) = {lhs:e}, (Ẽ_a - E) u v = {rhs:e}"
        )));
    }

    Ok(BogoliubovCoeffs {
        u,
        v,
        e0_tilde: 0.5 * e0_bar,
        e0_bar,
        dark_energy,
        coupling,
        drive_energy,
    })
}

/// Steady bogolon amplitudes for a single probe `F` at `k + q`:
/// `C₊ = -u F / Ē₀`, `C₋ = v F* / Ē₀`.
pub fn bogolon_steady_state(coeffs: &BogoliubovCoeffs, probe: Complex64) -> Result<(Complex64, Complex64)> {
    if !(coeffs.e0_bar > 0.0) {
        return Err(ModelError::Pole {
            energy: coeffs.drive_energy,
        });
    }
    let c_plus = -coeffs.u * probe / coeffs.e0_bar;
    let c_minus = coeffs.v * probe.conj() / coeffs.e0_bar;
    Ok((c_plus, c_minus))
}

/// Inverse transformation `B₊ = u C₊ - v C₋*`, `B₋ = u C₋ - v C₊*`.
pub fn reconstruct_dark_amplitudes(
    coeffs: &BogoliubovCoeffs,
    c_plus: Complex64,
    c_minus: Complex64,
) -> (Complex64, Complex64) {
    let (u, v) = (coeffs.u, coeffs.v);
    (u * c_plus - v * c_minus.conj(), u * c_minus - v * c_plus.conj())
}

/// Bogolon energy Ē₀; the same for every pair offset p.
pub fn bogolon_spectrum_energy(coeffs: &BogoliubovCoeffs) -> f64 {
    coeffs.e0_bar
}
