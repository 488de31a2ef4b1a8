//! Interaction constants that come out of bosonizing the two-level atoms.
//!
//! Replacing paulions by bosons adds an on-site repulsion `U` that keeps two
//! excitations off the same atom. In the symmetric/antisymmetric basis this
//! couples bright and dark excitons; restricted to lower polaritons at the
//! pump wavenumber `k` the retained vertices are
//!
//! ```text
//! Δ X⁴/2 · A†A†AA   +   Δ X²/2 · (A†A† B_{k+p} B_{k-p} + h.c.)   +   2Δ X² · A†B†AB
//! ```
//!
//! with `Δ = U/N`.

use std::f64::consts::PI;

use crate::constants::CONSTANTS;
use crate::error::{ModelError, Result};
use crate::lattice::{exciton_levels, SuperLatticeConfig};
use crate::polariton::HopfieldMode;
use crate::waveguide::WaveguideConfig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteractionParams {
    /// Polariton effective mass as an energy, mc² (eV).
    pub mass_energy: f64,
    /// On-site kinematic potential U (eV).
    pub onsite: f64,
    /// Δ = U / N (eV).
    pub delta: f64,
    /// Δ̃ = Δ |X_k|² (eV).
    pub delta_tilde: f64,
    /// |X_k|² of the lower polariton at the pump wavenumber.
    pub exciton_fraction: f64,
}

/// Coefficients of the four retained interaction terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexSet {
    /// Δ X⁴ / 2, polariton-polariton.
    pub pol_pol: f64,
    /// Δ X² / 2, two polaritons to a dark pair and back.
    pub pol_dark_pair: f64,
    /// 2 Δ X², polariton-dark density-density.
    pub pol_dark_cross: f64,
    /// Δ / 2, dark-dark.
    pub dark_dark: f64,
}

/// `mc² = ħc q₀ √ε`.
pub fn effective_mass(wg: &WaveguideConfig) -> f64 {
    CONSTANTS.hbar_c * wg.q0 * wg.epsilon.sqrt()
}

pub fn interaction_params(
    wg: &WaveguideConfig,
    cfg: &SuperLatticeConfig,
    exciton_fraction: f64,
) -> Result<InteractionParams> {
    if !(0.0..=1.0).contains(&exciton_fraction) {
        return Err(ModelError::Domain(format!(
            "exciton fraction must lie in [0, 1], got {exciton_fraction}"
        )));
    }
    let mass_energy = effective_mass(wg);
    let a = cfg.cell_spacing;
    let onsite = 4.0 * PI * CONSTANTS.hbar_c * CONSTANTS.hbar_c / (mass_energy * a * a);
    let delta = onsite / cfg.n_cells as f64;
    Ok(InteractionParams {
        mass_energy,
        onsite,
        delta,
        delta_tilde: delta * exciton_fraction,
        exciton_fraction,
    })
}

pub fn vertex_set(ip: &InteractionParams) -> VertexSet {
    let pair = 0.5 * ip.delta * ip.exciton_fraction;
    VertexSet {
        pol_pol: pair * ip.exciton_fraction,
        pol_dark_pair: pair,
        pol_dark_cross: 4.0 * pair,
        dark_dark: 0.5 * ip.delta,
    }
}

/// One two-excitation channel compared against the bound on-cell state.
#[derive(Debug, Clone, PartialEq)]
pub struct ExclusionChannel {
    pub name: &'static str,
    pub energy: f64,
    /// `|E_e - energy|`.
    pub gap: f64,
    pub off_resonant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExclusionReport {
    /// `E_e = 2E_A + 2V_dyn`, both atoms of one cell excited.
    pub bound_energy: f64,
    pub channels: Vec<ExclusionChannel>,
    /// True iff every channel is off-resonant.
    pub excluded: bool,
}

/// Checks whether energy conservation forbids scattering into a doubly
/// excited cell. The channels are `2E_s`, `2E_a`, `2E_A` and, when a pump
/// mode is supplied, twice its lower-polariton energy.
pub fn double_excitation_excluded(
    cfg: &SuperLatticeConfig,
    pump: Option<&HopfieldMode>,
    v_dyn: f64,
    tolerance: f64,
) -> Result<ExclusionReport> {
    if !(tolerance > 0.0) {
        return Err(ModelError::Domain(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let lv = exciton_levels(cfg);
    let bound_energy = 2.0 * cfg.transition_energy + 2.0 * v_dyn;
    let mut targets = vec![
        ("2E_s", 2.0 * lv.symmetric),
        ("2E_a", 2.0 * lv.antisymmetric),
        ("2E_A", 2.0 * cfg.transition_energy),
    ];
    if let Some(mode) = pump {
        targets.push(("2E_lower(k_pump)", 2.0 * mode.lower_energy));
    }
    let channels: Vec<_> = targets
        .into_iter()
        .map(|(name, energy)| {
            let gap = (bound_energy - energy).abs();
            ExclusionChannel {
                name,
                energy,
                gap,
                off_resonant: gap > tolerance,
            }
        })
        .collect();
    let excluded = channels.iter().all(|c| c.off_resonant);
    Ok(ExclusionReport {
        bound_energy,
        channels,
        excluded,
    })
}
