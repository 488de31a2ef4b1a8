//! Sweeps behind the level, dispersion, fraction and spectrum figures.
//! Energies are reported as offsets from the transition energy E_A.

use crate::error::{ModelError, Result};
use crate::lattice::{exciton_levels, symmetric_band_unchecked};
use crate::polariton::Branch;
use crate::preset::Setup;
use crate::waveguide::photon_dispersion;

/// `n` evenly spaced points from `min` to `max` inclusive.
pub fn linspace(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(ModelError::Domain(format!(
            "a grid needs at least 2 points, got {n}"
        )));
    }
    if !(min.is_finite() && max.is_finite()) {
        return Err(ModelError::Domain(format!(
            "grid bounds must be finite, got {min}..{max}"
        )));
    }
    let step = (max - min) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| if i == n - 1 { max } else { min + step * i as f64 })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelsRow {
    pub theta: f64,
    pub upper: f64,
    pub lower: f64,
    pub symmetric: f64,
    pub antisymmetric: f64,
}

/// Polariton and exciton levels at k = 0 against the dipole angle.
pub fn levels(setup: &Setup, thetas: &[f64]) -> Result<Vec<LevelsRow>> {
    thetas
        .iter()
        .map(|&theta| {
            let s = setup.with_theta(theta);
            s.lattice.validate()?;
            let mode = s.hopfield(0.0)?;
            let lv = exciton_levels(&s.lattice);
            let e_a = s.lattice.transition_energy;
            Ok(LevelsRow {
                theta,
                upper: mode.upper_energy - e_a,
                lower: mode.lower_energy - e_a,
                symmetric: lv.symmetric - e_a,
                antisymmetric: lv.antisymmetric - e_a,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionRow {
    pub k: f64,
    pub upper: f64,
    pub lower: f64,
    pub photon: f64,
    pub symmetric: f64,
    pub antisymmetric: f64,
}

pub fn dispersion(setup: &Setup, ks: &[f64]) -> Result<Vec<DispersionRow>> {
    let e_a = setup.lattice.transition_energy;
    let dark = setup.dark_energy() - e_a;
    ks.iter()
        .map(|&k| {
            let mode = setup.hopfield(k)?;
            Ok(DispersionRow {
                k,
                upper: mode.upper_energy - e_a,
                lower: mode.lower_energy - e_a,
                photon: photon_dispersion(k, &setup.waveguide) - e_a,
                symmetric: symmetric_band_unchecked(k, &setup.lattice) - e_a,
                antisymmetric: dark,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionsRow {
    pub k: f64,
    pub exciton_upper: f64,
    pub photon_upper: f64,
    pub exciton_lower: f64,
    pub photon_lower: f64,
}

pub fn fractions(setup: &Setup, ks: &[f64]) -> Result<Vec<FractionsRow>> {
    ks.iter()
        .map(|&k| {
            let mode = setup.hopfield(k)?;
            Ok(FractionsRow {
                k,
                exciton_upper: mode.exciton_fraction(Branch::Upper),
                photon_upper: mode.photon_fraction(Branch::Upper),
                exciton_lower: mode.exciton_fraction(Branch::Lower),
                photon_lower: mode.photon_fraction(Branch::Lower),
            })
        })
        .collect()
}
