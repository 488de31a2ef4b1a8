//! Hopfield diagonalization of the bright-exciton / photon problem.
//!
//! At every wavenumber the symmetric exciton `B_k^s` and the photon `a_k`
//! mix into upper and lower polaritons `A_k^± = X^± B_k^s + Y^± a_k`. The
//! dark exciton is left out: its photon coupling is suppressed by
//! `tan(kR/2)` (see [`crate::waveguide::dark_to_bright_ratio`]).

use std::fmt;

use crate::error::{ModelError, Result};
use crate::lattice::{symmetric_band, SuperLatticeConfig};
use crate::waveguide::{coupling_bright, photon_dispersion, WaveguideConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Upper,
    Lower,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Upper => f.write_str("upper"),
            Branch::Lower => f.write_str("lower"),
        }
    }
}

/// Polariton branches at one wavenumber. Amplitudes are real; the `-i`
/// phase of the coupling is dropped since only |f|² enters observables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopfieldMode {
    pub k: f64,
    pub upper_energy: f64,
    pub lower_energy: f64,
    pub x_upper: f64,
    pub y_upper: f64,
    pub x_lower: f64,
    pub y_lower: f64,
    /// δ_k = (E_ph(k) - E_s(k)) / 2.
    pub detuning: f64,
    /// D_k = √(δ_k² + |f_k|²), half the branch splitting.
    pub half_splitting: f64,
}

impl HopfieldMode {
    pub fn energy(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Upper => self.upper_energy,
            Branch::Lower => self.lower_energy,
        }
    }

    /// Exciton amplitude X of `branch`.
    pub fn x(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Upper => self.x_upper,
            Branch::Lower => self.x_lower,
        }
    }

    /// Photon amplitude Y of `branch`.
    pub fn y(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Upper => self.y_upper,
            Branch::Lower => self.y_lower,
        }
    }

    /// |X|².
    pub fn exciton_fraction(&self, branch: Branch) -> f64 {
        self.x(branch).powi(2)
    }

    /// |Y|².
    pub fn photon_fraction(&self, branch: Branch) -> f64 {
        self.y(branch).powi(2)
    }
}

pub fn hopfield(k: f64, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> Result<HopfieldMode> {
    let e_s = symmetric_band(k, cfg)?;
    let e_ph = photon_dispersion(k, wg);
    let f = coupling_bright(k, wg, cfg);
    let delta = 0.5 * (e_ph - e_s);
    let d = delta.hypot(f);
    if d == 0.0 {
        return Err(ModelError::DegenerateMode { k });
    }
    // D ∓ δ without cancellation: (D - δ)(D + δ) = f².
    let (minus, plus) = if delta >= 0.0 {
        (f * f / (d + delta), d + delta)
    } else {
        (d - delta, f * f / (d - delta))
    };
    let mean = 0.5 * (e_ph + e_s);
    Ok(HopfieldMode {
        k,
        upper_energy: mean + d,
        lower_energy: mean - d,
        x_upper: (minus / (2.0 * d)).sqrt(),
        y_upper: (plus / (2.0 * d)).sqrt(),
        x_lower: -(plus / (2.0 * d)).sqrt(),
        y_lower: (minus / (2.0 * d)).sqrt(),
        detuning: delta,
        half_splitting: d,
    })
}

/// Rebuilds the 2x2 exciton/photon Hamiltonian at `mode.k`, rotates it into
/// the polariton basis and returns the largest off-diagonal element.
pub fn verify_diagonalization(mode: &HopfieldMode, wg: &WaveguideConfig, cfg: &SuperLatticeConfig) -> f64 {
    let e_s = crate::lattice::symmetric_band_unchecked(mode.k, cfg);
    let e_ph = photon_dispersion(mode.k, wg);
    let f = coupling_bright(mode.k, wg, cfg);
    // Basis (exciton, photon); columns of the rotation are (X, Y) per branch.
    // A multiple of the identity does not change the off-diagonal part, so
    // the mean energy is removed first to keep the check at the scale of D.
    let delta = 0.5 * (e_ph - e_s);
    let h = [[-delta, f], [f, delta]];
    let u = [[mode.x_upper, mode.x_lower], [mode.y_upper, mode.y_lower]];
    let mut rotated = [[0.0; 2]; 2];
    for (i, row) in rotated.iter_mut().enumerate() {
        for (j, out) in row.iter_mut().enumerate() {
            *out = (0..2)
                .flat_map(|p| (0..2).map(move |q| (p, q)))
                .map(|(p, q)| u[p][i] * h[p][q] * u[q][j])
                .sum();
        }
    }
    rotated[0][1].abs().max(rotated[1][0].abs())
}

const SCAN_POINTS: usize = 1000;
const ENERGY_TOLERANCE: f64 = 1e-12;

/// Smallest non-negative `k` in the first zone where `branch` reaches `target`.
///
/// The zone `[0, π/a]` is scanned on a 10³-interval grid for sign changes of
/// `E_branch(k) - target`; the unique bracket is then bisected.
pub fn find_resonance_k(
    target: f64,
    branch: Branch,
    wg: &WaveguideConfig,
    cfg: &SuperLatticeConfig,
) -> Result<f64> {
    let edge = cfg.zone_edge();
    let residual = |k: f64| -> Result<f64> { Ok(hopfield(k, wg, cfg)?.energy(branch) - target) };

    let grid: Vec<f64> = (0..=SCAN_POINTS)
        .map(|i| edge * i as f64 / SCAN_POINTS as f64)
        .collect();
    let values = grid.iter().map(|&k| residual(k)).collect::<Result<Vec<_>>>()?;

    let mut brackets = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            brackets.push((grid[i], grid[i]));
        } else if i + 1 < grid.len() && values[i] * values[i + 1] < 0.0 {
            brackets.push((grid[i], grid[i + 1]));
        }
    }
    match brackets.len() {
        0 => {
            let (lo, hi) = values
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                    (lo.min(v), hi.max(v))
                });
            Err(ModelError::NoSolution(format!(
                "{branch} branch spans [{:.9e}, {:.9e}] eV on [0, pi/a]; target {target:.9e} eV is outside",
                lo + target,
                hi + target
            )))
        }
        1 => {
            let (mut lo, mut hi) = brackets[0];
            if lo == hi {
                return Ok(lo);
            }
            let mut f_lo = residual(lo)?;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let f_mid = residual(mid)?;
                if f_mid.abs() < ENERGY_TOLERANCE && (hi - lo) < 1e-9 * edge {
                    return Ok(mid);
                }
                if f_mid == 0.0 {
                    return Ok(mid);
                }
                if f_mid.signum() == f_lo.signum() {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
                if hi - lo <= f64::EPSILON * hi {
                    break;
                }
            }
            let mid = 0.5 * (lo + hi);
            if residual(mid)?.abs() < ENERGY_TOLERANCE {
                Ok(mid)
            } else {
                Err(ModelError::NoSolution(format!(
                    "bisection stalled near k = {mid:e} without reaching {ENERGY_TOLERANCE:e} eV"
                )))
            }
        }
        _ => Err(ModelError::Ambiguous { candidates: brackets }),
    }
}
