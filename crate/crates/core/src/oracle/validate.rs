//! Oracle checks of the analytic band and of the double-excitation exclusion.

use crate::error::{ModelError, Result};
use crate::lattice::{exciton_levels, symmetric_band_unchecked, wavenumbers_for, SuperLatticeConfig};

use super::basis::binomial;
use super::hamiltonian::{build_sector, Boundary, CouplingMode};
use super::jacobi::diagonalize;

/// Band deviations are judged in units of the inter-cell coupling |J|.
pub const BAND_TOLERANCE: f64 = 1e-3;

/// Atom spacing used by [`validate_band`], as a fraction of the cell spacing.
pub const ORACLE_ATOM_RATIO: f64 = 0.01;

#[derive(Debug, Clone, PartialEq)]
pub struct BandReport {
    pub n_cells: usize,
    /// Atom spacing R actually used (Å).
    pub atom_spacing: f64,
    /// Inter-cell coupling J at the oracle geometry (eV).
    pub intercell: f64,
    pub dark_level: f64,
    /// Oracle eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// `{E_a × N} ∪ {E_s(k)}`, ascending.
    pub analytic: Vec<f64>,
    /// Largest difference between the sorted spectra (eV).
    pub max_deviation: f64,
    /// `max_deviation / |J|`.
    pub relative_deviation: f64,
    /// Eigenvalues within `BAND_TOLERANCE |J|` of E_a.
    pub dark_count: usize,
    pub within_tolerance: bool,
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

/// Compares the periodic nearest-neighbour single-excitation spectrum with
/// the analytic dark level and symmetric band. The atom spacing is replaced
/// by `ORACLE_ATOM_RATIO · a`.
pub fn validate_band(cfg: &SuperLatticeConfig, n_cells: usize) -> Result<BandReport> {
    if !(3..=7).contains(&n_cells) || n_cells.is_multiple_of(2) {
        return Err(ModelError::Domain(format!(
            "band validation needs an odd cell count in 3..=7, got {n_cells}"
        )));
    }
    let mut small = *cfg;
    small.atom_spacing = ORACLE_ATOM_RATIO * cfg.cell_spacing;
    small.n_cells = n_cells;

    let h = build_sector(
        &small,
        n_cells,
        1,
        CouplingMode::NearestNeighbor,
        Boundary::Periodic,
        0.0,
    )?;
    let eigenvalues = diagonalize(&h).values;

    let levels = exciton_levels(&small);
    let mut analytic = vec![levels.antisymmetric; n_cells];
    analytic.extend(
        wavenumbers_for(n_cells, small.cell_spacing)
            .into_iter()
            .map(|k| symmetric_band_unchecked(k, &small)),
    );
    let analytic = sorted(analytic);

    let max_deviation = max_abs_diff(&eigenvalues, &analytic);
    let j = levels.intercell.abs();
    let relative_deviation = if j > 0.0 {
        max_deviation / j
    } else if max_deviation == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let dark_count = eigenvalues
        .iter()
        .filter(|&&e| (e - levels.antisymmetric).abs() <= BAND_TOLERANCE * j)
        .count();

    Ok(BandReport {
        n_cells,
        atom_spacing: small.atom_spacing,
        intercell: levels.intercell,
        dark_level: levels.antisymmetric,
        eigenvalues,
        analytic,
        max_deviation,
        relative_deviation,
        dark_count,
        within_tolerance: relative_deviation < BAND_TOLERANCE,
    })
}

/// Spectral distances between the two coupling modes and the analytic band,
/// all at the configuration's own geometry (eV).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeComparison {
    pub cell_spacing: f64,
    pub nearest_vs_full: f64,
    pub nearest_vs_analytic: f64,
    pub full_vs_analytic: f64,
}

pub fn compare_coupling_modes(cfg: &SuperLatticeConfig, n_cells: usize) -> Result<ModeComparison> {
    let spectrum = |mode| -> Result<Vec<f64>> {
        let h = build_sector(cfg, n_cells, 1, mode, Boundary::Periodic, 0.0)?;
        Ok(diagonalize(&h).values)
    };
    let nearest = spectrum(CouplingMode::NearestNeighbor)?;
    let full = spectrum(CouplingMode::FullDipole)?;
    let levels = exciton_levels(cfg);
    let mut analytic = vec![levels.antisymmetric; n_cells];
    analytic.extend(
        wavenumbers_for(n_cells, cfg.cell_spacing)
            .into_iter()
            .map(|k| symmetric_band_unchecked(k, cfg)),
    );
    let analytic = sorted(analytic);
    Ok(ModeComparison {
        cell_spacing: cfg.cell_spacing,
        nearest_vs_full: max_abs_diff(&nearest, &full),
        nearest_vs_analytic: max_abs_diff(&nearest, &analytic),
        full_vs_analytic: max_abs_diff(&full, &analytic),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockingReport {
    pub n_cells: usize,
    pub v_dyn: f64,
    pub dim: usize,
    pub expected_dim: usize,
    /// Every basis state has exactly two excitations on distinct atoms.
    pub structural_ok: bool,
    /// Eigenvalues of the states dominated by doubly excited cells.
    pub cluster: Vec<f64>,
    /// Mean of `cluster` minus 2E_A (eV).
    pub cluster_offset: f64,
    /// Reference two-exciton energies 2E_s, 2E_a, E_s + E_a.
    pub manifolds: Vec<(&'static str, f64)>,
    /// Smallest distance from a cluster eigenvalue to a reference energy.
    pub min_gap: f64,
    /// Scale of the single-exciton couplings, |J0| + 4|J|.
    pub coupling_scale: f64,
    /// True when `min_gap > 2 · coupling_scale`.
    pub separated: bool,
}

/// Diagonalizes the periodic nearest-neighbour two-excitation sector and
/// locates the doubly-excited-cell cluster relative to the pair manifolds.
pub fn validate_blocking(cfg: &SuperLatticeConfig, n_cells: usize, v_dyn: f64) -> Result<BlockingReport> {
    let h = build_sector(
        cfg,
        n_cells,
        2,
        CouplingMode::NearestNeighbor,
        Boundary::Periodic,
        v_dyn,
    )?;
    let dim = h.dim();
    let expected_dim = binomial(2 * n_cells, 2);
    let structural_ok = h.basis.states.iter().all(|s| s.count_ones() == 2);
    let eig = diagonalize(&h);

    let doubled: Vec<bool> = h
        .basis
        .states
        .iter()
        .map(|&s| h.basis.doubled_cells(s) > 0)
        .collect();
    let mut weighted: Vec<(f64, f64)> = (0..dim)
        .map(|k| {
            let weight = eig
                .vector(k)
                .iter()
                .zip(&doubled)
                .filter(|(_, &d)| d)
                .map(|(x, _)| x * x)
                .sum();
            (weight, eig.values[k])
        })
        .collect();
    weighted.sort_by(|a, b| b.0.total_cmp(&a.0));
    let cluster = sorted(weighted.iter().take(n_cells).map(|&(_, e)| e).collect());
    let cluster_offset = cluster.iter().sum::<f64>() / cluster.len() as f64 - 2.0 * cfg.transition_energy;

    let lv = exciton_levels(cfg);
    let manifolds = vec![
        ("2E_s", 2.0 * lv.symmetric),
        ("2E_a", 2.0 * lv.antisymmetric),
        ("E_s+E_a", lv.symmetric + lv.antisymmetric),
    ];
    let min_gap = cluster
        .iter()
        .flat_map(|e| manifolds.iter().map(move |(_, m)| (e - m).abs()))
        .fold(f64::INFINITY, f64::min);
    let coupling_scale = lv.intracell.abs() + 4.0 * lv.intercell.abs();

    Ok(BlockingReport {
        n_cells,
        v_dyn,
        dim,
        expected_dim,
        structural_ok,
        cluster,
        cluster_offset,
        manifolds,
        min_gap,
        coupling_scale,
        separated: min_gap > 2.0 * coupling_scale,
    })
}
