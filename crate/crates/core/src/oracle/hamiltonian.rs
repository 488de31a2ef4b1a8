use crate::error::Result;
use crate::lattice::{dipole_coupling_unchecked, SuperLatticeConfig};

use super::basis::PaulionBasis;

/// Largest sector dimension the oracle will build.
pub const MAX_SECTOR_DIM: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingMode {
    /// Intra-cell coupling plus the couplings between adjacent cells only.
    NearestNeighbor,
    /// Every atom pair at its actual separation.
    FullDipole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Periodic,
    Open,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorHamiltonian {
    pub basis: PaulionBasis,
    /// Dense symmetric matrix, row-major, `dim × dim` (eV).
    pub matrix: Vec<f64>,
    pub coupling_mode: CouplingMode,
    pub boundary: Boundary,
    pub transition_energy: f64,
    pub v_dyn: f64,
}

impl SectorHamiltonian {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[i * self.dim() + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    /// Largest `|H_ij - H_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }
}

/// Position of atom `2n + α` along the chain: `n a ∓ R/2`.
fn atom_offset(alpha: usize, cfg: &SuperLatticeConfig) -> f64 {
    if alpha == 0 {
        -0.5 * cfg.atom_spacing
    } else {
        0.5 * cfg.atom_spacing
    }
}

/// Symmetric atom-atom coupling table, row-major `n_atoms × n_atoms`.
fn coupling_table(
    cfg: &SuperLatticeConfig,
    n_cells: usize,
    mode: CouplingMode,
    boundary: Boundary,
) -> Vec<f64> {
    let n_atoms = 2 * n_cells;
    let mut table = vec![0.0; n_atoms * n_atoms];
    let mut add = |i: usize, j: usize, r: f64| {
        let jij = dipole_coupling_unchecked(r, cfg);
        table[i * n_atoms + j] += jij;
        table[j * n_atoms + i] += jij;
    };
    let a = cfg.cell_spacing;
    let length = n_cells as f64 * a;

    match mode {
        CouplingMode::NearestNeighbor => {
            for n in 0..n_cells {
                add(2 * n, 2 * n + 1, cfg.atom_spacing);
            }
            // Bond n -> n+1 at the unwrapped separation. With two periodic
            // cells the forward and wrap-around bonds are distinct and add.
            let bonds = match boundary {
                Boundary::Open => n_cells - 1,
                Boundary::Periodic if n_cells == 1 => 0,
                Boundary::Periodic => n_cells,
            };
            for n in 0..bonds {
                let m = (n + 1) % n_cells;
                for alpha in 0..2 {
                    for beta in 0..2 {
                        let r = (a + atom_offset(beta, cfg) - atom_offset(alpha, cfg)).abs();
                        add(2 * n + alpha, 2 * m + beta, r);
                    }
                }
            }
        }
        CouplingMode::FullDipole => {
            let position = |i: usize| (i / 2) as f64 * a + atom_offset(i % 2, cfg);
            for j in 1..n_atoms {
                for i in 0..j {
                    let mut d = position(j) - position(i);
                    if boundary == Boundary::Periodic {
                        d -= length * (d / length).round();
                    }
                    if d != 0.0 {
                        add(i, j, d.abs());
                    }
                }
            }
        }
    }
    table
}

/// Builds the Hamiltonian of one excitation-number sector.
///
/// Off-diagonal elements move one excitation between two atoms with the
/// dipole coupling of that pair; atoms on different sites commute, so there
/// is no exchange sign. The diagonal is `n_exc E_A` plus `2 V_dyn` for every
/// cell with both atoms excited.
pub fn build_sector(
    cfg: &SuperLatticeConfig,
    n_cells: usize,
    n_exc: usize,
    coupling_mode: CouplingMode,
    boundary: Boundary,
    v_dyn: f64,
) -> Result<SectorHamiltonian> {
    let basis = PaulionBasis::new(n_cells, n_exc, MAX_SECTOR_DIM)?;
    let table = coupling_table(cfg, n_cells, coupling_mode, boundary);
    let n_atoms = basis.n_atoms();
    let dim = basis.dim();
    let mut matrix = vec![0.0; dim * dim];

    for (row, &state) in basis.states.iter().enumerate() {
        matrix[row * dim + row] =
            n_exc as f64 * cfg.transition_energy + 2.0 * v_dyn * basis.doubled_cells(state) as f64;
        for i in (0..n_atoms).filter(|&i| state >> i & 1 == 1) {
            for j in (0..n_atoms).filter(|&j| state >> j & 1 == 0) {
                let jij = table[i * n_atoms + j];
                if jij == 0.0 {
                    continue;
                }
                let target = state ^ (1 << i) ^ (1 << j);
                let col = basis
                    .index_of(target)
                    .expect("hopping conserves excitation number");
                matrix[row * dim + col] += jij;
            }
        }
    }

    Ok(SectorHamiltonian {
        basis,
        matrix,
        coupling_mode,
        boundary,
        transition_energy: cfg.transition_energy,
        v_dyn,
    })
}
