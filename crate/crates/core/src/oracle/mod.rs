//! Exact diagonalization of the two-level-atom (paulion) Hamiltonian on small
//! lattices.
//!
//! Each atom carries one bit; a basis state is a bitmask over `2 n_cells`
//! atoms with atom `2n + α` being atom α of cell n. Excitation number is
//! conserved, so the Hamiltonian is built one sector at a time. The oracle
//! validates the nearest-neighbour band formulas, the dark-level degeneracy
//! and the energetic exclusion of doubly excited cells.

mod basis;
mod hamiltonian;
mod jacobi;
mod validate;

pub use basis::{binomial, PaulionBasis};
pub use hamiltonian::{build_sector, Boundary, CouplingMode, SectorHamiltonian, MAX_SECTOR_DIM};
pub use jacobi::{diagonalize, diagonalize_matrix, Eigen};
pub use validate::{
    compare_coupling_modes, validate_band, validate_blocking, BandReport, BlockingReport, ModeComparison,
    BAND_TOLERANCE, ORACLE_ATOM_RATIO,
};
