use crate::error::{ModelError, Result};

/// Fixed-excitation-number basis of `2 n_cells` two-level atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaulionBasis {
    pub n_cells: usize,
    pub n_exc: usize,
    /// Occupation bitmasks in ascending order.
    pub states: Vec<u64>,
}

/// `C(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

impl PaulionBasis {
    pub fn new(n_cells: usize, n_exc: usize, max_dim: usize) -> Result<Self> {
        if n_cells == 0 {
            return Err(ModelError::Domain("oracle needs at least one cell".into()));
        }
        if n_exc > 2 {
            return Err(ModelError::Domain(format!(
                "oracle sectors hold 0, 1 or 2 excitations, got {n_exc}"
            )));
        }
        let n_atoms = 2 * n_cells;
        let dim = binomial(n_atoms, n_exc);
        if dim > max_dim {
            return Err(ModelError::SectorTooLarge { dim, limit: max_dim });
        }
        if n_atoms > 64 {
            return Err(ModelError::Domain(format!(
                "bitmask basis holds at most 32 cells, got {n_cells}"
            )));
        }
        let mut states = Vec::with_capacity(dim);
        match n_exc {
            0 => states.push(0),
            1 => states.extend((0..n_atoms).map(|i| 1u64 << i)),
            _ => {
                for j in 1..n_atoms {
                    for i in 0..j {
                        states.push((1u64 << i) | (1u64 << j));
                    }
                }
            }
        }
        states.sort_unstable();
        Ok(Self {
            n_cells,
            n_exc,
            states,
        })
    }

    pub fn n_atoms(&self) -> usize {
        2 * self.n_cells
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn index_of(&self, state: u64) -> Option<usize> {
        self.states.binary_search(&state).ok()
    }

    /// Number of cells whose two atoms are both excited.
    pub fn doubled_cells(&self, state: u64) -> usize {
        (0..self.n_cells)
            .filter(|n| (state >> (2 * n)) & 0b11 == 0b11)
            .count()
    }
}
