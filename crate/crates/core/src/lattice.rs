//! Super-lattice geometry, resonant dipole-dipole couplings and the
//! symmetric (bright) / antisymmetric (dark) exciton levels.
//!
//! Two atoms sit in every unit cell, at `z_n - R/2` and `z_n + R/2` with
//! `z_n = n a`. Within a cell the dipole coupling `J0` splits the two atomic
//! levels into `E_s = E_A + J0` and `E_a = E_A - J0`. Between neighbouring
//! cells only the symmetric combination hops, with amplitude `2J`, giving the
//! band `E_s(k) = E_A + J0 + 4J cos(ka)`.

use std::f64::consts::PI;

use crate::constants::CONSTANTS;
use crate::error::{ModelError, Result};

/// Angle at which `1 - 3cos²θ` vanishes, `arccos(1/√3)`.
pub const MAGIC_ANGLE: f64 = 0.955_316_618_124_509_3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperLatticeConfig {
    /// Atomic transition energy E_A (eV).
    pub transition_energy: f64,
    /// Distance between neighbouring unit-cell centres, a (Å).
    pub cell_spacing: f64,
    /// Distance between the two atoms of one cell, R (Å).
    pub atom_spacing: f64,
    /// Transition dipole μ (e·Å).
    pub dipole: f64,
    /// Angle between the dipole and the lattice axis (rad).
    pub theta: f64,
    /// Number of unit cells, N = 2M + 1.
    pub n_cells: usize,
}

impl SuperLatticeConfig {
    pub fn new(
        transition_energy: f64,
        cell_spacing: f64,
        atom_spacing: f64,
        dipole: f64,
        theta: f64,
        n_cells: usize,
    ) -> Result<Self> {
        let cfg = Self {
            transition_energy,
            cell_spacing,
            atom_spacing,
            dipole,
            theta,
            n_cells,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(ModelError::InvalidConfig(msg));
        if !(self.transition_energy > 0.0) {
            return bad(format!("E_A must be positive, got {}", self.transition_energy));
        }
        if !(self.cell_spacing > 0.0) {
            return bad(format!("a must be positive, got {}", self.cell_spacing));
        }
        if !(self.atom_spacing > 0.0 && self.atom_spacing < self.cell_spacing) {
            return bad(format!(
                "R must satisfy 0 < R < a, got R = {} with a = {}",
                self.atom_spacing, self.cell_spacing
            ));
        }
        if !(self.dipole > 0.0) {
            return bad(format!("dipole must be positive, got {}", self.dipole));
        }
        if !(0.0..=PI / 2.0).contains(&self.theta) {
            return bad(format!("theta must lie in [0, pi/2], got {}", self.theta));
        }
        if self.n_cells < 3 || self.n_cells.is_multiple_of(2) {
            return bad(format!("N must be odd and >= 3, got {}", self.n_cells));
        }
        Ok(())
    }

    /// The orientation factor `1 - 3cos²θ`.
    pub fn angular_factor(&self) -> f64 {
        let c = self.theta.cos();
        1.0 - 3.0 * c * c
    }

    /// Lattice length `N a`.
    pub fn length(&self) -> f64 {
        self.n_cells as f64 * self.cell_spacing
    }

    /// Edge of the first Brillouin zone, `π/a`.
    pub fn zone_edge(&self) -> f64 {
        PI / self.cell_spacing
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }
}

/// On-cell levels and couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitonLevels {
    /// E_s = E_A + J0.
    pub symmetric: f64,
    /// E_a = E_A - J0.
    pub antisymmetric: f64,
    /// Intra-cell coupling J0 (distance R).
    pub intracell: f64,
    /// Nearest-neighbour inter-cell coupling J (distance a).
    pub intercell: f64,
}

/// The three nearest-neighbour couplings between cells `n` and `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntercellCouplings {
    /// J¹¹ = J²², same-species atoms, distance a.
    pub same: f64,
    /// J¹², atom 1 of cell n to atom 2 of cell n+1, distance a + R.
    pub outer: f64,
    /// J²¹, atom 2 of cell n to atom 1 of cell n+1, distance a - R.
    pub inner: f64,
}

/// Resonant dipole-dipole coupling `μ²(1 - 3cos²θ) / (4πε₀ r³)`.
pub fn dipole_coupling(r: f64, cfg: &SuperLatticeConfig) -> Result<f64> {
    if !(r > 0.0) {
        return Err(ModelError::Domain(format!(
            "dipole coupling needs r > 0, got {r}"
        )));
    }
    Ok(dipole_coupling_unchecked(r, cfg))
}

pub(crate) fn dipole_coupling_unchecked(r: f64, cfg: &SuperLatticeConfig) -> f64 {
    CONSTANTS.coulomb * cfg.dipole * cfg.dipole * cfg.angular_factor() / (r * r * r)
}

pub fn exciton_levels(cfg: &SuperLatticeConfig) -> ExcitonLevels {
    let j0 = dipole_coupling_unchecked(cfg.atom_spacing, cfg);
    let j = dipole_coupling_unchecked(cfg.cell_spacing, cfg);
    ExcitonLevels {
        symmetric: cfg.transition_energy + j0,
        antisymmetric: cfg.transition_energy - j0,
        intracell: j0,
        intercell: j,
    }
}

pub fn intercell_couplings(cfg: &SuperLatticeConfig) -> Result<IntercellCouplings> {
    let (a, r) = (cfg.cell_spacing, cfg.atom_spacing);
    if !(a > r) {
        return Err(ModelError::Domain(format!(
            "inter-cell couplings need a > R, got a = {a}, R = {r}"
        )));
    }
    Ok(IntercellCouplings {
        same: dipole_coupling(a, cfg)?,
        outer: dipole_coupling(a + r, cfg)?,
        inner: dipole_coupling(a - r, cfg)?,
    })
}

/// Fold `k` into the zone `(-π/a, π/a]`.
pub fn fold_wavenumber(k: f64, cell_spacing: f64) -> f64 {
    let g = 2.0 * PI / cell_spacing;
    let mut folded = k - g * (k / g).round();
    if folded <= -PI / cell_spacing {
        folded += g;
    }
    folded
}

/// Nearest-neighbour symmetric band `E_A + J0 + 4J cos(ka)`.
pub fn symmetric_band(k: f64, cfg: &SuperLatticeConfig) -> Result<f64> {
    // A little slack so that a grid ending exactly on π/a is accepted.
    let edge = cfg.zone_edge() * (1.0 + 1e-12);
    if !(k.abs() <= edge) {
        return Err(ModelError::Domain(format!(
            "k = {k:e} lies outside the first Brillouin zone |k| <= {:e}",
            cfg.zone_edge()
        )));
    }
    Ok(symmetric_band_unchecked(k, cfg))
}

pub(crate) fn symmetric_band_unchecked(k: f64, cfg: &SuperLatticeConfig) -> f64 {
    let lv = exciton_levels(cfg);
    lv.symmetric + 4.0 * lv.intercell * (k * cfg.cell_spacing).cos()
}

/// Dispersion-less dark level `E_A - J0`.
pub fn antisymmetric_energy(cfg: &SuperLatticeConfig) -> f64 {
    exciton_levels(cfg).antisymmetric
}

/// `2πp/(Na)` for `p = -M..=M`, ascending.
pub fn allowed_wavenumbers(cfg: &SuperLatticeConfig) -> Vec<f64> {
    wavenumbers_for(cfg.n_cells, cfg.cell_spacing)
}

pub(crate) fn wavenumbers_for(n_cells: usize, cell_spacing: f64) -> Vec<f64> {
    let m = (n_cells / 2) as i64;
    let step = 2.0 * PI / (n_cells as f64 * cell_spacing);
    (-m..=m).map(|p| p as f64 * step).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn reference() -> SuperLatticeConfig {
        SuperLatticeConfig::new(1.5, 1000.0, 100.0, 2.5, 80f64.to_radians(), 101).unwrap()
    }

    #[test]
    fn magic_angle_constant() {
        assert_relative_eq!(MAGIC_ANGLE, (1.0 / 3f64.sqrt()).acos(), max_relative = 1e-15);
    }

    #[test]
    fn dipole_coupling_examples() {
        let cfg = reference();
        assert_relative_eq!(
            dipole_coupling(100.0, &cfg).unwrap(),
            8.185648576659407e-5,
            max_relative = 1e-10
        );
        let magic = cfg.with_theta(MAGIC_ANGLE);
        assert!(dipole_coupling(100.0, &magic).unwrap().abs() < 1e-20);
        let axial = cfg.with_theta(0.0);
        assert_relative_eq!(
            dipole_coupling(100.0, &axial).unwrap(),
            -1.7999556250e-4,
            max_relative = 1e-9
        );
    }

    #[test]
    fn dipole_coupling_rejects_nonpositive_distance() {
        let cfg = reference();
        assert!(matches!(dipole_coupling(0.0, &cfg), Err(ModelError::Domain(_))));
        assert!(matches!(dipole_coupling(-3.0, &cfg), Err(ModelError::Domain(_))));
    }

    #[test]
    fn levels_at_reference_point() {
        let lv = exciton_levels(&reference());
        assert_relative_eq!(lv.intracell, 8.185648576659407e-5, max_relative = 1e-10);
        assert_relative_eq!(lv.intercell, 8.185648576659408e-8, max_relative = 1e-10);
        assert_eq!(lv.symmetric, 1.5 + lv.intracell);
        assert_eq!(lv.antisymmetric, 1.5 - lv.intracell);
    }

    #[test]
    fn levels_degenerate_at_magic_angle() {
        let lv = exciton_levels(&reference().with_theta(MAGIC_ANGLE));
        assert!((lv.symmetric - 1.5).abs() < 1e-15);
        assert!((lv.antisymmetric - 1.5).abs() < 1e-15);
    }

    #[test]
    fn axial_dipoles_put_bright_level_below() {
        let lv = exciton_levels(&reference().with_theta(0.0));
        assert!(lv.symmetric < 1.5 && 1.5 < lv.antisymmetric);
        assert_relative_eq!(lv.antisymmetric - 1.5, 1.7999556250e-4, max_relative = 1e-9);
    }

    #[test]
    fn intercell_examples() {
        let c = intercell_couplings(&reference()).unwrap();
        assert_relative_eq!(c.same, 8.185648576659408e-8, max_relative = 1e-10);
        assert_relative_eq!(c.outer, 6.149998930623146e-8, max_relative = 1e-10);
        assert_relative_eq!(c.inner, 1.1228598870589036e-7, max_relative = 1e-10);

        let mut tiny = reference();
        tiny.atom_spacing = 1e-9;
        let c = intercell_couplings(&tiny).unwrap();
        assert_relative_eq!(c.outer, c.same, max_relative = 1e-10);
        assert_relative_eq!(c.inner, c.same, max_relative = 1e-10);

        let c = intercell_couplings(&reference().with_theta(MAGIC_ANGLE)).unwrap();
        assert!(c.same.abs() < 1e-22 && c.outer.abs() < 1e-22 && c.inner.abs() < 1e-22);
    }

    #[test]
    fn intercell_rejects_overlapping_cells() {
        let mut cfg = reference();
        cfg.atom_spacing = cfg.cell_spacing;
        assert!(matches!(intercell_couplings(&cfg), Err(ModelError::Domain(_))));
    }

    #[test]
    fn band_examples() {
        let cfg = reference();
        let lv = exciton_levels(&cfg);
        assert_relative_eq!(
            symmetric_band(0.0, &cfg).unwrap(),
            1.5 + 8.185648576659407e-5 + 4.0 * 8.185648576659408e-8,
            max_relative = 1e-14
        );
        let quarter = PI / (2.0 * cfg.cell_spacing);
        assert!((symmetric_band(quarter, &cfg).unwrap() - lv.symmetric).abs() < 1e-15);
        let magic = cfg.with_theta(MAGIC_ANGLE);
        for k in [0.0, 1e-4, -2e-3, cfg.zone_edge()] {
            assert!((symmetric_band(k, &magic).unwrap() - 1.5).abs() < 1e-15);
        }
    }

    #[test]
    fn band_rejects_out_of_zone() {
        let cfg = reference();
        assert!(symmetric_band(1.01 * cfg.zone_edge(), &cfg).is_err());
        assert!(symmetric_band(cfg.zone_edge(), &cfg).is_ok());
    }

    #[test]
    fn antisymmetric_examples() {
        let cfg = reference();
        assert_relative_eq!(
            antisymmetric_energy(&cfg),
            1.5 - 8.185648576659407e-5,
            max_relative = 1e-14
        );
        assert!((antisymmetric_energy(&cfg.with_theta(MAGIC_ANGLE)) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn wavenumber_grid() {
        let mut cfg = reference();
        cfg.n_cells = 3;
        let ks = allowed_wavenumbers(&cfg);
        let step = 2.0 * PI / 3000.0;
        assert_eq!(ks.len(), 3);
        assert_relative_eq!(ks[0], -step);
        assert_eq!(ks[1], 0.0);
        assert_relative_eq!(ks[2], step);
        cfg.n_cells = 5;
        let ks = allowed_wavenumbers(&cfg);
        assert_eq!(ks.len(), 5);
        for w in ks.windows(2) {
            assert_relative_eq!(w[1] - w[0], 2.0 * PI / 5000.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn config_validation() {
        assert!(SuperLatticeConfig::new(1.5, 1000.0, 100.0, 2.5, 0.3, 4).is_err());
        assert!(SuperLatticeConfig::new(1.5, 1000.0, 100.0, 2.5, 0.3, 1).is_err());
        assert!(SuperLatticeConfig::new(1.5, 100.0, 100.0, 2.5, 0.3, 5).is_err());
        assert!(SuperLatticeConfig::new(1.5, 1000.0, 100.0, 2.5, 2.0, 5).is_err());
        assert!(SuperLatticeConfig::new(-1.5, 1000.0, 100.0, 2.5, 0.3, 5).is_err());
        assert!(SuperLatticeConfig::new(1.5, 1000.0, 100.0, 0.0, 0.3, 5).is_err());
    }

    #[test]
    fn folding() {
        let a = 1000.0;
        let edge = PI / a;
        assert_relative_eq!(fold_wavenumber(0.5 * edge, a), 0.5 * edge);
        assert_relative_eq!(fold_wavenumber(1.5 * edge, a), -0.5 * edge, epsilon = 1e-18);
        assert_relative_eq!(fold_wavenumber(-edge, a), edge, epsilon = 1e-18);
    }

    #[test]
    fn sign_flip_is_monotone_through_magic_angle() {
        let cfg = reference();
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=900 {
            let th = (i as f64 / 10.0).to_radians();
            let j = dipole_coupling(50.0, &cfg.with_theta(th)).unwrap();
            assert!(j > prev);
            if th < MAGIC_ANGLE - 1e-9 {
                assert!(j < 0.0);
            } else if th > MAGIC_ANGLE + 1e-9 {
                assert!(j > 0.0);
            }
            prev = j;
        }
    }

    fn arb_config() -> impl Strategy<Value = SuperLatticeConfig> {
        (
            0.5f64..3.0,
            200f64..5000.0,
            0.01f64..0.9,
            0.5f64..5.0,
            0.0f64..PI / 2.0,
            1usize..6,
        )
            .prop_map(|(ea, a, rfrac, mu, th, m)| SuperLatticeConfig {
                transition_energy: ea,
                cell_spacing: a,
                atom_spacing: rfrac * a,
                dipole: mu,
                theta: th,
                n_cells: 2 * m + 1,
            })
    }

    proptest! {
        #[test]
        fn levels_sum_to_twice_transition(cfg in arb_config()) {
            let lv = exciton_levels(&cfg);
            prop_assert!((lv.symmetric + lv.antisymmetric - 2.0 * cfg.transition_energy).abs()
                <= 4.0 * f64::EPSILON * cfg.transition_energy);
            prop_assert!(lv.intracell.signum() == lv.intercell.signum() || lv.intracell == 0.0);
        }

        #[test]
        fn band_averages_to_symmetric_level(cfg in arb_config()) {
            let ks = allowed_wavenumbers(&cfg);
            let mean = ks.iter().map(|&k| symmetric_band(k, &cfg).unwrap()).sum::<f64>()
                / ks.len() as f64;
            let es = exciton_levels(&cfg).symmetric;
            prop_assert!((mean - es).abs() <= 1e-12 * es);
        }

        #[test]
        fn dipole_scales_as_inverse_cube(cfg in arb_config(), r in 1.0f64..1e4) {
            let near = dipole_coupling(r, &cfg).unwrap();
            let far = dipole_coupling(2.0 * r, &cfg).unwrap();
            prop_assert!((far - near / 8.0).abs() <= 1e-12 * near.abs());
        }
    }
}
