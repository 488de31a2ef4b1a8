//! JSON run configuration. Angles are in degrees, lengths in Å, energies in
//! eV and times in ħ/eV. Every field is optional; missing fields take the
//! reference values, so `{}` is the reference parameter set.

use std::f64::consts::PI;
use std::path::Path;

use darkex_core::preset::{
    REFERENCE_GAMMA_A, REFERENCE_GAMMA_PH, REFERENCE_GAMMA_S, REFERENCE_N_CELLS, REFERENCE_OCCUPATION,
};
use darkex_core::{Complex64, DriveConfig, PumpMode, Setup, SuperLatticeConfig, WaveguideConfig};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LatticeSection {
    /// E_A (eV).
    pub transition_energy: f64,
    /// a (Å).
    pub cell_spacing: f64,
    /// R (Å).
    pub atom_spacing: f64,
    /// μ (e·Å).
    pub dipole: f64,
    pub theta_deg: f64,
    pub n_cells: usize,
}

impl Default for LatticeSection {
    fn default() -> Self {
        Self {
            transition_energy: 1.5,
            cell_spacing: 1000.0,
            atom_spacing: 100.0,
            dipole: 2.5,
            theta_deg: 80.0,
            n_cells: REFERENCE_N_CELLS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WaveguideSection {
    pub epsilon: f64,
    /// q₀ (1/Å); omitted means resonant with E_A at q = 0.
    pub q0: Option<f64>,
    /// u(b).
    pub mode_amplitude: f64,
    /// S̄ (Å²); omitted means πa².
    pub cross_section: Option<f64>,
    /// L (Å); omitted means N a.
    pub length: Option<f64>,
}

impl Default for WaveguideSection {
    fn default() -> Self {
        Self {
            epsilon: 2.0,
            q0: None,
            mode_amplitude: 0.25,
            cross_section: None,
            length: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PumpModeName {
    Prescribed,
    SelfConsistent,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DriveSection {
    /// E - E_a (eV) for single-energy runs.
    pub energy_offset: f64,
    /// F_pump as [re, im] (eV); used by the self-consistent pump.
    pub pump: [f64; 2],
    pub probe_plus: [f64; 2],
    pub probe_minus: [f64; 2],
    pub gamma_ph: f64,
    pub gamma_s: f64,
    pub gamma_a: f64,
    /// Pump wavenumber (1/Å); omitted means the dark resonance k*.
    pub k_pump: Option<f64>,
    /// Probe offset (1/Å); omitted means 10 k_pump.
    pub q: Option<f64>,
    pub pump_mode: PumpModeName,
    /// 𝒩 for the prescribed pump.
    pub occupation: f64,
}

impl Default for DriveSection {
    fn default() -> Self {
        Self {
            energy_offset: 0.0,
            pump: [0.0, 0.0],
            probe_plus: [1.0, 0.0],
            probe_minus: [0.0, 0.0],
            gamma_ph: REFERENCE_GAMMA_PH,
            gamma_s: REFERENCE_GAMMA_S,
            gamma_a: REFERENCE_GAMMA_A,
            k_pump: None,
            q: None,
            pump_mode: PumpModeName::Prescribed,
            occupation: REFERENCE_OCCUPATION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvolveSection {
    /// Integration time (ħ/eV); omitted means 1e6.
    pub t_end: Option<f64>,
    /// RK4 step (ħ/eV); omitted means half the stability limit.
    pub dt: Option<f64>,
    /// Output rows; omitted means 201.
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OracleSection {
    pub band_cells: Vec<usize>,
    pub blocking_cells: Vec<usize>,
    /// V_dyn (eV).
    pub v_dyn: f64,
}

impl Default for OracleSection {
    fn default() -> Self {
        Self {
            band_cells: vec![3, 5, 7],
            blocking_cells: vec![2, 3, 5, 7],
            v_dyn: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepVar {
    #[serde(rename = "theta")]
    Theta,
    #[serde(rename = "k")]
    K,
    #[serde(rename = "E_drive")]
    EDrive,
}

impl SweepVar {
    pub fn name(self) -> &'static str {
        match self {
            SweepVar::Theta => "theta",
            SweepVar::K => "k",
            SweepVar::EDrive => "E_drive",
        }
    }
}

pub const MAX_SWEEP_POINTS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub variable: SweepVar,
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Sweep {
    /// Parses `<var>:<min>:<max>:<n>`.
    pub fn parse(spec: &str) -> CliResult<Self> {
        let parts: Vec<&str> = spec.split(':').collect();
        let [var, min, max, n] = parts.as_slice() else {
            return Err(CliError::Config(format!(
                "sweep must look like <var>:<min>:<max>:<n>, got '{spec}'"
            )));
        };
        let variable = match *var {
            "theta" => SweepVar::Theta,
            "k" => SweepVar::K,
            "E_drive" => SweepVar::EDrive,
            other => {
                return Err(CliError::Config(format!(
                    "sweep variable must be theta, k or E_drive, got '{other}'"
                )))
            }
        };
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad sweep bound '{s}'")))
        };
        let points = n
            .parse::<usize>()
            .map_err(|_| CliError::Config(format!("bad sweep point count '{n}'")))?;
        let sweep = Self {
            variable,
            min: num(min)?,
            max: num(max)?,
            points,
        };
        sweep.validate()?;
        Ok(sweep)
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(2..=MAX_SWEEP_POINTS).contains(&self.points) {
            return Err(CliError::Config(format!(
                "sweep point count must lie in [2, {MAX_SWEEP_POINTS}], got {}",
                self.points
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(CliError::Config(format!(
                "sweep bounds must be finite with min < max, got {}..{}",
                self.min, self.max
            )));
        }
        Ok(())
    }

    pub fn spec(&self) -> String {
        format!(
            "{}:{:e}:{:e}:{}",
            self.variable.name(),
            self.min,
            self.max,
            self.points
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub lattice: LatticeSection,
    pub waveguide: WaveguideSection,
    pub drive: DriveSection,
    pub sweep: Option<Sweep>,
    pub evolve: EvolveSection,
    pub oracle: OracleSection,
}

fn complex(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

impl RunConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::ReadConfig {
            path: path.to_path_buf(),
            source,
        })?;
        let cfg: Self = serde_json::from_str(&text).map_err(|source| CliError::ParseConfig {
            path: path.to_path_buf(),
            source,
        })?;
        if let Some(sweep) = &cfg.sweep {
            sweep.validate()?;
        }
        Ok(cfg)
    }

    pub fn setup(&self) -> CliResult<Setup> {
        let l = &self.lattice;
        let lattice = SuperLatticeConfig::new(
            l.transition_energy,
            l.cell_spacing,
            l.atom_spacing,
            l.dipole,
            l.theta_deg.to_radians(),
            l.n_cells,
        )?;
        let w = &self.waveguide;
        let cross_section = w.cross_section.unwrap_or(PI * l.cell_spacing * l.cell_spacing);
        let length = w.length.unwrap_or_else(|| lattice.length());
        let waveguide = match w.q0 {
            Some(q0) => WaveguideConfig::new(w.epsilon, q0, w.mode_amplitude, cross_section, length)?,
            None => WaveguideConfig::resonant_with(
                l.transition_energy,
                w.epsilon,
                w.mode_amplitude,
                cross_section,
                length,
            )?,
        };
        Ok(Setup::new(lattice, waveguide)?)
    }

    /// Drive for `setup`; the pump wavenumber defaults to the dark resonance.
    pub fn drive(&self, setup: &Setup) -> CliResult<DriveConfig> {
        let d = &self.drive;
        let k_pump = match d.k_pump {
            Some(k) => k,
            None => setup.dark_resonance_k()?,
        };
        let drive = DriveConfig {
            energy: setup.dark_energy() + d.energy_offset,
            pump: complex(d.pump),
            probe_plus: complex(d.probe_plus),
            probe_minus: complex(d.probe_minus),
            gamma_ph: d.gamma_ph,
            gamma_s: d.gamma_s,
            gamma_a: d.gamma_a,
            k_pump,
            q: d.q.unwrap_or(10.0 * k_pump),
            pump_mode: match d.pump_mode {
                PumpModeName::Prescribed => PumpMode::Prescribed {
                    occupation: d.occupation,
                },
                PumpModeName::SelfConsistent => PumpMode::SelfConsistent,
            },
        };
        drive.validate()?;
        Ok(drive)
    }
}
