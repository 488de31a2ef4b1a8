//! Mean-field pump-probe model for parametric excitation of dark excitons.
//!
//! A pump drives lower polaritons at `k`; a probe at `k ± q` seeds the dark
//! excitons. Two pumped polaritons scatter into a dark pair at `k + q` and
//! `k - q`, so in the frame rotating at the drive energy `E` the dark
//! amplitudes obey
//!
//! ```text
//! iħ dB₊/dt = (Ẽ_a - E - iħΓ_a) B₊ + W B₋* + F₊
//! iħ dB₋/dt = (Ẽ_a - E - iħΓ_a) B₋ + W B₊* + F₋
//! ```
//!
//! with `Ẽ_a = E_a + 2Δ̃𝒩`, `W = Δ̃ 𝒜²` and `|W| = V_mf = Δ̃𝒩`. The pumped
//! polariton obeys `iħ d𝒜/dt = (E_pol + ΔX⁴|𝒜|² - E - iħΓ_pol) 𝒜 + F_pump`;
//! dark-exciton back-action on the pump is neglected.

use num_complex::Complex64;

use crate::error::{ModelError, Result};
use crate::kinematic::{interaction_params, InteractionParams};
use crate::lattice::{antisymmetric_energy, SuperLatticeConfig};
use crate::polariton::{hopfield, Branch, HopfieldMode};
use crate::rk4;
use crate::waveguide::WaveguideConfig;

/// How the pumped polariton population is fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PumpMode {
    /// Occupation `𝒩` given directly; the pump is a classical field with real
    /// amplitude `√𝒩` and the matching pump strength is implied.
    Prescribed { occupation: f64 },
    /// Solve `𝒩 = |F|² / ((E - Ẽ_pol(𝒩))² + (ħΓ_pol)²)` for the given pump.
    SelfConsistent,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveConfig {
    /// Common pump/probe energy E (eV); the rotating-frame reference.
    pub energy: f64,
    /// Pump amplitude F_pump (eV). Ignored in [`PumpMode::Prescribed`].
    pub pump: Complex64,
    /// Probe amplitude at k + q (eV).
    pub probe_plus: Complex64,
    /// Probe amplitude at k - q (eV).
    pub probe_minus: Complex64,
    /// ħΓ_ph (eV).
    pub gamma_ph: f64,
    /// ħΓ_s (eV).
    pub gamma_s: f64,
    /// ħΓ_a (eV).
    pub gamma_a: f64,
    pub k_pump: f64,
    /// Probe offset. Dark excitons are dispersion-less, so q only labels modes.
    pub q: f64,
    pub pump_mode: PumpMode,
}

impl DriveConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(ModelError::InvalidConfig(msg));
        if !(self.energy > 0.0) {
            return bad(format!("drive energy must be positive, got {}", self.energy));
        }
        for (name, g) in [
            ("gamma_ph", self.gamma_ph),
            ("gamma_s", self.gamma_s),
            ("gamma_a", self.gamma_a),
        ] {
            if !(g >= 0.0) {
                return bad(format!("{name} must be non-negative, got {g}"));
            }
        }
        if let PumpMode::Prescribed { occupation } = self.pump_mode {
            if !(occupation >= 0.0) {
                return bad(format!("occupation must be non-negative, got {occupation}"));
            }
        }
        Ok(())
    }

    pub fn with_energy(mut self, energy: f64) -> Self {
        self.energy = energy;
        self
    }

    /// Normalisation of the scaled intensities, `|F₊|² + |F₋|²`.
    pub fn probe_intensity(&self) -> f64 {
        self.probe_plus.norm_sqr() + self.probe_minus.norm_sqr()
    }
}

/// Steady pumped-polariton state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PumpState {
    /// 𝒩_k.
    pub occupation: f64,
    /// 𝒜̃_k.
    pub amplitude: Complex64,
    /// Pump strength that sustains `amplitude`; equals the configured pump in
    /// self-consistent mode.
    pub pump: Complex64,
    /// Ẽ_pol = E_pol + ΔX⁴𝒩.
    pub renormalized_energy: f64,
    /// ħΓ_pol.
    pub damping: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub pump_amplitude: Complex64,
    pub occupation: f64,
    pub dark_plus: Complex64,
    pub dark_minus: Complex64,
    pub intensity_plus: f64,
    pub intensity_minus: f64,
    /// Ẽ_a = E_a + 2Δ̃𝒩.
    pub dark_energy: f64,
    /// Ẽ_pol.
    pub polariton_energy: f64,
    /// V_mf = Δ̃𝒩.
    pub coupling: f64,
    /// Ẽ_± = Ẽ_a ± √(V_mf² - (ħΓ_a)²), present while the radicand is positive.
    pub resonances: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    /// E - E_a (eV).
    pub offset: f64,
    /// ℐ_{k-q} / ℐ^probe.
    pub minus: f64,
    /// ℐ_{k+q} / ℐ^probe.
    pub plus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    /// Time in units of ħ/eV.
    pub t: f64,
    pub polariton: Complex64,
    pub dark_plus: Complex64,
    pub dark_minus: Complex64,
}

/// `ħΓ_pol = ½|X|² ħΓ_s + ½|Y|² ħΓ_ph` on the lower branch.
pub fn polariton_damping(mode: &HopfieldMode, drive: &DriveConfig) -> f64 {
    0.5 * mode.exciton_fraction(Branch::Lower) * drive.gamma_s
        + 0.5 * mode.photon_fraction(Branch::Lower) * drive.gamma_ph
}

const MAX_FIXED_POINT_ITERATIONS: usize = 10_000;
const FIXED_POINT_TOLERANCE: f64 = 1e-12;

/// Pump-probe model around one pumped lower-polariton mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PumpProbe {
    /// Bare dark level E_a.
    pub dark_level: f64,
    pub mode: HopfieldMode,
    pub params: InteractionParams,
}

impl PumpProbe {
    pub fn new(cfg: &SuperLatticeConfig, wg: &WaveguideConfig, k_pump: f64) -> Result<Self> {
        let mode = hopfield(k_pump, wg, cfg)?;
        let params = interaction_params(wg, cfg, mode.exciton_fraction(Branch::Lower))?;
        Ok(Self::from_parts(antisymmetric_energy(cfg), mode, params))
    }

    pub fn from_parts(dark_level: f64, mode: HopfieldMode, params: InteractionParams) -> Self {
        Self {
            dark_level,
            mode,
            params,
        }
    }

    /// ΔX⁴, the polariton self-interaction shift per polariton.
    fn kerr(&self) -> f64 {
        self.params.delta_tilde * self.params.exciton_fraction
    }

    pub fn pump_occupation(&self, drive: &DriveConfig) -> Result<PumpState> {
        self.pump_occupation_with_limit(drive, MAX_FIXED_POINT_ITERATIONS)
    }

    fn pump_occupation_with_limit(&self, drive: &DriveConfig, max_iter: usize) -> Result<PumpState> {
        drive.validate()?;
        let damping = polariton_damping(&self.mode, drive);
        let e_pol = self.mode.lower_energy;
        let kerr = self.kerr();
        // Subtract the two large energies once so that the map is smooth in n.
        let detuning = e_pol - drive.energy;
        let frame = |n: f64| Complex64::new(detuning + kerr * n, -damping);

        match drive.pump_mode {
            PumpMode::Prescribed { occupation } => {
                let amplitude = Complex64::new(occupation.sqrt(), 0.0);
                Ok(PumpState {
                    occupation,
                    amplitude,
                    pump: -frame(occupation) * amplitude,
                    renormalized_energy: e_pol + kerr * occupation,
                    damping,
                })
            }
            PumpMode::SelfConsistent => {
                let f2 = drive.pump.norm_sqr();
                let map = |n: f64| {
                    let z = frame(n);
                    let g = f2 / z.norm_sqr();
                    (g, -2.0 * kerr * z.re * g / z.norm_sqr())
                };
                let occupation = solve_fixed_point(map, f2, damping, max_iter)?;
                let amplitude = -drive.pump / frame(occupation);
                Ok(PumpState {
                    occupation,
                    amplitude,
                    pump: drive.pump,
                    renormalized_energy: e_pol + kerr * occupation,
                    damping,
                })
            }
        }
    }

    pub fn steady_state(&self, drive: &DriveConfig) -> Result<SteadyState> {
        let pump = self.pump_occupation(drive)?;
        let dt = self.params.delta_tilde;
        let n = pump.occupation;
        let anomalous = dt * pump.amplitude * pump.amplitude;
        let coupling = dt * n;
        let dark_energy = self.dark_level + 2.0 * dt * n;
        let detuning = dark_energy - drive.energy;
        let gamma = drive.gamma_a;

        // Unknowns (B₊, B₋*):
        //   (d - iγ) B₊ + W B₋*       = -F₊
        //   W* B₊       + (d + iγ) B₋* = -F₋*
        let lower = Complex64::new(detuning, -gamma);
        let upper = Complex64::new(detuning, gamma);
        let det = detuning * detuning + gamma * gamma - anomalous.norm_sqr();
        let scale = detuning * detuning + gamma * gamma + anomalous.norm_sqr();
        if det.abs() <= 4.0 * f64::EPSILON * scale {
            return Err(ModelError::Pole { energy: drive.energy });
        }
        let f_plus = drive.probe_plus;
        let f_minus_c = drive.probe_minus.conj();
        let dark_plus = (-f_plus * upper + anomalous * f_minus_c) / det;
        let dark_minus = ((-lower * f_minus_c + anomalous.conj() * f_plus) / det).conj();

        let radicand = coupling * coupling - gamma * gamma;
        let resonances = (radicand > 0.0).then(|| {
            let s = radicand.sqrt();
            (dark_energy + s, dark_energy - s)
        });

        Ok(SteadyState {
            pump_amplitude: pump.amplitude,
            occupation: n,
            dark_plus,
            dark_minus,
            intensity_plus: dark_plus.norm_sqr(),
            intensity_minus: dark_minus.norm_sqr(),
            dark_energy,
            polariton_energy: pump.renormalized_energy,
            coupling,
            resonances,
        })
    }

    /// Scaled dark intensities over a grid of absolute drive energies.
    /// Grid points that land exactly on a pole report infinite intensity.
    pub fn spectrum(&self, drive: &DriveConfig, energies: &[f64]) -> Result<Vec<SpectrumPoint>> {
        let norm = drive.probe_intensity();
        if !(norm > 0.0) {
            return Err(ModelError::Domain(
                "spectrum needs a non-zero probe amplitude".into(),
            ));
        }
        energies
            .iter()
            .map(|&e| {
                let offset = e - self.dark_level;
                match self.steady_state(&drive.with_energy(e)) {
                    Ok(ss) => Ok(SpectrumPoint {
                        offset,
                        minus: ss.intensity_minus / norm,
                        plus: ss.intensity_plus / norm,
                    }),
                    Err(ModelError::Pole { .. }) => Ok(SpectrumPoint {
                        offset,
                        minus: f64::INFINITY,
                        plus: f64::INFINITY,
                    }),
                    Err(e) => Err(e),
                }
            })
            .collect()
    }

    /// Largest rotating-frame rate of the linearised dynamics (eV).
    fn fastest_rate(&self, drive: &DriveConfig, pump: &PumpState) -> f64 {
        let ss_dark = self.dark_level + 2.0 * self.params.delta_tilde * pump.occupation;
        let mut rate = (ss_dark - drive.energy)
            .abs()
            .max(self.params.delta_tilde * pump.occupation)
            .max(drive.gamma_a);
        if drive.pump_mode == PumpMode::SelfConsistent {
            rate = rate
                .max((pump.renormalized_energy - drive.energy).abs())
                .max((self.mode.lower_energy - drive.energy).abs())
                .max(pump.damping);
        }
        rate
    }

    fn step_limit(&self, drive: &DriveConfig, pump: &PumpState) -> f64 {
        let rate = self.fastest_rate(drive, pump);
        if rate > 0.0 {
            0.1 / rate
        } else {
            f64::INFINITY
        }
    }

    /// Largest RK4 step accepted by [`PumpProbe::time_evolve`] (ħ/eV).
    pub fn max_stable_step(&self, drive: &DriveConfig) -> Result<f64> {
        let pump = self.pump_occupation(drive)?;
        Ok(self.step_limit(drive, &pump))
    }

    /// Integrates the mean-field equations from zero dark amplitudes with
    /// classical RK4 and returns `samples` evenly spaced points including
    /// `t = 0` and `t = t_end`.
    ///
    /// In [`PumpMode::Prescribed`] the polariton amplitude is held at its
    /// steady value `√𝒩`; in [`PumpMode::SelfConsistent`] it starts from zero
    /// and is integrated together with the dark amplitudes.
    pub fn time_evolve(
        &self,
        drive: &DriveConfig,
        t_end: f64,
        dt: f64,
        samples: usize,
    ) -> Result<Vec<TrajectoryPoint>> {
        if !(t_end > 0.0 && dt > 0.0) {
            return Err(ModelError::Domain(format!(
                "need t_end > 0 and dt > 0, got t_end = {t_end}, dt = {dt}"
            )));
        }
        if samples < 2 {
            return Err(ModelError::Domain(format!(
                "need at least 2 samples, got {samples}"
            )));
        }
        let pump = self.pump_occupation(drive)?;
        let limit = self.step_limit(drive, &pump);
        if dt >= limit {
            return Err(ModelError::StepSize { dt, limit });
        }

        let steps = (t_end / dt).ceil() as usize;
        let h = t_end / steps as f64;
        let dtl = self.params.delta_tilde;
        let kerr = self.kerr();
        let e = drive.energy;
        let e_pol = self.mode.lower_energy;
        let gamma_pol = pump.damping;
        let dynamic = drive.pump_mode == PumpMode::SelfConsistent;
        let minus_i = Complex64::new(0.0, -1.0);

        let rhs = |y: &[Complex64; 3]| -> [Complex64; 3] {
            let a = y[0];
            let n = a.norm_sqr();
            let da = if dynamic {
                minus_i * (Complex64::new(e_pol + kerr * n - e, -gamma_pol) * a + drive.pump)
            } else {
                Complex64::new(0.0, 0.0)
            };
            let frame = Complex64::new(self.dark_level + 2.0 * dtl * n - e, -drive.gamma_a);
            let w = dtl * a * a;
            let dp = minus_i * (frame * y[1] + w * y[2].conj() + drive.probe_plus);
            let dm = minus_i * (frame * y[2] + w * y[1].conj() + drive.probe_minus);
            [da, dp, dm]
        };

        let zero = Complex64::new(0.0, 0.0);
        let mut y = [if dynamic { zero } else { pump.amplitude }, zero, zero];
        let record = |t: f64, y: &[Complex64; 3]| TrajectoryPoint {
            t,
            polariton: y[0],
            dark_plus: y[1],
            dark_minus: y[2],
        };

        let sample_at = |j: usize| (j as u128 * steps as u128 / (samples - 1) as u128) as usize;
        let mut out = Vec::with_capacity(samples);
        out.push(record(0.0, &y));
        let mut next = 1;
        for step in 1..=steps {
            rk4::step(&mut y, h, rhs);
            while next < samples && sample_at(next) == step {
                out.push(record(step as f64 * h, &y));
                next += 1;
            }
        }
        Ok(out)
    }
}

/// Damped iteration `n ← n + λ (g(n) - n)`. `map` returns `g(n)` and its
/// slope. Where the slope is below one, λ = 1/(1 - g') removes the linear
/// part of the error; λ is halved again whenever the residual grows.
fn solve_fixed_point<F: Fn(f64) -> (f64, f64)>(
    map: F,
    pump_sq: f64,
    damping: f64,
    max_iter: usize,
) -> Result<f64> {
    if pump_sq == 0.0 {
        return Ok(0.0);
    }
    let mut n = 0.0;
    let mut scale: f64 = 1.0;
    let mut last = f64::INFINITY;
    for _ in 0..max_iter {
        let (g, slope) = map(n);
        let residual = g - n;
        if residual.abs() <= FIXED_POINT_TOLERANCE * g.abs().max(n.abs()) {
            return Ok(n);
        }
        if residual.abs() >= last {
            scale = (0.5 * scale).max(1e-6);
        } else {
            scale = (2.0 * scale).min(1.0);
        }
        last = residual.abs();
        let lambda = if slope < 1.0 { 1.0 / (1.0 - slope) } else { 0.5 };
        n = (n + scale * lambda * residual).max(0.0);
    }

    // Report where map(n) - n changes sign, i.e. the competing fixed points.
    let upper = if damping > 0.0 {
        pump_sq / (damping * damping)
    } else {
        n.max(1.0) * 10.0
    };
    let grid = 4096;
    let mut brackets = Vec::new();
    let mut prev = (0.0, map(0.0).0);
    for i in 1..=grid {
        let x = upper * i as f64 / grid as f64;
        let h = map(x).0 - x;
        if h.signum() != prev.1.signum() {
            brackets.push((prev.0, x));
        }
        prev = (x, h);
    }
    Err(ModelError::Bistability {
        iterations: max_iter,
        brackets,
    })
}
