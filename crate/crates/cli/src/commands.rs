//! One function per subcommand, each producing a [`Dataset`].

use darkex_core::datasets::{dispersion, fractions, levels, linspace};
use darkex_core::lattice::{exciton_levels, MAGIC_ANGLE};
use darkex_core::oracle::{validate_band, validate_blocking, BAND_TOLERANCE};
use darkex_core::{DriveConfig, ModelError, PumpMode, Setup, CONSTANTS};

use crate::config::{RunConfig, Sweep, SweepVar};
use crate::error::{CliError, CliResult};
use crate::output::{num, Dataset};

/// Default integration time for `evolve` (ħ/eV).
pub const DEFAULT_T_END: f64 = 1e6;
pub const DEFAULT_SAMPLES: usize = 201;
/// Refuse runs that would take more RK4 steps than this.
pub const MAX_EVOLVE_STEPS: f64 = 1e8;

/// Relative tolerance on the doubled-cell cluster offset against 2 V_dyn.
pub const CLUSTER_OFFSET_TOLERANCE: f64 = 0.10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Levels,
    Dispersion,
    Fractions,
    Spectrum,
    Evolve,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Levels => "levels",
            Command::Dispersion => "dispersion",
            Command::Fractions => "fractions",
            Command::Spectrum => "spectrum",
            Command::Evolve => "evolve",
            Command::Oracle => "oracle",
        }
    }

    /// Sweep variable and default grid, for commands that sweep.
    fn default_sweep(self) -> Option<Sweep> {
        let sweep = |variable, min, max, points| Sweep {
            variable,
            min,
            max,
            points,
        };
        match self {
            Command::Levels => Some(sweep(SweepVar::Theta, 0.0, 90.0, 901)),
            Command::Dispersion | Command::Fractions => Some(sweep(SweepVar::K, 0.0, 6e-5, 601)),
            Command::Spectrum => Some(sweep(SweepVar::EDrive, -1e-4, 4e-4, 10_001)),
            Command::Evolve | Command::Oracle => None,
        }
    }
}

/// Picks the sweep from the command line, then the config, then the default,
/// and checks that it matches the command.
fn resolve_sweep(command: Command, cli: Option<Sweep>, cfg: &RunConfig) -> CliResult<Option<Sweep>> {
    let chosen = cli.or(cfg.sweep);
    match (command.default_sweep(), chosen) {
        (None, None) => Ok(None),
        (None, Some(s)) => Err(CliError::Config(format!(
            "{} does not take a sweep, got '{}'",
            command.name(),
            s.spec()
        ))),
        (Some(default), None) => Ok(Some(default)),
        (Some(default), Some(s)) if s.variable == default.variable => Ok(Some(s)),
        (Some(default), Some(s)) => Err(CliError::Config(format!(
            "{} sweeps {}, got '{}'",
            command.name(),
            default.variable.name(),
            s.variable.name()
        ))),
    }
}

pub fn run(command: Command, cfg: &RunConfig, sweep: Option<Sweep>, source: &str) -> CliResult<Dataset> {
    let sweep = resolve_sweep(command, sweep, cfg)?;
    let setup = cfg.setup()?;
    // Only the driven commands need k*, which not every lattice has.
    let drive = match command {
        Command::Spectrum | Command::Evolve => Some(cfg.drive(&setup)?),
        _ => None,
    };
    let mut data = match (command, sweep, &drive) {
        (Command::Levels, Some(s), _) => cmd_levels(&setup, s)?,
        (Command::Dispersion, Some(s), _) => cmd_dispersion(&setup, s)?,
        (Command::Fractions, Some(s), _) => cmd_fractions(&setup, s)?,
        (Command::Spectrum, Some(s), Some(d)) => cmd_spectrum(&setup, d, s)?,
        (Command::Evolve, None, Some(d)) => cmd_evolve(&setup, d, cfg)?,
        (Command::Oracle, None, None) => cmd_oracle(&setup, cfg)?,
        _ => unreachable!("sweep and drive are resolved per command"),
    };
    let mut meta = Vec::new();
    meta.push(("source".to_string(), source.to_string()));
    if let Some(s) = sweep {
        meta.push(("sweep".to_string(), s.spec()));
    }
    meta.extend(parameter_header(&setup));
    if let Some(d) = &drive {
        meta.extend(drive_header(&setup, d));
    }
    meta.append(&mut data.meta);
    data.meta = meta;
    Ok(data)
}

/// Resolved lattice and waveguide parameters, constants and derived values.
fn parameter_header(setup: &Setup) -> Vec<(String, String)> {
    let l = &setup.lattice;
    let w = &setup.waveguide;
    let lv = exciton_levels(l);
    let mut h: Vec<(String, String)> = vec![
        ("lattice.E_A_eV".into(), num(l.transition_energy)),
        ("lattice.a_A".into(), num(l.cell_spacing)),
        ("lattice.R_A".into(), num(l.atom_spacing)),
        ("lattice.mu_eA".into(), num(l.dipole)),
        ("lattice.theta_deg".into(), num(l.theta.to_degrees())),
        ("lattice.n_cells".into(), l.n_cells.to_string()),
        ("waveguide.epsilon".into(), num(w.epsilon)),
        ("waveguide.q0_per_A".into(), num(w.q0)),
        ("waveguide.u_b".into(), num(w.mode_amplitude)),
        ("waveguide.S_bar_A2".into(), num(w.cross_section)),
        ("waveguide.L_A".into(), num(w.length)),
        ("constants.hbar_c_eVA".into(), num(CONSTANTS.hbar_c)),
        ("constants.coulomb_eVA3".into(), num(CONSTANTS.coulomb)),
        ("derived.J0_eV".into(), num(lv.intracell)),
        ("derived.J_eV".into(), num(lv.intercell)),
        ("derived.E_s_eV".into(), num(lv.symmetric)),
        ("derived.E_a_eV".into(), num(lv.antisymmetric)),
    ];
    let resonance = setup
        .dark_resonance_k()
        .and_then(|k| Ok((k, setup.interaction_at(k)?)));
    match resonance {
        Ok((k, ip)) => {
            h.push(("derived.k_star_per_A".into(), num(k)));
            h.push(("derived.X2_lower_at_k_star".into(), num(ip.exciton_fraction)));
            h.push(("derived.mc2_eV".into(), num(ip.mass_energy)));
            h.push(("derived.U_eV".into(), num(ip.onsite)));
            h.push(("derived.Delta_eV".into(), num(ip.delta)));
            h.push(("derived.Delta_tilde_eV".into(), num(ip.delta_tilde)));
        }
        Err(e) => h.push(("derived.k_star_per_A".into(), format!("none ({e})"))),
    }
    h
}

fn drive_header(setup: &Setup, drive: &DriveConfig) -> Vec<(String, String)> {
    let mut h: Vec<(String, String)> = vec![
        ("drive.E_eV".into(), num(drive.energy)),
        (
            "drive.E_minus_Ea_eV".into(),
            num(drive.energy - setup.dark_energy()),
        ),
        (
            "drive.pump_eV".into(),
            format!("{} {}", num(drive.pump.re), num(drive.pump.im)),
        ),
        (
            "drive.probe_plus_eV".into(),
            format!("{} {}", num(drive.probe_plus.re), num(drive.probe_plus.im)),
        ),
        (
            "drive.probe_minus_eV".into(),
            format!("{} {}", num(drive.probe_minus.re), num(drive.probe_minus.im)),
        ),
        ("drive.gamma_ph_eV".into(), num(drive.gamma_ph)),
        ("drive.gamma_s_eV".into(), num(drive.gamma_s)),
        ("drive.gamma_a_eV".into(), num(drive.gamma_a)),
        ("drive.k_pump_per_A".into(), num(drive.k_pump)),
        ("drive.q_per_A".into(), num(drive.q)),
    ];
    match drive.pump_mode {
        PumpMode::Prescribed { occupation } => {
            h.push(("drive.pump_mode".into(), "prescribed".into()));
            h.push(("drive.occupation".into(), num(occupation)));
        }
        PumpMode::SelfConsistent => h.push(("drive.pump_mode".into(), "self_consistent".into())),
    }
    h
}

fn grid(sweep: Sweep) -> CliResult<Vec<f64>> {
    Ok(linspace(sweep.min, sweep.max, sweep.points)?)
}

pub fn cmd_levels(setup: &Setup, sweep: Sweep) -> CliResult<Dataset> {
    let mut degrees = grid(sweep)?;
    // Always sample the magic angle, where E_s and E_a cross.
    let magic = MAGIC_ANGLE.to_degrees();
    if sweep.min <= magic && magic <= sweep.max && !degrees.contains(&magic) {
        let at = degrees.partition_point(|&d| d < magic);
        degrees.insert(at, magic);
    }
    // Clamp so that 90° maps onto π/2 exactly.
    let radians: Vec<f64> = degrees
        .iter()
        .map(|d| d.to_radians().min(std::f64::consts::FRAC_PI_2))
        .collect();
    let rows = levels(setup, &radians)?;
    let mut data = Dataset::new(
        "levels: polariton and exciton levels at k = 0 against the dipole angle",
        vec!["theta_deg", "E_plus", "E_minus", "E_s", "E_a"],
    );
    data.y_label = "E - E_A (eV)";
    data.meta_num("magic_angle_deg", magic);
    for (d, r) in degrees.iter().zip(&rows) {
        data.push(&[*d, r.upper, r.lower, r.symmetric, r.antisymmetric]);
    }
    Ok(data)
}

pub fn cmd_dispersion(setup: &Setup, sweep: Sweep) -> CliResult<Dataset> {
    let rows = dispersion(setup, &grid(sweep)?)?;
    let mut data = Dataset::new(
        "dispersion: polariton, photon and exciton energies against k",
        vec!["k", "E_plus", "E_minus", "E_ph", "E_s", "E_a"],
    );
    data.y_label = "E - E_A (eV)";
    data.meta("energy_reference", "E_A");
    for r in rows {
        data.push(&[r.k, r.upper, r.lower, r.photon, r.symmetric, r.antisymmetric]);
    }
    Ok(data)
}

pub fn cmd_fractions(setup: &Setup, sweep: Sweep) -> CliResult<Dataset> {
    let rows = fractions(setup, &grid(sweep)?)?;
    let mut data = Dataset::new(
        "fractions: exciton and photon weights of both branches against k",
        vec!["k", "X2_plus", "Y2_plus", "X2_minus", "Y2_minus"],
    );
    data.y_label = "fraction";
    for r in rows {
        data.push(&[
            r.k,
            r.exciton_upper,
            r.photon_upper,
            r.exciton_lower,
            r.photon_lower,
        ]);
    }
    Ok(data)
}

pub fn cmd_spectrum(setup: &Setup, drive: &DriveConfig, sweep: Sweep) -> CliResult<Dataset> {
    let pp = setup.pump_probe(drive.k_pump)?;
    let energies: Vec<f64> = grid(sweep)?.into_iter().map(|x| pp.dark_level + x).collect();
    let points = pp.spectrum(drive, &energies)?;
    let mut data = Dataset::new(
        "spectrum: scaled probe intensities against the drive energy",
        vec!["E_minus_Ea", "I_minus_scaled", "I_plus_scaled"],
    );
    data.y_label = "I / I_probe";
    data.plot_setup.push("set logscale y".into());
    if let Ok(ss) = pp.steady_state(drive) {
        data.meta_num("steady.occupation", ss.occupation);
        data.meta_num("steady.V_mf_eV", ss.coupling);
        if let Some((hi, lo)) = ss.resonances {
            data.meta_num("steady.resonance_upper_minus_Ea_eV", hi - pp.dark_level);
            data.meta_num("steady.resonance_lower_minus_Ea_eV", lo - pp.dark_level);
        }
    }
    // Offsets are recomputed from the sweep grid so the first column is exact.
    for (x, p) in grid(sweep)?.iter().zip(&points) {
        data.push(&[*x, p.minus, p.plus]);
    }
    Ok(data)
}

pub fn cmd_evolve(setup: &Setup, drive: &DriveConfig, cfg: &RunConfig) -> CliResult<Dataset> {
    let pp = setup.pump_probe(drive.k_pump)?;
    let t_end = cfg.evolve.t_end.unwrap_or(DEFAULT_T_END);
    let limit = pp.max_stable_step(drive)?;
    let dt = match cfg.evolve.dt {
        Some(dt) => dt,
        None if limit.is_finite() => 0.5 * limit,
        None => t_end / DEFAULT_SAMPLES as f64,
    };
    let samples = cfg.evolve.samples.unwrap_or(DEFAULT_SAMPLES);
    if !(t_end > 0.0 && dt > 0.0 && samples >= 2) {
        return Err(CliError::Config(format!(
            "evolve needs t_end > 0, dt > 0 and samples >= 2, got {t_end}, {dt}, {samples}"
        )));
    }
    let steps = (t_end / dt).ceil();
    if steps > MAX_EVOLVE_STEPS {
        return Err(ModelError::Domain(format!(
            "evolve would take {steps:e} RK4 steps (limit {MAX_EVOLVE_STEPS:e}); shorten t_end or raise the damping"
        ))
        .into());
    }
    let trajectory = pp.time_evolve(drive, t_end, dt, samples)?;
    let mut data = Dataset::new(
        "evolve: RK4 mean-field trajectory from empty dark modes",
        vec!["t", "A_abs2", "B_plus_abs2", "B_minus_abs2"],
    );
    data.y_label = "occupation";
    data.meta_num("t_end", t_end);
    data.meta_num("dt", dt);
    data.meta_num("dt_limit", limit);
    data.meta("samples", samples.to_string());
    match pp.steady_state(drive) {
        Ok(ss) => {
            data.meta_num("steady.A_abs2", ss.pump_amplitude.norm_sqr());
            data.meta_num("steady.B_plus_abs2", ss.dark_plus.norm_sqr());
            data.meta_num("steady.B_minus_abs2", ss.dark_minus.norm_sqr());
        }
        Err(e) => data.meta("steady", format!("none ({e})")),
    }
    for p in trajectory {
        data.push(&[
            p.t,
            p.polariton.norm_sqr(),
            p.dark_plus.norm_sqr(),
            p.dark_minus.norm_sqr(),
        ]);
    }
    Ok(data)
}

fn check_cells(name: &str, cells: &[usize], ok: impl Fn(usize) -> bool, rule: &str) -> CliResult<()> {
    match cells.iter().find(|&&n| !ok(n)) {
        Some(n) => Err(CliError::Config(format!(
            "oracle.{name} entries must be {rule}, got {n}"
        ))),
        None => Ok(()),
    }
}

pub fn cmd_oracle(setup: &Setup, cfg: &RunConfig) -> CliResult<Dataset> {
    let o = &cfg.oracle;
    check_cells(
        "band_cells",
        &o.band_cells,
        |n| (3..=7).contains(&n) && !n.is_multiple_of(2),
        "odd in 3..=7",
    )?;
    check_cells(
        "blocking_cells",
        &o.blocking_cells,
        |n| (2..=7).contains(&n),
        "in 2..=7",
    )?;
    if !(o.v_dyn >= 0.0) {
        return Err(CliError::Config(format!(
            "oracle.v_dyn must be >= 0, got {}",
            o.v_dyn
        )));
    }

    let mut data = Dataset::new(
        "oracle: exact diagonalization against the analytic band and blocking picture",
        vec!["check", "n_cells", "value", "bound", "pass"],
    );
    data.meta_num("band_tolerance_rel_J", BAND_TOLERANCE);
    data.meta_num("v_dyn_eV", o.v_dyn);
    data.meta_num("cluster_offset_rel_tolerance", CLUSTER_OFFSET_TOLERANCE);
    let mut row = |check: &str, n: usize, value: String, bound: String, pass: bool| {
        data.rows.push(vec![
            check.to_string(),
            n.to_string(),
            value,
            bound,
            pass.to_string(),
        ]);
    };
    for &n in &o.band_cells {
        let band = validate_band(&setup.lattice, n)?;
        row(
            "band_relative_deviation",
            n,
            num(band.relative_deviation),
            num(BAND_TOLERANCE),
            band.within_tolerance,
        );
        row(
            "dark_count",
            n,
            band.dark_count.to_string(),
            n.to_string(),
            band.dark_count == n,
        );
    }
    for &n in &o.blocking_cells {
        let b = validate_blocking(&setup.lattice, n, o.v_dyn)?;
        row(
            "two_excitation_dim",
            n,
            b.dim.to_string(),
            b.expected_dim.to_string(),
            b.dim == b.expected_dim && b.structural_ok,
        );
        let target = 2.0 * o.v_dyn;
        row(
            "doubled_cell_offset",
            n,
            num(b.cluster_offset),
            num(target),
            (b.cluster_offset - target).abs() <= CLUSTER_OFFSET_TOLERANCE * target.abs(),
        );
        row(
            "cluster_gap_over_coupling",
            n,
            num(b.min_gap),
            num(2.0 * b.coupling_scale),
            b.separated,
        );
    }
    Ok(data)
}
