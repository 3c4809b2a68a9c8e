//! The five subcommands. Each builds its row list up front, evaluates it with
//! [`spp_green::par::map`] (order-preserving, so output is identical with or
//! without threads) and returns a table plus an optional failure that sets the
//! exit status after the table is written.

use std::f64::consts::PI;
use std::fmt::Display;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spp_green::constants::{omega_from_wavelength_nm, DEBYE};
use spp_green::emitters::{
    decay_rate, free_space_field, g2, rabi_splitting, spp_field, DecayMode, DipoleSource, FieldSample, Orientation,
    QuantumEmitter, RabiRegime, TimeSpec,
};
use spp_green::layered_green::{sommerfeld_tensor, AngularReduction, PoleHandling, SommerfeldOptions};
use spp_green::material::{permittivity, spp_pole, Medium, SppMode};
use spp_green::par::{self, Execution};
use spp_green::spp_tensor::{d_spp_tensor, SppTensorInputs};
use spp_green::{EmitterError, MaterialError, Tensor3};

use crate::config::RunConfig;
use crate::table::{complex, Cell, CsvTable};
use crate::CliError;

const NM: f64 = 1e-9;

pub struct Report {
    pub table: CsvTable,
    /// Reported after the table has been written.
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(table: CsvTable) -> Self {
        Self { table, failure: None }
    }
}

fn numerical(e: impl Display) -> CliError {
    CliError::Numerical(e.to_string())
}

fn orientation_label(o: Orientation) -> &'static str {
    match o {
        Orientation::X => "x",
        Orientation::Z => "z",
    }
}

struct Interface {
    metal: Medium,
    eps_d: f64,
}

impl Interface {
    fn from_config(cfg: &RunConfig) -> Result<Self, CliError> {
        Ok(Self { metal: cfg.metal()?, eps_d: cfg.eps_d()? })
    }

    fn eps_m(&self, omega: f64) -> Result<Complex64, CliError> {
        permittivity(&self.metal, omega).map_err(numerical)
    }

    fn mode(&self, lambda_nm: f64) -> Result<SppMode, CliError> {
        let w = omega_from_wavelength_nm(lambda_nm);
        spp_pole(w, Complex64::new(self.eps_d, 0.0), self.eps_m(w)?)
            .map_err(|e| CliError::Numerical(format!("lambda = {lambda_nm} nm: {e}")))
    }
}

struct SourceTemplate {
    charge: f64,
    length: f64,
    orientation: Orientation,
}

impl SourceTemplate {
    fn from_config(cfg: &RunConfig) -> Result<Self, CliError> {
        let charge = cfg.f64("source.charge_c")?;
        let length = cfg.f64("source.length_nm")? * NM;
        if charge <= 0.0 || length <= 0.0 {
            return Err(CliError::Usage("source.charge_c and source.length_nm must be > 0".into()));
        }
        Ok(Self { charge, length, orientation: cfg.orientation("source.orientation")? })
    }

    fn at(&self, orientation: Orientation, mode: &SppMode, z0_nm: f64) -> DipoleSource {
        DipoleSource { charge: self.charge, length: self.length, omega: mode.omega, orientation, z0: z0_nm * NM }
    }
}

pub fn dispersion(cfg: &RunConfig) -> Result<Report, CliError> {
    let iface = Interface::from_config(cfg)?;
    let lambdas = cfg.positive_list("geometry.lambda_nm")?;
    let mut table = CsvTable::new(&[
        "lambda_nm",
        "omega_rad_s",
        "eps_m_re",
        "eps_m_im",
        "kspp_re",
        "kspp_im",
        "L_prop_m",
        "confinement_m",
        "status",
    ]);
    for lambda in lambdas {
        let w = omega_from_wavelength_nm(lambda);
        let em = iface.eps_m(w)?;
        let mut row = vec![Cell::num(lambda), Cell::num(w)];
        row.extend(complex(em));
        match spp_pole(w, Complex64::new(iface.eps_d, 0.0), em) {
            Ok(mode) => {
                let l = mode.propagation_length();
                row.extend(complex(mode.k_spp));
                row.push(Cell::num(l));
                row.push(Cell::num(mode.confinement_length()));
                row.push(Cell::text(if l.is_finite() { "ok" } else { "lossless" }));
            }
            Err(e) => {
                row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
                row.push(Cell::text(match e {
                    MaterialError::NoBoundMode { .. } => "no_bound_mode",
                    _ => "pole_failed",
                }));
            }
        }
        table.push(row);
    }
    Ok(Report::ok(table))
}

fn time_spec(cfg: &RunConfig) -> Result<TimeSpec, CliError> {
    Ok(cfg.time()?.map_or(TimeSpec::PeakEnvelope, TimeSpec::At))
}

/// Free-space sample, or the status explaining why there is none.
fn free_sample(s: &DipoleSource, eps_d: f64, p: [f64; 3], t: TimeSpec) -> Result<FieldSample, &'static str> {
    match free_space_field(s, eps_d, p, t) {
        Ok(f) if f.envelope_intensity == 0.0 => Err("nodal"),
        Ok(f) => Ok(f),
        Err(EmitterError::AtSource) => Err("at_source"),
        Err(_) => Err("free_space_failed"),
    }
}

pub fn field_map(cfg: &RunConfig) -> Result<Report, CliError> {
    let iface = Interface::from_config(cfg)?;
    let src = SourceTemplate::from_config(cfg)?;
    let lambdas = cfg.positive_list("geometry.lambda_nm")?;
    let z0s = cfg.positive_list("geometry.z0_nm")?;
    let (xs, ys, zs) = (cfg.list("geometry.x_nm")?, cfg.list("geometry.y_nm")?, cfg.list("geometry.z_nm")?);
    if zs.iter().any(|z| *z < 0.0) {
        return Err(CliError::Usage("geometry.z_nm: heights must be >= 0 (dielectric side)".into()));
    }
    let relative = cfg.bool("output.relative")?;
    let time = time_spec(cfg)?;
    let modes: Vec<SppMode> = lambdas.iter().map(|&l| iface.mode(l)).collect::<Result<_, _>>()?;

    let mut columns = vec!["lambda_nm", "z0_nm", "x_nm", "y_nm", "z_nm", "Ex", "Ey", "Ez", "E2", "E2_env"];
    if relative {
        columns.extend(["E0x", "E0y", "E0z", "E02", "E02_env", "ratio"]);
    }
    columns.push("status");
    let mut table = CsvTable::new(&columns);

    let mut points = Vec::new();
    for (li, &lambda) in lambdas.iter().enumerate() {
        for &z0 in &z0s {
            for &z in &zs {
                for &y in &ys {
                    for &x in &xs {
                        points.push((li, lambda, z0, [x, y, z]));
                    }
                }
            }
        }
    }
    let rows = par::map(&points, Execution::default(), |&(li, lambda, z0, p)| {
        let mode = &modes[li];
        let s = src.at(src.orientation, mode, z0);
        let at = p.map(|v| v * NM);
        let mut row = vec![Cell::num(lambda), Cell::num(z0), Cell::num(p[0]), Cell::num(p[1]), Cell::num(p[2])];
        let f = match spp_field(&s, mode, at, time) {
            Ok(f) => f,
            Err(e) => {
                row.extend((0..columns.len() - 6).map(|_| Cell::Empty));
                row.push(Cell::text(format!("failed: {e}")));
                return row;
            }
        };
        row.extend(f.e.map(Cell::num));
        row.push(Cell::num(f.e.iter().map(|v| v * v).sum()));
        row.push(Cell::num(f.envelope_intensity));
        let mut status = "ok";
        if relative {
            match free_sample(&s, iface.eps_d, at, time) {
                Ok(f0) => {
                    row.extend(f0.e.map(Cell::num));
                    row.push(Cell::num(f0.e.iter().map(|v| v * v).sum()));
                    row.push(Cell::num(f0.envelope_intensity));
                    row.push(Cell::num(f.envelope_intensity / f0.envelope_intensity));
                }
                Err(why) => {
                    row.extend((0..6).map(|_| Cell::Empty));
                    status = why;
                }
            }
        }
        row.push(Cell::text(status));
        row
    });
    for row in rows {
        table.push(row);
    }
    Ok(Report::ok(table))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepMode {
    Height,
    Wavelength,
    Radial,
}

impl SweepMode {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "height" => Ok(SweepMode::Height),
            "wavelength" => Ok(SweepMode::Wavelength),
            "radial" => Ok(SweepMode::Radial),
            other => Err(CliError::Usage(format!("sweep.mode: expected height, wavelength or radial, got '{other}'"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SweepMode::Height => "height",
            SweepMode::Wavelength => "wavelength",
            SweepMode::Radial => "radial",
        }
    }

    fn default_values(self) -> &'static str {
        match self {
            SweepMode::Height => "5:200:40",
            SweepMode::Wavelength => "450:700:51",
            SweepMode::Radial => "50:5000:100",
        }
    }
}

pub fn sweep(cfg: &RunConfig) -> Result<Report, CliError> {
    let mode_kind = SweepMode::parse(cfg.raw("sweep.mode"))?;
    let iface = Interface::from_config(cfg)?;
    let src = SourceTemplate::from_config(cfg)?;
    let values = if cfg.is_set("sweep.values_nm") {
        cfg.positive_list("sweep.values_nm")?
    } else {
        crate::config::parse_list("sweep.values_nm", mode_kind.default_values())?
    };
    let lambdas = cfg.positive_list("geometry.lambda_nm")?;
    let z0s = cfg.positive_list("geometry.z0_nm")?;
    let point = cfg.point_nm()?;
    let azimuth = cfg.f64("sweep.azimuth_deg")?.to_radians();

    // (lambda, z0, point), outer to inner in the documented order.
    let mut cases: Vec<(f64, f64, [f64; 3])> = Vec::new();
    match mode_kind {
        SweepMode::Height => {
            for &l in &lambdas {
                for &v in &values {
                    cases.push((l, v, point));
                }
            }
        }
        SweepMode::Wavelength => {
            for &z0 in &z0s {
                for &v in &values {
                    cases.push((v, z0, point));
                }
            }
        }
        SweepMode::Radial => {
            for &l in &lambdas {
                for &z0 in &z0s {
                    for &v in &values {
                        cases.push((l, z0, [v * azimuth.cos(), v * azimuth.sin(), point[2]]));
                    }
                }
            }
        }
    }
    let mut distinct: Vec<f64> = cases.iter().map(|c| c.0).collect();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    let modes: Vec<(f64, SppMode)> =
        distinct.iter().map(|&l| iface.mode(l).map(|m| (l, m))).collect::<Result<_, _>>()?;

    let mut table = CsvTable::new(&[
        "lambda_nm",
        "z0_nm",
        "x_nm",
        "y_nm",
        "z_nm",
        "rho_nm",
        "E2_z",
        "E02_z",
        "ratio_z",
        "E2_x",
        "E02_x",
        "ratio_x",
        "status",
    ]);
    let rows = par::map(&cases, Execution::default(), |&(lambda, z0, p)| {
        let mode = &modes.iter().find(|(l, _)| *l == lambda).expect("mode computed above").1;
        let at = p.map(|v| v * NM);
        let mut row = vec![
            Cell::num(lambda),
            Cell::num(z0),
            Cell::num(p[0]),
            Cell::num(p[1]),
            Cell::num(p[2]),
            Cell::num(p[0].hypot(p[1])),
        ];
        let mut status = "ok";
        for o in [Orientation::Z, Orientation::X] {
            let s = src.at(o, mode, z0);
            let spp = spp_field(&s, mode, at, TimeSpec::PeakEnvelope);
            let free = free_sample(&s, iface.eps_d, at, TimeSpec::PeakEnvelope);
            match (spp, free) {
                (Ok(f), Ok(f0)) => {
                    row.push(Cell::num(f.envelope_intensity));
                    row.push(Cell::num(f0.envelope_intensity));
                    row.push(Cell::num(f.envelope_intensity / f0.envelope_intensity));
                }
                (Ok(f), Err(why)) => {
                    row.extend([Cell::num(f.envelope_intensity), Cell::Empty, Cell::Empty]);
                    status = why;
                }
                (Err(_), _) => {
                    row.extend([Cell::Empty, Cell::Empty, Cell::Empty]);
                    status = "failed";
                }
            }
        }
        row.push(Cell::text(status));
        row
    });
    for row in rows {
        table.push(row);
    }
    Ok(Report::ok(table))
}

pub fn g2_curves(cfg: &RunConfig) -> Result<Report, CliError> {
    let iface = Interface::from_config(cfg)?;
    let orientations = cfg.orientations("emitter.orientation")?;
    let lambdas = cfg.positive_list("geometry.lambda_nm")?;
    let z0s = cfg.positive_list("geometry.z0_nm")?;
    let dipole = cfg.f64("emitter.dipole_debye")? * DEBYE;
    let include_free = cfg.bool("emitter.include_free_space")?;
    let tau_max = cfg.f64("g2.tau_max_gamma")?;
    let samples = cfg.usize("g2.samples")?;
    if samples < 2 || tau_max <= 0.0 {
        return Err(CliError::Usage("g2.samples must be >= 2 and g2.tau_max_gamma > 0".into()));
    }
    let rabi =
        match (cfg.is_set("emitter.rabi_rad_s"), cfg.is_set("emitter.rabi_per_gamma")) {
            (true, false) => Rabi::Absolute(cfg.f64("emitter.rabi_rad_s")?),
            (false, true) => Rabi::PerGamma(cfg.f64("emitter.rabi_per_gamma")?),
            _ => return Err(CliError::Usage(
                "g2 needs exactly one of emitter.rabi_rad_s / emitter.rabi_per_gamma (--rabi-rad-s / --rabi-per-gamma)"
                    .into(),
            )),
        };

    let mut table = CsvTable::new(&[
        "curve",
        "orientation",
        "lambda_nm",
        "z0_nm",
        "gamma_s_inv",
        "gamma_over_gamma0",
        "rabi_rad_s",
        "R_rad_s",
        "tau_gamma",
        "tau_s",
        "g2",
    ]);
    let mut curve = 0u64;
    for &o in &orientations {
        for &lambda in &lambdas {
            let mode = iface.mode(lambda)?;
            for &z0 in &z0s {
                let emitter = QuantumEmitter {
                    dipole_moment: dipole,
                    orientation: o.unit(),
                    omega: mode.omega,
                    position: [0.0, 0.0, z0 * NM],
                    rabi_frequency: 0.0,
                };
                let spp_rate = decay_rate(&emitter, &mode, DecayMode::SppOnly).map_err(numerical)?;
                let normalized = decay_rate(&emitter, &mode, DecayMode::Normalized).map_err(numerical)?;
                let bulk = spp_rate / normalized;
                let (gamma, ratio) =
                    if include_free { (spp_rate + bulk, normalized + 1.0) } else { (spp_rate, normalized) };
                let omega_r = match rabi {
                    Rabi::Absolute(v) => v,
                    Rabi::PerGamma(v) => v * gamma,
                };
                let split = rabi_splitting(omega_r, gamma).map_err(numerical)?;
                if split.regime != RabiRegime::Underdamped {
                    return Err(CliError::Numerical(format!(
                        "{} at lambda = {lambda} nm, z0 = {z0} nm: Rabi frequency {omega_r:e} rad/s <= Gamma/4 = {:e} s^-1",
                        EmitterError::UnsupportedBranch(split.regime),
                        gamma / 4.0
                    )));
                }
                for i in 0..samples {
                    let tg = tau_max * i as f64 / (samples - 1) as f64;
                    let tau = tg / gamma;
                    let v = g2(tau, omega_r, gamma).map_err(numerical)?;
                    table.push(vec![
                        Cell::Int(curve),
                        Cell::text(orientation_label(o)),
                        Cell::num(lambda),
                        Cell::num(z0),
                        Cell::num(gamma),
                        Cell::num(ratio),
                        Cell::num(omega_r),
                        Cell::num(split.value),
                        Cell::num(tg),
                        Cell::num(tau),
                        Cell::num(v),
                    ]);
                }
                curve += 1;
            }
        }
    }
    Ok(Report::ok(table))
}

#[derive(Clone, Copy)]
enum Rabi {
    Absolute(f64),
    PerGamma(f64),
}

struct ValidationCase {
    lambda: f64,
    x: [f64; 3],
    x_src: [f64; 3],
}

/// Random geometry: `z + z'` in [20, 200] nm, `rho` in [50, 2000] nm.
fn random_case(r: &mut ChaCha8Rng, lambda: f64) -> ValidationCase {
    let sum = r.gen_range(20.0..=200.0) * NM;
    let split = r.gen_range(0.2..0.8);
    let rho = r.gen_range(50.0..=2000.0) * NM;
    let phi = r.gen_range(0.0..2.0 * PI);
    ValidationCase {
        lambda,
        x: [rho * phi.cos(), rho * phi.sin(), sum * split],
        x_src: [0.0, 0.0, sum * (1.0 - split)],
    }
}

const COMPONENTS: [(&str, usize, usize); 4] = [("zz", 2, 2), ("zx", 2, 0), ("xx", 0, 0), ("yy", 1, 1)];
const LABELS: [&str; 3] = ["x", "y", "z"];

struct Tally {
    exceeded: usize,
    failed: usize,
}

#[allow(clippy::too_many_arguments)]
fn validation_row(
    suite: &str,
    case: usize,
    component: &str,
    c: &ValidationCase,
    closed: Complex64,
    oracle: Complex64,
    rel_err: f64,
    tol: f64,
    tally: &mut Tally,
) -> Vec<Cell> {
    let status = if rel_err <= tol { "ok" } else { "exceeded" };
    if status != "ok" {
        tally.exceeded += 1;
    }
    let rho = (c.x[0] - c.x_src[0]).hypot(c.x[1] - c.x_src[1]);
    let mut row = vec![
        Cell::text(suite),
        Cell::Int(case as u64),
        Cell::text(component),
        Cell::num(c.lambda),
        Cell::num(rho / NM),
        Cell::num((c.x[2] + c.x_src[2]) / NM),
    ];
    row.extend(complex(closed));
    row.extend(complex(oracle));
    row.extend([Cell::num(rel_err), Cell::num(tol), Cell::text(status)]);
    row
}

fn failed_row(suite: &str, case: usize, c: &ValidationCase, why: &str, tally: &mut Tally) -> Vec<Cell> {
    tally.failed += 1;
    let rho = (c.x[0] - c.x_src[0]).hypot(c.x[1] - c.x_src[1]);
    let mut row = vec![
        Cell::text(suite),
        Cell::Int(case as u64),
        Cell::text("all"),
        Cell::num(c.lambda),
        Cell::num(rho / NM),
        Cell::num((c.x[2] + c.x_src[2]) / NM),
    ];
    row.extend((0..6).map(|_| Cell::Empty));
    row.push(Cell::text(format!("failed: {why}")));
    row
}

pub fn validate(cfg: &RunConfig) -> Result<Report, CliError> {
    let iface = Interface::from_config(cfg)?;
    let quad = cfg.quad()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.u64("validate.seed")?);
    let (n_main, n_toy, n_pairs) =
        (cfg.usize("validate.cases")?, cfg.usize("validate.toy_cases")?, cfg.usize("validate.reciprocity_pairs")?);
    let (tol_zz, tol_xx, tol_toy, tol_rec) = (
        cfg.f64("validate.tol_zz_zx")?,
        cfg.f64("validate.tol_xx_yy")?,
        cfg.f64("validate.tol_toy")?,
        cfg.f64("validate.tol_reciprocity")?,
    );
    let pole_opts =
        SommerfeldOptions { quad, reduction: AngularReduction::Quadrature, ..SommerfeldOptions::pole_only() };
    let full_opts = SommerfeldOptions { quad, pole: PoleHandling::Full, ..SommerfeldOptions::default() };
    let ed = Complex64::new(iface.eps_d, 0.0);

    let main: Vec<ValidationCase> = (0..n_main)
        .map(|_| {
            let l = rng.gen_range(450.0..=700.0);
            random_case(&mut rng, l)
        })
        .collect();
    let toy: Vec<ValidationCase> = (0..n_toy)
        .map(|_| {
            let l = rng.gen_range(450.0..=700.0);
            random_case(&mut rng, l)
        })
        .collect();
    let pairs: Vec<ValidationCase> = (0..n_pairs)
        .map(|_| {
            let lambda = rng.gen_range(450.0..=700.0);
            let mut p = || {
                [rng.gen_range(-500.0..500.0) * NM, rng.gen_range(-500.0..500.0) * NM, rng.gen_range(5.0..150.0) * NM]
            };
            ValidationCase { lambda, x: p(), x_src: p() }
        })
        .collect();

    type Pair = Result<(Tensor3, Tensor3), String>;
    let closed_vs_oracle = |c: &ValidationCase, eps_m: Option<Complex64>, eps_d: Complex64| -> Pair {
        let w = omega_from_wavelength_nm(c.lambda);
        let em = match eps_m {
            Some(e) => e,
            None => permittivity(&iface.metal, w).map_err(|e| e.to_string())?,
        };
        let mode = spp_pole(w, eps_d, em).map_err(|e| e.to_string())?;
        let oracle = sommerfeld_tensor(c.x, c.x_src, w, eps_d, em, &pole_opts).map_err(|e| e.to_string())?;
        let closed = d_spp_tensor(&SppTensorInputs::new(&mode, c.x, c.x_src)).map_err(|e| e.to_string())?;
        Ok((closed, oracle))
    };
    let main_res = par::map(&main, Execution::default(), |c| closed_vs_oracle(c, None, ed));
    let toy_res = par::map(&toy, Execution::default(), |c| {
        closed_vs_oracle(c, Some(Complex64::new(-2.0, 0.0)), Complex64::new(1.0, 0.0))
    });
    let rec_res = par::map(&pairs, Execution::default(), |c| -> Pair {
        let w = omega_from_wavelength_nm(c.lambda);
        let em = permittivity(&iface.metal, w).map_err(|e| e.to_string())?;
        let ab = sommerfeld_tensor(c.x, c.x_src, w, ed, em, &full_opts).map_err(|e| e.to_string())?;
        let ba = sommerfeld_tensor(c.x_src, c.x, w, ed, em, &full_opts).map_err(|e| e.to_string())?;
        Ok((ab, ba))
    });

    let mut table = CsvTable::new(&[
        "suite",
        "case",
        "component",
        "lambda_nm",
        "rho_nm",
        "zsum_nm",
        "closed_form_re",
        "closed_form_im",
        "oracle_re",
        "oracle_im",
        "rel_err",
        "tol",
        "status",
    ]);
    let mut tally = Tally { exceeded: 0, failed: 0 };
    for (i, (c, res)) in main.iter().zip(&main_res).enumerate() {
        match res {
            Ok((closed, oracle)) => {
                for (name, a, b) in COMPONENTS {
                    let tol = if a == 2 { tol_zz } else { tol_xx };
                    let err = (closed[a][b] - oracle[a][b]).norm() / oracle[a][b].norm();
                    table.push(validation_row(
                        "closed_form",
                        i,
                        name,
                        c,
                        closed[a][b],
                        oracle[a][b],
                        err,
                        tol,
                        &mut tally,
                    ));
                }
            }
            Err(e) => table.push(failed_row("closed_form", i, c, e, &mut tally)),
        }
    }
    for (i, (c, res)) in toy.iter().zip(&toy_res).enumerate() {
        match res {
            Ok((closed, oracle)) => {
                let err = (closed[2][2] - oracle[2][2]).norm() / oracle[2][2].norm();
                table.push(validation_row(
                    "lossless",
                    i,
                    "zz",
                    c,
                    closed[2][2],
                    oracle[2][2],
                    err,
                    tol_toy,
                    &mut tally,
                ));
            }
            Err(e) => table.push(failed_row("lossless", i, c, e, &mut tally)),
        }
    }
    for (i, (c, res)) in pairs.iter().zip(&rec_res).enumerate() {
        match res {
            Ok((ab, ba)) => {
                // Report the entry with the largest |D_ij(X,X') - D_ji(X',X)|.
                let mut worst = (0usize, 0usize, -1.0f64);
                let mut scale = 0.0f64;
                for a in 0..3 {
                    for b in 0..3 {
                        scale = scale.max(ab[a][b].norm());
                        let d = (ab[a][b] - ba[b][a]).norm();
                        if d > worst.2 {
                            worst = (a, b, d);
                        }
                    }
                }
                let (a, b, d) = worst;
                let name = format!("{}{}", LABELS[a], LABELS[b]);
                table.push(validation_row(
                    "reciprocity",
                    i,
                    &name,
                    c,
                    ab[a][b],
                    ba[b][a],
                    d / scale,
                    tol_rec,
                    &mut tally,
                ));
            }
            Err(e) => table.push(failed_row("reciprocity", i, c, e, &mut tally)),
        }
    }
    let failure = if tally.exceeded > 0 {
        Some(CliError::Tolerance(tally.exceeded))
    } else if tally.failed > 0 {
        Some(CliError::Numerical(format!("{} validation case(s) could not be evaluated", tally.failed)))
    } else {
        None
    };
    Ok(Report { table, failure })
}
