//! Run configuration: a flat `key = value` file with section prefixes
//! (`material.*`, `geometry.*`, `source.*`, `emitter.*`, `sweep.*`, `g2.*`,
//! `quad.*`, `validate.*`, `output.*`).
//!
//! Precedence, lowest to highest: built-in defaults, `--config` file,
//! `--set key=value`, dedicated flags. Every key is known in advance, so a
//! typo is a usage error rather than a silently ignored setting. Lengths
//! are in nm and energies in eV at this interface; everything is converted
//! to SI before reaching the library.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use spp_green::emitters::Orientation;
use spp_green::material::{DrudeParams, Medium};
use spp_green::numerics::QuadratureSpec;

use crate::CliError;

/// `(key, default, description)`. An empty default means "unset".
pub const KEYS: &[(&str, &str, &str)] = &[
    ("material.kind", "silver", "silver | drude | fixed"),
    ("material.omega_p_ev", "3.76", "Drude plasma energy, eV (kind = drude)"),
    ("material.eps_inf", "9.6", "Drude high-frequency permittivity (kind = drude)"),
    ("material.gamma_ev", "0.1128", "Drude damping, eV (kind = drude)"),
    ("material.eps_m_re", "-2", "metal permittivity, real part (kind = fixed)"),
    ("material.eps_m_im", "0", "metal permittivity, imaginary part (kind = fixed)"),
    ("material.eps_d", "1", "dielectric permittivity (real, >= 1)"),
    ("geometry.lambda_nm", "500,550,600,650,700", "vacuum wavelengths, nm"),
    ("geometry.z0_nm", "10", "source / emitter heights, nm"),
    ("geometry.point_nm", "300,300,8", "observation point x,y,z for sweeps, nm"),
    ("geometry.x_nm", "-1000:1000:41", "field-map x grid, nm"),
    ("geometry.y_nm", "-1000:1000:41", "field-map y grid, nm"),
    ("geometry.z_nm", "8", "field-map heights, nm"),
    ("source.orientation", "z", "dipole antenna orientation: x | z"),
    ("source.charge_c", "1.602176634e-19", "antenna charge, C"),
    ("source.length_nm", "10", "antenna length, nm"),
    ("source.time_s", "peak", "sampling time in s, or 'peak' for cos(W t) = 1"),
    ("output.relative", "false", "field-map: add free-space columns and E^2/E0^2"),
    ("output.format", "csv", "csv | tsv"),
    ("sweep.mode", "height", "height | wavelength | radial"),
    ("sweep.values_nm", "", "sweep values, nm (default depends on the mode)"),
    ("sweep.azimuth_deg", "45", "radial sweep direction, degrees from +x"),
    ("emitter.orientation", "z,x", "dipole-moment orientations for g2 curves"),
    ("emitter.dipole_debye", "10", "dipole moment, debye"),
    ("emitter.rabi_rad_s", "", "Rabi frequency, rad/s"),
    ("emitter.rabi_per_gamma", "", "Rabi frequency in units of the decay rate"),
    ("emitter.include_free_space", "false", "add the bulk-dielectric rate to Gamma"),
    ("g2.tau_max_gamma", "10", "largest delay, in units of 1/Gamma"),
    ("g2.samples", "501", "delays per curve"),
    ("quad.rtol", "1e-10", "quadrature relative tolerance"),
    ("quad.atol", "1e-12", "quadrature absolute tolerance"),
    ("quad.max_subdivisions", "2000", "quadrature subdivision limit"),
    ("quad.tail_cutoff", "50", "decay lengths kept on semi-infinite intervals"),
    ("validate.seed", "1", "seed of the random validation cases"),
    ("validate.cases", "20", "closed form vs oracle cases (configured metal)"),
    ("validate.toy_cases", "5", "cases for the lossless eps_m = -2 medium"),
    ("validate.reciprocity_pairs", "5", "full-mode reciprocity pairs"),
    ("validate.tol_zz_zx", "0.05", "relative tolerance for zz and zx"),
    ("validate.tol_xx_yy", "0.10", "relative tolerance for xx and yy"),
    ("validate.tol_toy", "0.01", "relative tolerance for the lossless zz cases"),
    ("validate.tol_reciprocity", "1e-9", "relative tolerance for reciprocity"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    values: BTreeMap<String, String>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { values: KEYS.iter().map(|(k, v, _)| (k.to_string(), v.to_string())).collect() }
    }
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let key = key.trim();
        match self.values.get_mut(key) {
            Some(slot) => {
                *slot = value.trim().to_string();
                Ok(())
            }
            None => Err(usage(format!("unknown config key '{key}'"))),
        }
    }

    /// Apply a `key=value` assignment.
    pub fn assign(&mut self, assignment: &str) -> Result<(), CliError> {
        let (k, v) =
            assignment.split_once('=').ok_or_else(|| usage(format!("expected key=value, got '{assignment}'")))?;
        self.set(k, v)
    }

    /// Apply every assignment of a config file (`#` starts a comment).
    pub fn load_str(&mut self, text: &str, origin: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            self.assign(line).map_err(|e| usage(format!("{origin}:{}: {e}", n + 1)))?;
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        self.load_str(&text, &path.display().to_string())
    }

    /// `key=value;key=value` in key order, for the CSV header.
    pub fn echo(&self) -> String {
        self.values.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }

    pub fn raw(&self, key: &str) -> &str {
        self.values.get(key).map(String::as_str).expect("key listed in KEYS")
    }

    pub fn is_set(&self, key: &str) -> bool {
        !self.raw(key).is_empty()
    }

    pub fn f64(&self, key: &str) -> Result<f64, CliError> {
        parse_f64(key, self.raw(key))
    }

    pub fn usize(&self, key: &str) -> Result<usize, CliError> {
        self.raw(key)
            .parse()
            .map_err(|_| usage(format!("{key}: expected a non-negative integer, got '{}'", self.raw(key))))
    }

    pub fn u64(&self, key: &str) -> Result<u64, CliError> {
        self.raw(key)
            .parse()
            .map_err(|_| usage(format!("{key}: expected a non-negative integer, got '{}'", self.raw(key))))
    }

    pub fn bool(&self, key: &str) -> Result<bool, CliError> {
        match self.raw(key) {
            "true" | "1" | "yes" => Ok(true),
            "false" | "0" | "no" => Ok(false),
            other => Err(usage(format!("{key}: expected true/false, got '{other}'"))),
        }
    }

    pub fn list(&self, key: &str) -> Result<Vec<f64>, CliError> {
        parse_list(key, self.raw(key))
    }

    /// A list whose entries must all be finite and > 0.
    pub fn positive_list(&self, key: &str) -> Result<Vec<f64>, CliError> {
        let v = self.list(key)?;
        if v.iter().any(|x| *x <= 0.0) {
            return Err(usage(format!("{key}: all values must be > 0")));
        }
        Ok(v)
    }

    pub fn orientation(&self, key: &str) -> Result<Orientation, CliError> {
        parse_orientation(key, self.raw(key))
    }

    pub fn orientations(&self, key: &str) -> Result<Vec<Orientation>, CliError> {
        let v: Vec<Orientation> = self
            .raw(key)
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_orientation(key, s.trim()))
            .collect::<Result<_, _>>()?;
        if v.is_empty() {
            return Err(usage(format!("{key}: empty list")));
        }
        Ok(v)
    }

    pub fn metal(&self) -> Result<Medium, CliError> {
        match self.raw("material.kind") {
            "silver" => Ok(Medium::silver()),
            "drude" => DrudeParams::new(
                self.f64("material.omega_p_ev")?,
                self.f64("material.eps_inf")?,
                self.f64("material.gamma_ev")?,
            )
            .map(Medium::DrudeMetal)
            .map_err(|e| usage(format!("material: {e}"))),
            "fixed" => {
                Ok(Medium::Fixed(Complex64::new(self.f64("material.eps_m_re")?, self.f64("material.eps_m_im")?)))
            }
            other => Err(usage(format!("material.kind: expected silver, drude or fixed, got '{other}'"))),
        }
    }

    pub fn eps_d(&self) -> Result<f64, CliError> {
        let e = self.f64("material.eps_d")?;
        if e < 1.0 {
            return Err(usage(format!("material.eps_d must be >= 1, got {e}")));
        }
        Ok(e)
    }

    pub fn quad(&self) -> Result<QuadratureSpec, CliError> {
        let spec = QuadratureSpec {
            rel_tol: self.f64("quad.rtol")?,
            abs_tol: self.f64("quad.atol")?,
            max_subdivisions: self.usize("quad.max_subdivisions")?,
            tail_cutoff: self.f64("quad.tail_cutoff")?,
        };
        spec.validate().map_err(|e| usage(format!("quad: {e}")))?;
        Ok(spec)
    }

    /// `None` for the peak envelope.
    pub fn time(&self) -> Result<Option<f64>, CliError> {
        match self.raw("source.time_s") {
            "peak" => Ok(None),
            _ => self.f64("source.time_s").map(Some),
        }
    }

    pub fn point_nm(&self) -> Result<[f64; 3], CliError> {
        let v = self.list("geometry.point_nm")?;
        match v[..] {
            [x, y, z] if z >= 0.0 => Ok([x, y, z]),
            [_, _, _] => Err(usage("geometry.point_nm: z must be >= 0")),
            _ => Err(usage("geometry.point_nm: expected x,y,z")),
        }
    }
}

fn parse_f64(key: &str, s: &str) -> Result<f64, CliError> {
    let v: f64 = s.trim().parse().map_err(|_| usage(format!("{key}: expected a number, got '{s}'")))?;
    if !v.is_finite() {
        return Err(usage(format!("{key}: value must be finite")));
    }
    Ok(v)
}

fn parse_orientation(key: &str, s: &str) -> Result<Orientation, CliError> {
    match s {
        "x" => Ok(Orientation::X),
        "z" => Ok(Orientation::Z),
        other => Err(usage(format!("{key}: expected x or z, got '{other}'"))),
    }
}

/// `a,b,c` or the inclusive range `start:stop:count`.
pub fn parse_list(key: &str, s: &str) -> Result<Vec<f64>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(usage(format!("{key}: empty list")));
    }
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts[..] else {
            return Err(usage(format!("{key}: expected start:stop:count, got '{s}'")));
        };
        let (a, b) = (parse_f64(key, a)?, parse_f64(key, b)?);
        let n: usize = n.trim().parse().map_err(|_| usage(format!("{key}: bad count in '{s}'")))?;
        return match n {
            0 => Err(usage(format!("{key}: count must be >= 1"))),
            1 => Ok(vec![a]),
            _ => Ok((0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()),
        };
    }
    s.split(',').map(|p| parse_f64(key, p)).collect()
}

pub fn describe_keys() -> String {
    let mut out = String::from("Config keys (default):\n");
    for (k, d, help) in KEYS {
        let d = if d.is_empty() { "unset" } else { d };
        out.push_str(&format!("  {k:<28} {help} [{d}]\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_list("k", "1,2.5,3").unwrap(), vec![1.0, 2.5, 3.0]);
        assert_eq!(parse_list("k", "0:10:3").unwrap(), vec![0.0, 5.0, 10.0]);
        assert_eq!(parse_list("k", "4:9:1").unwrap(), vec![4.0]);
        assert!(parse_list("k", "0:1").is_err());
        assert!(parse_list("k", "").is_err());
        assert!(parse_list("k", "1,nan").is_err());
    }

    #[test]
    fn file_overrides_and_unknown_keys() {
        let mut c = RunConfig::default();
        c.load_str("# comment\nmaterial.eps_d = 2.25  # inline\n\ngeometry.z0_nm=5,10\n", "test").unwrap();
        assert_eq!(c.eps_d().unwrap(), 2.25);
        assert_eq!(c.list("geometry.z0_nm").unwrap(), vec![5.0, 10.0]);
        let err = c.load_str("material.eps = 2", "test").unwrap_err();
        assert!(err.to_string().contains("test:1"));
    }

    #[test]
    fn echo_is_sorted_and_complete() {
        let echo = RunConfig::default().echo();
        assert_eq!(echo.split(';').count(), KEYS.len());
        assert!(echo.starts_with("emitter."));
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        c.set("material.eps_d", "0.5").unwrap();
        assert!(c.eps_d().is_err());
        c.set("quad.rtol", "0").unwrap();
        assert!(c.quad().is_err());
        c.set("material.kind", "gold").unwrap();
        assert!(c.metal().is_err());
    }
}
