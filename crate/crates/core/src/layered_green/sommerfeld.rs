//! Numerical Sommerfeld evaluation of `D(X, X')`.
//!
//! With `X_par - X'_par = rho (cos phi, sin phi)` the angular integral of
//! `exp(i k rho cos(theta - phi))` against the direction factors of
//! `d = s^-1 g s` is
//!
//! ```text
//! ∫ 1            = 2 pi J0(k rho)
//! ∫ cos θ        = 2 pi i cos(phi) J1          ∫ sin θ = 2 pi i sin(phi) J1
//! ∫ cos^2 θ      = pi (J0 - cos(2 phi) J2)     ∫ sin^2 θ = pi (J0 + cos(2 phi) J2)
//! ∫ cos θ sin θ  = -pi sin(2 phi) J2
//! ```
//!
//! leaving the radial integral `D = -(1/4 pi^2) ∫ k dk Θ(k)` (the minus sign
//! converts the tabulated `g` to the physical `D = 4 pi G`, see the module
//! docs of [`crate::layered_green`]). The angular factors can instead be
//! integrated numerically ([`AngularReduction::Quadrature`]), which keeps
//! the oracle independent of the Bessel routines used by the closed forms.
//!
//! Pole handling:
//!
//! * `Full`: real-axis integral. For a lossy metal the SPP pole lies just
//!   above the axis and is resolved by forced breakpoints around `Re k_spp`;
//!   for a lossless metal the path detours below the pole on a semicircle of
//!   radius `1e-3 k_spp`.
//! * `PoleOnly`: half the integral over a small counter-clockwise circle
//!   around `k_spp`, i.e. `pi i Res`, the surface-wave contribution.
//! * `PoleExcluded`: `Full - PoleOnly`.
//!
//! All radial integrals run in `u = k/k0`, so quadrature tolerances are
//! dimensionless.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::reduced::{reduced_g_matrix, RowReading, Term};
use super::{Axis, RegionPair};
use crate::constants::vacuum_wavenumber;
use crate::error::{GreenError, NumericsError};
use crate::material::spp_pole;
use crate::numerics::{adaptive_integrate, bessel_j012, QuadratureSpec, Upper};
use crate::Tensor3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PoleHandling {
    #[default]
    Full,
    PoleOnly,
    PoleExcluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AngularReduction {
    /// Closed-form J0/J1/J2 kernels.
    #[default]
    BesselKernel,
    /// Numerical θ-integration of the direction factors.
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SommerfeldOptions {
    pub pole: PoleHandling,
    pub reduction: AngularReduction,
    /// `Scattered` (default) drops the free-propagation term; `Direct`
    /// keeps only it.
    pub term: Term,
    pub reading: RowReading,
    pub quad: QuadratureSpec,
    /// Pole-circle radius as a fraction of `|k_spp - sqrt(eps_d) k0|`.
    pub contour_radius_fraction: f64,
    /// Indent radius below a lossless pole as a fraction of `|k_spp|`.
    pub indent_fraction: f64,
}

impl Default for SommerfeldOptions {
    fn default() -> Self {
        Self {
            pole: PoleHandling::Full,
            reduction: AngularReduction::BesselKernel,
            term: Term::Scattered,
            reading: RowReading::Consistent,
            quad: QuadratureSpec::default(),
            contour_radius_fraction: 0.25,
            indent_fraction: 1e-3,
        }
    }
}

impl SommerfeldOptions {
    pub fn pole_only() -> Self {
        Self { pole: PoleHandling::PoleOnly, ..Self::default() }
    }
}

type Vec9 = [Complex64; 9];

/// Angular integrals `[∫1, ∫cos, ∫sin, ∫cos², ∫sin², ∫cos·sin]` of
/// `exp(i x cos(θ - φ))`.
type Kernels = [Complex64; 6];

struct Setup {
    k0: f64,
    rho: f64,
    phi: f64,
    z: f64,
    z_src: f64,
    eps_d: Complex64,
    eps_m: Complex64,
    opts: SommerfeldOptions,
}

fn quad_err(e: NumericsError) -> GreenError {
    match e {
        NumericsError::NonConvergence { estimate, abs_error, subdivisions } => {
            GreenError::Quadrature { estimate_norm: estimate.norm(), abs_error, subdivisions }
        }
        other => GreenError::Numerics(other),
    }
}

fn bessel_kernels(x: Complex64, phi: f64) -> Kernels {
    let [j0, j1, j2] = bessel_j012(x);
    let i = Complex64::i();
    let (c1, s1) = (phi.cos(), phi.sin());
    let (c2, s2) = ((2.0 * phi).cos(), (2.0 * phi).sin());
    [
        j0 * (2.0 * PI),
        i * j1 * (2.0 * PI * c1),
        i * j1 * (2.0 * PI * s1),
        (j0 - j2 * c2) * PI,
        (j0 + j2 * c2) * PI,
        -j2 * (PI * s2),
    ]
}

fn quadrature_kernels(x: Complex64, phi: f64, spec: &QuadratureSpec) -> Result<Kernels, GreenError> {
    let i = Complex64::i();
    let f = |t: f64| -> Kernels {
        let e = (i * x * (t - phi).cos()).exp();
        let (c, s) = (t.cos(), t.sin());
        [e, e * c, e * s, e * (c * c), e * (s * s), e * (c * s)]
    };
    let r = adaptive_integrate(f, 0.0, Upper::Finite(2.0 * PI), &[0.5 * PI, PI, 1.5 * PI], spec).map_err(quad_err)?;
    Ok(r.value)
}

impl Setup {
    /// Radial integrand `-(k/4 pi^2) Θ(k)` at `k = k0 u`.
    fn integrand(&self, u: Complex64) -> Result<Vec9, GreenError> {
        let k = u * self.k0;
        let g =
            reduced_g_matrix(k, self.k0, self.z, self.z_src, self.eps_d, self.eps_m, self.opts.reading, self.opts.term);
        let x = k * self.rho;
        let kern = match self.opts.reduction {
            AngularReduction::BesselKernel => bessel_kernels(x, self.phi),
            AngularReduction::Quadrature => quadrature_kernels(x, self.phi, &self.opts.quad)?,
        };
        let [k1, kc, ks, kcc, kss, kcs] = kern;
        let pre = -k / (4.0 * PI * PI);
        let xy = kcs * (g.xx - g.yy);
        Ok([
            (kcc * g.xx + kss * g.yy) * pre,
            xy * pre,
            kc * g.xz * pre,
            xy * pre,
            (kss * g.xx + kcc * g.yy) * pre,
            ks * g.xz * pre,
            kc * g.zx * pre,
            ks * g.zx * pre,
            k1 * g.zz * pre,
        ])
    }

    /// `∫ integrand(path(t)) path'(t) dt`, capturing the first inner error.
    fn integrate_path<P>(&self, path: P, lower: f64, upper: Upper, breakpoints: &[f64]) -> Result<Vec9, GreenError>
    where
        P: Fn(f64) -> (Complex64, Complex64),
    {
        let mut failure: Option<GreenError> = None;
        let f = |t: f64| -> Vec9 {
            let (u, du) = path(t);
            match self.integrand(u) {
                Ok(v) => v.map(|c| c * du),
                Err(e) => {
                    if failure.is_none() {
                        failure = Some(e);
                    }
                    [Complex64::new(0.0, 0.0); 9]
                }
            }
        };
        let r = adaptive_integrate(f, lower, upper, breakpoints, &self.opts.quad);
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(r.map_err(quad_err)?.value)
    }

    /// Decay distance of the integrand beyond the light line.
    fn decay_distance(&self) -> f64 {
        let pair = RegionPair::new(self.z, self.z_src);
        let through = self.z.abs() + self.z_src.abs();
        let direct = (self.z - self.z_src).abs();
        if !pair.same_side() {
            return through;
        }
        match self.opts.term {
            Term::Scattered => through,
            Term::Direct => direct,
            Term::Total => through.min(direct),
        }
    }

    /// `∫_0^{light + h}` along the real axis. `k_d` vanishes like a square
    /// root at the light line, so both sides use `u = light ∓ s^2`, which
    /// makes the integrand analytic in `s`.
    fn near_light(&self, light: f64, h: f64) -> Result<Vec9, GreenError> {
        let below = |s: f64| (Complex64::new(light - s * s, 0.0), Complex64::new(2.0 * s, 0.0));
        let above = |s: f64| (Complex64::new(light + s * s, 0.0), Complex64::new(2.0 * s, 0.0));
        let a = self.integrate_path(below, 0.0, Upper::Finite(light.sqrt()), &[])?;
        let b = self.integrate_path(above, 0.0, Upper::Finite(h.sqrt()), &[])?;
        Ok(add(a, b))
    }

    fn full(&self, pole: Option<Complex64>) -> Result<Vec9, GreenError> {
        let distance = self.decay_distance();
        if distance <= 0.0 {
            return Err(GreenError::NoDecay);
        }
        let decay = Upper::Decaying { decay_length: 1.0 / (self.k0 * distance) };
        let light = self.eps_d.re.sqrt();
        let real_axis = |t: f64| (Complex64::new(t, 0.0), Complex64::new(1.0, 0.0));
        // Width of the square-root-mapped interval above the light line:
        // well short of the pole, and no wider than the light line itself.
        let h = match pole {
            Some(up) => (0.5 * (up.re - light)).min(0.5 * light),
            None => 0.5 * light,
        };
        let start = light + h;
        let head = self.near_light(light, h)?;
        match pole {
            Some(up) if up.im <= 1e-12 * up.re => {
                let delta = self.opts.indent_fraction * up.norm();
                let (left, right) = (up.re - delta, up.re + delta);
                let first = self.integrate_path(real_axis, start, Upper::Finite(left), &[])?;
                let centre = up.re;
                let arc = |t: f64| {
                    let e = Complex64::new(0.0, t).exp();
                    (Complex64::new(centre, 0.0) + e * delta, Complex64::i() * e * delta)
                };
                let indent = self.integrate_path(arc, PI, Upper::Finite(2.0 * PI), &[1.5 * PI])?;
                let tail = self.integrate_path(real_axis, right, decay, &[])?;
                Ok(add(add(add(head, first), indent), tail))
            }
            Some(up) => {
                let w = 10.0 * up.im;
                let mut bps: Vec<f64> = vec![up.re - w, up.re, up.re + w];
                bps.retain(|&b| b > start);
                Ok(add(head, self.integrate_path(real_axis, start, decay, &bps)?))
            }
            None => Ok(add(head, self.integrate_path(real_axis, start, decay, &[])?)),
        }
    }

    fn pole_only(&self, up: Complex64) -> Result<Vec9, GreenError> {
        let light = self.eps_d.sqrt();
        let r = self.opts.contour_radius_fraction * (up - light).norm();
        let circle = |t: f64| {
            let e = Complex64::new(0.0, t).exp();
            // Half of the closed loop: pi i Res.
            (up + e * r, Complex64::i() * e * (0.5 * r))
        };
        self.integrate_path(circle, 0.0, Upper::Finite(2.0 * PI), &[0.5 * PI, PI, 1.5 * PI])
    }
}

fn add(a: Vec9, b: Vec9) -> Vec9 {
    let mut out = a;
    for (o, v) in out.iter_mut().zip(b) {
        *o += v;
    }
    out
}

fn unpack(v: Vec9, k0: f64) -> Tensor3 {
    let s = |c: Complex64| c * k0;
    [[s(v[0]), s(v[1]), s(v[2])], [s(v[3]), s(v[4]), s(v[5])], [s(v[6]), s(v[7]), s(v[8])]]
}

/// Full tensor `D(X, X')` (physical sign, `D = 4 pi G`) from the
/// Sommerfeld integral.
pub fn sommerfeld_tensor(
    x: [f64; 3],
    x_src: [f64; 3],
    omega: f64,
    eps_d: Complex64,
    eps_m: Complex64,
    opts: &SommerfeldOptions,
) -> Result<Tensor3, GreenError> {
    opts.quad.validate()?;
    if !(omega.is_finite() && omega > 0.0) {
        return Err(GreenError::InvalidFreeSpaceWavenumber(omega));
    }
    if opts.term != Term::Scattered && x == x_src {
        return Err(GreenError::CoincidentPoints);
    }
    let k0 = vacuum_wavenumber(omega);
    let (dx, dy) = (x[0] - x_src[0], x[1] - x_src[1]);
    let setup = Setup { k0, rho: dx.hypot(dy), phi: dy.atan2(dx), z: x[2], z_src: x_src[2], eps_d, eps_m, opts: *opts };
    let pole = spp_pole(omega, eps_d, eps_m).ok().map(|m| m.k_spp / k0);
    let needs_pole = opts.pole != PoleHandling::Full;
    if needs_pole {
        if !(x[2] > 0.0 && x_src[2] > 0.0) {
            return Err(GreenError::NotInDielectric);
        }
        if pole.is_none() {
            return Err(GreenError::NoPole);
        }
    }
    let v = match opts.pole {
        PoleHandling::Full => setup.full(pole)?,
        PoleHandling::PoleOnly => setup.pole_only(pole.unwrap())?,
        PoleHandling::PoleExcluded => {
            let full = setup.full(pole)?;
            let p = setup.pole_only(pole.unwrap())?;
            let mut out = full;
            for (o, q) in out.iter_mut().zip(p) {
                *o -= q;
            }
            out
        }
    };
    Ok(unpack(v, k0))
}

/// Single component `D_ij(X, X')`.
#[allow(clippy::too_many_arguments)]
pub fn sommerfeld_d(
    i: Axis,
    j: Axis,
    x: [f64; 3],
    x_src: [f64; 3],
    omega: f64,
    eps_d: Complex64,
    eps_m: Complex64,
    opts: &SommerfeldOptions,
) -> Result<Complex64, GreenError> {
    Ok(sommerfeld_tensor(x, x_src, omega, eps_d, eps_m, opts)?[i.index()][j.index()])
}
