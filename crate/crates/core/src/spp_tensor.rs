//! Closed-form surface-plasmon (pole) part of the Green's tensor for source
//! and observer both in the dielectric.
//!
//! With `a = sqrt(eps_d / -eps_m)`, `E = exp(-a |k_spp| (z + z'))`,
//! `x = k rho`, `X_par - X'_par = rho (cos phi, sin phi)` and
//!
//! ```text
//! C  = eps_d eps_m^2 / ((eps_d + eps_m)(eps_d^2 - eps_m^2))
//! Cz = eps_d eps_m^3 / (sqrt(eps_d (-eps_m)) (eps_d + eps_m)(eps_d^2 - eps_m^2))
//! ```
//!
//! the pole contribution `G_spp = D_spp / 4 pi` is
//!
//! ```text
//! G_zz = (-i|k_spp|/2) Cz J0(x) E
//! G_zx = (-i|k_spp|/2) C  cos(phi) J1(x) E            G_zy: sin(phi)
//! G_xx = (-i|k_spp|/4) a C [-2 J1(x)/x + 2 cos^2(phi) J2(x)] E
//! G_yy = (-i|k_spp|/4) a C [-2 J1(x)/x + 2 sin^2(phi) J2(x)] E
//! ```
//!
//! The in-plane bracket is the simplified form of
//! `2 cos^2(phi) J0 - 2 J1/x - 2 cos^2(phi) (J0 - J2)`, finite at `rho = 0`
//! (where `J1(x)/x -> 1/2`). Components not in the published set are derived
//! and flagged ([`SppComponent::is_derived`]):
//!
//! ```text
//! G_xy = G_yx = (-i|k_spp|/4) a C [2 cos(phi) sin(phi) J2(x)] E
//! G_xz = -G_zx,  G_yz = -G_zy          (reciprocity)
//! ```
//!
//! Bessel argument: the residue of the radial integrand carries
//! `J_n(k_spp rho)` with the complex pole. [`BesselArgument::ComplexPole`]
//! (default) keeps it; [`BesselArgument::Modulus`] uses `|k_spp| rho`, the
//! real-argument form. The prefactor and the vertical exponent use
//! `|k_spp|` in both cases.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::SppError;
use crate::material::SppMode;
use crate::numerics::{bessel_j012, bessel_j1_over_z};
use crate::Tensor3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BesselArgument {
    /// `J_n(k_spp rho)` with the complex pole wavenumber.
    #[default]
    ComplexPole,
    /// `J_n(|k_spp| rho)`.
    Modulus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SppTensorInputs {
    pub eps_d: Complex64,
    pub eps_m: Complex64,
    pub k_spp: Complex64,
    /// `x - x'` (m).
    pub dx: f64,
    /// `y - y'` (m).
    pub dy: f64,
    /// Observer height (m).
    pub z: f64,
    /// Source height (m).
    pub z_src: f64,
    pub bessel_arg: BesselArgument,
}

impl SppTensorInputs {
    pub fn new(mode: &SppMode, x: [f64; 3], x_src: [f64; 3]) -> Self {
        Self {
            eps_d: mode.eps_d,
            eps_m: mode.eps_m,
            k_spp: mode.k_spp,
            dx: x[0] - x_src[0],
            dy: x[1] - x_src[1],
            z: x[2],
            z_src: x_src[2],
            bessel_arg: BesselArgument::default(),
        }
    }

    pub fn with_bessel_arg(mut self, arg: BesselArgument) -> Self {
        self.bessel_arg = arg;
        self
    }

    pub fn rho(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    fn validate(&self) -> Result<(), SppError> {
        let finite = |c: Complex64| c.re.is_finite() && c.im.is_finite();
        if !(finite(self.eps_d) && finite(self.eps_m) && finite(self.k_spp)) {
            return Err(SppError::InvalidInputs("non-finite permittivity or wavenumber"));
        }
        if !(self.dx.is_finite() && self.dy.is_finite()) {
            return Err(SppError::InvalidInputs("non-finite lateral separation"));
        }
        if !(self.z.is_finite() && self.z_src.is_finite() && self.z >= 0.0 && self.z_src >= 0.0) {
            return Err(SppError::InvalidInputs("both heights must be finite and >= 0"));
        }
        if self.eps_m.re >= 0.0 {
            return Err(SppError::InvalidInputs("Re eps_m must be negative"));
        }
        if (self.eps_d + self.eps_m).norm() == 0.0 {
            return Err(SppError::Resonance);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SppComponent {
    Zz,
    Xx,
    Yy,
    Zx,
    Zy,
    Xz,
    Yz,
    Xy,
    Yx,
}

impl SppComponent {
    pub const PUBLISHED: [SppComponent; 5] =
        [SppComponent::Zz, SppComponent::Xx, SppComponent::Yy, SppComponent::Zx, SppComponent::Zy];

    /// Not part of the published formula set (obtained by reciprocity or
    /// from the same angular structure).
    pub fn is_derived(self) -> bool {
        matches!(self, SppComponent::Xz | SppComponent::Yz | SppComponent::Xy | SppComponent::Yx)
    }

    pub fn indices(self) -> (usize, usize) {
        match self {
            SppComponent::Xx => (0, 0),
            SppComponent::Xy => (0, 1),
            SppComponent::Xz => (0, 2),
            SppComponent::Yx => (1, 0),
            SppComponent::Yy => (1, 1),
            SppComponent::Yz => (1, 2),
            SppComponent::Zx => (2, 0),
            SppComponent::Zy => (2, 1),
            SppComponent::Zz => (2, 2),
        }
    }
}

/// Full closed-form `G_spp` tensor (row = field, column = source).
pub fn g_spp_tensor(inputs: &SppTensorInputs) -> Result<Tensor3, SppError> {
    inputs.validate()?;
    let SppTensorInputs { eps_d: ed, eps_m: em, k_spp, z, z_src, .. } = *inputs;
    let kabs = k_spp.norm();
    let rho = inputs.rho();
    let (cos_p, sin_p) = if rho > 0.0 { (inputs.dx / rho, inputs.dy / rho) } else { (1.0, 0.0) };
    let k_arg = match inputs.bessel_arg {
        BesselArgument::ComplexPole => k_spp,
        BesselArgument::Modulus => Complex64::new(kabs, 0.0),
    };
    let x = k_arg * rho;
    let [j0, j1, j2] = bessel_j012(x);
    let j1_over_x = bessel_j1_over_z(x);

    let a = (ed / -em).sqrt();
    let em2 = em * em;
    let common = (ed + em) * (ed * ed - em2);
    let c = ed * em2 / common;
    let cz = ed * em2 * em / ((ed * -em).sqrt() * common);
    let decay = (-a * kabs * (z + z_src)).exp();
    let half = Complex64::new(0.0, -kabs / 2.0);
    let quarter = Complex64::new(0.0, -kabs / 4.0);

    let zz = half * cz * j0 * decay;
    let zx = half * c * cos_p * j1 * decay;
    let zy = half * c * sin_p * j1 * decay;
    let inplane = quarter * a * c * decay;
    let xx = inplane * (j1_over_x * -2.0 + j2 * (2.0 * cos_p * cos_p));
    let yy = inplane * (j1_over_x * -2.0 + j2 * (2.0 * sin_p * sin_p));
    let xy = inplane * (j2 * (2.0 * cos_p * sin_p));
    Ok([[xx, xy, -zx], [xy, yy, -zy], [zx, zy, zz]])
}

/// `G_spp` component.
pub fn g_spp(component: SppComponent, inputs: &SppTensorInputs) -> Result<Complex64, SppError> {
    let (i, j) = component.indices();
    Ok(g_spp_tensor(inputs)?[i][j])
}

/// `D_spp = 4 pi G_spp` component (the normalisation of the Sommerfeld oracle).
pub fn d_spp(component: SppComponent, inputs: &SppTensorInputs) -> Result<Complex64, SppError> {
    Ok(g_spp(component, inputs)? * (4.0 * PI))
}

/// Full `D_spp = 4 pi G_spp` tensor.
pub fn d_spp_tensor(inputs: &SppTensorInputs) -> Result<Tensor3, SppError> {
    Ok(g_spp_tensor(inputs)?.map(|row| row.map(|v| v * (4.0 * PI))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{omega_from_wavelength_nm, vacuum_wavenumber};
    use crate::material::spp_pole;

    fn toy_inputs(rho: f64, z0: f64) -> SppTensorInputs {
        let w = omega_from_wavelength_nm(500.0);
        let mode = spp_pole(w, Complex64::new(1.0, 0.0), Complex64::new(-2.0, 0.0)).unwrap();
        SppTensorInputs::new(&mode, [rho, 0.0, z0], [0.0, 0.0, z0])
    }

    #[test]
    fn toy_coincident_gzz() {
        let z0 = 40e-9;
        let inp = toy_inputs(0.0, z0);
        let k = inp.k_spp.norm();
        let g = g_spp(SppComponent::Zz, &inp).unwrap();
        let expected = Complex64::new(0.0, 4.0 / (3.0 * 2f64.sqrt()) * k * (-(2f64.sqrt()) * k * z0).exp());
        assert!((g - expected).norm() <= 1e-12 * expected.norm(), "{g} vs {expected}");
        assert!(g.im > 0.0);
    }

    #[test]
    fn d_is_four_pi_g() {
        let inp = toy_inputs(120e-9, 15e-9);
        for c in SppComponent::PUBLISHED {
            let d = d_spp(c, &inp).unwrap();
            let g = g_spp(c, &inp).unwrap();
            assert_eq!(d, g * (4.0 * PI));
        }
    }

    #[test]
    fn zx_vanishes_on_the_y_axis() {
        let w = omega_from_wavelength_nm(500.0);
        let mode = spp_pole(w, Complex64::new(1.0, 0.0), Complex64::new(-2.0, 0.0)).unwrap();
        let inp = SppTensorInputs::new(&mode, [0.0, 200e-9, 20e-9], [0.0, 0.0, 20e-9]);
        assert_eq!(g_spp(SppComponent::Zx, &inp).unwrap().norm(), 0.0);
    }

    #[test]
    fn zz_height_decay() {
        let h = 30e-9;
        let a = toy_inputs(200e-9, h / 2.0);
        let b = toy_inputs(200e-9, h);
        let ratio = g_spp(SppComponent::Zz, &b).unwrap() / g_spp(SppComponent::Zz, &a).unwrap();
        let k = a.k_spp.norm();
        let expected = (-(0.5f64).sqrt() * k * h).exp();
        assert!((ratio.re - expected).abs() < 1e-12 && ratio.im.abs() < 1e-12);
    }

    #[test]
    fn inplane_limit_at_origin_is_continuous() {
        let k0 = vacuum_wavenumber(omega_from_wavelength_nm(500.0));
        let at = g_spp(SppComponent::Xx, &toy_inputs(0.0, 20e-9)).unwrap();
        let near = g_spp(SppComponent::Xx, &toy_inputs(1e-5 / k0, 20e-9)).unwrap();
        assert!((at - near).norm() < 1e-9 * at.norm());
        let yy = g_spp(SppComponent::Yy, &toy_inputs(0.0, 20e-9)).unwrap();
        assert_eq!(at, yy);
        assert!(at.im > 0.0);
    }

    #[test]
    fn resonance_and_bad_inputs() {
        let mut inp = toy_inputs(100e-9, 10e-9);
        inp.eps_m = Complex64::new(-1.0, 0.0);
        assert_eq!(d_spp(SppComponent::Zz, &inp), Err(SppError::Resonance));
        let mut inp = toy_inputs(100e-9, 10e-9);
        inp.z = -1e-9;
        assert!(d_spp(SppComponent::Zz, &inp).is_err());
    }
}
