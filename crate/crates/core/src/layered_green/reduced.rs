//! Reduced Green's matrix `g(k_par | z, z')` in all four region pairs, the
//! in-plane rotation `s`, and the assembly `d = s^-1 g s`.
//!
//! With `K = c^2/w^2 = 1/k0^2`, the p-denominator `P = k_m eps_d - k_d eps_m`
//! and the reflection factors
//!
//! ```text
//! r_p = (k_m eps_d + k_d eps_m) / P,      r_s = (k_m + k_d) / (k_m - k_d),
//! ```
//!
//! the dielectric/dielectric rows read, e.g.
//!
//! ```text
//! g_yy = (2 pi i / k_d) [ r_s e^{i k_d (z+z')} - e^{i k_d |z-z'|} ]
//! g_zz = (2 pi i k^2 K / (k_d eps_d)) [ r_p e^{i k_d (z+z')} - e^{i k_d |z-z'|} ]
//!        + (4 pi K / eps_d) delta(z - z')
//! ```
//!
//! Three tabulated rows do not satisfy the interface conditions as printed
//! (tangential `E` and normal `eps E` continuous at `z = 0`) nor the
//! homogeneous limit `eps_m = eps_d`:
//!
//! * `g_xx`, observer in metal, source in dielectric: spurious `1/eps_d`;
//! * `g_zx`, same region pair: spurious `1/eps_d`;
//! * `g_zz`, both points in the metal: the direct term is printed as
//!   `- e^{+i k_m |z-z'|}`, which grows into the metal; the consistent
//!   term is `+ e^{-i k_m |z-z'|}`.
//!
//! [`RowReading::Consistent`] (the default) uses the corrected rows;
//! [`RowReading::Printed`] reproduces the tabulated ones.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Axis, Region, RegionPair};
use crate::constants::vacuum_wavenumber;
use crate::error::GreenError;
use crate::material::{spp_pole, vertical_wavenumbers_k0};
use crate::Tensor3;

/// Relative size of `|P|` below which an evaluation counts as sitting on the pole.
const POLE_GUARD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GComponent {
    Xx,
    Yy,
    Zz,
    Xz,
    Zx,
}

impl GComponent {
    pub const ALL: [GComponent; 5] = [GComponent::Xx, GComponent::Yy, GComponent::Zz, GComponent::Xz, GComponent::Zx];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RowReading {
    /// Rows satisfying continuity, reciprocity and the homogeneous limit.
    #[default]
    Consistent,
    /// Rows exactly as tabulated.
    Printed,
}

/// Which part of a same-side row to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Term {
    #[default]
    Total,
    /// Reflected part only (the whole row for points on opposite sides).
    Scattered,
    /// Free-propagation part only (zero for points on opposite sides).
    Direct,
}

/// The `delta(z - z')` part of `g_zz`, kept symbolic: `coefficient * delta(z - z')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactTerm {
    pub coefficient: Complex64,
}

/// The five non-zero entries of `g`, plus the contact term of `g_zz` when
/// both points are on the same side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedGreenMatrix {
    pub xx: Complex64,
    pub yy: Complex64,
    pub zz: Complex64,
    pub xz: Complex64,
    pub zx: Complex64,
    pub contact: Option<ContactTerm>,
}

impl ReducedGreenMatrix {
    pub fn get(&self, c: GComponent) -> Complex64 {
        match c {
            GComponent::Xx => self.xx,
            GComponent::Yy => self.yy,
            GComponent::Zz => self.zz,
            GComponent::Xz => self.xz,
            GComponent::Zx => self.zx,
        }
    }

    /// Dense 3×3 form (zeros at xy, yx, yz, zy).
    pub fn as_matrix(&self) -> Tensor3 {
        let z = Complex64::new(0.0, 0.0);
        [[self.xx, z, self.xz], [z, self.yy, z], [self.zx, z, self.zz]]
    }
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Reduced matrix at a (possibly complex) in-plane wavenumber `k`, without
/// pole guarding. `k0` is the vacuum wavenumber.
#[allow(clippy::too_many_arguments)]
pub fn reduced_g_matrix(
    k: Complex64,
    k0: f64,
    z: f64,
    z_src: f64,
    eps_d: Complex64,
    eps_m: Complex64,
    reading: RowReading,
    term: Term,
) -> ReducedGreenMatrix {
    let (kd, km) = vertical_wavenumbers_k0(k, k0, eps_d, eps_m);
    let i = Complex64::i();
    let kk = 1.0 / (k0 * k0);
    let p = km * eps_d - kd * eps_m;
    let rp = (km * eps_d + kd * eps_m) / p;
    let rs = (km + kd) / (km - kd);
    let two_pi_i = i * (2.0 * PI);
    let four_pi_i = i * (4.0 * PI);
    let dz = z - z_src;
    let s = sgn(dz);
    let printed = reading == RowReading::Printed;

    let (refl, direct) = match term {
        Term::Total => (1.0, 1.0),
        Term::Scattered => (1.0, 0.0),
        Term::Direct => (0.0, 1.0),
    };

    match RegionPair::new(z, z_src) {
        RegionPair { observer: Region::Dielectric, source: Region::Dielectric } => {
            let er = (i * kd * (z + z_src)).exp() * refl;
            let ed = (i * kd * dz.abs()).exp() * direct;
            ReducedGreenMatrix {
                xx: -two_pi_i * kd * kk / eps_d * (rp * er + ed),
                yy: two_pi_i / kd * (rs * er - ed),
                zz: two_pi_i * k * k * kk / (kd * eps_d) * (rp * er - ed),
                xz: -two_pi_i * k * kk / eps_d * (rp * er - ed * s),
                zx: two_pi_i * k * kk / eps_d * (rp * er + ed * s),
                contact: (direct != 0.0)
                    .then(|| ContactTerm { coefficient: Complex64::new(4.0 * PI * kk, 0.0) / eps_d }),
            }
        }
        RegionPair { observer: Region::Metal, source: Region::Metal } => {
            let er = (i * km * (z + z_src)).exp() * refl;
            let ed = (-i * km * dz.abs()).exp() * direct;
            let zz = if printed {
                let grow = (i * km * dz.abs()).exp() * direct;
                two_pi_i * k * k * kk / (km * eps_m) * (rp * er - grow)
            } else {
                two_pi_i * k * k * kk / (km * eps_m) * (rp * er + ed)
            };
            ReducedGreenMatrix {
                xx: -two_pi_i * km * kk / eps_m * (rp * er - ed),
                yy: two_pi_i / km * (rs * er + ed),
                zz,
                xz: -two_pi_i * k * kk / eps_m * (rp * er - ed * s),
                zx: two_pi_i * k * kk / eps_m * (rp * er + ed * s),
                contact: (direct != 0.0)
                    .then(|| ContactTerm { coefficient: Complex64::new(4.0 * PI * kk, 0.0) / eps_m }),
            }
        }
        RegionPair { observer: Region::Dielectric, source: Region::Metal } => {
            let e = (i * kd * z + i * km * z_src).exp() * refl;
            ReducedGreenMatrix {
                xx: -four_pi_i * kk * kd * km / p * e,
                yy: four_pi_i / (km - kd) * e,
                zz: four_pi_i * k * k * kk / p * e,
                xz: -four_pi_i * k * kk * kd / p * e,
                zx: four_pi_i * k * kk * km / p * e,
                contact: None,
            }
        }
        RegionPair { observer: Region::Metal, source: Region::Dielectric } => {
            let e = (i * km * z + i * kd * z_src).exp() * refl;
            let extra = if printed { Complex64::new(1.0, 0.0) / eps_d } else { Complex64::new(1.0, 0.0) };
            ReducedGreenMatrix {
                xx: -four_pi_i * kk * kd * km / p * extra * e,
                yy: four_pi_i / (km - kd) * e,
                zz: four_pi_i * k * k * kk / p * e,
                xz: -four_pi_i * k * kk * km / p * e,
                zx: four_pi_i * k * kk * kd / p * extra * e,
                contact: None,
            }
        }
    }
}

/// One entry of `g` at a real in-plane wavenumber, with the default
/// (consistent) row reading.
///
/// Fails with [`GreenError::PoleProximity`] when `k_par` sits on a real
/// (lossless) SPP pole.
pub fn reduced_g(
    component: GComponent,
    k_par: f64,
    omega: f64,
    z: f64,
    z_src: f64,
    eps_d: Complex64,
    eps_m: Complex64,
) -> Result<Complex64, GreenError> {
    if !(k_par.is_finite() && k_par >= 0.0) {
        return Err(GreenError::InvalidWavenumber(k_par));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(GreenError::InvalidFreeSpaceWavenumber(omega));
    }
    let k0 = vacuum_wavenumber(omega);
    let k = Complex64::new(k_par, 0.0);
    let (kd, km) = vertical_wavenumbers_k0(k, k0, eps_d, eps_m);
    let p = km * eps_d - kd * eps_m;
    let scale = (km * eps_d).norm().max((kd * eps_m).norm());
    if p.norm() <= POLE_GUARD * scale {
        let distance = spp_pole(omega, eps_d, eps_m).map(|m| (m.k_spp - k).norm()).unwrap_or(0.0);
        return Err(GreenError::PoleProximity { k_par, distance });
    }
    let g = reduced_g_matrix(k, k0, z, z_src, eps_d, eps_m, RowReading::Consistent, Term::Total);
    Ok(g.get(component))
}

/// In-plane rotation taking `(k_x, k_y, 0)` to `(k_par, 0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    pub s: [[f64; 3]; 3],
    pub s_inv: [[f64; 3]; 3],
    /// `k_par = 0`: the rotation is undefined and the identity is returned.
    pub degenerate: bool,
}

pub fn rotation_s(kx: f64, ky: f64) -> Rotation {
    let k = kx.hypot(ky);
    if k == 0.0 || !k.is_finite() {
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        return Rotation { s: id, s_inv: id, degenerate: true };
    }
    let (c, s) = (kx / k, ky / k);
    Rotation {
        s: [[c, s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]],
        s_inv: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        degenerate: false,
    }
}

/// `d = s^-1 g s` for the in-plane wavevector `(k_x, k_y)`.
pub fn assemble_d(kx: f64, ky: f64, g: &ReducedGreenMatrix) -> Tensor3 {
    let k = kx.hypot(ky);
    if k == 0.0 {
        return assemble_d_direction(1.0, 0.0, g);
    }
    assemble_d_direction(kx / k, ky / k, g)
}

/// `d = s^-1 g s` for the in-plane direction `(cos θ, sin θ)`; `g` may be
/// evaluated at a complex wavenumber magnitude.
pub fn assemble_d_direction(cos_t: f64, sin_t: f64, g: &ReducedGreenMatrix) -> Tensor3 {
    let (c2, s2, cs) = (cos_t * cos_t, sin_t * sin_t, cos_t * sin_t);
    [
        [g.xx * c2 + g.yy * s2, (g.xx - g.yy) * cs, g.xz * cos_t],
        [(g.xx - g.yy) * cs, g.yy * c2 + g.xx * s2, g.xz * sin_t],
        [g.zx * cos_t, g.zx * sin_t, g.zz],
    ]
}

/// Component lookup for tensors indexed by [`Axis`].
pub fn tensor_entry(t: &Tensor3, i: Axis, j: Axis) -> Complex64 {
    t[i.index()][j.index()]
}
