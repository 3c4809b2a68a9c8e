//! Free-space dyadic Green's function
//!
//! ```text
//! G0(r, r') = [(3/(kR)^2 - 3i/(kR) - 1) R̂R̂ + (1 + i/(kR) - 1/(kR)^2) 1] e^{ikR} / (4 pi R)
//! ```
//!
//! solving `curl curl G0 - k^2 G0 = 1 delta(r - r')`. For a homogeneous
//! dielectric the layered tensor `D` reduces to `4 pi G0` with
//! `k = sqrt(eps_d) k0`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::GreenError;
use crate::Tensor3;

pub fn free_space_g0(r: [f64; 3], r_src: [f64; 3], k: f64) -> Result<Tensor3, GreenError> {
    if !(k.is_finite() && k > 0.0) {
        return Err(GreenError::InvalidFreeSpaceWavenumber(k));
    }
    let d = [r[0] - r_src[0], r[1] - r_src[1], r[2] - r_src[2]];
    let big_r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    if big_r == 0.0 {
        return Err(GreenError::CoincidentPoints);
    }
    let u = [d[0] / big_r, d[1] / big_r, d[2] / big_r];
    let kr = k * big_r;
    let i = Complex64::i();
    let inv = 1.0 / kr;
    let radial = Complex64::new(3.0 * inv * inv - 1.0, -3.0 * inv);
    let iso = Complex64::new(1.0 - inv * inv, inv);
    let phase = (i * kr).exp() / (4.0 * PI * big_r);
    let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            let delta = if a == b { 1.0 } else { 0.0 };
            g[a][b] = (radial * (u[a] * u[b]) + iso * delta) * phase;
        }
    }
    Ok(g)
}
