mod common;

use common::{c, rng};
use num_complex::Complex64;
use rand::Rng;
use spp_green::constants::{omega_from_ev, omega_from_wavelength_nm, vacuum_wavenumber};
use spp_green::material::{
    permittivity, pole_residual, propagation_length, silver_default, spp_pole, vertical_wavenumbers, DrudeParams,
    Medium, POLE_RESIDUAL_TOL,
};
use spp_green::MaterialError;

#[test]
fn silver_parameters() {
    let p = silver_default();
    assert_eq!(p.omega_p_ev, 3.76);
    assert_eq!(p.eps_inf, 9.6);
    assert!((p.gamma_ev / p.omega_p_ev - 0.03).abs() < 1e-15);
}

#[test]
fn drude_limits() {
    let hi = permittivity(&Medium::silver(), omega_from_ev(1e5)).unwrap();
    assert!((hi - c(9.6)).norm() < 1e-6);
    let lossless = Medium::DrudeMetal(DrudeParams::new(3.76, 9.6, 0.0).unwrap());
    assert!(permittivity(&lossless, omega_from_ev(3.76)).unwrap().norm() < 1e-12);
    assert!(matches!(permittivity(&Medium::silver(), 0.0), Err(MaterialError::NonPositiveFrequency(_))));
}

#[test]
fn passivity() {
    let mut r = rng(21);
    for _ in 0..1000 {
        let w = omega_from_ev(r.gen_range(1e-3..20.0));
        assert!(permittivity(&Medium::silver(), w).unwrap().im > 0.0);
    }
}

#[test]
fn vertical_wavenumber_branches() {
    let w = omega_from_wavelength_nm(600.0);
    let k0 = vacuum_wavenumber(w);
    let (kd, _) = vertical_wavenumbers(0.0, w, c(1.0), c(-2.0));
    assert!((kd - c(k0)).norm() < 1e-9 * k0);
    let (kd, km) = vertical_wavenumbers(2.0 * k0, w, c(1.0), c(-2.0));
    assert!(kd.re.abs() < 1e-9 * k0 && kd.im > 0.0);
    assert!(km.im < 0.0);
    let (_, km) = vertical_wavenumbers(0.0, w, c(1.0), c(-2.0));
    assert!((km - Complex64::new(0.0, -(2f64.sqrt()) * k0)).norm() < 1e-9 * k0);
}

#[test]
fn pole_residual_bound_for_random_silver() {
    let mut r = rng(22);
    for _ in 0..100 {
        let lambda = r.gen_range(380.0..1500.0);
        let w = omega_from_wavelength_nm(lambda);
        let em = permittivity(&Medium::silver(), w).unwrap();
        let ed = c(r.gen_range(1.0..2.5));
        let mode = spp_pole(w, ed, em).unwrap();
        assert!(mode.k_spp.re > 0.0 && mode.k_spp.im >= 0.0);
        assert!(pole_residual(mode.k_spp, vacuum_wavenumber(w), ed, em) <= POLE_RESIDUAL_TOL);
    }
}

#[test]
fn silver_500nm_mode() {
    let w = omega_from_wavelength_nm(500.0);
    let mode = spp_pole(w, c(1.0), permittivity(&Medium::silver(), w).unwrap()).unwrap();
    let n = mode.k_spp / vacuum_wavenumber(w);
    assert!((n.re - 1.0426).abs() < 5e-4, "{n}");
    assert!((n.im - 0.0037).abs() < 5e-4, "{n}");
    let l = propagation_length(&mode);
    assert!(l.is_finite() && l > 0.0);
}

#[test]
fn monotone_confinement() {
    let w = omega_from_wavelength_nm(600.0);
    let k0 = vacuum_wavenumber(w);
    let ed = 2.0;
    let mut prev = f64::INFINITY;
    for em in [-2.5, -3.0, -5.0, -10.0, -50.0, -1e3, -1e5] {
        let k = spp_pole(w, c(ed), c(em)).unwrap().k_spp.re;
        assert!(k < prev && k > ed.sqrt() * k0);
        prev = k;
    }
    assert!((prev / (ed.sqrt() * k0) - 1.0) < 1e-4);
}

#[test]
fn no_bound_mode_and_lossless_sentinel() {
    let w = omega_from_wavelength_nm(600.0);
    assert!(matches!(spp_pole(w, c(1.0), c(-0.5)), Err(MaterialError::NoBoundMode { .. })));
    let toy = spp_pole(w, c(1.0), c(-2.0)).unwrap();
    assert!((toy.k_spp - c(2f64.sqrt() * vacuum_wavenumber(w))).norm() < 1e-9 * toy.k_spp.norm());
    assert_eq!(toy.propagation_length(), f64::INFINITY);
}
