mod common;

use std::f64::consts::PI;

use common::{c, rel_diff, rng, silver_eps};
use num_complex::Complex64;
use rand::Rng;
use spp_green::constants::{omega_from_wavelength_nm, vacuum_wavenumber};
use spp_green::layered_green::{
    assemble_d, free_space_g0, reduced_g, reduced_g_matrix, rotation_s, sommerfeld_d, sommerfeld_tensor, Axis,
    GComponent, PoleHandling, ReducedGreenMatrix, RowReading, SommerfeldOptions, Term,
};
use spp_green::material::vertical_wavenumbers;
use spp_green::GreenError;

/// Just below the interface: every `e^{i k_m z}` factor is exactly 1.
const BELOW: f64 = -f64::MIN_POSITIVE;

fn g(k: f64, k0: f64, z: f64, zs: f64, ed: Complex64, em: Complex64, reading: RowReading) -> ReducedGreenMatrix {
    reduced_g_matrix(c(k), k0, z, zs, ed, em, reading, Term::Total)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm())
}

#[test]
fn gyy_interface_value_and_continuity() {
    let mut r = rng(11);
    for _ in 0..100 {
        let lambda = r.gen_range(450.0..900.0);
        let w = omega_from_wavelength_nm(lambda);
        let k0 = vacuum_wavenumber(w);
        let kp = r.gen_range(0.0..3.0) * k0;
        let zs = r.gen_range(1e-9..300e-9);
        let em = silver_eps(lambda);
        let ed = c(1.0);
        let above = reduced_g(GComponent::Yy, kp, w, 0.0, zs, ed, em).unwrap();
        let below = reduced_g(GComponent::Yy, kp, w, BELOW, zs, ed, em).unwrap();
        let (kd, km) = vertical_wavenumbers(kp, w, ed, em);
        let expected = Complex64::new(0.0, 4.0 * PI) / (km - kd) * (Complex64::i() * kd * zs).exp();
        assert!(close(above, below, 1e-10), "{above} vs {below}");
        assert!(close(above, expected, 1e-10), "{above} vs {expected}");
    }
}

#[test]
fn tangential_and_normal_continuity_for_both_source_sides() {
    let mut r = rng(12);
    let ed = c(2.25);
    for _ in 0..100 {
        let lambda = r.gen_range(450.0..900.0);
        let w = omega_from_wavelength_nm(lambda);
        let k0 = vacuum_wavenumber(w);
        let em = silver_eps(lambda);
        let kp = r.gen_range(0.0..4.0) * k0;
        let zs = r.gen_range(1e-9..200e-9) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
        let up = g(kp, k0, 0.0, zs, ed, em, RowReading::Consistent);
        let dn = g(kp, k0, BELOW, zs, ed, em, RowReading::Consistent);
        // E_x, E_y tangential; eps E_z normal.
        assert!(close(up.xx, dn.xx, 1e-10), "xx {} {}", up.xx, dn.xx);
        assert!(close(up.yy, dn.yy, 1e-10));
        assert!(close(up.xz, dn.xz, 1e-10), "xz {} {}", up.xz, dn.xz);
        assert!(close(up.zz * ed, dn.zz * em, 1e-10), "zz {} {}", up.zz * ed, dn.zz * em);
        assert!(close(up.zx * ed, dn.zx * em, 1e-10), "zx {} {}", up.zx * ed, dn.zx * em);
    }
}

/// With `eps_m = eps_d` every row must reduce to free propagation, which is
/// translation invariant: compare against the direct term after shifting both
/// points into the upper half-space.
fn homogeneous_mismatch(reading: RowReading) -> f64 {
    let eps = c(2.25);
    let w = omega_from_wavelength_nm(600.0);
    let k0 = vacuum_wavenumber(w);
    let mut r = rng(13);
    let mut worst = 0.0f64;
    for (so, ss) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        for _ in 0..25 {
            let z = so * r.gen_range(1e-9..200e-9);
            let zs = ss * r.gen_range(1e-9..200e-9);
            let kp = r.gen_range(0.0..3.0) * k0;
            let shift = 1e-6;
            let here = g(kp, k0, z, zs, eps, eps, reading).as_matrix();
            let free = reduced_g_matrix(c(kp), k0, z + shift, zs + shift, eps, eps, reading, Term::Direct).as_matrix();
            worst = worst.max(rel_diff(&here, &free));
            if so == ss && so > 0.0 {
                let refl = reduced_g_matrix(c(kp), k0, z, zs, eps, eps, reading, Term::Scattered);
                for comp in GComponent::ALL {
                    assert_eq!(refl.get(comp).norm(), 0.0, "{comp:?}");
                }
            }
        }
    }
    worst
}

#[test]
fn homogeneous_limit_all_components_all_regions() {
    assert!(homogeneous_mismatch(RowReading::Consistent) < 1e-12);
    // The tabulated rows fail the same check, which is why they are not the default.
    assert!(homogeneous_mismatch(RowReading::Printed) > 1e-3);
}

#[test]
fn gxz_direct_term_flips_sign_across_the_source() {
    let w = omega_from_wavelength_nm(600.0);
    let k0 = vacuum_wavenumber(w);
    let (ed, em) = (c(1.0), silver_eps(600.0));
    let zs = 50e-9;
    let d = 1e-15;
    let direct = |z: f64| reduced_g_matrix(c(0.8 * k0), k0, z, zs, ed, em, RowReading::Consistent, Term::Direct).xz;
    let (a, b) = (direct(zs + d), direct(zs - d));
    assert!(close(a, -b, 1e-6), "{a} vs {b}");
}

#[test]
fn contact_term_only_on_the_same_side() {
    let w = omega_from_wavelength_nm(600.0);
    let k0 = vacuum_wavenumber(w);
    let (ed, em) = (c(1.0), silver_eps(600.0));
    let same = reduced_g_matrix(c(k0), k0, 10e-9, 20e-9, ed, em, RowReading::Consistent, Term::Total);
    let opposite = reduced_g_matrix(c(k0), k0, -10e-9, 20e-9, ed, em, RowReading::Consistent, Term::Total);
    assert!(same.contact.is_some());
    assert!(opposite.contact.is_none());
}

#[test]
fn lossless_pole_is_rejected() {
    let w = omega_from_wavelength_nm(500.0);
    let kp = 2f64.sqrt() * vacuum_wavenumber(w);
    let err = reduced_g(GComponent::Zz, kp, w, 10e-9, 20e-9, c(1.0), c(-2.0)).unwrap_err();
    assert!(matches!(err, GreenError::PoleProximity { .. }));
}

#[test]
#[allow(clippy::needless_range_loop)]
fn assemble_matches_explicit_product() {
    let mut r = rng(14);
    let mut val = || Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0));
    let mut rr = rng(15);
    for _ in 0..10_000 {
        let gm = ReducedGreenMatrix { xx: val(), yy: val(), zz: val(), xz: val(), zx: val(), contact: None };
        let (kx, ky) = (rr.gen_range(-5.0..5.0), rr.gen_range(-5.0..5.0));
        let rot = rotation_s(kx, ky);
        let gd = gm.as_matrix();
        let mut explicit = [[c(0.0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for a in 0..3 {
                    for b in 0..3 {
                        explicit[i][j] += gd[a][b] * (rot.s_inv[i][a] * rot.s[b][j]);
                    }
                }
            }
        }
        let d = assemble_d(kx, ky, &gm);
        assert!(rel_diff(&d, &explicit) < 1e-14);
        // (1,3)/(2,3) = kx/ky.
        let ratio = d[0][2] / d[1][2];
        assert!(close(ratio, c(kx / ky), 1e-12));
    }
}

#[test]
fn rotation_examples() {
    let id = rotation_s(3.0, 0.0);
    assert!(!id.degenerate);
    assert_eq!(id.s, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    let quarter = rotation_s(0.0, 2.0);
    let v = [0.0, 2.0, 0.0];
    let sv: Vec<f64> = (0..3).map(|i| (0..3).map(|j| quarter.s[i][j] * v[j]).sum()).collect();
    assert!((sv[0] - 2.0).abs() < 1e-15 && sv[1].abs() < 1e-15);
    assert!(rotation_s(0.0, 0.0).degenerate);
}

#[test]
fn free_space_limits() {
    let k = 1.2e7;
    // Trace of Im G0 -> k / (2 pi) as R -> 0.
    let g = free_space_g0([1e-12, 0.0, 0.0], [0.0; 3], k).unwrap();
    let tr = g[0][0].im + g[1][1].im + g[2][2].im;
    assert!((tr - k / (2.0 * PI)).abs() < 1e-6 * k);
    // Radial projection vanishes relative to the transverse one in the far field.
    let r = 1e4 / k;
    let g = free_space_g0([0.0, 0.0, r], [0.0; 3], k).unwrap();
    assert!(g[2][2].norm() < 1e-3 * g[0][0].norm());
    // Depends on r - r' only.
    let a = free_space_g0([1e-7, 2e-7, 3e-7], [0.0; 3], k).unwrap();
    let b = free_space_g0([2e-7, 4e-7, 5e-7], [1e-7, 2e-7, 2e-7], k).unwrap();
    assert!(rel_diff(&a, &b) < 1e-12);
    assert!(matches!(free_space_g0([0.0; 3], [0.0; 3], k), Err(GreenError::CoincidentPoints)));
}

#[test]
fn direct_term_is_the_bulk_free_space_tensor() {
    let w = omega_from_wavelength_nm(580.0);
    let ed = 2.25;
    let opts = SommerfeldOptions { term: Term::Direct, ..SommerfeldOptions::default() };
    let a = [120e-9, -40e-9, 35e-9];
    let b = [-30e-9, 60e-9, 15e-9];
    let d = sommerfeld_tensor(a, b, w, c(ed), silver_eps(580.0), &opts).unwrap();
    let g0 = free_space_g0(a, b, ed.sqrt() * vacuum_wavenumber(w)).unwrap();
    let d0 = g0.map(|row| row.map(|v| v * (4.0 * PI)));
    assert!(rel_diff(&d, &d0) < 1e-9);
}

fn reciprocity_error(ed: f64, reading: RowReading, pairs: &[([f64; 3], [f64; 3])]) -> f64 {
    let w = omega_from_wavelength_nm(580.0);
    let opts = SommerfeldOptions { reading, ..SommerfeldOptions::default() };
    let em = silver_eps(580.0);
    let mut worst = 0.0f64;
    for &(a, b) in pairs {
        let ab = sommerfeld_tensor(a, b, w, c(ed), em, &opts).unwrap();
        let ba = sommerfeld_tensor(b, a, w, c(ed), em, &opts).unwrap();
        let ba_t = std::array::from_fn(|i| std::array::from_fn(|j| ba[j][i]));
        worst = worst.max(rel_diff(&ab, &ba_t));
    }
    worst
}

#[test]
fn full_mode_reciprocity_in_and_across_regions() {
    let mut r = rng(16);
    let mut point =
        |sign: f64| [r.gen_range(-300e-9..300e-9), r.gen_range(-300e-9..300e-9), sign * r.gen_range(5e-9..100e-9)];
    let same: Vec<_> = (0..5).map(|_| (point(1.0), point(1.0))).collect();
    let cross: Vec<_> = (0..5).map(|_| (point(-1.0), point(1.0))).collect();
    let tol = 10.0 * SommerfeldOptions::default().quad.rel_tol;
    assert!(reciprocity_error(1.0, RowReading::Consistent, &same) < tol);
    assert!(reciprocity_error(1.5, RowReading::Consistent, &cross) < tol);
    // The tabulated cross-region rows break reciprocity once eps_d != 1.
    assert!(reciprocity_error(1.5, RowReading::Printed, &cross) > 1e-3);
}

#[test]
fn pole_decomposition_is_consistent() {
    let w = omega_from_wavelength_nm(580.0);
    let em = silver_eps(580.0);
    let (a, b) = ([150e-9, 80e-9, 20e-9], [0.0, 0.0, 30e-9]);
    let run = |pole| sommerfeld_tensor(a, b, w, c(1.0), em, &SommerfeldOptions { pole, ..Default::default() }).unwrap();
    let full = run(PoleHandling::Full);
    let sum: [[Complex64; 3]; 3] = {
        let (p, e) = (run(PoleHandling::PoleOnly), run(PoleHandling::PoleExcluded));
        std::array::from_fn(|i| std::array::from_fn(|j| p[i][j] + e[i][j]))
    };
    assert!(rel_diff(&sum, &full) < 1e-9);
}

#[test]
fn dxy_vanishes_on_the_x_axis() {
    let w = omega_from_wavelength_nm(580.0);
    let em = silver_eps(580.0);
    let opts = SommerfeldOptions::default();
    let d = sommerfeld_tensor([150e-9, 0.0, 20e-9], [0.0, 0.0, 30e-9], w, c(1.0), em, &opts).unwrap();
    assert!(d[0][1].norm() <= 1e-12 * d[0][0].norm());
    assert!(d[1][0].norm() <= 1e-12 * d[0][0].norm());
}

#[test]
fn lossless_full_mode_uses_the_indent() {
    // Lossless pole on the real axis: the full integral must still converge.
    let w = omega_from_wavelength_nm(500.0);
    let opts = SommerfeldOptions::default();
    let a = [200e-9, 0.0, 20e-9];
    let b = [0.0, 0.0, 20e-9];
    let zz = sommerfeld_d(Axis::Z, Axis::Z, a, b, w, c(1.0), c(-2.0), &opts).unwrap();
    assert!(zz.re.is_finite() && zz.im.is_finite() && zz.norm() > 0.0);
}

#[test]
fn pole_only_requires_dielectric_points() {
    let w = omega_from_wavelength_nm(580.0);
    let err = sommerfeld_tensor(
        [100e-9, 0.0, -10e-9],
        [0.0, 0.0, 10e-9],
        w,
        c(1.0),
        silver_eps(580.0),
        &SommerfeldOptions::pole_only(),
    )
    .unwrap_err();
    assert_eq!(err, GreenError::NotInDielectric);
}
