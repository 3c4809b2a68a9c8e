//! Bessel functions of the first kind, orders 0, 1 and 2.
//!
//! All three orders are produced together, in complex arithmetic, so the
//! same code serves real arguments (field maps, closed forms) and arguments
//! slightly off the real axis (the complex SPP pole, contour detours).
//!
//! Regimes, selected on `|z|`:
//!
//! * `|z| <= SERIES_LIMIT`: ascending power series.
//! * `SERIES_LIMIT < |z| < ASYMPTOTIC_LIMIT`: Miller backward recurrence,
//!   normalised with `J0 + 2 (J2 + J4 + ...) = 1`.
//! * `|z| >= ASYMPTOTIC_LIMIT`: Hankel asymptotic expansion.
//!
//! The series alone loses about `log10(max term)` digits to cancellation
//! and the asymptotic series bottoms out near `exp(-2|z|)`, so neither
//! reaches 1e-12 absolute in the band between the two limits.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::NumericsError;

/// Upper end of the power-series regime.
pub const SERIES_LIMIT: f64 = 8.0;
/// Lower end of the asymptotic regime.
pub const ASYMPTOTIC_LIMIT: f64 = 25.0;

/// Real-argument `J_n(x)` for `n ∈ {0, 1, 2}` and `x >= 0`.
pub fn bessel_j(order: u32, x: f64) -> Result<f64, NumericsError> {
    if order > 2 {
        return Err(NumericsError::UnsupportedOrder(order));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(NumericsError::InvalidArgument(x));
    }
    Ok(bessel_j012(Complex64::new(x, 0.0))[order as usize].re)
}

/// Complex-argument `J_n(z)` for `n ∈ {0, 1, 2}`.
///
/// Accurate for `Re z >= 0` and modest `|Im z|` (a few units), which is
/// the region the pole and contour evaluations visit.
pub fn bessel_j_complex(order: u32, z: Complex64) -> Result<Complex64, NumericsError> {
    if order > 2 {
        return Err(NumericsError::UnsupportedOrder(order));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(NumericsError::NonFinite(z));
    }
    Ok(bessel_j012(z)[order as usize])
}

/// `[J0(z), J1(z), J2(z)]`.
pub fn bessel_j012(z: Complex64) -> [Complex64; 3] {
    let r = z.norm();
    if r <= SERIES_LIMIT {
        series(z)
    } else if r < ASYMPTOTIC_LIMIT {
        miller(z)
    } else {
        asymptotic(z)
    }
}

/// `J1(z)/z`, finite at the origin (limit 1/2).
pub fn bessel_j1_over_z(z: Complex64) -> Complex64 {
    if z.norm() < 1e-3 {
        let z2 = z * z;
        Complex64::new(0.5, 0.0) - z2 / 16.0 + z2 * z2 / 384.0
    } else {
        bessel_j012(z)[1] / z
    }
}

pub(crate) fn series(z: Complex64) -> [Complex64; 3] {
    let half = z * 0.5;
    let q = -(half * half);
    let mut out = [Complex64::new(0.0, 0.0); 3];
    let mut lead = Complex64::new(1.0, 0.0); // (z/2)^n / n!
    for (n, slot) in out.iter_mut().enumerate() {
        if n > 0 {
            lead = lead * half / n as f64;
        }
        let mut term = lead;
        let mut sum = term;
        for k in 1..200 {
            term = term * q / (k as f64 * (k + n) as f64);
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                break;
            }
        }
        *slot = sum;
    }
    out
}

pub(crate) fn miller(z: Complex64) -> [Complex64; 3] {
    let start = 2 * ((z.norm() as usize + 32) / 2);
    let two_over_z = Complex64::new(2.0, 0.0) / z;
    let mut above = Complex64::new(0.0, 0.0);
    let mut current = Complex64::new(1e-30, 0.0);
    let mut norm = Complex64::new(0.0, 0.0);
    let mut low = [Complex64::new(0.0, 0.0); 3];
    // current holds j_n while n runs down from `start`.
    for n in (1..=start).rev() {
        if n % 2 == 0 {
            norm += current * 2.0;
        }
        if n <= 2 {
            low[n] = current;
        }
        let below = two_over_z * n as f64 * current - above;
        above = current;
        current = below;
        if current.norm() > 1e250 {
            let s = 1e-250;
            current *= s;
            above *= s;
            norm *= s;
            for v in low.iter_mut() {
                *v *= s;
            }
        }
    }
    low[0] = current;
    norm += current;
    [low[0] / norm, low[1] / norm, low[2] / norm]
}

pub(crate) fn asymptotic(z: Complex64) -> [Complex64; 3] {
    let inv_z = Complex64::new(1.0, 0.0) / z;
    let amp = (Complex64::new(2.0 / PI, 0.0) * inv_z).sqrt();
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (n, slot) in out.iter_mut().enumerate() {
        let mu = 4.0 * (n * n) as f64;
        let mut p = Complex64::new(1.0, 0.0);
        let mut q = Complex64::new(0.0, 0.0);
        let mut a = 1.0;
        let mut zk = Complex64::new(1.0, 0.0);
        let mut prev = f64::INFINITY;
        for k in 1..60 {
            let odd = (2 * k - 1) as f64;
            a *= (mu - odd * odd) / (8.0 * k as f64);
            zk *= inv_z;
            let t = zk * a;
            let size = t.norm();
            if size > prev {
                break;
            }
            prev = size;
            // k = 1, 2, 3, 4, ... contributes to Q, P, Q, P with signs +, -, -, +, ...
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 1 {
                q += t * sign;
            } else {
                p += t * sign;
            }
            if size < 1e-17 {
                break;
            }
        }
        let chi = z - Complex64::new((2 * n + 1) as f64 * FRAC_PI_4, 0.0);
        *slot = amp * (p * chi.cos() - q * chi.sin());
    }
    out
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::type_complexity, clippy::needless_range_loop)]
mod tests {
    use super::*;

    // Reference values: 40-digit evaluation (independent arbitrary-precision library).
    const REAL_REF: &[(f64, [f64; 3])] = &[
        (0.1, [0.997_501_562_066_040_03, 0.049_937_526_036_241_998, 0.001_248_958_658_799_918_8]),
        (0.5, [0.938_469_807_240_812_9, 0.242_268_457_674_873_89, 0.030_604_023_458_682_641]),
        (1.0, [0.765_197_686_557_966_55, 0.440_050_585_744_933_52, 0.114_903_484_931_900_48]),
        (5.0, [-0.177_596_771_314_338_3, -0.327_579_137_591_465_22, 0.046_565_116_277_752_216]),
        (7.9, [0.194_361_844_841_278_32, 0.219_179_399_921_751_14, -0.138_873_389_164_885_62]),
        (8.1, [0.147_517_454_044_377_58, 0.247_607_766_981_593_18, -0.086_379_733_802_008_961]),
        (12.0, [0.047_689_310_796_833_537, -0.223_447_104_490_627_61, -0.084_930_494_878_604_805]),
        (24.9, [0.083_245_968_353_015_682, -0.134_855_699_531_408_74, -0.094_077_751_447_907_95]),
        (25.1, [0.108_275_671_499_949_29, -0.114_634_784_134_422_73, -0.117_409_917_247_712_06]),
        (30.0, [-0.086_367_983_581_040_211, -0.118_751_062_616_622_94, 0.078_451_246_073_265_349]),
        (49.9, [0.045_788_625_467_907_051, -0.102_796_957_368_885_38, -0.049_908_743_999_726_104]),
        (75.0, [0.034_643_913_805_097_056, -0.085_139_995_044_829_104, -0.036_914_313_672_959_166]),
        (100.0, [0.019_985_850_304_223_122, -0.077_145_352_014_112_158, -0.021_528_757_344_505_366]),
        (500.0, [-0.034_100_556_880_731_998, 0.010_472_613_470_372_293, 0.034_142_447_334_613_487]),
    ];

    #[allow(clippy::type_complexity)]
    const COMPLEX_REF: &[((f64, f64), [(f64, f64); 3])] = &[
        (
            (1.0, 0.1),
            [
                (0.766_824_379_849_066_52, -0.044_059_272_173_750_622),
                (0.441_677_442_131_403_9, 0.032_553_026_723_361_087),
                (0.114_230_560_356_359_24, 0.021_059_831_599_930_215),
            ],
        ),
        (
            (5.5, 0.02),
            [
                (-0.006_832_821_552_046_202_6, 0.006_829_191_126_708_147_7),
                (-0.341_502_238_877_155_26, 0.001_104_857_033_383_292_2),
                (-0.117_346_707_755_578_57, -0.005_975_863_007_995_587_7),
            ],
        ),
        (
            (15.0, 0.3),
            [
                (-0.015_493_783_069_342_216, -0.062_445_705_218_057_692),
                (0.214_275_676_345_332_18, -0.008_555_071_163_863_295_6),
                (0.044_029_645_380_691_665, 0.060_734_311_816_648_931),
            ],
        ),
        (
            (31.0, 0.1),
            [
                (0.051_485_890_002_951_281, 0.013_324_291_666_341_205),
                (-0.133_680_331_383_862_35, 0.005_559_864_470_382_262_4),
                (-0.060_109_180_679_328_622, -0.012_937_773_666_070_164),
            ],
        ),
        (
            (60.0, 0.5),
            [
                (-0.103_246_950_172_893_96, -0.024_249_074_977_269_081),
                (0.052_343_478_840_455_526, -0.048_085_142_081_393_37),
                (0.104_978_255_587_454_96, 0.022_631_809_362_767_96),
            ],
        ),
    ];

    #[test]
    fn origin_values() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn first_zero_of_j0() {
        assert!(bessel_j(0, 2.404826).unwrap().abs() < 1e-5);
        assert!(bessel_j(0, 2.404_825_557_695_773).unwrap().abs() < 1e-14);
    }

    #[test]
    fn matches_reference_values() {
        for &(x, expected) in REAL_REF {
            for n in 0..3 {
                let got = bessel_j(n as u32, x).unwrap();
                let tol = if x <= 50.0 { 1e-12 } else { 1e-10 * (2.0 / (PI * x)).sqrt() };
                assert!((got - expected[n]).abs() <= tol, "J{n}({x}) = {got}, expected {}", expected[n]);
            }
        }
    }

    #[test]
    fn complex_argument_reference_values() {
        for &((re, im), expected) in COMPLEX_REF {
            let j = bessel_j012(Complex64::new(re, im));
            for n in 0..3 {
                let e = Complex64::new(expected[n].0, expected[n].1);
                assert!((j[n] - e).norm() < 1e-12, "J{n}({re}+{im}i) = {} vs {e}", j[n]);
            }
        }
    }

    #[test]
    fn regimes_agree_at_switchover() {
        for &r in &[SERIES_LIMIT, ASYMPTOTIC_LIMIT] {
            for &im in &[0.0, 0.05, 0.3] {
                let z = Complex64::new(r, im);
                let (a, b) = if r == SERIES_LIMIT { (series(z), miller(z)) } else { (miller(z), asymptotic(z)) };
                for n in 0..3 {
                    assert!((a[n] - b[n]).norm() < 1e-13, "order {n} at {z}: {} vs {}", a[n], b[n]);
                }
            }
        }
    }

    #[test]
    fn recurrence_holds() {
        let mut x = 0.01;
        while x <= 100.0 {
            let j = bessel_j012(Complex64::new(x, 0.0));
            let resid = j[2].re - (2.0 * j[1].re / x - j[0].re);
            assert!(resid.abs() <= 1e-9, "x = {x}: {resid}");
            x += 0.137;
        }
    }

    #[test]
    fn j1_over_z_is_continuous_at_small_argument() {
        let below = bessel_j1_over_z(Complex64::new(0.999e-3, 0.0));
        let above = bessel_j1_over_z(Complex64::new(1.001e-3, 0.0));
        assert!((below - above).norm() < 1e-9);
        assert_eq!(bessel_j1_over_z(Complex64::new(0.0, 0.0)).re, 0.5);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bessel_j(3, 1.0).is_err());
        assert!(bessel_j(0, -1.0).is_err());
        assert!(bessel_j(0, f64::NAN).is_err());
        assert!(bessel_j(1, f64::INFINITY).is_err());
    }
}
