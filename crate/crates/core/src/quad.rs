//! Adaptive Gauss-Kronrod quadrature (G7/K15) with caller-supplied split
//! points for kinks and oscillation, plus certified tail helpers for the
//! slowly decaying sinc integrals.

use num_complex::Complex64;

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    kronrod *= half;
    gauss *= half;
    (kronrod, (kronrod - gauss).abs())
}

/// Adaptive integration of a real integrand to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    integrate_with_splits(f, a, b, tol, &[])
}

/// Adaptive integration with initial subdivision at `splits` (kinks, zeros,
/// oscillation boundaries). Splits outside `(a, b)` are ignored.
pub fn integrate_with_splits<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    splits: &[f64],
) -> f64 {
    if b <= a {
        return 0.0;
    }
    let mut pts: Vec<f64> = vec![a, b];
    pts.extend(splits.iter().copied().filter(|s| *s > a && *s < b));
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pts.dedup_by(|x, y| (*x - *y).abs() < 1e-14 * (1.0 + x.abs()));

    // worklist of (lo, hi, estimate, err)
    let mut total = 0.0;
    let mut err_total = 0.0;
    let mut stack: Vec<(f64, f64, f64, f64, u32)> = Vec::new();
    let n_seg = pts.len() - 1;
    for w in pts.windows(2) {
        let (v, e) = gk15(&f, w[0], w[1]);
        stack.push((w[0], w[1], v, e, 0));
    }
    let seg_tol = tol / n_seg as f64;
    while let Some((lo, hi, v, e, depth)) = stack.pop() {
        if e <= seg_tol.max(1e-16 * v.abs()) || depth >= 52 || (hi - lo) < 1e-15 * (1.0 + lo.abs())
        {
            total += v;
            err_total += e;
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        stack.push((lo, mid, v1, e1, depth + 1));
        stack.push((mid, hi, v2, e2, depth + 1));
    }
    let _ = err_total;
    total
}

/// Complex integrand variant.
pub fn integrate_complex<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    splits: &[f64],
) -> Complex64 {
    let re = integrate_with_splits(|x| f(x).re, a, b, tol, splits);
    let im = integrate_with_splits(|x| f(x).im, a, b, tol, splits);
    Complex64::new(re, im)
}

/// sinc(x) = sin(x)/x with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Integral of |sinc| over [0, x] for x >= 0, split at the zeros k*pi.
pub fn integral_abs_sinc(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let mut total = 0.0;
    let mut k = 0usize;
    loop {
        let lo = k as f64 * std::f64::consts::PI;
        if lo >= x {
            break;
        }
        let hi = ((k + 1) as f64 * std::f64::consts::PI).min(x);
        total += integrate(|u| sinc(u).abs(), lo, hi, 1e-12);
        k += 1;
    }
    total
}

/// Integral of sinc^2(x)/1 over [x0, infinity), x0 > 0, by quadrature to a
/// cutoff plus a two-term integration-by-parts tail with certified remainder.
///
/// integral_T^inf sin^2 u / u^2 du
///   = 1/(2T) - sin(2T)/(4 T^2) + O(T^-3) with |O| <= 1/(2 T^3).
pub fn integral_sinc_sq_tail(x0: f64, tol: f64) -> f64 {
    assert!(x0 > 0.0);
    // choose cutoff so the analytic remainder bound is below tol
    let cutoff = (1.0 / tol).cbrt().max(x0.max(50.0) * 4.0);
    let mut total = 0.0;
    // integrate per half-period up to the cutoff
    let pi = std::f64::consts::PI;
    let mut k = (x0 / pi).floor() as u64;
    loop {
        let lo = (k as f64 * pi).max(x0);
        let hi = ((k + 1) as f64 * pi).min(cutoff);
        if lo >= cutoff {
            break;
        }
        total += integrate(
            |u| {
                let s = u.sin();
                s * s / (u * u)
            },
            lo,
            hi,
            tol * 1e-2,
        );
        k += 1;
    }
    let t = cutoff;
    total + 1.0 / (2.0 * t) - (2.0 * t).sin() / (4.0 * t * t) - (2.0 * t).cos() / (4.0 * t * t * t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(|x| 3.0 * x * x, 0.0, 2.0, 1e-12);
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn gaussian_integral() {
        let v = integrate(|x| (-std::f64::consts::PI * x * x).exp(), -8.0, 8.0, 1e-12);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oscillatory_with_splits() {
        // integral over [0, 1] of cos(200 pi x) = 0
        let splits: Vec<f64> = (1..200).map(|k| k as f64 / 200.0).collect();
        let v = integrate_with_splits(
            |x| (200.0 * std::f64::consts::PI * x).cos(),
            0.0,
            1.0,
            1e-12,
            &splits,
        );
        assert!(v.abs() < 1e-11);
    }

    #[test]
    fn abs_sinc_known_value() {
        // Si(pi) = 1.851937051982...
        let v = integral_abs_sinc(std::f64::consts::PI);
        assert!((v - 1.851_937_051_982_068_5).abs() < 1e-9);
    }

    #[test]
    fn sinc_sq_tail_against_direct() {
        // integral_5^inf sin^2 u/u^2 via long direct quadrature
        let direct = integrate(
            |u| {
                let s = u.sin();
                s * s / (u * u)
            },
            5.0,
            20000.0,
            1e-10,
        ) + 1.0 / (2.0 * 20000.0);
        let v = integral_sinc_sq_tail(5.0, 1e-10);
        assert!((v - direct).abs() < 1e-7, "v={v} direct={direct}");
    }
}
