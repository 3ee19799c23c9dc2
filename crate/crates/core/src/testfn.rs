//! Test functions for pairings: compactly supported piecewise polynomials
//! (optionally modulated by e^{-2 pi i t x}) and Gaussian-polynomial Schwartz
//! functions, plus the `Dual` wrapper representing the inverse Fourier
//! transform of a compact function, evaluated by closed form.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::gauss::GaussPoly;
use crate::interval::CompactInterval;
use crate::poly::PiecewiseFn;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothnessTag {
    /// Continuous compactly supported.
    Cc,
    /// High-order piecewise polynomial standing in for a bump function.
    CcInfSurrogate,
    Schwartz,
}

#[derive(Debug, Clone)]
pub enum FnKind {
    Compact {
        pw: PiecewiseFn,
        /// multiply by e^{-2 pi i modulation x}
        modulation: f64,
    },
    Gauss(GaussPoly),
    /// Inverse Fourier transform of the wrapped compact function.
    Dual(Box<TestFunction>),
}

#[derive(Debug, Clone)]
pub struct TestFunction {
    pub id: String,
    pub kind: FnKind,
    pub smoothness: SmoothnessTag,
}

impl TestFunction {
    pub fn compact(id: &str, pw: PiecewiseFn, smoothness: SmoothnessTag) -> Self {
        Self {
            id: id.into(),
            kind: FnKind::Compact {
                pw,
                modulation: 0.0,
            },
            smoothness,
        }
    }

    pub fn gauss(id: &str, g: GaussPoly) -> Self {
        Self {
            id: id.into(),
            kind: FnKind::Gauss(g),
            smoothness: SmoothnessTag::Schwartz,
        }
    }

    pub fn tent(id: &str, center: f64, half_width: f64, height: f64) -> Self {
        Self::compact(
            id,
            PiecewiseFn::tent(center, half_width, height),
            SmoothnessTag::Cc,
        )
    }

    /// Support of the function, None for whole-line kinds.
    pub fn support(&self) -> Option<CompactInterval> {
        match &self.kind {
            FnKind::Compact { pw, .. } => Some(pw.support()),
            _ => None,
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        match &self.kind {
            FnKind::Compact { pw, modulation } => {
                let v = pw.eval(x);
                if *modulation == 0.0 {
                    v
                } else {
                    v * Complex64::from_polar(1.0, -2.0 * PI * modulation * x)
                }
            }
            FnKind::Gauss(g) => g.eval(x),
            FnKind::Dual(f) => f.ft_eval(-x),
        }
    }

    pub fn eval_re(&self, x: f64) -> f64 {
        self.eval(x).re
    }

    /// First derivative (no fractional-exponent pieces).
    pub fn eval_deriv(&self, x: f64) -> Complex64 {
        match &self.kind {
            FnKind::Compact { pw, modulation } => {
                let h = 1e-6;
                // pieces are polynomial; a centered difference with Richardson
                // step keeps this simple and is exact enough (1e-10) for the
                // finite-difference trend checks that use it.
                let d1 = (self.eval(x + h) - self.eval(x - h)) / (2.0 * h);
                let d2 = (self.eval(x + h / 2.0) - self.eval(x - h / 2.0)) / h;
                let _ = (pw, modulation);
                (d2 * 4.0 - d1) / 3.0
            }
            FnKind::Gauss(g) => g.eval_deriv(x),
            FnKind::Dual(_) => {
                let h = 1e-5;
                (self.eval(x + h) - self.eval(x - h)) / (2.0 * h)
            }
        }
    }

    pub fn sup_norm(&self) -> f64 {
        match &self.kind {
            FnKind::Compact { pw, .. } => pw.max_abs(),
            FnKind::Gauss(g) => {
                let t = g.tail_cutoff(1e-16).max(2.0);
                let n = 4096;
                let (a, b) = (g.center - t * g.width, g.center + t * g.width);
                (0..=n)
                    .map(|k| g.eval(a + (b - a) * k as f64 / n as f64).norm())
                    .fold(0.0, f64::max)
            }
            FnKind::Dual(f) => {
                // |g_check| <= ||g||_1 attained near 0 for the bank members;
                // scan a generous window
                let n = 8192;
                let sup = f.support().map(|s| s.abs_max()).unwrap_or(4.0);
                let w = 8.0 * (1.0 + sup);
                (0..=n)
                    .map(|k| self.eval(-w + 2.0 * w * k as f64 / n as f64).norm())
                    .fold(0.0, f64::max)
            }
        }
    }

    /// Multiply by e^{-2 pi i t x}.
    pub fn modulate(&self, t: f64) -> Self {
        let kind = match &self.kind {
            FnKind::Compact { pw, modulation } => FnKind::Compact {
                pw: pw.clone(),
                modulation: modulation + t,
            },
            FnKind::Gauss(g) => FnKind::Gauss(g.modulate(t)),
            FnKind::Dual(_) => panic!("modulation of dual functions is not needed"),
        };
        Self {
            id: format!("{}@mod", self.id),
            kind,
            smoothness: self.smoothness,
        }
    }

    pub fn translate(&self, t: f64) -> Self {
        let kind = match &self.kind {
            FnKind::Compact { pw, modulation } => FnKind::Compact {
                pw: pw.translate(t),
                modulation: *modulation,
            },
            FnKind::Gauss(g) => FnKind::Gauss(g.translate(t)),
            FnKind::Dual(_) => panic!("translation of dual functions is not needed"),
        };
        Self {
            id: self.id.clone(),
            kind,
            smoothness: self.smoothness,
        }
    }

    pub fn reflect(&self) -> Self {
        let kind = match &self.kind {
            FnKind::Compact { pw, modulation } => FnKind::Compact {
                pw: pw.reflect(),
                modulation: -modulation,
            },
            FnKind::Gauss(g) => FnKind::Gauss(g.reflect()),
            FnKind::Dual(_) => panic!("reflection of dual functions is not needed"),
        };
        Self {
            id: self.id.clone(),
            kind,
            smoothness: self.smoothness,
        }
    }

    pub fn conj(&self) -> Self {
        let kind = match &self.kind {
            FnKind::Compact { pw, modulation } => FnKind::Compact {
                pw: pw.conj(),
                modulation: -modulation,
            },
            FnKind::Gauss(g) => FnKind::Gauss(g.conj()),
            FnKind::Dual(_) => panic!("conjugation of dual functions is not needed"),
        };
        Self {
            id: self.id.clone(),
            kind,
            smoothness: self.smoothness,
        }
    }

    /// Closed-form pointwise Fourier transform
    /// `f_hat(y) = integral e^{-2 pi i x y} f(x) dx`.
    pub fn ft_eval(&self, y: f64) -> Complex64 {
        match &self.kind {
            FnKind::Compact { pw, modulation } => piecewise_ft(pw, y + modulation),
            FnKind::Gauss(g) => g.ft().eval(y),
            FnKind::Dual(f) => f.eval(-y), // FT of the inverse transform
        }
    }

    /// Inverse transform as an evaluable function.
    pub fn dual(&self) -> TestFunction {
        match &self.kind {
            FnKind::Gauss(g) => TestFunction {
                id: format!("{}~", self.id),
                kind: FnKind::Gauss(g.inverse_ft()),
                smoothness: SmoothnessTag::Schwartz,
            },
            FnKind::Compact { pw, .. } => {
                assert!(
                    pw.all_integer(),
                    "dual requires integer-exponent pieces ({})",
                    self.id
                );
                TestFunction {
                    id: format!("{}~", self.id),
                    kind: FnKind::Dual(Box::new(self.clone())),
                    smoothness: SmoothnessTag::Schwartz,
                }
            }
            FnKind::Dual(f) => (**f).clone(),
        }
    }

    /// Constants (c1, c2) with |f_hat(y)| <= c1/|y| + c2/y^2 for compact kinds
    /// (c1 = 0 when f is continuous). None when no certified decay bound is
    /// available (fractional-exponent pieces).
    pub fn spectral_decay(&self) -> Option<(f64, f64)> {
        match &self.kind {
            FnKind::Compact { pw, .. } => {
                if !pw.all_integer() {
                    return None;
                }
                let mut jump_f = 0.0;
                let mut var_fp = 0.0;
                let n = pw.pieces.len();
                for i in 0..=n {
                    let x = pw.breaks[i];
                    let left = if i == 0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        pw.pieces[i - 1].eval(x)
                    };
                    let right = if i == n {
                        Complex64::new(0.0, 0.0)
                    } else {
                        pw.pieces[i].eval(x)
                    };
                    jump_f += (right - left).norm();
                    // derivative jumps
                    let dl = if i == 0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        piece_deriv(&pw.pieces[i - 1], x)
                    };
                    let dr = if i == n {
                        Complex64::new(0.0, 0.0)
                    } else {
                        piece_deriv(&pw.pieces[i], x)
                    };
                    var_fp += (dr - dl).norm();
                }
                // integral of |f''| per piece
                for (i, p) in pw.pieces.iter().enumerate() {
                    let (re, im) = p.to_polys().unwrap();
                    let d2r = re.derivative().derivative();
                    let d2i = im.derivative().derivative();
                    let (a, b) = (pw.breaks[i] - p.anchor, pw.breaks[i + 1] - p.anchor);
                    var_fp += d2r.integral_abs(a, b) + d2i.integral_abs(a, b);
                }
                Some((jump_f / (2.0 * PI), var_fp / (4.0 * PI * PI)))
            }
            FnKind::Gauss(_) => Some((0.0, 0.0)),
            FnKind::Dual(_) => None,
        }
    }
}

fn piece_deriv(p: &crate::poly::Piece, x: f64) -> Complex64 {
    let (re, im) = p.to_polys().unwrap();
    let u = x - p.anchor;
    Complex64::new(re.derivative().eval(u), im.derivative().eval(u))
}

/// Exact FT of a piecewise polynomial with integer exponents:
/// per term c (x-a)^k on [lo, hi],
/// integral = c e^{z a} * integral_{lo-a}^{hi-a} u^k e^{z u} du, z = -2 pi i y.
pub fn piecewise_ft(pw: &PiecewiseFn, y: f64) -> Complex64 {
    let z = Complex64::new(0.0, -2.0 * PI * y);
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, p) in pw.pieces.iter().enumerate() {
        let (a, b) = (pw.breaks[i] - p.anchor, pw.breaks[i + 1] - p.anchor);
        let phase = (z * p.anchor).exp();
        for t in &p.terms {
            assert!(
                t.is_integer_exp(),
                "spectral evaluation requires integer exponents"
            );
            let k = t.exp as u32;
            acc += t.coef * phase * monomial_exp_integral(k, z, a, b);
        }
    }
    acc
}

/// integral_a^b u^k e^{z u} du, exact for z away from 0, series near 0.
fn monomial_exp_integral(k: u32, z: Complex64, a: f64, b: f64) -> Complex64 {
    let span = b - a;
    if z.norm() * span.abs().max(a.abs()).max(b.abs()) < 1e-4 {
        // series: sum_m z^m/m! (b^{k+m+1} - a^{k+m+1})/(k+m+1)
        let mut acc = Complex64::new(0.0, 0.0);
        let mut zpow = Complex64::new(1.0, 0.0);
        let mut fact = 1.0;
        for m in 0..24 {
            let e = (k + m + 1) as f64;
            acc += zpow / fact * (b.powf(e) - a.powf(e)) / e;
            zpow *= z;
            fact *= (m + 1) as f64;
            if zpow.norm() / fact < 1e-20 {
                break;
            }
        }
        return acc;
    }
    // antiderivative e^{zu} sum_{j=0..k} (-1)^j k!/(k-j)! u^{k-j} / z^{j+1}
    let eval = |u: f64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut fall = 1.0; // k!/(k-j)!
        let mut zp = z; // z^{j+1}
        let mut sign = 1.0;
        for j in 0..=k {
            acc += sign * fall * u.powi((k - j) as i32) / zp;
            fall *= (k - j) as f64;
            zp *= z;
            sign = -sign;
        }
        (z * u).exp() * acc
    };
    eval(b) - eval(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::quad;

    fn f_ex3() -> TestFunction {
        TestFunction::compact(
            "f_ex3",
            PiecewiseFn::from_polys(
                vec![0.0, 1.0, 2.0],
                vec![Poly::new(vec![0.0, 0.0, 1.0]), Poly::new(vec![2.0, -1.0])],
            ),
            SmoothnessTag::Cc,
        )
    }

    #[test]
    fn spectral_matches_quadrature() {
        let f = f_ex3();
        for y in [-3.2, -0.5, 0.0, 0.001, 1.0, 4.0, 17.5] {
            let direct = quad::integrate_complex(
                |x| f.eval(x) * Complex64::from_polar(1.0, -2.0 * PI * x * y),
                0.0,
                2.0,
                1e-13,
                &[1.0],
            );
            let v = f.ft_eval(y);
            assert!((v - direct).norm() < 1e-10, "y={y}: {v} vs {direct}");
        }
    }

    #[test]
    fn tent_ft_is_sinc_squared() {
        let f = TestFunction::tent("t", 0.0, 1.0, 1.0);
        for y in [-2.3, -0.4, 0.3, 1.0, 2.0] {
            let expect = {
                let s = quad::sinc(PI * y);
                s * s
            };
            assert!((f.ft_eval(y).re - expect).abs() < 1e-12, "y={y}");
            assert!(f.ft_eval(y).im.abs() < 1e-12);
        }
    }

    #[test]
    fn dual_of_tent_evaluates_sinc_squared() {
        let f = TestFunction::tent("t", 0.0, 2.0, 1.0);
        let d = f.dual();
        for x in [-1.1, 0.0, 0.35, 2.0] {
            let expect = 2.0 * {
                let s = quad::sinc(2.0 * PI * x);
                s * s
            };
            assert!((d.eval(x).re - expect).abs() < 1e-12);
        }
        // FT of the dual recovers the tent
        for x in [-1.5, 0.0, 0.7] {
            assert!((d.ft_eval(x) - f.eval(-x)).norm() < 1e-12);
        }
    }

    #[test]
    fn decay_bound_holds() {
        let f = f_ex3();
        let (c1, c2) = f.spectral_decay().unwrap();
        assert!(c1 < 1e-12, "f_ex3 is continuous");
        for y in [2.0, 5.0, 17.0, 60.0] {
            assert!(f.ft_eval(y).norm() <= c2 / (y * y) * 1.0000001, "y={y}");
        }
    }

    #[test]
    fn modulated_ft_shifts() {
        let f = f_ex3();
        let m = f.modulate(3.0);
        for y in [-1.0, 0.2, 2.5] {
            assert!((m.ft_eval(y) - f.ft_eval(y + 3.0)).norm() < 1e-12);
        }
    }
}
