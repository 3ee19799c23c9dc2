//! Gaussian-polynomial functions, closed under the Fourier transform.
//!
//! g(x) = P(u) exp(-pi u^2) exp(2 pi i freq x),  u = (x - center)/width.
//!
//! With the transform convention g_hat(y) = integral e^{-2 pi i x y} g(x) dx
//! the class maps to itself, which gives exact Schwartz pairings and exact
//! Poisson-summation test values.

use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct GaussPoly {
    pub center: f64,
    pub width: f64,
    pub freq: f64,
    pub coefs: Vec<Complex64>,
}

impl GaussPoly {
    pub fn new(center: f64, width: f64, coefs: Vec<Complex64>) -> Self {
        assert!(width > 0.0, "width must be positive");
        Self {
            center,
            width,
            freq: 0.0,
            coefs,
        }
    }

    pub fn pure(center: f64, width: f64) -> Self {
        Self::new(center, width, vec![Complex64::new(1.0, 0.0)])
    }

    fn poly_eval(&self, u: f64) -> Complex64 {
        self.coefs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * u + c)
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let u = (x - self.center) / self.width;
        let phase = Complex64::from_polar(1.0, 2.0 * PI * self.freq * x);
        self.poly_eval(u) * (-PI * u * u).exp() * phase
    }

    /// First derivative at x.
    pub fn eval_deriv(&self, x: f64) -> Complex64 {
        let u = (x - self.center) / self.width;
        let e = (-PI * u * u).exp();
        let phase = Complex64::from_polar(1.0, 2.0 * PI * self.freq * x);
        let p = self.poly_eval(u);
        // d/du of P(u)
        let dp = self
            .coefs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, c)| {
                acc * u + c * k as f64
            });
        let du = (dp - p * 2.0 * PI * u) / self.width;
        (du + p * Complex64::new(0.0, 2.0 * PI * self.freq)) * e * phase
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coefs: self.coefs.iter().map(|c| c * s).collect(),
            ..self.clone()
        }
    }

    pub fn translate(&self, t: f64) -> Self {
        // g(x - t): center shifts; the modulation picks up a constant phase
        let phase = Complex64::from_polar(1.0, -2.0 * PI * self.freq * t);
        Self {
            center: self.center + t,
            width: self.width,
            freq: self.freq,
            coefs: self.coefs.iter().map(|c| c * phase).collect(),
        }
    }

    /// Multiply by exp(-2 pi i t x).
    pub fn modulate(&self, t: f64) -> Self {
        Self {
            freq: self.freq - t,
            ..self.clone()
        }
    }

    pub fn reflect(&self) -> Self {
        Self {
            center: -self.center,
            width: self.width,
            freq: -self.freq,
            coefs: self
                .coefs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
                .collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            center: self.center,
            width: self.width,
            freq: -self.freq,
            coefs: self.coefs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Closed-form Fourier transform, again a GaussPoly.
    pub fn ft(&self) -> Self {
        // Substituting x = center + width*u:
        //   g_hat(y) = width * e^{-2 pi i center (y - freq)} * G(width (y - freq))
        // where G(v) = integral P(u) e^{-pi u^2} e^{-2 pi i u v} du.
        // For monomials: integral u^k e^{-pi u^2} e^{-2 pi i u v} du
        //   = (i/(2 pi))^k d^k/dv^k e^{-pi v^2} = (i/(2pi))^k H_k(v) e^{-pi v^2},
        // with H_0 = 1, H_{k+1} = H_k' - 2 pi v H_k.
        let deg = self.coefs.len().saturating_sub(1);
        let mut h: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 0..deg {
            let prev = &h[k];
            // derivative
            let mut next: Vec<f64> = prev
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * j as f64)
                .collect();
            if next.is_empty() {
                next.push(0.0);
            }
            // minus 2 pi v * prev
            next.resize(prev.len() + 1, 0.0);
            for (j, c) in prev.iter().enumerate() {
                next[j + 1] -= 2.0 * PI * c;
            }
            h.push(next);
        }
        let mut out: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (k, pk) in self.coefs.iter().enumerate() {
            let ik = Complex64::new(0.0, 1.0 / (2.0 * PI)).powu(k as u32);
            for (j, hc) in h[k].iter().enumerate() {
                out[j] += pk * ik * hc;
            }
        }
        // constant factor width * e^{2 pi i center freq}; phase term e^{-2 pi i center y}
        let s = Complex64::from_polar(self.width, 2.0 * PI * self.center * self.freq);
        GaussPoly {
            center: self.freq,
            width: 1.0 / self.width,
            freq: -self.center,
            coefs: out.iter().map(|c| c * s).collect(),
        }
        // note: the result's variable scale is width*(y-freq) = (y-freq)/(1/width)
    }

    /// Inverse transform: g_check(x) = g_hat(-x).
    pub fn inverse_ft(&self) -> Self {
        self.ft().reflect()
    }

    /// Crude but certified bound on |P(u)| e^{-pi u^2} for |u| >= a >= 1.
    fn envelope_bound(&self, a: f64) -> f64 {
        let csum: f64 = self.coefs.iter().map(|c| c.norm()).sum();
        let d = self.coefs.len().saturating_sub(1) as f64;
        // u^d e^{-pi u^2} is decreasing for u^2 > d/(2 pi); require that
        csum * a.powf(d) * (-PI * a * a).exp()
    }

    /// T such that integral_{|x-center|>T*width} |g| <= tol, certified.
    pub fn tail_cutoff(&self, tol: f64) -> f64 {
        let d = self.coefs.len().saturating_sub(1) as f64;
        let mut a = (1.0 + (d / (2.0 * PI)).sqrt()).max(1.0);
        // bound integral_a^inf |P| e^{-pi u^2} du <= envelope(a) * integral_a^inf e^{-pi(u^2-a^2)} ...
        // use: integral_a^inf u^d e^{-pi u^2} du <= a^{d-1} e^{-pi a^2} / (2 pi - d/a^2)
        for _ in 0..200 {
            let denom = 2.0 * PI - d / (a * a);
            let bound = 2.0 * self.width * self.envelope_bound(a) / (a * denom.max(1.0));
            if bound < tol {
                return a;
            }
            a += 0.25;
        }
        a
    }

    /// sup over x of |(1 + x^2) g(x)|, by grid scan plus golden refinement.
    pub fn weighted_sup(&self) -> f64 {
        let t = self.tail_cutoff(1e-18).max(4.0);
        let (a, b) = (self.center - t * self.width, self.center + t * self.width);
        let f = |x: f64| (1.0 + x * x) * self.eval(x).norm();
        let n = 4096;
        let mut best = 0.0;
        let mut best_x = a;
        for k in 0..=n {
            let x = a + (b - a) * k as f64 / n as f64;
            let v = f(x);
            if v > best {
                best = v;
                best_x = x;
            }
        }
        // golden-section polish around the best sample
        let h = (b - a) / n as f64;
        let (mut lo, mut hi) = (best_x - h, best_x + h);
        for _ in 0..120 {
            let m1 = lo + 0.381_966_011_250_105 * (hi - lo);
            let m2 = hi - 0.381_966_011_250_105 * (hi - lo);
            if f(m1) < f(m2) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        best.max(f(0.5 * (lo + hi)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;

    #[test]
    fn plain_gaussian_is_self_dual() {
        let g = GaussPoly::pure(0.0, 1.0);
        let gh = g.ft();
        for y in [-1.3, 0.0, 0.4, 2.0] {
            let direct = quad::integrate_complex(
                |x| g.eval(x) * Complex64::from_polar(1.0, -2.0 * PI * x * y),
                -9.0,
                9.0,
                1e-13,
                &[],
            );
            assert!((gh.eval(y) - direct).norm() < 1e-11, "y={y}");
        }
    }

    #[test]
    fn ft_matches_quadrature_for_general_member() {
        let g = GaussPoly {
            center: 0.7,
            width: 1.6,
            freq: -0.35,
            coefs: vec![
                Complex64::new(1.0, 0.2),
                Complex64::new(-0.5, 0.0),
                Complex64::new(0.0, 0.3),
            ],
        };
        let gh = g.ft();
        for y in [-2.0, -0.5, 0.0, 0.8, 1.7] {
            let direct = quad::integrate_complex(
                |x| g.eval(x) * Complex64::from_polar(1.0, -2.0 * PI * x * y),
                0.7 - 16.0,
                0.7 + 16.0,
                1e-13,
                &[],
            );
            assert!(
                (gh.eval(y) - direct).norm() < 1e-10,
                "y={y}: {} vs {}",
                gh.eval(y),
                direct
            );
        }
    }

    #[test]
    fn inverse_ft_roundtrip() {
        let g = GaussPoly {
            center: -0.4,
            width: 0.9,
            freq: 0.2,
            coefs: vec![Complex64::new(0.8, 0.0), Complex64::new(0.1, -0.2)],
        };
        let back = g.ft().inverse_ft();
        for x in [-1.0, 0.0, 0.3, 1.2] {
            assert!((back.eval(x) - g.eval(x)).norm() < 1e-11);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let g = GaussPoly {
            center: 0.3,
            width: 1.2,
            freq: 0.15,
            coefs: vec![Complex64::new(1.0, 0.0), Complex64::new(0.4, 0.1)],
        };
        let h = 1e-6;
        for x in [-0.8, 0.0, 0.5, 1.4] {
            let fd = (g.eval(x + h) - g.eval(x - h)) / (2.0 * h);
            assert!((g.eval_deriv(x) - fd).norm() < 1e-7);
        }
    }

    #[test]
    fn tail_cutoff_is_certified() {
        let g = GaussPoly::new(
            0.0,
            2.0,
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 3.0)],
        );
        let t = g.tail_cutoff(1e-12);
        let tail = quad::integrate(|x| g.eval(x).norm(), t * 2.0, t * 2.0 + 40.0, 1e-13);
        assert!(tail < 1e-12);
    }
}
