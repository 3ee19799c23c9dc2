//! Piecewise generalized-polynomial functions.
//!
//! Pieces are sums of terms `c * (x - anchor)^e` with complex coefficients and
//! real exponents `e >= 0`. Integer exponents get exact closed-form algebra
//! (products, convolution, oscillatory antiderivatives); fractional exponents
//! (the `sqrt(x)` style test functions) are restricted to evaluation and
//! quadrature paths.

use num_complex::Complex64;

use crate::interval::CompactInterval;

const ZERO_COEF: f64 = 1e-300;

/// Real polynomial in the local variable `u = x - anchor`, dense coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub coefs: Vec<f64>,
}

impl Poly {
    pub fn new(coefs: Vec<f64>) -> Self {
        let mut p = Self { coefs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coefs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    fn trim(&mut self) {
        while matches!(self.coefs.last(), Some(c) if c.abs() < ZERO_COEF) {
            self.coefs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.coefs.len().saturating_sub(1)
    }

    pub fn eval(&self, u: f64) -> f64 {
        self.coefs.iter().rev().fold(0.0, |acc, c| acc * u + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coefs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coefs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * (k + 1) as f64)
                .collect(),
        )
    }

    pub fn antiderivative(&self) -> Poly {
        let mut out = vec![0.0];
        out.extend(
            self.coefs
                .iter()
                .enumerate()
                .map(|(k, c)| c / (k + 1) as f64),
        );
        Poly::new(out)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coefs.len().max(other.coefs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    self.coefs.get(k).copied().unwrap_or(0.0)
                        + other.coefs.get(k).copied().unwrap_or(0.0)
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly::new(self.coefs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coefs.is_empty() || other.coefs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![0.0; self.coefs.len() + other.coefs.len() - 1];
        for (i, a) in self.coefs.iter().enumerate() {
            for (j, b) in other.coefs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Rewrite around a new center: returns q with q(u) = p(u + delta).
    pub fn shift(&self, delta: f64) -> Poly {
        let mut out = Poly::zero();
        // Horner in the shifted variable
        for c in self.coefs.iter().rev() {
            out = out.mul(&Poly::new(vec![delta, 1.0]));
            out = out.add(&Poly::constant(*c));
        }
        out
    }

    /// Roots of `p` inside `[a, b]`, located by dense sampling plus bisection.
    pub fn roots_in(&self, a: f64, b: f64) -> Vec<f64> {
        let mut roots = Vec::new();
        if self.coefs.len() <= 1 || b <= a {
            return roots;
        }
        let n = (64 * self.coefs.len()).min(1024);
        let mut prev_x = a;
        let mut prev_v = self.eval(a);
        if prev_v == 0.0 {
            roots.push(a);
        }
        for i in 1..=n {
            let x = a + (b - a) * i as f64 / n as f64;
            let v = self.eval(x);
            if v == 0.0 {
                roots.push(x);
            } else if prev_v != 0.0 && prev_v.signum() != v.signum() {
                let (mut lo, mut hi) = (prev_x, x);
                let mut flo = prev_v;
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    let fm = self.eval(mid);
                    if fm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if flo.signum() == fm.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_v = v;
        }
        roots.dedup_by(|x, y| (*x - *y).abs() < 1e-13 * (1.0 + x.abs()));
        roots
    }

    /// max of |p| over [a, b] via endpoints and critical points.
    pub fn max_abs_on(&self, a: f64, b: f64) -> f64 {
        let mut m = self.eval(a).abs().max(self.eval(b).abs());
        for r in self.derivative().roots_in(a, b) {
            m = m.max(self.eval(r).abs());
        }
        m
    }

    /// Exact integral of |p| over [a, b] by splitting at sign changes.
    pub fn integral_abs(&self, a: f64, b: f64) -> f64 {
        if b <= a {
            return 0.0;
        }
        let anti = self.antiderivative();
        let mut pts = vec![a];
        pts.extend(self.roots_in(a, b));
        pts.push(b);
        pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut total = 0.0;
        for w in pts.windows(2) {
            total += (anti.eval(w[1]) - anti.eval(w[0])).abs();
        }
        total
    }
}

/// One term `coef * (x - anchor)^exp` of a piece (anchor held by the piece).
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: Complex64,
    pub exp: f64,
}

impl Term {
    pub fn is_integer_exp(&self) -> bool {
        self.exp >= 0.0 && self.exp.fract() == 0.0 && self.exp < 64.0
    }
}

/// Piece of a piecewise function in local coordinates `u = x - anchor`.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub anchor: f64,
    pub terms: Vec<Term>,
}

impl Piece {
    pub fn from_poly(anchor: f64, re: &Poly, im: &Poly) -> Self {
        let n = re.coefs.len().max(im.coefs.len());
        let terms = (0..n)
            .map(|k| Term {
                coef: Complex64::new(
                    re.coefs.get(k).copied().unwrap_or(0.0),
                    im.coefs.get(k).copied().unwrap_or(0.0),
                ),
                exp: k as f64,
            })
            .filter(|t| t.coef.norm() > ZERO_COEF)
            .collect();
        Self { anchor, terms }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let u = x - self.anchor;
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let p = if t.exp == 0.0 {
                1.0
            } else if u <= 0.0 {
                // pieces are only evaluated for x >= anchor; clamp roundoff
                if u > -1e-12 {
                    0.0f64.powf(t.exp)
                } else if t.is_integer_exp() {
                    u.powi(t.exp as i32)
                } else {
                    f64::NAN
                }
            } else {
                u.powf(t.exp)
            };
            acc += t.coef * p;
        }
        acc
    }

    pub fn all_integer(&self) -> bool {
        self.terms.iter().all(Term::is_integer_exp)
    }

    /// Real/imaginary parts as dense local polynomials (integer exponents only).
    pub fn to_polys(&self) -> Option<(Poly, Poly)> {
        if !self.all_integer() {
            return None;
        }
        let deg = self
            .terms
            .iter()
            .map(|t| t.exp as usize)
            .max()
            .unwrap_or(0);
        let mut re = vec![0.0; deg + 1];
        let mut im = vec![0.0; deg + 1];
        for t in &self.terms {
            re[t.exp as usize] += t.coef.re;
            im[t.exp as usize] += t.coef.im;
        }
        Some((Poly::new(re), Poly::new(im)))
    }

    /// Exact integral over [a, b] (a >= anchor) via the power antiderivative.
    pub fn integral(&self, a: f64, b: f64) -> Complex64 {
        let ua = (a - self.anchor).max(0.0);
        let ub = (b - self.anchor).max(0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let e1 = t.exp + 1.0;
            acc += t.coef * (ub.powf(e1) - ua.powf(e1)) / e1;
        }
        acc
    }

    pub fn scale(&self, s: Complex64) -> Piece {
        Piece {
            anchor: self.anchor,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: t.coef * s,
                    exp: t.exp,
                })
                .collect(),
        }
    }
}

/// Compactly supported piecewise function: `pieces[i]` is live on
/// `[breaks[i], breaks[i+1]]`, zero outside `[breaks[0], breaks[last]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFn {
    pub breaks: Vec<f64>,
    pub pieces: Vec<Piece>,
}

impl PiecewiseFn {
    pub fn new(breaks: Vec<f64>, pieces: Vec<Piece>) -> Self {
        assert!(breaks.len() >= 2, "need at least one piece");
        assert_eq!(breaks.len(), pieces.len() + 1);
        assert!(
            breaks.windows(2).all(|w| w[0] < w[1]),
            "breakpoints must be strictly increasing"
        );
        Self { breaks, pieces }
    }

    /// Piecewise function from per-piece global-coordinate real polynomials.
    pub fn from_polys(breaks: Vec<f64>, polys: Vec<Poly>) -> Self {
        let pieces = polys
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let anchor = breaks[i];
                Piece::from_poly(anchor, &p.shift(anchor), &Poly::zero())
            })
            .collect();
        Self::new(breaks, pieces)
    }

    /// Symmetric tent with peak `height` at `center`, half-width `w`.
    pub fn tent(center: f64, w: f64, height: f64) -> Self {
        assert!(w > 0.0);
        let up = Piece {
            anchor: center - w,
            terms: vec![
                Term {
                    coef: Complex64::new(0.0, 0.0),
                    exp: 0.0,
                },
                Term {
                    coef: Complex64::new(height / w, 0.0),
                    exp: 1.0,
                },
            ],
        };
        let down = Piece {
            anchor: center,
            terms: vec![
                Term {
                    coef: Complex64::new(height, 0.0),
                    exp: 0.0,
                },
                Term {
                    coef: Complex64::new(-height / w, 0.0),
                    exp: 1.0,
                },
            ],
        };
        Self::new(vec![center - w, center, center + w], vec![up, down])
    }

    pub fn support(&self) -> CompactInterval {
        CompactInterval::new(self.breaks[0], *self.breaks.last().unwrap())
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let b = &self.breaks;
        if x < b[0] || x > *b.last().unwrap() {
            return Complex64::new(0.0, 0.0);
        }
        // rightmost piece whose left endpoint is <= x
        let idx = match b.binary_search_by(|p| p.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.pieces.len() - 1),
            Err(i) => i - 1,
        };
        self.pieces[idx].eval(x)
    }

    pub fn eval_re(&self, x: f64) -> f64 {
        self.eval(x).re
    }

    pub fn all_integer(&self) -> bool {
        self.pieces.iter().all(Piece::all_integer)
    }

    pub fn is_real(&self) -> bool {
        self.pieces
            .iter()
            .all(|p| p.terms.iter().all(|t| t.coef.im.abs() < 1e-14))
    }

    pub fn translate(&self, t: f64) -> Self {
        Self {
            breaks: self.breaks.iter().map(|b| b + t).collect(),
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece {
                    anchor: p.anchor + t,
                    terms: p.terms.clone(),
                })
                .collect(),
        }
    }

    /// Reflection x -> -x.
    pub fn reflect(&self) -> Self {
        let n = self.pieces.len();
        let breaks: Vec<f64> = self.breaks.iter().rev().map(|b| -b).collect();
        let pieces = (0..n)
            .rev()
            .map(|i| {
                // piece on [b_i, b_{i+1}] becomes a piece on [-b_{i+1}, -b_i];
                // express p(-x) around the new left anchor -b_{i+1}:
                // u_old = x_old - a; x_old = -x; new anchor a' = -b_{i+1}
                // u_old = -x - a = -(x - (-a)) ; use polynomial recentering.
                let p = &self.pieces[i];
                let (re, im) = p
                    .to_polys()
                    .expect("reflect requires integer-exponent pieces");
                // q(v) = p_local(-(v) - a + ... ) with v = x - a', a' = -b_{i+1}:
                // x = a' + v = -b_{i+1} + v, u_old = x_old - a = -x - a = b_{i+1} - v - a
                let d = self.breaks[i + 1] - p.anchor;
                // u_old = d - v: compose with u = -v + d
                let comp = |q: &Poly| {
                    let mut out = Poly::zero();
                    for c in q.coefs.iter().rev() {
                        out = out.mul(&Poly::new(vec![d, -1.0]));
                        out.coefs = {
                            let mut cs = out.coefs;
                            if cs.is_empty() {
                                cs.push(0.0);
                            }
                            cs[0] += c;
                            cs
                        };
                        out = Poly::new(out.coefs);
                    }
                    out
                };
                Piece::from_poly(-self.breaks[i + 1], &comp(&re), &comp(&im))
            })
            .collect();
        Self::new(breaks, pieces)
    }

    pub fn conj(&self) -> Self {
        Self {
            breaks: self.breaks.clone(),
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece {
                    anchor: p.anchor,
                    terms: p
                        .terms
                        .iter()
                        .map(|t| Term {
                            coef: t.coef.conj(),
                            exp: t.exp,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn scale_coefs(&self, s: Complex64) -> Self {
        Self {
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(s)).collect(),
        }
    }

    /// Exact integral over the whole support.
    pub fn integral(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, p) in self.pieces.iter().enumerate() {
            acc += p.integral(self.breaks[i], self.breaks[i + 1]);
        }
        acc
    }

    /// Exact integral of |f| (real integer-exponent pieces), used by total
    /// variation; falls back to dense quadrature for fractional pieces.
    pub fn integral_abs(&self, a: f64, b: f64) -> f64 {
        let mut total = 0.0;
        for (i, p) in self.pieces.iter().enumerate() {
            let lo = self.breaks[i].max(a);
            let hi = self.breaks[i + 1].min(b);
            if hi <= lo {
                continue;
            }
            if let Some((re, im)) = p.to_polys() {
                if im.coefs.is_empty() {
                    total += re.integral_abs(lo - p.anchor, hi - p.anchor);
                    continue;
                }
                // |f| = sqrt(re^2 + im^2): quadrature on the modulus
                let modsq = re.mul(&re).add(&im.mul(&im));
                total += crate::quad::integrate(
                    |u| modsq.eval(u).max(0.0).sqrt(),
                    lo - p.anchor,
                    hi - p.anchor,
                    1e-12,
                );
                continue;
            }
            total += crate::quad::integrate(|x| p.eval(x).norm(), lo, hi, 1e-12);
        }
        total
    }

    /// Sup of |f| over the support.
    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for (i, p) in self.pieces.iter().enumerate() {
            let (lo, hi) = (self.breaks[i], self.breaks[i + 1]);
            if let Some((re, im)) = p.to_polys() {
                let modsq = re.mul(&re).add(&im.mul(&im));
                let mut best = modsq.eval(lo - p.anchor).max(modsq.eval(hi - p.anchor));
                for r in modsq.derivative().roots_in(lo - p.anchor, hi - p.anchor) {
                    best = best.max(modsq.eval(r));
                }
                m = m.max(best.max(0.0).sqrt());
            } else {
                let n = 512;
                for k in 0..=n {
                    let x = lo + (hi - lo) * k as f64 / n as f64;
                    m = m.max(p.eval(x).norm());
                }
            }
        }
        m
    }

    /// Pointwise sum; both operands must have integer exponents.
    pub fn add(&self, other: &PiecewiseFn) -> PiecewiseFn {
        let mut breaks: Vec<f64> = self
            .breaks
            .iter()
            .chain(other.breaks.iter())
            .copied()
            .collect();
        breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
        breaks.dedup_by(|x, y| (*x - *y).abs() < 1e-12 * (1.0 + x.abs()));
        let mut pieces = Vec::with_capacity(breaks.len() - 1);
        for w in breaks.windows(2) {
            let anchor = w[0];
            let mid = 0.5 * (w[0] + w[1]);
            let mut re = Poly::zero();
            let mut im = Poly::zero();
            for f in [self, other] {
                if mid < f.breaks[0] || mid > *f.breaks.last().unwrap() {
                    continue;
                }
                let idx = match f
                    .breaks
                    .binary_search_by(|p| p.partial_cmp(&mid).unwrap())
                {
                    Ok(i) => i.min(f.pieces.len() - 1),
                    Err(i) => i - 1,
                };
                let p = &f.pieces[idx];
                let (pre, pim) = p.to_polys().expect("add requires integer exponents");
                let delta = anchor - p.anchor;
                re = re.add(&pre.shift(delta));
                im = im.add(&pim.shift(delta));
            }
            pieces.push(Piece::from_poly(anchor, &re, &im));
        }
        PiecewiseFn::new(breaks, pieces)
    }

    /// Exact convolution of two integer-exponent piecewise functions.
    ///
    /// On every cell of the induced breakpoint lattice the convolution is a
    /// polynomial of degree <= deg(f) + deg(g) + 1; it is recovered by
    /// Chebyshev interpolation of exactly evaluated integrals.
    pub fn convolve(&self, other: &PiecewiseFn) -> PiecewiseFn {
        assert!(self.all_integer() && other.all_integer());
        let mut breaks: Vec<f64> = Vec::new();
        for a in &self.breaks {
            for c in &other.breaks {
                breaks.push(a + c);
            }
        }
        breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
        breaks.dedup_by(|x, y| (*x - *y).abs() < 1e-11 * (1.0 + x.abs()));
        let degf = self
            .pieces
            .iter()
            .map(|p| p.terms.iter().map(|t| t.exp as usize).max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let degg = other
            .pieces
            .iter()
            .map(|p| p.terms.iter().map(|t| t.exp as usize).max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let deg = degf + degg + 1;

        let conv_at = |t: f64| -> Complex64 {
            // integral over x of f(x) g(t - x)
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, pf) in self.pieces.iter().enumerate() {
                let (fa, fb) = (self.breaks[i], self.breaks[i + 1]);
                for (j, pg) in other.pieces.iter().enumerate() {
                    let (ga, gb) = (other.breaks[j], other.breaks[j + 1]);
                    let lo = fa.max(t - gb);
                    let hi = fb.min(t - ga);
                    if hi <= lo + 1e-15 {
                        continue;
                    }
                    // product polynomial in u = x - lo
                    let (fre, fim) = pf.to_polys().unwrap();
                    let f_loc_re = fre.shift(lo - pf.anchor);
                    let f_loc_im = fim.shift(lo - pf.anchor);
                    // g(t - x) = g_local(t - x - anchor_g) = g_local((t - lo - anchor_g) - u)
                    let (gre, gim) = pg.to_polys().unwrap();
                    let d = t - lo - pg.anchor;
                    let m1 = Poly::new(vec![d, -1.0]);
                    let compose = |q: &Poly| -> Poly {
                        let mut out = Poly::zero();
                        for c in q.coefs.iter().rev() {
                            out = out.mul(&m1);
                            let mut cs = out.coefs;
                            if cs.is_empty() {
                                cs.push(0.0);
                            }
                            cs[0] += c;
                            out = Poly::new(cs);
                        }
                        out
                    };
                    let g_re = compose(&gre);
                    let g_im = compose(&gim);
                    let prod_re = f_loc_re.mul(&g_re).add(&f_loc_im.mul(&g_im).scale(-1.0));
                    let prod_im = f_loc_re.mul(&g_im).add(&f_loc_im.mul(&g_re));
                    let w = hi - lo;
                    acc += Complex64::new(
                        prod_re.antiderivative().eval(w),
                        prod_im.antiderivative().eval(w),
                    );
                }
            }
            acc
        };

        let mut pieces = Vec::with_capacity(breaks.len() - 1);
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            let n = deg + 1;
            // Chebyshev nodes on [a, b]
            let nodes: Vec<f64> = (0..n)
                .map(|k| {
                    let c = ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos();
                    0.5 * (a + b) + 0.5 * (b - a) * c
                })
                .collect();
            let vals: Vec<Complex64> = nodes.iter().map(|&t| conv_at(t)).collect();
            // Newton interpolation in local coordinate u = t - a
            let us: Vec<f64> = nodes.iter().map(|t| t - a).collect();
            let mut dd = vals.clone();
            for level in 1..n {
                for k in (level..n).rev() {
                    dd[k] = (dd[k] - dd[k - 1]) / (us[k] - us[k - level]);
                }
            }
            let mut re = Poly::zero();
            let mut im = Poly::zero();
            let mut basis = Poly::constant(1.0);
            for (k, c) in dd.iter().enumerate() {
                re = re.add(&basis.scale(c.re));
                im = im.add(&basis.scale(c.im));
                if k + 1 < n {
                    basis = basis.mul(&Poly::new(vec![-us[k], 1.0]));
                }
            }
            pieces.push(Piece::from_poly(a, &re, &im));
        }
        PiecewiseFn::new(breaks, pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_shift_matches_eval() {
        let p = Poly::new(vec![1.0, -2.0, 3.0, 0.5]);
        let q = p.shift(1.25);
        for u in [-2.0, -0.3, 0.0, 0.7, 1.9] {
            assert!((q.eval(u) - p.eval(u + 1.25)).abs() < 1e-12);
        }
    }

    #[test]
    fn poly_roots_cubic() {
        // (x-1)(x+2)(x-0.5)
        let p = Poly::new(vec![1.0, -2.5 + 0.0, -1.5, 1.0]);
        // expand: x^3 - ... compute directly instead
        let p = Poly::new(vec![-1.0, 1.0])
            .mul(&Poly::new(vec![2.0, 1.0]))
            .mul(&Poly::new(vec![-0.5, 1.0]))
            .add(&p.scale(0.0));
        let roots = p.roots_in(-3.0, 2.0);
        assert_eq!(roots.len(), 3);
        assert!((roots[0] + 2.0).abs() < 1e-10);
        assert!((roots[1] - 0.5).abs() < 1e-10);
        assert!((roots[2] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn tent_eval_and_integral() {
        let t = PiecewiseFn::tent(0.0, 1.0, 1.0);
        assert!((t.eval_re(0.0) - 1.0).abs() < 1e-15);
        assert!((t.eval_re(0.5) - 0.5).abs() < 1e-15);
        assert_eq!(t.eval_re(1.5), 0.0);
        assert!((t.integral().re - 1.0).abs() < 1e-14);
        assert!((t.max_abs() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn reflect_asymmetric_piece() {
        // f = x^2 on [0,1], 2-x on (1,2]
        let f = PiecewiseFn::from_polys(
            vec![0.0, 1.0, 2.0],
            vec![Poly::new(vec![0.0, 0.0, 1.0]), Poly::new(vec![2.0, -1.0])],
        );
        let r = f.reflect();
        for x in [0.1, 0.5, 0.99, 1.3, 1.9] {
            assert!((r.eval_re(-x) - f.eval_re(x)).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn convolution_of_indicators_is_tent() {
        // 1_ated on [-1,1] as a degenerate polynomial piece
        let ind = PiecewiseFn::from_polys(vec![-1.0, 1.0], vec![Poly::constant(1.0)]);
        let c = ind.convolve(&ind);
        // should equal the tent (2 - |x|) on [-2, 2]
        for x in [-1.9, -1.0, -0.3, 0.0, 0.4, 1.0, 1.7] {
            assert!((c.eval_re(x) - (2.0 - x.abs())).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn integral_abs_splits_sign_changes() {
        // x on [-1, 1]: integral |x| = 1
        let f = PiecewiseFn::from_polys(vec![-1.0, 1.0], vec![Poly::new(vec![0.0, 1.0])]);
        assert!((f.integral_abs(-1.0, 1.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn add_merges_breakpoints() {
        let a = PiecewiseFn::tent(0.0, 1.0, 1.0);
        let b = PiecewiseFn::tent(0.5, 1.0, 2.0);
        let s = a.add(&b);
        for x in [-0.9, -0.2, 0.0, 0.3, 0.5, 1.1, 1.4] {
            assert!((s.eval_re(x) - (a.eval_re(x) + b.eval_re(x))).abs() < 1e-12);
        }
    }

    #[test]
    fn sqrt_piece_eval() {
        let p = Piece {
            anchor: 0.0,
            terms: vec![Term {
                coef: Complex64::new(1.0, 0.0),
                exp: 0.5,
            }],
        };
        assert!((p.eval(0.25).re - 0.5).abs() < 1e-15);
    }
}
