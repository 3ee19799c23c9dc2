//! The closed-form measure model: finite atom lists, lattice Dirac combs and
//! absolutely continuous density terms, together with the elementary
//! transformations (translate, reflect, scale, restrict) and linear
//! combination with canonical merging.

use num_complex::Complex64;

use crate::error::{MeasureError, Result};
use crate::interval::CompactInterval;
use crate::poly::PiecewiseFn;

/// Weight below which merged atoms are dropped.
pub const WEIGHT_DROP: f64 = 1e-15;
/// Relative tolerance for identifying coincident point positions.
pub const POSITION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    pub position: f64,
    pub weight: Complex64,
}

/// weight * sum over k of delta_{offset + k*spacing}.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeComb {
    pub spacing: f64,
    pub offset: f64,
    pub weight: Complex64,
}

impl LatticeComb {
    pub fn new(spacing: f64, offset: f64, weight: Complex64) -> Self {
        assert!(spacing > 0.0, "comb spacing must be positive");
        let offset = offset.rem_euclid(spacing);
        Self {
            spacing,
            offset,
            weight,
        }
    }

    /// Lattice points inside [lo, hi], closed with boundary slack.
    pub fn points_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let eps = POSITION_TOL * (1.0 + lo.abs().max(hi.abs()));
        let kmin = ((lo - eps - self.offset) / self.spacing).ceil() as i64;
        let kmax = ((hi + eps - self.offset) / self.spacing).floor() as i64;
        (kmin..=kmax)
            .map(|k| self.offset + k as f64 * self.spacing)
            .filter(|p| *p >= lo - eps && *p <= hi + eps)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DensityTerm {
    /// Compactly supported piecewise polynomial density.
    PiecewisePoly(PiecewiseFn),
    /// amp * e^{2 pi i freq x}, optionally clipped to an interval.
    ModulatedConstant {
        freq: f64,
        amp: Complex64,
        support: Option<CompactInterval>,
    },
    /// amp * sinc(rate x), sinc(u) = sin(u)/u.
    Sinc {
        amp: Complex64,
        rate: f64,
        support: Option<CompactInterval>,
    },
    /// amp * sinc^2(rate x).
    SincSq {
        amp: Complex64,
        rate: f64,
        support: Option<CompactInterval>,
    },
    /// amp * indicator of the interval.
    Indicator {
        interval: CompactInterval,
        amp: Complex64,
    },
    /// Periodic piecewise polynomial: `cell` lives on [0, period] and repeats.
    PeriodicPoly { period: f64, cell: PiecewiseFn },
}

impl DensityTerm {
    pub fn eval(&self, x: f64) -> Complex64 {
        match self {
            DensityTerm::PiecewisePoly(pw) => pw.eval(x),
            DensityTerm::ModulatedConstant { freq, amp, support } => {
                if support.map(|s| !s.contains(x)).unwrap_or(false) {
                    return Complex64::new(0.0, 0.0);
                }
                amp * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * freq * x)
            }
            DensityTerm::Sinc { amp, rate, support } => {
                if support.map(|s| !s.contains(x)).unwrap_or(false) {
                    return Complex64::new(0.0, 0.0);
                }
                amp * crate::quad::sinc(rate * x)
            }
            DensityTerm::SincSq { amp, rate, support } => {
                if support.map(|s| !s.contains(x)).unwrap_or(false) {
                    return Complex64::new(0.0, 0.0);
                }
                let s = crate::quad::sinc(rate * x);
                amp * s * s
            }
            DensityTerm::Indicator { interval, amp } => {
                if interval.contains(x) {
                    *amp
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            DensityTerm::PeriodicPoly { period, cell } => cell.eval(x.rem_euclid(*period)),
        }
    }

    /// Support if compact, None when the term lives on the whole line.
    pub fn support(&self) -> Option<CompactInterval> {
        match self {
            DensityTerm::PiecewisePoly(pw) => Some(pw.support()),
            DensityTerm::Indicator { interval, .. } => Some(*interval),
            DensityTerm::ModulatedConstant { support, .. }
            | DensityTerm::Sinc { support, .. }
            | DensityTerm::SincSq { support, .. } => *support,
            DensityTerm::PeriodicPoly { .. } => None,
        }
    }

    /// Pointwise bound on |density|.
    pub fn sup_bound(&self) -> f64 {
        match self {
            DensityTerm::PiecewisePoly(pw) => pw.max_abs(),
            DensityTerm::ModulatedConstant { amp, .. } => amp.norm(),
            DensityTerm::Sinc { amp, .. } | DensityTerm::SincSq { amp, .. } => amp.norm(),
            DensityTerm::Indicator { amp, .. } => amp.norm(),
            DensityTerm::PeriodicPoly { cell, .. } => cell.max_abs(),
        }
    }

    /// Split points (breakpoints, kinks, zeros) that quadrature should honor
    /// inside [lo, hi], plus a recommended oscillation panel width.
    pub fn quad_splits(&self, lo: f64, hi: f64) -> (Vec<f64>, Option<f64>) {
        match self {
            DensityTerm::PiecewisePoly(pw) => (pw.breaks.clone(), None),
            DensityTerm::ModulatedConstant { freq, support, .. } => {
                let mut pts = Vec::new();
                if let Some(s) = support {
                    pts.push(s.lo);
                    pts.push(s.hi);
                }
                let panel = if freq.abs() > 0.5 {
                    Some(0.5 / freq.abs())
                } else {
                    None
                };
                (pts, panel)
            }
            DensityTerm::Sinc { rate, support, .. }
            | DensityTerm::SincSq { rate, support, .. } => {
                let mut pts = Vec::new();
                if let Some(s) = support {
                    pts.push(s.lo);
                    pts.push(s.hi);
                }
                // zeros at k pi / rate
                let step = std::f64::consts::PI / rate;
                let k0 = (lo / step).floor() as i64;
                let k1 = (hi / step).ceil() as i64;
                if (k1 - k0) < 100_000 {
                    pts.extend((k0..=k1).map(|k| k as f64 * step));
                }
                (pts, None)
            }
            DensityTerm::Indicator { interval, .. } => (vec![interval.lo, interval.hi], None),
            DensityTerm::PeriodicPoly { period, cell } => {
                let mut pts = Vec::new();
                let k0 = (lo / period).floor() as i64;
                let k1 = (hi / period).ceil() as i64;
                if (k1 - k0) < 100_000 {
                    for k in k0..=k1 {
                        for b in &cell.breaks {
                            pts.push(k as f64 * period + b);
                        }
                    }
                }
                (pts, None)
            }
        }
    }
}

/// A measure in the closed-form model.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Measure {
    pub atoms: Vec<Atom>,
    pub combs: Vec<LatticeComb>,
    pub ac: Vec<DensityTerm>,
}

impl Measure {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn dirac(position: f64, weight: Complex64) -> Self {
        Self {
            atoms: vec![Atom { position, weight }],
            ..Default::default()
        }
    }

    pub fn dirac_comb(spacing: f64, weight: Complex64) -> Self {
        Self {
            combs: vec![LatticeComb::new(spacing, 0.0, weight)],
            ..Default::default()
        }
    }

    /// Lebesgue measure.
    pub fn lebesgue() -> Self {
        Self::modulated(0.0, Complex64::new(1.0, 0.0))
    }

    /// amp e^{2 pi i freq x} lambda.
    pub fn modulated(freq: f64, amp: Complex64) -> Self {
        Self {
            ac: vec![DensityTerm::ModulatedConstant {
                freq,
                amp,
                support: None,
            }],
            ..Default::default()
        }
    }

    pub fn indicator(interval: CompactInterval, amp: Complex64) -> Self {
        Self {
            ac: vec![DensityTerm::Indicator { interval, amp }],
            ..Default::default()
        }
    }

    pub fn density(pw: PiecewiseFn) -> Self {
        Self {
            ac: vec![DensityTerm::PiecewisePoly(pw)],
            ..Default::default()
        }
    }

    pub fn from_atoms(atoms: Vec<Atom>) -> Self {
        let mut m = Self {
            atoms,
            ..Default::default()
        };
        m.normalize();
        m
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty() && self.combs.is_empty() && self.ac.is_empty()
    }

    /// True when the measure has no AC part (atoms and combs only).
    pub fn is_pure_point(&self) -> bool {
        self.ac.is_empty()
    }

    /// Merge coincident atoms, drop negligible weights, normalize offsets.
    pub fn normalize(&mut self) {
        self.atoms
            .sort_by(|a, b| a.position.partial_cmp(&b.position).unwrap());
        let mut merged: Vec<Atom> = Vec::with_capacity(self.atoms.len());
        for a in self.atoms.drain(..) {
            match merged.last_mut() {
                Some(last)
                    if (last.position - a.position).abs()
                        <= POSITION_TOL * (1.0 + a.position.abs()) =>
                {
                    last.weight += a.weight;
                }
                _ => merged.push(a),
            }
        }
        merged.retain(|a| a.weight.norm() > WEIGHT_DROP);
        self.atoms = merged;
        self.combs.retain(|c| c.weight.norm() > WEIGHT_DROP);
        self.ac.retain(|d| match d {
            DensityTerm::PiecewisePoly(pw) => pw.pieces.iter().any(|p| !p.terms.is_empty()),
            _ => d.sup_bound() > WEIGHT_DROP,
        });
    }

    pub fn scale_weights(&self, s: Complex64) -> Measure {
        let mut m = self.clone();
        for a in &mut m.atoms {
            a.weight *= s;
        }
        for c in &mut m.combs {
            c.weight *= s;
        }
        for d in &mut m.ac {
            match d {
                DensityTerm::PiecewisePoly(pw) => *pw = pw.scale_coefs(s),
                DensityTerm::ModulatedConstant { amp, .. }
                | DensityTerm::Sinc { amp, .. }
                | DensityTerm::SincSq { amp, .. }
                | DensityTerm::Indicator { amp, .. } => *amp *= s,
                DensityTerm::PeriodicPoly { cell, .. } => *cell = cell.scale_coefs(s),
            }
        }
        m
    }

    /// Atoms plus comb points materialized in [lo, hi], weights merged.
    pub fn point_masses_in(&self, lo: f64, hi: f64) -> Vec<Atom> {
        let mut pts: Vec<Atom> = Vec::new();
        let eps = POSITION_TOL * (1.0 + lo.abs().max(hi.abs()));
        for a in &self.atoms {
            if a.position >= lo - eps && a.position <= hi + eps {
                pts.push(a.clone());
            }
        }
        for c in &self.combs {
            for p in c.points_in(lo, hi) {
                pts.push(Atom {
                    position: p,
                    weight: c.weight,
                });
            }
        }
        pts.sort_by(|a, b| a.position.partial_cmp(&b.position).unwrap());
        let mut merged: Vec<Atom> = Vec::new();
        for a in pts {
            match merged.last_mut() {
                Some(last)
                    if (last.position - a.position).abs()
                        <= POSITION_TOL * (1.0 + a.position.abs()) =>
                {
                    last.weight += a.weight;
                }
                _ => merged.push(a),
            }
        }
        merged.retain(|a| a.weight.norm() > WEIGHT_DROP);
        merged
    }

    pub fn translate(&self, t: f64) -> Measure {
        let mut m = Measure {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom {
                    position: a.position + t,
                    weight: a.weight,
                })
                .collect(),
            combs: self
                .combs
                .iter()
                .map(|c| LatticeComb::new(c.spacing, c.offset + t, c.weight))
                .collect(),
            ac: self
                .ac
                .iter()
                .map(|d| translate_density(d, t))
                .collect::<Result<Vec<_>>>()
                .expect("translatable densities"),
        };
        m.normalize();
        m
    }

    /// Reflection: mu_dagger(g) = mu(g(-x)).
    pub fn reflect(&self) -> Measure {
        let mut m = Measure {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom {
                    position: -a.position,
                    weight: a.weight,
                })
                .collect(),
            combs: self
                .combs
                .iter()
                .map(|c| LatticeComb::new(c.spacing, -c.offset, c.weight))
                .collect(),
            ac: self.ac.iter().map(reflect_density).collect(),
        };
        m.normalize();
        m
    }

    /// Conjugate measure (complex conjugate of all weights/densities).
    pub fn conj(&self) -> Measure {
        let mut m = Measure {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom {
                    position: a.position,
                    weight: a.weight.conj(),
                })
                .collect(),
            combs: self
                .combs
                .iter()
                .map(|c| LatticeComb::new(c.spacing, c.offset, c.weight.conj()))
                .collect(),
            ac: self.ac.iter().map(conj_density).collect(),
        };
        m.normalize();
        m
    }

    /// Pushforward under x -> c x (c != 0).
    pub fn dilate(&self, c: f64) -> Measure {
        assert!(c != 0.0);
        let mut m = Measure {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom {
                    position: c * a.position,
                    weight: a.weight,
                })
                .collect(),
            combs: self
                .combs
                .iter()
                .map(|k| LatticeComb::new(k.spacing * c.abs(), k.offset * c, k.weight))
                .collect(),
            ac: self
                .ac
                .iter()
                .map(|d| dilate_density(d, c))
                .collect::<Result<Vec<_>>>()
                .expect("dilatable densities"),
        };
        m.normalize();
        m
    }

    /// Restriction to the closed interval K; combs become finite atoms and
    /// densities are clipped.
    pub fn restrict(&self, k: &CompactInterval) -> Measure {
        let mut atoms: Vec<Atom> = self
            .atoms
            .iter()
            .filter(|a| k.contains_fuzzy(a.position, POSITION_TOL * (1.0 + a.position.abs())))
            .cloned()
            .collect();
        for c in &self.combs {
            for p in c.points_in(k.lo, k.hi) {
                atoms.push(Atom {
                    position: p,
                    weight: c.weight,
                });
            }
        }
        let mut ac = Vec::new();
        for d in &self.ac {
            if let Some(r) = restrict_density(d, k) {
                ac.push(r);
            }
        }
        let mut m = Measure {
            atoms,
            combs: vec![],
            ac,
        };
        m.normalize();
        m
    }
}

fn translate_density(d: &DensityTerm, t: f64) -> Result<DensityTerm> {
    Ok(match d {
        DensityTerm::PiecewisePoly(pw) => DensityTerm::PiecewisePoly(pw.translate(t)),
        DensityTerm::ModulatedConstant { freq, amp, support } => DensityTerm::ModulatedConstant {
            freq: *freq,
            amp: amp * Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * freq * t),
            support: support.map(|s| s.translate(t)),
        },
        DensityTerm::Indicator { interval, amp } => DensityTerm::Indicator {
            interval: interval.translate(t),
            amp: *amp,
        },
        DensityTerm::Sinc { .. } | DensityTerm::SincSq { .. } => {
            return Err(MeasureError::InvalidArgument(
                "translation of sinc terms is not represented".into(),
            ))
        }
        DensityTerm::PeriodicPoly { .. } => {
            return Err(MeasureError::InvalidArgument(
                "translation of periodic densities is not represented".into(),
            ));
        }
    })
}

fn reflect_density(d: &DensityTerm) -> DensityTerm {
    match d {
        DensityTerm::PiecewisePoly(pw) => DensityTerm::PiecewisePoly(pw.reflect()),
        DensityTerm::ModulatedConstant { freq, amp, support } => DensityTerm::ModulatedConstant {
            freq: -freq,
            amp: *amp,
            support: support.map(|s| CompactInterval::new(-s.hi, -s.lo)),
        },
        DensityTerm::Sinc { amp, rate, support } => DensityTerm::Sinc {
            amp: *amp,
            rate: *rate,
            support: support.map(|s| CompactInterval::new(-s.hi, -s.lo)),
        },
        DensityTerm::SincSq { amp, rate, support } => DensityTerm::SincSq {
            amp: *amp,
            rate: *rate,
            support: support.map(|s| CompactInterval::new(-s.hi, -s.lo)),
        },
        DensityTerm::Indicator { interval, amp } => DensityTerm::Indicator {
            interval: CompactInterval::new(-interval.hi, -interval.lo),
            amp: *amp,
        },
        DensityTerm::PeriodicPoly { period, cell } => {
            // reflected cell re-wrapped into [0, period]
            let refl = cell.reflect().translate(*period);
            DensityTerm::PeriodicPoly {
                period: *period,
                cell: refl,
            }
        }
    }
}

fn conj_density(d: &DensityTerm) -> DensityTerm {
    match d {
        DensityTerm::PiecewisePoly(pw) => DensityTerm::PiecewisePoly(pw.conj()),
        DensityTerm::ModulatedConstant { freq, amp, support } => DensityTerm::ModulatedConstant {
            freq: -freq,
            amp: amp.conj(),
            support: *support,
        },
        DensityTerm::Sinc { amp, rate, support } => DensityTerm::Sinc {
            amp: amp.conj(),
            rate: *rate,
            support: *support,
        },
        DensityTerm::SincSq { amp, rate, support } => DensityTerm::SincSq {
            amp: amp.conj(),
            rate: *rate,
            support: *support,
        },
        DensityTerm::Indicator { interval, amp } => DensityTerm::Indicator {
            interval: *interval,
            amp: amp.conj(),
        },
        DensityTerm::PeriodicPoly { period, cell } => DensityTerm::PeriodicPoly {
            period: *period,
            cell: cell.conj(),
        },
    }
}

fn dilate_density(d: &DensityTerm, c: f64) -> Result<DensityTerm> {
    // pushforward of f(x) dx under x -> cx has density f(x/c)/|c|
    match d {
        DensityTerm::ModulatedConstant { freq, amp, support } => {
            Ok(DensityTerm::ModulatedConstant {
                freq: freq / c,
                amp: amp / c.abs(),
                support: support.map(|s| {
                    let (a, b) = (c * s.lo, c * s.hi);
                    CompactInterval::new(a.min(b), a.max(b))
                }),
            })
        }
        DensityTerm::Indicator { interval, amp } => {
            let (a, b) = (c * interval.lo, c * interval.hi);
            Ok(DensityTerm::Indicator {
                interval: CompactInterval::new(a.min(b), a.max(b)),
                amp: amp / c.abs(),
            })
        }
        DensityTerm::Sinc { amp, rate, support } => Ok(DensityTerm::Sinc {
            amp: amp / c.abs(),
            rate: rate / c,
            support: support.map(|s| {
                let (a, b) = (c * s.lo, c * s.hi);
                CompactInterval::new(a.min(b), a.max(b))
            }),
        }),
        _ => Err(MeasureError::InvalidArgument(
            "dilation of this density kind is not represented".into(),
        )),
    }
}

fn restrict_density(d: &DensityTerm, k: &CompactInterval) -> Option<DensityTerm> {
    match d {
        DensityTerm::PiecewisePoly(pw) => {
            let sup = pw.support();
            let inter = sup.intersect(k)?;
            if inter.is_degenerate() {
                return None;
            }
            // clip breakpoints
            let mut breaks = vec![inter.lo];
            for b in &pw.breaks {
                if *b > inter.lo && *b < inter.hi {
                    breaks.push(*b);
                }
            }
            breaks.push(inter.hi);
            let pieces = breaks
                .windows(2)
                .map(|w| {
                    let mid = 0.5 * (w[0] + w[1]);
                    let idx = pw
                        .breaks
                        .windows(2)
                        .position(|bw| bw[0] <= mid && mid <= bw[1])
                        .unwrap();
                    pw.pieces[idx].clone()
                })
                .collect();
            Some(DensityTerm::PiecewisePoly(PiecewiseFn::new(breaks, pieces)))
        }
        DensityTerm::ModulatedConstant { freq, amp, support } => {
            let s = match support {
                Some(s0) => s0.intersect(k)?,
                None => *k,
            };
            if s.is_degenerate() {
                return None;
            }
            if *freq == 0.0 {
                Some(DensityTerm::Indicator {
                    interval: s,
                    amp: *amp,
                })
            } else {
                Some(DensityTerm::ModulatedConstant {
                    freq: *freq,
                    amp: *amp,
                    support: Some(s),
                })
            }
        }
        DensityTerm::Sinc { amp, rate, support } => {
            let s = match support {
                Some(s0) => s0.intersect(k)?,
                None => *k,
            };
            Some(DensityTerm::Sinc {
                amp: *amp,
                rate: *rate,
                support: Some(s),
            })
        }
        DensityTerm::SincSq { amp, rate, support } => {
            let s = match support {
                Some(s0) => s0.intersect(k)?,
                None => *k,
            };
            Some(DensityTerm::SincSq {
                amp: *amp,
                rate: *rate,
                support: Some(s),
            })
        }
        DensityTerm::Indicator { interval, amp } => {
            let s = interval.intersect(k)?;
            if s.is_degenerate() {
                return None;
            }
            Some(DensityTerm::Indicator {
                interval: s,
                amp: *amp,
            })
        }
        DensityTerm::PeriodicPoly { period, cell } => {
            // materialize the periodic cell over K
            let k0 = (k.lo / period).floor() as i64;
            let k1 = (k.hi / period).ceil() as i64;
            let mut acc: Option<PiecewiseFn> = None;
            for kk in k0..=k1 {
                let copy = cell.translate(kk as f64 * period);
                acc = Some(match acc {
                    None => copy,
                    Some(a) => a.add(&copy),
                });
            }
            let full = DensityTerm::PiecewisePoly(acc?);
            restrict_density(&full, k)
        }
    }
}

/// a*mu + b*nu with duplicate atoms merged and zero terms dropped.
pub fn combine(a: Complex64, mu: &Measure, b: Complex64, nu: &Measure) -> Measure {
    let ma = mu.scale_weights(a);
    let mb = nu.scale_weights(b);
    let mut out = Measure {
        atoms: [ma.atoms, mb.atoms].concat(),
        combs: [ma.combs, mb.combs].concat(),
        ac: [ma.ac, mb.ac].concat(),
    };
    out.normalize();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn combine_cancels_atoms() {
        let m = combine(one(), &Measure::dirac(0.0, one()), -one(), &Measure::dirac(0.0, one()));
        assert!(m.is_zero());
    }

    #[test]
    fn combine_builds_mixture() {
        let m = combine(one(), &Measure::lebesgue(), one(), &Measure::dirac(0.0, one()));
        assert_eq!(m.atoms.len(), 1);
        assert_eq!(m.ac.len(), 1);
    }

    #[test]
    fn restrict_comb_to_atoms() {
        let m = Measure::dirac_comb(1.0, one());
        let r = m.restrict(&CompactInterval::new(-2.0, 2.0));
        assert_eq!(r.atoms.len(), 5);
        assert!(r.combs.is_empty());
        let positions: Vec<f64> = r.atoms.iter().map(|a| a.position).collect();
        assert_eq!(positions, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
    }

    #[test]
    fn restrict_lebesgue_becomes_indicator() {
        let m = Measure::lebesgue().restrict(&CompactInterval::new(-3.0, 3.0));
        assert!(matches!(m.ac[0], DensityTerm::Indicator { .. }));
    }

    #[test]
    fn translate_and_reflect_atoms() {
        let m = Measure::dirac(0.0, one()).translate(5.0);
        assert_eq!(m.atoms[0].position, 5.0);
        let r = Measure::dirac(0.25, one()).reflect();
        assert_eq!(r.atoms[0].position, -0.25);
    }

    #[test]
    fn point_masses_merge_comb_and_atom() {
        // 27 delta_{3Z} - 27 delta_0 has no mass at the origin
        let m = combine(
            Complex64::new(27.0, 0.0),
            &Measure::dirac_comb(3.0, one()),
            Complex64::new(-27.0, 0.0),
            &Measure::dirac(0.0, one()),
        );
        let pts = m.point_masses_in(-1.0, 1.0);
        assert!(pts.is_empty());
        let pts = m.point_masses_in(-3.5, 3.5);
        assert_eq!(pts.len(), 2);
    }
}
