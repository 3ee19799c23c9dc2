use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]`, the compact sets used for variation,
/// translation-bounded norms and restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompactInterval {
    pub lo: f64,
    pub hi: f64,
}

impl CompactInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval requires lo <= hi, got [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Closed-interval membership with an absolute slack for boundary atoms
    /// produced by floating-point lattice arithmetic.
    pub fn contains_fuzzy(&self, x: f64, eps: f64) -> bool {
        self.lo - eps <= x && x <= self.hi + eps
    }

    pub fn translate(&self, t: f64) -> Self {
        Self::new(self.lo + t, self.hi + t)
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then(|| Self::new(lo, hi))
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    pub fn is_degenerate(&self) -> bool {
        self.hi <= self.lo
    }

    /// Maximal absolute coordinate of the interval.
    pub fn abs_max(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersect_and_hull() {
        let a = CompactInterval::new(-1.0, 2.0);
        let b = CompactInterval::new(1.0, 3.0);
        let c = a.intersect(&b).unwrap();
        assert_eq!((c.lo, c.hi), (1.0, 2.0));
        assert!(a.intersect(&CompactInterval::new(5.0, 6.0)).is_none());
        let h = a.hull(&b);
        assert_eq!((h.lo, h.hi), (-1.0, 3.0));
    }

    #[test]
    fn boundary_points_are_inside() {
        let k = CompactInterval::new(0.0, 1.0);
        assert!(k.contains(0.0) && k.contains(1.0));
        assert!(!k.contains(1.0 + 1e-9));
        assert!(k.contains_fuzzy(1.0 + 1e-13, 1e-12));
    }
}
