//! Residual statistics and least-squares eigenvalue fits.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Samples with `|phi|` below this are left out of eigenvalue fits.
pub const FIT_THRESHOLD: f64 = 1e-3;

/// Running max and mean of relative residuals. A NaN residual sticks as the
/// maximum so that it can never pass a tolerance check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ResidualStats {
    pub max: f64,
    pub sum: f64,
    pub count: usize,
}

impl ResidualStats {
    pub fn push(&mut self, r: f64) {
        if (r.is_nan() || r > self.max || self.count == 0) && !self.max.is_nan() {
            self.max = r;
        }
        self.sum += r;
        self.count += 1;
    }

    pub fn merge(&mut self, other: &ResidualStats) {
        if other.count == 0 {
            return;
        }
        if (self.count == 0 || other.max.is_nan() || other.max > self.max) && !self.max.is_nan() {
            self.max = other.max;
        }
        self.sum += other.sum;
        self.count += other.count;
    }

    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.sum / self.count as f64
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max <= tol
    }
}

/// Least-squares `c` minimising `sum |y - c x|^2` over samples with
/// `|x| >= FIT_THRESHOLD`: `c = sum conj(x) y / sum |x|^2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RatioFit {
    numerator: Complex64,
    denominator: f64,
}

impl RatioFit {
    pub fn push(&mut self, x: Complex64, y: Complex64) {
        if x.norm() >= FIT_THRESHOLD {
            self.numerator += x.conj() * y;
            self.denominator += x.norm_sqr();
        }
    }

    pub fn merge(&mut self, other: &RatioFit) {
        self.numerator += other.numerator;
        self.denominator += other.denominator;
    }

    pub fn value(&self) -> Option<Complex64> {
        (self.denominator > 0.0).then(|| self.numerator / self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_track_max_and_mean() {
        let mut s = ResidualStats::default();
        for r in [1e-10, 3e-10, 2e-10] {
            s.push(r);
        }
        assert_eq!(s.max, 3e-10);
        assert!((s.mean() - 2e-10).abs() < 1e-25);
        assert!(s.passes(1e-9) && !s.passes(1e-10));
    }

    #[test]
    fn nan_never_passes() {
        let mut s = ResidualStats::default();
        s.push(f64::NAN);
        s.push(0.0);
        assert!(!s.passes(1.0));
        let mut t = ResidualStats::default();
        t.push(0.0);
        t.merge(&s);
        assert!(!t.passes(1.0));
    }

    #[test]
    fn fit_recovers_ratio_and_skips_small_values() {
        let mut f = RatioFit::default();
        let c = Complex64::new(-4.0, 0.0);
        for x in [Complex64::new(0.5, 0.2), Complex64::new(-1.0, 0.3)] {
            f.push(x, c * x);
        }
        f.push(Complex64::new(1e-4, 0.0), Complex64::new(100.0, 0.0));
        assert!((f.value().unwrap() - c).norm() < 1e-15);
        assert_eq!(RatioFit::default().value(), None);
    }
}
