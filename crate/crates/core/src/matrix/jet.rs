//! Second-order jets along a single real curve parameter.
//!
//! A [`Jet2`] carries `(f(0), f'(0), f''(0))` for some smooth complex-valued
//! `f(s)`. Arithmetic follows the truncated Taylor rules, so evaluating any
//! polynomial (or rational / algebraic) expression on jets yields the exact
//! first and second `s`-derivatives of that expression.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet2 {
    pub v: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl Jet2 {
    pub const fn new(v: Complex64, d1: Complex64, d2: Complex64) -> Self {
        Self { v, d1, d2 }
    }

    /// A value that does not move along the curve.
    pub fn constant(v: Complex64) -> Self {
        Self::new(v, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// The curve parameter itself, shifted to `v`: `(v, 1, 0)`.
    pub fn variable(v: Complex64) -> Self {
        Self::new(v, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn from_real(v: f64, d1: f64, d2: f64) -> Self {
        Self::new(v.into(), d1.into(), d2.into())
    }

    /// Complex conjugate. The curve parameter is real, so conjugation
    /// commutes with differentiation.
    pub fn conj(self) -> Self {
        Self::new(self.v.conj(), self.d1.conj(), self.d2.conj())
    }

    pub fn scale(self, c: Complex64) -> Self {
        Self::new(self.v * c, self.d1 * c, self.d2 * c)
    }

    /// Apply a scalar function given its value and first two derivatives at `self.v`.
    pub fn chain(self, f: Complex64, df: Complex64, d2f: Complex64) -> Self {
        Self::new(f, df * self.d1, d2f * self.d1 * self.d1 + df * self.d2)
    }

    /// Multiplicative inverse. `self.v` must be nonzero.
    pub fn recip(self) -> Self {
        let inv = self.v.inv();
        self.chain(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    /// Principal square root. `self.v` must be off the branch cut.
    pub fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        let dr = 0.5 / r;
        self.chain(r, dr, -0.25 / (r * self.v))
    }

    pub fn is_constant(&self) -> bool {
        self.d1 == Complex64::new(0.0, 0.0) && self.d2 == Complex64::new(0.0, 0.0)
    }
}

impl fmt::Display for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.v, self.d1, self.d2)
    }
}

impl Add for Jet2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.v + rhs.v, self.d1 + rhs.d1, self.d2 + rhs.d2)
    }
}

impl Sub for Jet2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.v - rhs.v, self.d1 - rhs.d1, self.d2 - rhs.d2)
    }
}

impl Mul for Jet2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.v * rhs.v,
            self.d1 * rhs.v + self.v * rhs.d1,
            self.d2 * rhs.v + 2.0 * self.d1 * rhs.d1 + self.v * rhs.d2,
        )
    }
}

impl Div for Jet2 {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Neg for Jet2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.v, -self.d1, -self.d2)
    }
}

impl AddAssign for Jet2 {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for Jet2 {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for Jet2 {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Sum for Jet2 {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), |a, b| a + b)
    }
}

impl From<Complex64> for Jet2 {
    fn from(v: Complex64) -> Self {
        Self::constant(v)
    }
}

impl Scalar for Jet2 {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }
    fn conj(self) -> Self {
        Jet2::conj(self)
    }
    fn scale(self, c: Complex64) -> Self {
        Jet2::scale(self, c)
    }
    fn from_complex(c: Complex64) -> Self {
        Self::constant(c)
    }
    fn value(self) -> Complex64 {
        self.v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn identity_times_jet() {
        let x = Jet2::new(c(1.5), Complex64::new(0.0, 2.0), c(-3.0));
        assert_eq!(Jet2::from_real(1.0, 0.0, 0.0) * x, x);
    }

    #[test]
    fn square_of_parameter() {
        let s = Jet2::variable(c(0.0));
        assert_eq!(s * s, Jet2::from_real(0.0, 0.0, 2.0));
    }

    #[test]
    fn product_matches_taylor_expansion() {
        // (2 + 3s + 2s^2)(5 + 7s + 4.5s^2) = 10 + 29s + 40s^2 + ...
        let a = Jet2::from_real(2.0, 3.0, 4.0);
        let b = Jet2::from_real(5.0, 7.0, 9.0);
        assert_eq!(a * b, Jet2::from_real(10.0, 29.0, 80.0));
    }

    #[test]
    fn conjugation_is_entrywise() {
        let a = Jet2::new(
            Complex64::new(1.0, 2.0),
            Complex64::new(-1.0, 0.5),
            Complex64::new(0.0, -3.0),
        );
        let b = a.conj();
        assert_eq!(b.v, a.v.conj());
        assert_eq!(b.d1, a.d1.conj());
        assert_eq!(b.d2, a.d2.conj());
        assert_eq!(b.conj(), a);
    }

    #[test]
    fn recip_and_sqrt_follow_chain_rule() {
        // f(s) = 1 / (2 + s): f' = -1/4, f'' = 2/8
        let r = Jet2::from_real(2.0, 1.0, 0.0).recip();
        assert!((r.v - c(0.5)).norm() < 1e-15);
        assert!((r.d1 - c(-0.25)).norm() < 1e-15);
        assert!((r.d2 - c(0.25)).norm() < 1e-15);
        // g(s) = sqrt(4 + s^2): g' = 0, g'' = 1/2
        let s = Jet2::variable(c(0.0));
        let g = (Jet2::constant(c(4.0)) + s * s).sqrt();
        assert!((g.v - c(2.0)).norm() < 1e-15);
        assert!(g.d1.norm() < 1e-15);
        assert!((g.d2 - c(0.5)).norm() < 1e-15);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Jet2::from_real(3.0, -1.0, 2.0);
        let b = Jet2::new(Complex64::new(1.0, 1.0), c(0.5), Complex64::new(0.0, 2.0));
        let q = (a * b) / b;
        assert!((q.v - a.v).norm() < 1e-14);
        assert!((q.d1 - a.d1).norm() < 1e-14);
        assert!((q.d2 - a.d2).norm() < 1e-14);
    }
}
