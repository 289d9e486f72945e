//! Dense complex matrices over plain scalars and second-order jets.

mod dense;
mod expm;
mod jet;
mod quat;

use std::fmt::Display;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

pub use dense::{CMatrix, JMatrix, Matrix};
pub use expm::mat_exp;
pub use jet::Jet2;
pub use quat::{quat_embed, symplectic_form};

use crate::error::{Error, Result};

/// Entry type of a [`Matrix`]: complex numbers or jets of complex numbers.
pub trait Scalar:
    Copy
    + Send
    + Sync
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn conj(self) -> Self;
    fn scale(self, c: Complex64) -> Self;
    fn from_complex(c: Complex64) -> Self;
    fn value(self) -> Complex64;
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn scale(self, c: Complex64) -> Self {
        self * c
    }
    fn from_complex(c: Complex64) -> Self {
        c
    }
    fn value(self) -> Complex64 {
        self
    }
}

/// 2-jet at `s = 0` of the curve `s -> p * exp(s Z)`: entrywise `(p, pZ, pZ^2)`.
pub fn curve_jet(p: &CMatrix, z: &CMatrix) -> Result<JMatrix> {
    if !p.is_square() || p.shape() != z.shape() {
        return Err(Error::DimensionMismatch {
            op: "curve_jet",
            left: p.shape(),
            right: z.shape(),
        });
    }
    let pz = p * z;
    let pzz = &pz * z;
    JMatrix::from_parts(p, &pz, &pzz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn curve_jet_of_zero_direction_is_constant() {
        let p = CMatrix::from_fn(2, 2, |i, j| Complex64::new(i as f64, j as f64));
        let jet = curve_jet(&p, &CMatrix::zeros(2, 2)).unwrap();
        assert_eq!(jet.value(), p);
        assert_eq!(jet.d1(), CMatrix::zeros(2, 2));
        assert_eq!(jet.d2(), CMatrix::zeros(2, 2));
    }

    #[test]
    fn curve_jet_of_rotation_matches_finite_differences() {
        let z = CMatrix::from_real(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        let jet = curve_jet(&CMatrix::identity(2), &z).unwrap();
        assert_eq!(jet.d1(), z);
        assert_eq!(jet.d2(), &CMatrix::identity(2) * &CMatrix::identity(2).scale((-1.0).into()));

        let h = 1e-5;
        let fwd = mat_exp(&z.scale(h.into())).unwrap();
        let bwd = mat_exp(&z.scale((-h).into())).unwrap();
        let mid = CMatrix::identity(2);
        let fd1 = (&fwd - &bwd).scale((0.5 / h).into());
        let fd2 = (&(&fwd - &mid.scale(2.0.into())) + &bwd).scale((1.0 / (h * h)).into());
        assert!(fd1.distance(&jet.d1()) < 1e-6);
        assert!(fd2.distance(&jet.d2()) < 1e-6);
    }

    #[test]
    fn second_derivative_of_entry_along_y12() {
        let y12 = CMatrix::from_real(2, 2, &[0.0, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0]);
        let jet = curve_jet(&CMatrix::identity(2), &y12).unwrap();
        assert!((jet[(0, 0)].d2 - Complex64::new(-0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(curve_jet(&CMatrix::identity(2), &CMatrix::zeros(3, 3)).is_err());
    }
}
