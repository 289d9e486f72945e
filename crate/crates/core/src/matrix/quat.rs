use super::CMatrix;
use crate::error::{Error, Result};

/// Complex representation of the quaternionic matrix `z + j w`:
/// `[[z, w], [-conj(w), conj(z)]]`.
pub fn quat_embed(z: &CMatrix, w: &CMatrix) -> Result<CMatrix> {
    if !z.is_square() || z.shape() != w.shape() {
        return Err(Error::DimensionMismatch {
            op: "quat_embed",
            left: z.shape(),
            right: w.shape(),
        });
    }
    CMatrix::block2(z, w, &(-&w.conj()), &z.conj())
}

/// The standard symplectic form `J_n = [[0, I_n], [-I_n, 0]]`.
pub fn symplectic_form(n: usize) -> CMatrix {
    let i = CMatrix::identity(n);
    let z = CMatrix::zeros(n, n);
    CMatrix::block2(&z, &i, &(-&i), &z).expect("square blocks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn unit_quaternions() {
        let one = CMatrix::identity(1);
        let zero = CMatrix::zeros(1, 1);
        assert_eq!(quat_embed(&one, &zero).unwrap(), CMatrix::identity(2));
        assert_eq!(
            quat_embed(&zero, &one).unwrap(),
            CMatrix::from_real(2, 2, &[0.0, 1.0, -1.0, 0.0])
        );
        let i = CMatrix::identity(1).scale(Complex64::i());
        assert_eq!(
            quat_embed(&i, &zero).unwrap(),
            CMatrix::diagonal(&[Complex64::i(), -Complex64::i()])
        );
    }

    #[test]
    fn compatible_with_symplectic_structure() {
        let z = CMatrix::from_fn(2, 2, |i, j| Complex64::new(i as f64 - 0.3, 1.0 + j as f64));
        let w = CMatrix::from_fn(2, 2, |i, j| Complex64::new(0.7 * j as f64, -(i as f64)));
        let q = quat_embed(&z, &w).unwrap();
        let j = symplectic_form(2);
        assert!((&q * &j).distance(&(&j * &q.conj())) < 1e-14);
    }

    #[test]
    fn shape_mismatch() {
        assert!(quat_embed(&CMatrix::zeros(2, 2), &CMatrix::zeros(1, 1)).is_err());
    }
}
