use num_complex::Complex64;

use super::CMatrix;
use crate::error::{Error, Result};

/// Norm bound the scaled argument is reduced to before the Taylor core.
const SCALED_NORM: f64 = 0.25;
/// Degree of the Taylor core; `0.25^19 / 19!` is far below f64 resolution.
const TAYLOR_DEGREE: usize = 18;

/// Matrix exponential by scaling and squaring around a fixed-degree Taylor core.
pub fn mat_exp(a: &CMatrix) -> Result<CMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let norm = one_norm(a);
    let squarings = if norm > SCALED_NORM {
        (norm / SCALED_NORM).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.scale(Complex64::new(0.5f64.powi(squarings), 0.0));

    // Horner form: I + X(I + X/2 (I + X/3 (...)))
    let identity = CMatrix::identity(n);
    let mut acc = identity.clone();
    for k in (1..=TAYLOR_DEGREE).rev() {
        let term = (&scaled * &acc).scale(Complex64::new(1.0 / k as f64, 0.0));
        acc = &identity + &term;
    }
    for _ in 0..squarings {
        acc = &acc * &acc;
    }
    Ok(acc)
}

/// Maximum absolute column sum.
fn one_norm(a: &CMatrix) -> f64 {
    (0..a.cols())
        .map(|j| (0..a.rows()).map(|i| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}
