use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::matrix::CMatrix;

/// The generators `E_ij`, `D_t`, `X_rs`, `Y_rs` of `gl(n, C)` for a fixed `n`.
///
/// All indices are 1-based, matching the usual matrix-unit notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalMatrices {
    n: usize,
}

pub fn canonical(n: usize) -> CanonicalMatrices {
    CanonicalMatrices { n }
}

impl CanonicalMatrices {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix unit with a single 1 at `(i, j)`.
    pub fn e(&self, i: usize, j: usize) -> CMatrix {
        self.check(i);
        self.check(j);
        let mut m = CMatrix::zeros(self.n, self.n);
        m[(i - 1, j - 1)] = Complex64::new(1.0, 0.0);
        m
    }

    pub fn d(&self, t: usize) -> CMatrix {
        self.e(t, t)
    }

    /// `(E_rs + E_sr) / sqrt(2)`.
    pub fn x(&self, r: usize, s: usize) -> CMatrix {
        (&self.e(r, s) + &self.e(s, r)).scale(FRAC_1_SQRT_2.into())
    }

    /// `(E_rs - E_sr) / sqrt(2)`.
    pub fn y(&self, r: usize, s: usize) -> CMatrix {
        (&self.e(r, s) - &self.e(s, r)).scale(FRAC_1_SQRT_2.into())
    }

    /// Pairs `1 <= r < s <= n` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |r| (r + 1..=self.n).map(move |s| (r, s)))
    }

    fn check(&self, i: usize) {
        assert!(
            (1..=self.n).contains(&i),
            "canonical index {i} outside 1..={}",
            self.n
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x12_for_n2() {
        let c = canonical(2);
        let expected = CMatrix::from_real(2, 2, &[0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0]);
        assert_eq!(c.x(1, 2), expected);
    }

    #[test]
    fn y12_squared() {
        let y = canonical(2).y(1, 2);
        let sq = &y * &y;
        assert!(sq.distance(&CMatrix::identity(2).scale((-0.5).into())) < 1e-15);
    }

    #[test]
    fn diagonal_units_sum_to_identity() {
        let c = canonical(2);
        assert_eq!(&c.d(1) + &c.d(2), CMatrix::identity(2));
    }

    #[test]
    fn pair_order_is_lexicographic() {
        let got: Vec<_> = canonical(3).pairs().collect();
        assert_eq!(got, vec![(1, 2), (1, 3), (2, 3)]);
    }
}
