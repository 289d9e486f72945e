//! Involutions and the Cartan embedding `Phi(p) = p sigma(p^{-1})`.
//!
//! Every involution used here has the form `sigma(z) = S f(z) S^{-1}` where
//! `f` is either the identity or entrywise conjugation and `S` is a constant
//! unitary matrix. On a unitary group `p^{-1} = p^*`, so
//! `Phi(p) = p S f(p^*) S^{-1}`, which is polynomial in the entries of `p` and
//! `conj(p)` and therefore evaluates exactly on jets.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lie::{project_onto, Space, SymmetricPair};
use crate::matrix::{curve_jet, symplectic_form, CMatrix, JMatrix, Matrix, Scalar};
use crate::ops::{directional_matrix_jets, MatrixField};
use crate::sampling::membership_residual;

/// Membership tolerance of the guarded entry point [`cartan_map`].
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-8;

/// Smallest `|g(X, Y)|` accepted by [`pullback_factor`].
pub const ORTHOGONALITY_THRESHOLD: f64 = 1e-12;

/// `z -> S f(z) S^{-1}` with `f` the identity or entrywise conjugation.
#[derive(Clone, Debug, PartialEq)]
pub struct Involution {
    conjugate: bool,
    frame: Option<(CMatrix, CMatrix)>,
    description: String,
}

impl Involution {
    pub fn new(conjugate: bool, frame: Option<CMatrix>, description: impl Into<String>) -> Self {
        Self {
            conjugate,
            frame: frame.map(|s| {
                let inv = s.adjoint();
                (s, inv)
            }),
            description: description.into(),
        }
    }

    /// The standard involution of each space:
    ///
    /// | space | `sigma(z)` |
    /// |---|---|
    /// | `SU(n)/SO(n)`, `Sp(n)/U(n)` | `conj(z)` |
    /// | `SO(2n)/U(n)` | `J z J^{-1}` |
    /// | `SU(2n)/Sp(n)` | `J conj(z) J^{-1}` |
    /// | Grassmannians | `I_{m,n} z I_{m,n}` |
    pub fn for_space(space: Space) -> Self {
        match space {
            Space::SuSo { .. } | Space::SpU { .. } => Self::new(true, None, "conj(z)"),
            Space::SoU { n } => Self::new(false, Some(symplectic_form(n)), "J z J^-1"),
            Space::SuSp { n } => Self::new(true, Some(symplectic_form(n)), "J conj(z) J^-1"),
            Space::RealGrassmannian { m, n } | Space::ComplexGrassmannian { m, n } => {
                Self::new(false, Some(signature(m, n)), "I_mn z I_mn")
            }
            Space::QuaternionicGrassmannian { m, n } => {
                let i = signature(m, n);
                let zero = CMatrix::zeros(m + n, m + n);
                let hat = CMatrix::block2(&i, &zero, &zero, &i).expect("square blocks");
                Self::new(false, Some(hat), "Ihat z Ihat")
            }
        }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn conjugates(&self) -> bool {
        self.conjugate
    }

    /// The constant `S`, if any.
    pub fn frame(&self) -> Option<&CMatrix> {
        self.frame.as_ref().map(|(s, _)| s)
    }

    pub fn apply<T: Scalar>(&self, z: &Matrix<T>) -> Matrix<T> {
        let f = if self.conjugate { z.conj() } else { z.clone() };
        match &self.frame {
            None => f,
            Some((s, s_inv)) => {
                let s = s.map(T::from_complex);
                let s_inv = s_inv.map(T::from_complex);
                &(&s * &f) * &s_inv
            }
        }
    }
}

/// `diag(I_m, -I_n)`.
pub fn signature(m: usize, n: usize) -> CMatrix {
    let one = Complex64::new(1.0, 0.0);
    let diag: Vec<Complex64> = (0..m + n).map(|k| if k < m { one } else { -one }).collect();
    CMatrix::diagonal(&diag)
}

/// The Cartan map of a symmetric pair as a [`MatrixField`].
#[derive(Clone, Copy, Debug)]
pub struct CartanMap<'a> {
    pair: &'a SymmetricPair,
}

impl<'a> CartanMap<'a> {
    pub fn new(pair: &'a SymmetricPair) -> Self {
        Self { pair }
    }

    /// `q sigma(q^*)`, valid for any matrix of the right size; equal to
    /// `Phi(q)` when `q` is unitary.
    pub fn apply<T: Scalar>(&self, q: &Matrix<T>) -> Matrix<T> {
        q * &self.pair.involution.apply(&q.adjoint())
    }
}

impl MatrixField for CartanMap<'_> {
    fn eval_jet(&self, q: &JMatrix) -> JMatrix {
        self.apply(q)
    }

    fn eval(&self, q: &CMatrix) -> CMatrix {
        self.apply(q)
    }
}

/// `Phi(p)`, after checking that `p` lies in the group.
pub fn cartan_map(pair: &SymmetricPair, p: &CMatrix) -> Result<CMatrix> {
    check_member(pair, p)?;
    Ok(CartanMap::new(pair).apply(p))
}

fn check_member(pair: &SymmetricPair, p: &CMatrix) -> Result<()> {
    let size = pair.matrix_size();
    if p.shape() != (size, size) {
        return Err(Error::DimensionMismatch {
            op: "cartan_map",
            left: (size, size),
            right: p.shape(),
        });
    }
    let residual = membership_residual(pair.group(), p);
    if residual > MEMBERSHIP_TOLERANCE {
        return Err(Error::NotInGroup {
            group: pair.group().to_string(),
            residual,
        });
    }
    Ok(())
}

/// Closed form `q Ihat q^* Ihat` of the Cartan map on a quaternionic
/// Grassmannian, written without reference to the involution.
pub fn quaternionic_closed_form(m: usize, n: usize, q: &CMatrix) -> Result<CMatrix> {
    let size = 2 * (m + n);
    if q.shape() != (size, size) {
        return Err(Error::DimensionMismatch {
            op: "quaternionic_closed_form",
            left: (size, size),
            right: q.shape(),
        });
    }
    let hat = CMatrix::from_fn(size, size, |i, j| {
        if i != j {
            Complex64::new(0.0, 0.0)
        } else if i % (m + n) < m {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(-1.0, 0.0)
        }
    });
    Ok(&(&(q * &hat) * &q.adjoint()) * &hat)
}

/// Entrywise Laplacian `sum_Z Z^2(F)(p)` of a matrix-valued map over the
/// group's orthonormal algebra basis.
pub fn ambient_laplacian(map: &dyn MatrixField, p: &CMatrix, basis: &[CMatrix]) -> Result<CMatrix> {
    let size = map.eval(p).rows();
    let mut lap = CMatrix::zeros(size, size);
    for jet in directional_matrix_jets(map, p, basis)? {
        lap = &lap + &jet.d2();
    }
    Ok(lap)
}

/// Tension field of a map `F: G -> G`, left-trivialised at `F(p)`: the
/// projection of `F(p)^* Lap(F)(p)` onto the algebra.
pub fn map_tension(map: &dyn MatrixField, p: &CMatrix, basis: &[CMatrix]) -> Result<CMatrix> {
    let lap = ambient_laplacian(map, p, basis)?;
    let base = map.eval(p);
    Ok(project_onto(basis, &(&base.adjoint() * &lap)))
}

/// Largest entry of the tension field of the Cartan map at `p`. Zero up to
/// rounding because the Cartan map is harmonic.
pub fn harmonic_residual(pair: &SymmetricPair, p: &CMatrix) -> Result<f64> {
    check_member(pair, p)?;
    Ok(map_tension(&CartanMap::new(pair), p, &pair.algebra.elements)?.max_abs())
}

/// `p -> p^2`, a non-harmonic self-map used as a negative control.
#[derive(Clone, Copy, Debug, Default)]
pub struct Square;

impl MatrixField for Square {
    fn eval_jet(&self, q: &JMatrix) -> JMatrix {
        q * q
    }
}

/// `dPhi_p(X)` as an ambient matrix.
pub fn differential(pair: &SymmetricPair, p: &CMatrix, x: &CMatrix) -> Result<CMatrix> {
    Ok(CartanMap::new(pair).apply(&curve_jet(p, x)?).d1())
}

/// Pullback of the metric along the Cartan map for one pair of directions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pullback {
    /// `g(dPhi X, dPhi Y)`.
    pub numerator: f64,
    /// `g(X, Y)`.
    pub denominator: f64,
}

impl Pullback {
    /// The conformal factor `numerator / denominator`.
    pub fn factor(&self) -> Result<f64> {
        if self.denominator.abs() < ORTHOGONALITY_THRESHOLD {
            return Err(Error::OrthogonalDirections {
                numerator: self.numerator,
            });
        }
        Ok(self.numerator / self.denominator)
    }
}

/// `g(dPhi X, dPhi Y)` against `g(X, Y)` for `X, Y` in the algebra
/// (left-trivialised at `p`). On `p` both ratios equal 4: the image curve is
/// `Phi(p) exp(2t Ad_{sigma(p)} X)`, a geodesic traversed at twice the speed.
pub fn pullback_factor(pair: &SymmetricPair, p: &CMatrix, x: &CMatrix, y: &CMatrix) -> Result<Pullback> {
    let dx = differential(pair, p, x)?;
    let dy = differential(pair, p, y)?;
    Ok(Pullback {
        numerator: dx.inner(&dy),
        denominator: x.inner(y),
    })
}

/// `|Phi(pk) - Phi(p)|`; zero for `k` in the isotropy group.
pub fn k_invariance_residual(pair: &SymmetricPair, p: &CMatrix, k: &CMatrix) -> Result<f64> {
    let map = CartanMap::new(pair);
    Ok(map.apply(&p.try_mul(k)?).distance(&map.apply(p)))
}

/// `|sigma(Phi(p)) - Phi(p)^{-1}|`; zero since `sigma` reverses the image.
pub fn inverse_symmetry_residual(pair: &SymmetricPair, p: &CMatrix) -> f64 {
    let phi = CartanMap::new(pair).apply(p);
    pair.involution.apply(&phi).distance(&phi.adjoint())
}
