//! Tension field and conformality operator on matrix groups.
//!
//! For a left-invariant vector field `Z` on a group with bi-invariant metric,
//! `Z^k(phi)(p)` is the `k`-th derivative of `phi(p exp(sZ))` at `s = 0`.
//! Over an orthonormal basis of the algebra the Levi-Civita terms
//! `nabla_Z Z` vanish, so
//!
//! ```text
//! tau(phi)        = sum_Z Z^2(phi)
//! kappa(phi, psi) = sum_Z Z(phi) Z(psi)
//! ```
//!
//! Both derivatives come from one evaluation of `phi` on the exact 2-jet
//! `(p, pZ, pZ^2)` of the curve, so there is no step size to tune.

use num_complex::Complex64;

use crate::cartan::CartanMap;
use crate::error::{Error, Result};
use crate::lie::SymmetricPair;
use crate::matrix::{curve_jet, CMatrix, JMatrix, Jet2};

/// Tolerance used by [`quotient_ops`] to detect non-invariant input.
pub const K_INVARIANCE_TOLERANCE: f64 = 1e-9;

/// A complex-valued function on a matrix group, evaluated on jets.
pub trait ScalarField: Send + Sync {
    fn eval_jet(&self, q: &JMatrix) -> Jet2;

    fn eval(&self, q: &CMatrix) -> Complex64 {
        self.eval_jet(&q.to_jet()).v
    }
}

impl<F> ScalarField for F
where
    F: Fn(&JMatrix) -> Jet2 + Send + Sync,
{
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        self(q)
    }
}

/// A matrix-valued map between matrix groups, evaluated on jets.
pub trait MatrixField: Send + Sync {
    fn eval_jet(&self, q: &JMatrix) -> JMatrix;

    fn eval(&self, q: &CMatrix) -> CMatrix {
        self.eval_jet(&q.to_jet()).value()
    }
}

/// The constant function.
#[derive(Clone, Copy, Debug)]
pub struct Constant(pub Complex64);

impl ScalarField for Constant {
    fn eval_jet(&self, _q: &JMatrix) -> Jet2 {
        Jet2::constant(self.0)
    }
}

/// The entry function `q -> q[(row, col)]` (0-based).
#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
}

impl ScalarField for Entry {
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        q[(self.row, self.col)]
    }
}

/// `|measured - reference| / max(1, |reference|)`.
pub fn relative_residual(measured: Complex64, reference: Complex64) -> f64 {
    (measured - reference).norm() / reference.norm().max(1.0)
}

/// `(Z(phi)(p), Z^2(phi)(p))`.
pub fn direction_derivs(
    phi: &dyn ScalarField,
    p: &CMatrix,
    z: &CMatrix,
) -> Result<(Complex64, Complex64)> {
    let jet = phi.eval_jet(&curve_jet(p, z)?);
    Ok((jet.d1, jet.d2))
}

/// Jets of `phi` along every direction of `basis` at `p`.
pub fn directional_jets(phi: &dyn ScalarField, p: &CMatrix, basis: &[CMatrix]) -> Result<Vec<Jet2>> {
    basis
        .iter()
        .map(|z| Ok(phi.eval_jet(&curve_jet(p, z)?)))
        .collect()
}

/// Jets of a matrix-valued map along every direction of `basis` at `p`.
pub fn directional_matrix_jets(
    map: &dyn MatrixField,
    p: &CMatrix,
    basis: &[CMatrix],
) -> Result<Vec<JMatrix>> {
    basis
        .iter()
        .map(|z| Ok(map.eval_jet(&curve_jet(p, z)?)))
        .collect()
}

pub fn tension(phi: &dyn ScalarField, p: &CMatrix, basis: &[CMatrix]) -> Result<Complex64> {
    Ok(directional_jets(phi, p, basis)?.iter().map(|j| j.d2).sum())
}

pub fn conformality(
    phi: &dyn ScalarField,
    psi: &dyn ScalarField,
    p: &CMatrix,
    basis: &[CMatrix],
) -> Result<Complex64> {
    let a = directional_jets(phi, p, basis)?;
    let b = directional_jets(psi, p, basis)?;
    Ok(pair_sum(&a, &b))
}

/// `sum_k a_k.d1 * b_k.d1`.
pub fn pair_sum(a: &[Jet2], b: &[Jet2]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.d1 * y.d1).sum()
}

/// Operators of a `K`-invariant function, computed on `G` with the
/// horizontal (`p`) basis and with the full algebra basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuotientValues {
    pub tau_horizontal: Complex64,
    pub tau_full: Complex64,
    pub kappa_horizontal: Complex64,
}

/// Quotient operators of a `K`-invariant function. Vertical derivatives of an
/// invariant function vanish, so both tensions agree; a disagreement beyond
/// [`K_INVARIANCE_TOLERANCE`] is reported as [`Error::NotKInvariant`].
pub fn quotient_ops(pair: &SymmetricPair, phi: &dyn ScalarField, p: &CMatrix) -> Result<QuotientValues> {
    let values = quotient_values(pair, phi, p)?;
    if relative_residual(values.tau_horizontal, values.tau_full) > K_INVARIANCE_TOLERANCE {
        return Err(Error::NotKInvariant {
            horizontal: values.tau_horizontal.to_string(),
            full: values.tau_full.to_string(),
        });
    }
    Ok(values)
}

/// Like [`quotient_ops`] but without the invariance check.
pub fn quotient_values(pair: &SymmetricPair, phi: &dyn ScalarField, p: &CMatrix) -> Result<QuotientValues> {
    let horizontal = directional_jets(phi, p, &pair.p_basis)?;
    let vertical = directional_jets(phi, p, &pair.k_basis)?;
    let tau_horizontal: Complex64 = horizontal.iter().map(|j| j.d2).sum();
    let tau_vertical: Complex64 = vertical.iter().map(|j| j.d2).sum();
    Ok(QuotientValues {
        tau_horizontal,
        tau_full: tau_horizontal + tau_vertical,
        kappa_horizontal: pair_sum(&horizontal, &horizontal),
    })
}

/// Orthonormal frame of the Cartan image at `Phi(p)`, left-trivialised:
/// `Ad_{sigma(p)} X` for `X` in the `p` basis.
pub fn image_frame(pair: &SymmetricPair, p: &CMatrix) -> Vec<CMatrix> {
    let s = pair.involution.apply(p);
    let s_inv = s.adjoint();
    pair.p_basis.iter().map(|x| &(&s * x) * &s_inv).collect()
}

/// Jets of `phi` along the geodesics `Phi(p) exp(t Ad_{sigma(p)} X)` of the image.
pub fn image_jets(pair: &SymmetricPair, phi: &dyn ScalarField, p: &CMatrix) -> Result<Vec<Jet2>> {
    let base = CartanMap::new(pair).eval(p);
    directional_jets(phi, &base, &image_frame(pair, p))
}

/// `(tau_N(phi)(Phi(p)), kappa_N(phi, phi)(Phi(p)))` on the Cartan image `N`.
pub fn image_ops(pair: &SymmetricPair, phi: &dyn ScalarField, p: &CMatrix) -> Result<(Complex64, Complex64)> {
    let jets = image_jets(pair, phi, p)?;
    Ok((jets.iter().map(|j| j.d2).sum(), pair_sum(&jets, &jets)))
}

/// `kappa_N(phi, psi)(Phi(p))` on the Cartan image.
pub fn image_conformality(
    pair: &SymmetricPair,
    phi: &dyn ScalarField,
    psi: &dyn ScalarField,
    p: &CMatrix,
) -> Result<Complex64> {
    let a = image_jets(pair, phi, p)?;
    let b = image_jets(pair, psi, p)?;
    Ok(pair_sum(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{algebra_basis, canonical, cartan_split, Group, Space};
    use crate::sampling::{random_point, SampleConfig};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constant_has_no_derivatives() {
        let p = CMatrix::identity(2);
        let z = canonical(2).y(1, 2);
        assert_eq!(direction_derivs(&Constant(c(1.0)), &p, &z).unwrap(), (c(0.0), c(0.0)));
        let basis = algebra_basis(Group::su(3)).unwrap();
        let q = random_point(Group::su(3), &SampleConfig::new(1, 1), 0).unwrap();
        assert_eq!(tension(&Constant(c(2.5)), &q, &basis.elements).unwrap(), c(0.0));
        assert_eq!(
            conformality(&Entry { row: 0, col: 1 }, &Constant(c(2.5)), &q, &basis.elements).unwrap(),
            c(0.0)
        );
    }

    #[test]
    fn entry_derivatives_on_so2() {
        let p = CMatrix::identity(2);
        let y = canonical(2).y(1, 2);
        let (d1, d2) = direction_derivs(&Entry { row: 0, col: 1 }, &p, &y).unwrap();
        assert!((d1 - c(std::f64::consts::FRAC_1_SQRT_2)).norm() < 1e-16);
        assert!(d2.norm() < 1e-16);
        let (d1, d2) = direction_derivs(&Entry { row: 0, col: 0 }, &p, &y).unwrap();
        assert!(d1.norm() < 1e-16);
        assert!((d2 - c(-0.5)).norm() < 1e-15);
        let kappa = conformality(&Entry { row: 0, col: 0 }, &Entry { row: 0, col: 0 }, &p, &[y]).unwrap();
        assert!(kappa.norm() < 1e-16);
    }

    #[test]
    fn coordinate_functions_on_so_and_sp() {
        let cfg = SampleConfig::new(5, 3);
        for n in [3usize, 4] {
            let g = Group::so(n);
            let basis = algebra_basis(g).unwrap();
            let p = random_point(g, &cfg, 0).unwrap();
            let t = tension(&Entry { row: 1, col: 2 }, &p, &basis.elements).unwrap();
            let expected = p[(1, 2)] * (-(n as f64 - 1.0) / 2.0);
            assert!(relative_residual(t, expected) < 1e-12);
        }
        for n in [1usize, 2] {
            let g = Group::sp(n);
            let basis = algebra_basis(g).unwrap();
            let p = random_point(g, &cfg, 1).unwrap();
            let t = tension(&Entry { row: 0, col: 1 }, &p, &basis.elements).unwrap();
            let expected = p[(0, 1)] * (-(2.0 * n as f64 + 1.0) / 2.0);
            assert!(relative_residual(t, expected) < 1e-12);
        }
    }

    #[test]
    fn quotient_ops_rejects_non_invariant_entry() {
        let pair = cartan_split(Space::RealGrassmannian { m: 2, n: 1 }).unwrap();
        let p = random_point(pair.group(), &SampleConfig::new(9, 1), 0).unwrap();
        let err = quotient_ops(&pair, &Entry { row: 0, col: 0 }, &p).unwrap_err();
        assert!(matches!(err, Error::NotKInvariant { .. }));
        let ok = quotient_ops(&pair, &Constant(c(1.0)), &p).unwrap();
        assert_eq!(ok.tau_full, c(0.0));
        assert_eq!(ok.kappa_horizontal, c(0.0));
    }

    #[test]
    fn image_ops_of_constant() {
        let pair = cartan_split(Space::QuaternionicGrassmannian { m: 1, n: 1 }).unwrap();
        let p = random_point(pair.group(), &SampleConfig::new(2, 1), 0).unwrap();
        assert_eq!(image_ops(&pair, &Constant(c(3.0)), &p).unwrap(), (c(0.0), c(0.0)));
    }
}
