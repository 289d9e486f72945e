//! Explicit eigenfunctions on the classical symmetric spaces.
//!
//! Every function here is `eta o Phi` with `eta(w) = tr(w W) + c` linear on
//! the ambient matrix space and `Phi` the Cartan map of the space. Indices
//! `j`, `alpha` are **1-based** in this module, unlike [`crate::matrix::Matrix`]
//! indexing which is 0-based.
//!
//! | space | `eta` | `(lambda, mu)` |
//! |---|---|---|
//! | `SU(n)/SO(n)` | `tr(w A)`, `A = a a^t` | `(-2(n^2+n-2)/n, -4(n-1)/n)` |
//! | `Sp(n)/U(n)` | `tr(w A)`, `A = a a^t` | `(-2(n+1), -2)` |
//! | `SO(2n)/U(n)` | `tr(w J A)`, `A` skew from an isotropic plane | `(-2(n-1), -1)` |
//! | `SU(2n)/Sp(n)` | `tr(w J A)`, `A` skew | `(-2(2n^2-n-1)/n, -2(n-1)/n)` |
//! | real Grassmannian | `tr((w I_mn + I) A) / 2`, `A` rank-one isotropic | `(-(m+n), -2)` |
//! | complex Grassmannian | `(w I_mn + I)_{j alpha}` | `(-2(m+n), -2)` |
//! | quaternionic Grassmannian | `(w Ihat + I)_{j alpha} / 2` | `(-2(m+n), -1)` |

mod param;

use num_complex::Complex64;
pub use param::{
    bilinear, isotropic_orientation, make_param_matrix, outer_aa, random_isotropic_skew,
    random_isotropic_vector, random_rank1_isotropic, random_skew_ab, random_symmetric_aa, skew_ab,
    standard_isotropic_basis, ParamMatrix, ParamTag, IDENTITY_TOLERANCE, RANK_THRESHOLD,
};

use crate::cartan::{quaternionic_closed_form, signature, Involution};
use crate::error::{Error, Result};
use crate::lie::{Space, SpaceKind};
use crate::matrix::{symplectic_form, CMatrix, JMatrix, Jet2, Matrix, Scalar};
use crate::ops::ScalarField;
use crate::sampling::SampleConfig;

/// Number of random parameter matrices per space in [`default_functions`].
pub const DEFAULT_PARAMETER_DRAWS: u64 = 3;

/// `w -> tr(w W) + c` on ambient matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional {
    pub weight: CMatrix,
    pub offset: Complex64,
}

impl LinearFunctional {
    pub fn new(weight: CMatrix) -> Self {
        Self {
            weight,
            offset: Complex64::new(0.0, 0.0),
        }
    }

    pub fn eval_generic<T: Scalar>(&self, w: &Matrix<T>) -> T {
        let mut acc = T::from_complex(self.offset);
        for i in 0..w.rows() {
            for k in 0..w.cols() {
                let c = self.weight[(k, i)];
                if c != Complex64::new(0.0, 0.0) {
                    acc = acc + w[(i, k)].scale(c);
                }
            }
        }
        acc
    }
}

impl ScalarField for LinearFunctional {
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        self.eval_generic(q)
    }

    fn eval(&self, q: &CMatrix) -> Complex64 {
        self.eval_generic(q)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FunctionParams {
    /// 1-based matrix position.
    Indices { j: usize, alpha: usize },
    Matrix(ParamMatrix),
}

/// A `K`-invariant eigenfunction `eta o Phi` on `G` with its claimed eigenvalues.
#[derive(Clone, Debug)]
pub struct Eigenfunction {
    pub space: Space,
    pub label: String,
    pub params: FunctionParams,
    pub eta: LinearFunctional,
    pub lambda: f64,
    pub mu: f64,
    /// Functions with the same key form an eigenfamily.
    pub family: String,
    involution: Involution,
}

impl Eigenfunction {
    fn new(space: Space, label: String, params: FunctionParams, eta: LinearFunctional, family: String) -> Self {
        let (lambda, mu) = space.claimed_eigenvalues();
        Self {
            space,
            label,
            params,
            eta,
            lambda,
            mu,
            family,
            involution: Involution::for_space(space),
        }
    }

    pub fn eval_generic<T: Scalar>(&self, q: &Matrix<T>) -> T {
        let phi = q * &self.involution.apply(&q.adjoint());
        self.eta.eval_generic(&phi)
    }

    /// Second evaluation path: the explicit polynomial in the entries of `q`,
    /// written without the involution object.
    pub fn eval_direct(&self, q: &CMatrix) -> Complex64 {
        let half = Complex64::new(0.5, 0.0);
        match (self.space, &self.params) {
            (Space::QuaternionicGrassmannian { m, n }, FunctionParams::Indices { j, alpha }) => {
                let (j, a) = (j - 1, alpha - 1);
                let first: Complex64 = (0..m).map(|r| q[(j, r)] * q[(a, r)].conj()).sum();
                let second: Complex64 = (m + n..2 * m + n).map(|r| q[(j, r)] * q[(a, r)].conj()).sum();
                first + second
            }
            (Space::ComplexGrassmannian { m, n }, FunctionParams::Indices { j, alpha }) => {
                let w = &(q * &signature(m, n)) * &q.adjoint();
                let delta = if j == alpha { 1.0 } else { 0.0 };
                w[(j - 1, alpha - 1)] + delta
            }
            (Space::RealGrassmannian { m, n }, FunctionParams::Matrix(p)) => {
                let w = &(&(q * &signature(m, n)) * &q.transpose()) + &CMatrix::identity(m + n);
                w.trace_of_product(&p.matrix) * half
            }
            (Space::SuSo { .. } | Space::SpU { .. }, FunctionParams::Matrix(p)) => {
                (q * &q.transpose()).trace_of_product(&p.matrix)
            }
            (Space::SoU { n } | Space::SuSp { n }, FunctionParams::Matrix(p)) => {
                (&(q * &symplectic_form(n)) * &q.transpose()).trace_of_product(&p.matrix)
            }
            _ => unreachable!("constructors pair each space with its parameter kind"),
        }
    }

    /// Quaternionic Grassmannian only: `(q Ihat conj(q)^t + I)_{j alpha} / 2`
    /// evaluated literally.
    pub fn quaternionic_matrix_form(&self, q: &CMatrix) -> Option<Complex64> {
        match (self.space, &self.params) {
            (Space::QuaternionicGrassmannian { m, n }, FunctionParams::Indices { j, alpha }) => {
                let size = 2 * (m + n);
                let w = quaternionic_closed_form(m, n, q).ok()?;
                let hat = Involution::for_space(self.space).frame()?.clone();
                let v = &(&w * &hat) + &CMatrix::identity(size);
                Some(v[(j - 1, alpha - 1)] * 0.5)
            }
            _ => None,
        }
    }
}

impl ScalarField for Eigenfunction {
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        self.eval_generic(q)
    }

    fn eval(&self, q: &CMatrix) -> Complex64 {
        self.eval_generic(q)
    }
}

fn check_indices(j: usize, alpha: usize, max: usize) -> Result<()> {
    for (name, value) in [("j", j), ("alpha", alpha)] {
        if value == 0 || value > max {
            return Err(Error::IndexOutOfRange { name, value, max });
        }
    }
    if j == alpha {
        return Err(Error::DiagonalIndex(j));
    }
    Ok(())
}

/// `E_{row col}` scaled by `c`, 0-based.
fn unit(size: usize, row: usize, col: usize, c: f64) -> CMatrix {
    let mut e = CMatrix::zeros(size, size);
    e[(row, col)] = Complex64::new(c, 0.0);
    e
}

fn grassmannian_family(space: Space, alpha: usize) -> String {
    format!("{}:alpha={alpha}", space)
}

/// `q -> (q Ihat conj(q)^t + I)_{j alpha} / 2` on `Sp(m+n)`, `1 <= j, alpha <= 2(m+n)`.
pub fn quat_grassmannian_psi(m: usize, n: usize, j: usize, alpha: usize) -> Result<Eigenfunction> {
    let space = Space::QuaternionicGrassmannian { m, n };
    space.validate()?;
    let size = 2 * (m + n);
    check_indices(j, alpha, size)?;
    let sign = if (alpha - 1) % (m + n) < m { 0.5 } else { -0.5 };
    let eta = LinearFunctional::new(unit(size, alpha - 1, j - 1, sign));
    Ok(Eigenfunction::new(
        space,
        format!("psi[{j},{alpha}]"),
        FunctionParams::Indices { j, alpha },
        eta,
        grassmannian_family(space, alpha),
    ))
}

/// `z -> (z I_mn z^* + I)_{j alpha}` on `U(m+n)`, `1 <= j, alpha <= m+n`.
pub fn complex_grassmannian_psi(m: usize, n: usize, j: usize, alpha: usize) -> Result<Eigenfunction> {
    let space = Space::ComplexGrassmannian { m, n };
    space.validate()?;
    let size = m + n;
    check_indices(j, alpha, size)?;
    let sign = if alpha <= m { 1.0 } else { -1.0 };
    let eta = LinearFunctional::new(unit(size, alpha - 1, j - 1, sign));
    Ok(Eigenfunction::new(
        space,
        format!("psi[{j},{alpha}]"),
        FunctionParams::Indices { j, alpha },
        eta,
        grassmannian_family(space, alpha),
    ))
}

/// `x -> tr((x I_mn x^t + I) A) / 2` on `SO(m+n)`.
///
/// `A = a a^t` must be rank-one isotropic with `a` supported inside one of the
/// two diagonal blocks (the first `m` or the last `n` coordinates); vectors
/// that mix the blocks do not give eigenfunctions.
pub fn real_grassmannian_psi(m: usize, n: usize, a: &ParamMatrix) -> Result<Eigenfunction> {
    let space = Space::RealGrassmannian { m, n };
    space.validate()?;
    if a.tag != ParamTag::Rank1Isotropic || a.size() != m + n {
        return Err(Error::InvalidParameter(format!(
            "{space} needs a rank1-isotropic {0}x{0} matrix, got {1} of size {2}",
            m + n,
            a.tag,
            a.size()
        )));
    }
    a.check()?;
    let v = &a.vectors[0];
    let in_first = v[m..].iter().all(|z| z.norm() == 0.0);
    let in_second = v[..m].iter().all(|z| z.norm() == 0.0);
    if !in_first && !in_second {
        return Err(Error::InvalidParameter(format!(
            "{space}: the isotropic vector must be supported in one diagonal block"
        )));
    }
    let eta = LinearFunctional {
        weight: (&signature(m, n) * &a.matrix).scale(Complex64::new(0.5, 0.0)),
        offset: a.matrix.trace() * 0.5,
    };
    let label = format!("psi_A[{}]", a.tag);
    Ok(Eigenfunction::new(space, label.clone(), FunctionParams::Matrix(a.clone()), eta, format!("{space}:{label}")))
}

fn trace_function(space: Space, a: &ParamMatrix, tag: ParamTag, with_j: bool, name: &str) -> Result<Eigenfunction> {
    space.validate()?;
    let size = space.group().matrix_size();
    if a.tag != tag || a.size() != size {
        return Err(Error::InvalidParameter(format!(
            "{space} needs a {tag} {size}x{size} matrix, got {} of size {}",
            a.tag,
            a.size()
        )));
    }
    a.check()?;
    let weight = if with_j {
        &symplectic_form(size / 2) * &a.matrix
    } else {
        a.matrix.clone()
    };
    Ok(Eigenfunction::new(
        space,
        name.to_string(),
        FunctionParams::Matrix(a.clone()),
        LinearFunctional::new(weight),
        format!("{space}:{name}"),
    ))
}

/// `z -> tr(z z^t A)` on `SU(n)`, `A = a a^t`.
pub fn su_so_phi(n: usize, a: &[Complex64]) -> Result<Eigenfunction> {
    let p = make_param_matrix(ParamTag::SymmetricAa, &[a.to_vec()])?;
    trace_function(Space::SuSo { n }, &p, ParamTag::SymmetricAa, false, "phi_A")
}

/// `q -> tr(q q^t A)` on `Sp(n)`, `A = a a^t` with `a` in `C^{2n}`.
pub fn sp_u_phi(n: usize, a: &[Complex64]) -> Result<Eigenfunction> {
    let p = make_param_matrix(ParamTag::SymmetricAa, &[a.to_vec()])?;
    trace_function(Space::SpU { n }, &p, ParamTag::SymmetricAa, false, "phi_A")
}

/// `x -> tr(x J x^t A)` on `SO(2n)` with `A = (a b^t - b a^t)/sqrt(2)`.
///
/// `a, b` must span an isotropic plane. For `n = 2` such planes form two
/// `SO(4)`-orbits and only the orbit of `span{e_k - i e_{n+k}}` works.
pub fn so_u_psi(n: usize, a: &[Complex64], b: &[Complex64]) -> Result<Eigenfunction> {
    let p = make_param_matrix(ParamTag::SkewAb, &[a.to_vec(), b.to_vec()])?;
    so_u_psi_from(n, &p)
}

pub fn so_u_psi_from(n: usize, p: &ParamMatrix) -> Result<Eigenfunction> {
    if p.tag != ParamTag::SkewAb || p.size() != 2 * n {
        return Err(Error::InvalidParameter(format!("SO({})/U({n}) needs skew-ab in C^{}", 2 * n, 2 * n)));
    }
    let (a, b) = (&p.vectors[0], &p.vectors[1]);
    let scale = (a.iter().chain(b).map(|z| z.norm_sqr()).sum::<f64>()).max(f64::MIN_POSITIVE);
    for (v, w) in [(a, a), (a, b), (b, b)] {
        if bilinear(v, w).norm() > IDENTITY_TOLERANCE * scale {
            return Err(Error::InvalidParameter("a and b must span an isotropic plane".into()));
        }
    }
    if n == 2 {
        let v = standard_isotropic_basis(2);
        let reference = isotropic_orientation(&v[0], &v[1])?;
        if isotropic_orientation(a, b)?.signum() != reference.signum() {
            return Err(Error::InvalidParameter(
                "isotropic plane lies in the SO(4)-orbit opposite to span{e_k - i e_(n+k)}".into(),
            ));
        }
    }
    trace_function(Space::SoU { n }, p, ParamTag::SkewAb, true, "psi_A")
}

/// `z -> tr(z J z^t A)` on `SU(2n)` with `A = (a b^t - b a^t)/sqrt(2)`.
pub fn su_sp_phi(n: usize, a: &[Complex64], b: &[Complex64]) -> Result<Eigenfunction> {
    let p = make_param_matrix(ParamTag::SkewAb, &[a.to_vec(), b.to_vec()])?;
    trace_function(Space::SuSp { n }, &p, ParamTag::SkewAb, true, "phi_A")
}

/// All `psi[j, alpha]` with `j != alpha` for a fixed `alpha`.
pub fn grassmannian_family_members(space: Space, alpha: usize) -> Result<Vec<Eigenfunction>> {
    let (m, n) = space.sizes();
    match space.kind() {
        SpaceKind::QuaternionicGrassmannian => (1..=2 * (m + n))
            .filter(|&j| j != alpha)
            .map(|j| quat_grassmannian_psi(m, n, j, alpha))
            .collect(),
        SpaceKind::ComplexGrassmannian => (1..=m + n)
            .filter(|&j| j != alpha)
            .map(|j| complex_grassmannian_psi(m, n, j, alpha))
            .collect(),
        _ => Err(Error::UnsupportedSpace(format!("{space} has no indexed family"))),
    }
}

/// The functions checked for each space: every admissible `(j, alpha)` on the
/// indexed Grassmannians, and [`DEFAULT_PARAMETER_DRAWS`] seeded random
/// parameter matrices elsewhere.
pub fn default_functions(space: Space, cfg: &SampleConfig) -> Result<Vec<Eigenfunction>> {
    space.validate()?;
    let (m, n) = space.sizes();
    let cfg = cfg.derive(&format!("params:{space}"));
    let draws = 0..DEFAULT_PARAMETER_DRAWS;
    match space.kind() {
        SpaceKind::QuaternionicGrassmannian | SpaceKind::ComplexGrassmannian => {
            let size = if space.kind() == SpaceKind::ComplexGrassmannian { m + n } else { 2 * (m + n) };
            let mut out = Vec::new();
            for alpha in 1..=size {
                out.extend(grassmannian_family_members(space, alpha)?);
            }
            Ok(out)
        }
        SpaceKind::RealGrassmannian => {
            let blocks: Vec<std::ops::Range<usize>> = [(0..m), (m..m + n)].into_iter().filter(|r| r.len() >= 2).collect();
            if blocks.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "{space}: no diagonal block of size >= 2 carries an isotropic vector"
                )));
            }
            draws
                .map(|i| {
                    let range = blocks[i as usize % blocks.len()].clone();
                    real_grassmannian_psi(m, n, &random_rank1_isotropic(m + n, range, &cfg, i)?)
                })
                .collect()
        }
        SpaceKind::SuSo => draws
            .map(|i| trace_function(space, &random_symmetric_aa(n, &cfg, i)?, ParamTag::SymmetricAa, false, "phi_A"))
            .collect(),
        SpaceKind::SpU => draws
            .map(|i| trace_function(space, &random_symmetric_aa(2 * n, &cfg, i)?, ParamTag::SymmetricAa, false, "phi_A"))
            .collect(),
        SpaceKind::SoU => draws.map(|i| so_u_psi_from(n, &random_isotropic_skew(n, &cfg, i)?)).collect(),
        SpaceKind::SuSp => draws
            .map(|i| trace_function(space, &random_skew_ab(2 * n, &cfg, i)?, ParamTag::SkewAb, true, "phi_A"))
            .collect(),
    }
    .map(|mut v: Vec<Eigenfunction>| {
        if !space.kind().is_grassmannian() || space.kind() == SpaceKind::RealGrassmannian {
            for (i, f) in v.iter_mut().enumerate() {
                f.label = format!("{}#{i}", f.label);
                f.family = format!("{space}:{}", f.label);
            }
        }
        v
    })
}
