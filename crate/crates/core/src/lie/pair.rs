use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::basis::{algebra_basis, orthonormalize, project_onto, Group, LieBasisSet};
use crate::cartan::Involution;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// The seven families of compact symmetric spaces handled here, without sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceKind {
    SuSo,
    SpU,
    SoU,
    SuSp,
    RealGrassmannian,
    ComplexGrassmannian,
    QuaternionicGrassmannian,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 7] = [
        SpaceKind::SuSo,
        SpaceKind::SpU,
        SpaceKind::SoU,
        SpaceKind::SuSp,
        SpaceKind::RealGrassmannian,
        SpaceKind::ComplexGrassmannian,
        SpaceKind::QuaternionicGrassmannian,
    ];

    /// Command-line identifier.
    pub fn slug(self) -> &'static str {
        match self {
            SpaceKind::SuSo => "su-so",
            SpaceKind::SpU => "sp-u",
            SpaceKind::SoU => "so-u",
            SpaceKind::SuSp => "su-sp",
            SpaceKind::RealGrassmannian => "so-grassmannian",
            SpaceKind::ComplexGrassmannian => "u-grassmannian",
            SpaceKind::QuaternionicGrassmannian => "sp-grassmannian",
        }
    }

    /// Row number in the standard table of eigenfamilies on classical spaces.
    pub fn table_row(self) -> u8 {
        match self {
            SpaceKind::SuSo => 4,
            SpaceKind::SpU => 5,
            SpaceKind::SoU => 6,
            SpaceKind::SuSp => 7,
            SpaceKind::RealGrassmannian => 8,
            SpaceKind::ComplexGrassmannian => 9,
            SpaceKind::QuaternionicGrassmannian => 10,
        }
    }

    /// Whether the space is parametrised by `(m, n)` rather than `n` alone.
    pub fn is_grassmannian(self) -> bool {
        matches!(
            self,
            SpaceKind::RealGrassmannian
                | SpaceKind::ComplexGrassmannian
                | SpaceKind::QuaternionicGrassmannian
        )
    }

    /// Symbolic name, e.g. `SU(n)/SO(n)`.
    pub fn symbolic_name(self) -> &'static str {
        match self {
            SpaceKind::SuSo => "SU(n)/SO(n)",
            SpaceKind::SpU => "Sp(n)/U(n)",
            SpaceKind::SoU => "SO(2n)/U(n)",
            SpaceKind::SuSp => "SU(2n)/Sp(n)",
            SpaceKind::RealGrassmannian => "SO(m+n)/SO(m)xSO(n)",
            SpaceKind::ComplexGrassmannian => "U(m+n)/U(m)xU(n)",
            SpaceKind::QuaternionicGrassmannian => "Sp(m+n)/Sp(m)xSp(n)",
        }
    }

    /// Symbolic eigenvalue formulas `(lambda, mu)`.
    pub fn symbolic_eigenvalues(self) -> (&'static str, &'static str) {
        match self {
            SpaceKind::SuSo => ("-2(n^2+n-2)/n", "-4(n-1)/n"),
            SpaceKind::SpU => ("-2(n+1)", "-2"),
            SpaceKind::SoU => ("-2(n-1)", "-1"),
            SpaceKind::SuSp => ("-2(2n^2-n-1)/n", "-2(n-1)/n"),
            SpaceKind::RealGrassmannian => ("-(m+n)", "-2"),
            SpaceKind::ComplexGrassmannian => ("-2(m+n)", "-2"),
            SpaceKind::QuaternionicGrassmannian => ("-2(m+n)", "-1"),
        }
    }

    pub fn with_sizes(self, m: usize, n: usize) -> Space {
        match self {
            SpaceKind::SuSo => Space::SuSo { n },
            SpaceKind::SpU => Space::SpU { n },
            SpaceKind::SoU => Space::SoU { n },
            SpaceKind::SuSp => Space::SuSp { n },
            SpaceKind::RealGrassmannian => Space::RealGrassmannian { m, n },
            SpaceKind::ComplexGrassmannian => Space::ComplexGrassmannian { m, n },
            SpaceKind::QuaternionicGrassmannian => Space::QuaternionicGrassmannian { m, n },
        }
    }
}

impl FromStr for SpaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.slug() == s)
            .ok_or_else(|| Error::UnsupportedSpace(s.to_string()))
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// A compact symmetric space `G/K` with concrete sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    SuSo { n: usize },
    SpU { n: usize },
    SoU { n: usize },
    SuSp { n: usize },
    RealGrassmannian { m: usize, n: usize },
    ComplexGrassmannian { m: usize, n: usize },
    QuaternionicGrassmannian { m: usize, n: usize },
}

impl Space {
    pub fn kind(&self) -> SpaceKind {
        match self {
            Space::SuSo { .. } => SpaceKind::SuSo,
            Space::SpU { .. } => SpaceKind::SpU,
            Space::SoU { .. } => SpaceKind::SoU,
            Space::SuSp { .. } => SpaceKind::SuSp,
            Space::RealGrassmannian { .. } => SpaceKind::RealGrassmannian,
            Space::ComplexGrassmannian { .. } => SpaceKind::ComplexGrassmannian,
            Space::QuaternionicGrassmannian { .. } => SpaceKind::QuaternionicGrassmannian,
        }
    }

    /// `(m, n)`; `m` is zero for spaces with a single size parameter.
    pub fn sizes(&self) -> (usize, usize) {
        match *self {
            Space::SuSo { n } | Space::SpU { n } | Space::SoU { n } | Space::SuSp { n } => (0, n),
            Space::RealGrassmannian { m, n }
            | Space::ComplexGrassmannian { m, n }
            | Space::QuaternionicGrassmannian { m, n } => (m, n),
        }
    }

    pub fn group(&self) -> Group {
        match *self {
            Space::SuSo { n } => Group::su(n),
            Space::SpU { n } => Group::sp(n),
            Space::SoU { n } => Group::so(2 * n),
            Space::SuSp { n } => Group::su(2 * n),
            Space::RealGrassmannian { m, n } => Group::so(m + n),
            Space::ComplexGrassmannian { m, n } => Group::u(m + n),
            Space::QuaternionicGrassmannian { m, n } => Group::sp(m + n),
        }
    }

    /// Dimension of the isotropy subalgebra.
    pub fn k_dimension(&self) -> usize {
        match *self {
            Space::SuSo { n } => Group::so(n).dimension(),
            Space::SpU { n } | Space::SoU { n } => n * n,
            Space::SuSp { n } => Group::sp(n).dimension(),
            Space::RealGrassmannian { m, n } => Group::so(m).dimension() + Group::so(n).dimension(),
            Space::ComplexGrassmannian { m, n } => m * m + n * n,
            Space::QuaternionicGrassmannian { m, n } => {
                Group::sp(m).dimension() + Group::sp(n).dimension()
            }
        }
    }

    /// Dimension of `G/K`.
    pub fn dimension(&self) -> usize {
        self.group().dimension() - self.k_dimension()
    }

    /// Claimed eigenvalues `(lambda, mu)` for the linear eigenfunctions on this space.
    pub fn claimed_eigenvalues(&self) -> (f64, f64) {
        let (m, n) = self.sizes();
        let (mf, nf) = (m as f64, n as f64);
        match self.kind() {
            SpaceKind::SuSo => (-2.0 * (nf * nf + nf - 2.0) / nf, -4.0 * (nf - 1.0) / nf),
            SpaceKind::SpU => (-2.0 * (nf + 1.0), -2.0),
            SpaceKind::SoU => (-2.0 * (nf - 1.0), -1.0),
            SpaceKind::SuSp => (-2.0 * (2.0 * nf * nf - nf - 1.0) / nf, -2.0 * (nf - 1.0) / nf),
            SpaceKind::RealGrassmannian => (-(mf + nf), -2.0),
            SpaceKind::ComplexGrassmannian => (-2.0 * (mf + nf), -2.0),
            SpaceKind::QuaternionicGrassmannian => (-2.0 * (mf + nf), -1.0),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (m, n) = self.sizes();
        if n == 0 || (self.kind().is_grassmannian() && m == 0) {
            return Err(Error::InvalidSize(format!("{self}: sizes must be positive")));
        }
        Ok(())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Space::SuSo { n } => write!(f, "SU({n})/SO({n})"),
            Space::SpU { n } => write!(f, "Sp({n})/U({n})"),
            Space::SoU { n } => write!(f, "SO({})/U({n})", 2 * n),
            Space::SuSp { n } => write!(f, "SU({})/Sp({n})", 2 * n),
            Space::RealGrassmannian { m, n } => write!(f, "SO({})/SO({m})xSO({n})", m + n),
            Space::ComplexGrassmannian { m, n } => write!(f, "U({})/U({m})xU({n})", m + n),
            Space::QuaternionicGrassmannian { m, n } => {
                write!(f, "Sp({})/Sp({m})xSp({n})", m + n)
            }
        }
    }
}

/// A symmetric triple `(G, K, sigma)` with the `k + p` split of the algebra.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    pub space: Space,
    pub involution: Involution,
    pub algebra: LieBasisSet,
    pub k_basis: Vec<CMatrix>,
    pub p_basis: Vec<CMatrix>,
}

/// Split the ambient algebra basis into `+1` and `-1` eigenspaces of `d sigma`.
///
/// Each ambient element is projected by `(Z +/- dsigma(Z)) / 2` and the results
/// are re-orthonormalised in order, dropping null vectors. For the
/// Grassmannians the canonical elements are already eigenvectors, so this
/// reproduces them unchanged.
pub fn cartan_split(space: Space) -> Result<SymmetricPair> {
    space.validate()?;
    let algebra = algebra_basis(space.group())?;
    let involution = Involution::for_space(space);
    let half = num_complex::Complex64::new(0.5, 0.0);
    let mut k_raw = Vec::with_capacity(algebra.len());
    let mut p_raw = Vec::with_capacity(algebra.len());
    for z in algebra.iter() {
        let s = involution.apply(z);
        k_raw.push((z + &s).scale(half));
        p_raw.push((z - &s).scale(half));
    }
    let (k_basis, _) = orthonormalize(&k_raw);
    let (p_basis, _) = orthonormalize(&p_raw);

    let pair = SymmetricPair {
        space,
        involution,
        algebra,
        k_basis,
        p_basis,
    };
    if pair.k_basis.len() != space.k_dimension() || pair.p_basis.len() != space.dimension() {
        return Err(Error::InvalidSize(format!(
            "{space}: involution splits into dim k = {}, dim p = {} (expected {}, {})",
            pair.k_basis.len(),
            pair.p_basis.len(),
            space.k_dimension(),
            space.dimension()
        )));
    }
    Ok(pair)
}

impl SymmetricPair {
    pub fn group(&self) -> Group {
        self.space.group()
    }

    pub fn matrix_size(&self) -> usize {
        self.group().matrix_size()
    }

    /// Largest `|dsigma(Z) -/+ Z|` over both halves of the split.
    pub fn eigenspace_residual(&self) -> f64 {
        let k = self
            .k_basis
            .iter()
            .map(|z| self.involution.apply(z).distance(z));
        let p = self
            .p_basis
            .iter()
            .map(|z| self.involution.apply(z).distance(&(-z)));
        k.chain(p).fold(0.0, f64::max)
    }

    /// Largest component of a bracket that leaves its expected half:
    /// `[k,k]` and `[p,p]` must lie in `k`, `[k,p]` in `p`.
    pub fn bracket_residual(&self) -> f64 {
        let bracket = |a: &CMatrix, b: &CMatrix| &(a * b) - &(b * a);
        let outside = |v: &CMatrix, basis: &[CMatrix]| (v - &project_onto(basis, v)).norm();
        let mut worst: f64 = 0.0;
        for (i, a) in self.k_basis.iter().enumerate() {
            for b in &self.k_basis[i + 1..] {
                worst = worst.max(outside(&bracket(a, b), &self.k_basis));
            }
            for b in &self.p_basis {
                worst = worst.max(outside(&bracket(a, b), &self.p_basis));
            }
        }
        for (i, a) in self.p_basis.iter().enumerate() {
            for b in &self.p_basis[i + 1..] {
                worst = worst.max(outside(&bracket(a, b), &self.k_basis));
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::canonical;

    #[test]
    fn quaternionic_grassmannian_p_dimension() {
        let pair = cartan_split(Space::QuaternionicGrassmannian { m: 1, n: 1 }).unwrap();
        assert_eq!(pair.p_basis.len(), 4);
        assert_eq!(pair.k_basis.len(), 6);
    }

    #[test]
    fn real_grassmannian_p_basis_is_y13_y23() {
        let pair = cartan_split(Space::RealGrassmannian { m: 2, n: 1 }).unwrap();
        let c = canonical(3);
        assert_eq!(pair.p_basis, vec![c.y(1, 3), c.y(2, 3)]);
        assert_eq!(pair.k_basis, vec![c.y(1, 2)]);
    }

    #[test]
    fn involution_twice_is_identity_on_bases() {
        for kind in SpaceKind::ALL {
            let pair = cartan_split(kind.with_sizes(1, 2)).unwrap();
            for z in pair.algebra.iter() {
                let back = pair.involution.apply(&pair.involution.apply(z));
                assert!(back.distance(z) < 1e-14, "{}", pair.space);
            }
        }
    }

    #[test]
    fn splits_have_expected_dimensions() {
        let spaces = [
            Space::SuSo { n: 3 },
            Space::SpU { n: 2 },
            Space::SoU { n: 3 },
            Space::SuSp { n: 2 },
            Space::RealGrassmannian { m: 2, n: 3 },
            Space::ComplexGrassmannian { m: 1, n: 2 },
            Space::QuaternionicGrassmannian { m: 2, n: 1 },
        ];
        for space in spaces {
            let pair = cartan_split(space).unwrap();
            assert!(crate::lie::basis::gram_residual(&pair.k_basis) < 1e-14);
            assert!(crate::lie::basis::gram_residual(&pair.p_basis) < 1e-14);
            assert!(pair.eigenspace_residual() < 1e-14, "{space}");
            assert!(pair.bracket_residual() < 1e-12, "{space}");
        }
        assert_eq!(cartan_split(Space::ComplexGrassmannian { m: 2, n: 3 }).unwrap().p_basis.len(), 12);
        assert_eq!(cartan_split(Space::RealGrassmannian { m: 2, n: 3 }).unwrap().p_basis.len(), 6);
    }

    #[test]
    fn parsing_and_rejection() {
        assert_eq!("sp-grassmannian".parse::<SpaceKind>().unwrap(), SpaceKind::QuaternionicGrassmannian);
        assert!(matches!("e8".parse::<SpaceKind>(), Err(Error::UnsupportedSpace(_))));
        assert!(cartan_split(Space::RealGrassmannian { m: 0, n: 2 }).is_err());
    }
}
