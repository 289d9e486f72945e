use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::canonical::canonical;
use crate::error::{Error, Result};
use crate::matrix::{quat_embed, CMatrix};

/// Vectors whose norm falls below this after projection are treated as null.
pub const NULL_VECTOR_THRESHOLD: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    SpecialOrthogonal,
    SpecialUnitary,
    Unitary,
    Symplectic,
}

impl GroupKind {
    pub fn symbol(self) -> &'static str {
        match self {
            GroupKind::SpecialOrthogonal => "SO",
            GroupKind::SpecialUnitary => "SU",
            GroupKind::Unitary => "U",
            GroupKind::Symplectic => "Sp",
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "so" => Ok(GroupKind::SpecialOrthogonal),
            "su" => Ok(GroupKind::SpecialUnitary),
            "u" => Ok(GroupKind::Unitary),
            "sp" => Ok(GroupKind::Symplectic),
            _ => Err(Error::UnsupportedGroup(s.to_string())),
        }
    }
}

/// A classical compact group in its standard complex matrix representation.
/// `Sp(n)` is realised as `2n x 2n` complex matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Group {
    pub kind: GroupKind,
    pub n: usize,
}

impl Group {
    pub fn new(kind: GroupKind, n: usize) -> Self {
        Self { kind, n }
    }

    pub fn so(n: usize) -> Self {
        Self::new(GroupKind::SpecialOrthogonal, n)
    }
    pub fn su(n: usize) -> Self {
        Self::new(GroupKind::SpecialUnitary, n)
    }
    pub fn u(n: usize) -> Self {
        Self::new(GroupKind::Unitary, n)
    }
    pub fn sp(n: usize) -> Self {
        Self::new(GroupKind::Symplectic, n)
    }

    pub fn matrix_size(&self) -> usize {
        match self.kind {
            GroupKind::Symplectic => 2 * self.n,
            _ => self.n,
        }
    }

    pub fn dimension(&self) -> usize {
        let n = self.n;
        match self.kind {
            GroupKind::SpecialOrthogonal => n * (n.saturating_sub(1)) / 2,
            GroupKind::SpecialUnitary => n * n - 1,
            GroupKind::Unitary => n * n,
            GroupKind::Symplectic => n * (2 * n + 1),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.symbol(), self.n)
    }
}

impl FromStr for Group {
    type Err = Error;
    /// Parses `SO(3)`, `sp(2)`, `SU3` and similar spellings.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_end_matches(')');
        let split = trimmed
            .find(|c: char| c.is_ascii_digit() || c == '(')
            .ok_or_else(|| Error::UnsupportedGroup(s.to_string()))?;
        let kind: GroupKind = trimmed[..split].parse()?;
        let n = trimmed[split..]
            .trim_start_matches('(')
            .parse::<usize>()
            .map_err(|_| Error::UnsupportedGroup(s.to_string()))?;
        Ok(Group::new(kind, n))
    }
}

/// An ordered g-orthonormal basis of a matrix Lie algebra, where
/// `g(Z, W) = Re tr(Z W^*)`.
#[derive(Clone, Debug)]
pub struct LieBasisSet {
    pub group: Group,
    pub elements: Vec<CMatrix>,
    pub labels: Vec<String>,
}

impl LieBasisSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CMatrix> {
        self.elements.iter()
    }

    /// Largest entry of `Gram - I`.
    pub fn orthonormality_residual(&self) -> f64 {
        gram_residual(&self.elements)
    }

    /// Largest violation of the algebra's defining linear equations.
    pub fn membership_residual(&self) -> f64 {
        self.elements
            .iter()
            .map(|z| algebra_residual(self.group, z))
            .fold(0.0, f64::max)
    }

    /// Orthogonal projection of `u` onto the span of the basis.
    pub fn project(&self, u: &CMatrix) -> CMatrix {
        project_onto(&self.elements, u)
    }
}

pub(crate) fn gram_residual(elements: &[CMatrix]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((a.inner(b) - target).abs());
        }
    }
    worst
}

pub(crate) fn project_onto(elements: &[CMatrix], u: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(u.rows(), u.cols());
    for b in elements {
        out = &out + &b.scale(u.inner(b).into());
    }
    out
}

/// Modified Gram-Schmidt (two passes) with null-vector dropping.
/// Returns the indices of the accepted inputs alongside the basis.
pub(crate) fn orthonormalize(candidates: &[CMatrix]) -> (Vec<CMatrix>, Vec<usize>) {
    let mut out: Vec<CMatrix> = Vec::new();
    let mut kept = Vec::new();
    for (idx, v) in candidates.iter().enumerate() {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &out {
                w = &w - &b.scale(w.inner(b).into());
            }
        }
        let norm = w.inner(&w).sqrt();
        if norm > NULL_VECTOR_THRESHOLD {
            out.push(w.scale((1.0 / norm).into()));
            kept.push(idx);
        }
    }
    (out, kept)
}

/// Residual of the defining linear conditions of the Lie algebra of `group`.
pub fn algebra_residual(group: Group, z: &CMatrix) -> f64 {
    let size = group.matrix_size();
    if z.shape() != (size, size) {
        return f64::INFINITY;
    }
    let skew_herm = (z + &z.adjoint()).norm();
    match group.kind {
        GroupKind::SpecialOrthogonal => {
            let imag = z.map(|x| Complex64::new(x.im, 0.0)).norm();
            skew_herm.max(imag)
        }
        GroupKind::SpecialUnitary => skew_herm.max(z.trace().norm()),
        GroupKind::Unitary => skew_herm,
        GroupKind::Symplectic => {
            let n = group.n;
            let block = |r0: usize, c0: usize| CMatrix::from_fn(n, n, |i, j| z[(r0 + i, c0 + j)]);
            let (a, b) = (block(0, 0), block(0, n));
            let shape = quat_embed(&a, &b).map(|q| q.distance(z)).unwrap_or(f64::INFINITY);
            let a_skew = (&a + &a.adjoint()).norm();
            let b_sym = (&b.transpose() - &b).norm();
            shape.max(a_skew).max(b_sym)
        }
    }
}

/// Orthonormal basis of the Lie algebra of `group`, in a fixed order:
/// `Y` families, then `X` families, then diagonal elements; pairs `(r, s)`
/// lexicographic, then `t`.
pub fn algebra_basis(group: Group) -> Result<LieBasisSet> {
    if group.n == 0 {
        return Err(Error::InvalidSize(format!("{group}: n must be at least 1")));
    }
    let n = group.n;
    let c = canonical(n);
    let i = Complex64::i();
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    let mut push = |m: CMatrix, label: String| {
        elements.push(m);
        labels.push(label);
    };

    match group.kind {
        GroupKind::SpecialOrthogonal => {
            for (r, s) in c.pairs() {
                push(c.y(r, s), format!("Y{r},{s}"));
            }
        }
        GroupKind::Unitary | GroupKind::SpecialUnitary => {
            for (r, s) in c.pairs() {
                push(c.y(r, s), format!("Y{r},{s}"));
            }
            for (r, s) in c.pairs() {
                push(c.x(r, s).scale(i), format!("iX{r},{s}"));
            }
            if group.kind == GroupKind::Unitary {
                for t in 1..=n {
                    push(c.d(t).scale(i), format!("iD{t}"));
                }
            } else {
                let raw: Vec<CMatrix> = (1..n)
                    .map(|t| (&c.d(t) - &c.d(t + 1)).scale(i))
                    .collect();
                let (diag, _) = orthonormalize(&raw);
                for (t, h) in diag.into_iter().enumerate() {
                    push(h, format!("H{}", t + 1));
                }
            }
        }
        GroupKind::Symplectic => {
            let half = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            let zero = CMatrix::zeros(n, n);
            let blk = |a: &CMatrix, b: &CMatrix, cc: &CMatrix, d: &CMatrix| {
                CMatrix::block2(a, b, cc, d).expect("square blocks").scale(half)
            };
            for (r, s) in c.pairs() {
                let y = c.y(r, s);
                push(blk(&y, &zero, &zero, &y), format!("Ya{r},{s}"));
            }
            for (r, s) in c.pairs() {
                let ix = c.x(r, s).scale(i);
                push(blk(&ix, &zero, &zero, &(-&ix)), format!("Xa{r},{s}"));
            }
            for (r, s) in c.pairs() {
                let ix = c.x(r, s).scale(i);
                push(blk(&zero, &ix, &ix, &zero), format!("Xb{r},{s}"));
            }
            for (r, s) in c.pairs() {
                let x = c.x(r, s);
                push(blk(&zero, &x, &(-&x), &zero), format!("Xc{r},{s}"));
            }
            for t in 1..=n {
                let id = c.d(t).scale(i);
                push(blk(&id, &zero, &zero, &(-&id)), format!("Da{t}"));
            }
            for t in 1..=n {
                let id = c.d(t).scale(i);
                push(blk(&zero, &id, &id, &zero), format!("Db{t}"));
            }
            for t in 1..=n {
                let d = c.d(t);
                push(blk(&zero, &d, &(-&d), &zero), format!("Dc{t}"));
            }
        }
    }

    Ok(LieBasisSet {
        group,
        elements,
        labels,
    })
}

/// `sum Z^2` over the given matrices.
pub fn square_sum(elements: &[CMatrix]) -> Result<CMatrix> {
    let Some(first) = elements.first() else {
        return Err(Error::InvalidSize("square_sum of an empty set".into()));
    };
    let mut acc = CMatrix::zeros(first.rows(), first.cols());
    for z in elements {
        acc = acc.try_add(&z.try_mul(z)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lemma_check(n: usize) {
        let c = canonical(n);
        let ys: Vec<_> = c.pairs().map(|(r, s)| c.y(r, s)).collect();
        let xs: Vec<_> = c.pairs().map(|(r, s)| c.x(r, s)).collect();
        let ds: Vec<_> = (1..=n).map(|t| c.d(t)).collect();
        let half = (n as f64 - 1.0) / 2.0;
        let id = CMatrix::identity(n);
        assert!(square_sum(&ys).unwrap().distance(&id.scale((-half).into())) <= 1e-15);
        assert!(square_sum(&xs).unwrap().distance(&id.scale(half.into())) <= 1e-15);
        assert!(square_sum(&ds).unwrap().distance(&id) <= 1e-15);
    }

    #[test]
    fn square_sums_n3() {
        lemma_check(3);
    }

    #[test]
    fn so3_basis() {
        let b = algebra_basis(Group::so(3)).unwrap();
        assert_eq!(b.labels, vec!["Y1,2", "Y1,3", "Y2,3"]);
        let c = canonical(3);
        assert_eq!(b.elements, vec![c.y(1, 2), c.y(1, 3), c.y(2, 3)]);
    }

    #[test]
    fn sp2_basis_has_ten_elements() {
        let b = algebra_basis(Group::sp(2)).unwrap();
        assert_eq!(b.len(), 10);
        assert_eq!(
            b.labels,
            vec!["Ya1,2", "Xa1,2", "Xb1,2", "Xc1,2", "Da1", "Da2", "Db1", "Db2", "Dc1", "Dc2"]
        );
        assert!(b.orthonormality_residual() < 1e-14);
        assert!(b.membership_residual() < 1e-14);
    }

    #[test]
    fn su2_basis_is_traceless_and_orthonormal() {
        let b = algebra_basis(Group::su(2)).unwrap();
        assert_eq!(b.len(), 3);
        for z in b.iter() {
            assert!(z.trace().norm() < 1e-15);
        }
        assert!(b.orthonormality_residual() < 1e-14);
    }

    #[test]
    fn dimensions_match_group() {
        for n in 1..=5 {
            for g in [Group::so(n), Group::su(n), Group::u(n), Group::sp(n)] {
                let b = algebra_basis(g).unwrap();
                assert_eq!(b.len(), g.dimension(), "{g}");
                assert!(b.orthonormality_residual() < 1e-14, "{g}");
                assert!(b.membership_residual() < 1e-14, "{g}");
            }
        }
    }

    #[test]
    fn symplectic_square_sum() {
        for n in 1..=4 {
            let b = algebra_basis(Group::sp(n)).unwrap();
            let expected = CMatrix::identity(2 * n).scale((-(2.0 * n as f64 + 1.0) / 2.0).into());
            assert!(square_sum(&b.elements).unwrap().distance(&expected) < 1e-14);
        }
    }

    #[test]
    fn group_parsing() {
        assert_eq!("SO(3)".parse::<Group>().unwrap(), Group::so(3));
        assert_eq!("sp2".parse::<Group>().unwrap(), Group::sp(2));
        assert!(matches!("G2".parse::<Group>(), Err(Error::UnsupportedGroup(_))));
        assert!(algebra_basis(Group::so(0)).is_err());
    }
}
