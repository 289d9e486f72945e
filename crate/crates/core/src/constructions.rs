//! Eigenfamilies and the two ways of building new ones: homogeneous
//! polynomials in the members of a family, and products of families on
//! product manifolds.
//!
//! If `F` is a `(lambda, mu)`-eigenfamily then every homogeneous polynomial of
//! degree `d` in its members is an eigenfunction with
//! `(d lambda + d(d-1) mu, d^2 mu)`, and the products `phi_1(p_1) phi_2(p_2)`
//! of members of families on `M_1` and `M_2` form a
//! `(lambda_1 + lambda_2, mu_1 + mu_2)`-eigenfamily on `M_1 x M_2`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::Eigenfunction;
use crate::error::{Error, Result};
use crate::lie::{algebra_basis, Group, SymmetricPair};
use crate::matrix::{CMatrix, JMatrix, Jet2};
use crate::ops::{directional_jets, pair_sum, relative_residual, ScalarField};
use crate::sampling::{random_complex_vector, random_point, SampleConfig};
use crate::stats::{RatioFit, ResidualStats};

/// Largest number of members kept by [`polynomial_family`].
pub const MAX_FAMILY_MEMBERS: usize = 200;

/// Relative tolerance of the homogeneity probe.
pub const HOMOGENEITY_TOLERANCE: f64 = 1e-12;

pub type Field = Arc<dyn ScalarField>;

/// Where a family lives: an orthonormal frame, left-trivialised, and a way to
/// draw points. Products are block-diagonal: the point `(p_1, p_2)` is
/// `diag(p_1, p_2)` and the frame is the union of the two embedded frames.
#[derive(Clone, Debug)]
pub struct Domain {
    pub name: String,
    pub size: usize,
    pub basis: Vec<CMatrix>,
    sampler: Sampler,
}

#[derive(Clone, Debug)]
enum Sampler {
    Group(Group),
    Product(Box<Domain>, Box<Domain>),
}

impl Domain {
    /// `G/K` through the horizontal (`p`) frame on `G`.
    pub fn quotient(pair: &SymmetricPair) -> Self {
        Self {
            name: pair.space.to_string(),
            size: pair.matrix_size(),
            basis: pair.p_basis.clone(),
            sampler: Sampler::Group(pair.group()),
        }
    }

    /// A group with its full algebra frame.
    pub fn group(group: Group) -> Result<Self> {
        Ok(Self {
            name: group.to_string(),
            size: group.matrix_size(),
            basis: algebra_basis(group)?.elements,
            sampler: Sampler::Group(group),
        })
    }

    pub fn product(a: &Domain, b: &Domain) -> Self {
        let za = CMatrix::zeros(a.size, a.size);
        let zb = CMatrix::zeros(b.size, b.size);
        let basis = a
            .basis
            .iter()
            .map(|x| CMatrix::block_diagonal(x, &zb))
            .chain(b.basis.iter().map(|y| CMatrix::block_diagonal(&za, y)))
            .collect();
        Self {
            name: format!("{} x {}", a.name, b.name),
            size: a.size + b.size,
            basis,
            sampler: Sampler::Product(Box::new(a.clone()), Box::new(b.clone())),
        }
    }

    /// Dimension of the manifold.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn sample(&self, cfg: &SampleConfig, index: u64) -> Result<CMatrix> {
        match &self.sampler {
            Sampler::Group(g) => random_point(*g, cfg, index),
            Sampler::Product(a, b) => Ok(CMatrix::block_diagonal(
                &a.sample(&cfg.derive("left"), index)?,
                &b.sample(&cfg.derive("right"), index)?,
            )),
        }
    }
}

#[derive(Clone)]
pub struct Member {
    pub label: String,
    pub field: Field,
}

impl fmt::Debug for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Base,
    Polynomial { degree: u32 },
    Product,
}

/// Functions on one domain that share `(lambda, mu)`.
#[derive(Clone, Debug)]
pub struct EigenFamily {
    pub name: String,
    pub domain: Domain,
    pub members: Vec<Member>,
    pub lambda: f64,
    pub mu: f64,
    pub provenance: Provenance,
}

/// Outcome of checking a family at sample points.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FamilyCheck {
    /// `|tau(phi) - lambda phi| / max(1, |lambda phi|)` over members and samples.
    pub tau: ResidualStats,
    /// `|kappa(phi, psi) - mu phi psi| / max(1, |mu phi psi|)` over pairs and samples.
    pub kappa: ResidualStats,
    pub lambda_fit: Option<f64>,
    pub mu_fit: Option<f64>,
    pub samples: usize,
}

impl EigenFamily {
    pub fn new(
        name: impl Into<String>,
        domain: Domain,
        members: Vec<Member>,
        lambda: f64,
        mu: f64,
        provenance: Provenance,
    ) -> Result<Self> {
        let name = name.into();
        if members.is_empty() {
            return Err(Error::InvalidFamily(format!("{name}: no members")));
        }
        Ok(Self {
            name,
            domain,
            members,
            lambda,
            mu,
            provenance,
        })
    }

    /// A family of catalog functions on their quotient. All functions must
    /// live on the pair's space and claim the same eigenvalues.
    pub fn from_eigenfunctions(pair: &SymmetricPair, functions: Vec<Eigenfunction>) -> Result<Self> {
        let first = functions
            .first()
            .ok_or_else(|| Error::InvalidFamily("no functions".into()))?;
        let (lambda, mu, name) = (first.lambda, first.mu, first.family.clone());
        if let Some(f) = functions
            .iter()
            .find(|f| f.space != pair.space || f.lambda != lambda || f.mu != mu)
        {
            return Err(Error::InvalidFamily(format!(
                "{} on {} does not match {} with ({lambda}, {mu})",
                f.label, f.space, pair.space
            )));
        }
        let members = functions
            .into_iter()
            .map(|f| Member {
                label: f.label.clone(),
                field: Arc::new(f) as Field,
            })
            .collect();
        Self::new(name, Domain::quotient(pair), members, lambda, mu, Provenance::Base)
    }

    /// `{1}` with `(0, 0)`.
    pub fn constant(domain: Domain) -> Self {
        let one = crate::ops::Constant(Complex64::new(1.0, 0.0));
        Self {
            name: "constant".into(),
            domain,
            members: vec![Member {
                label: "1".into(),
                field: Arc::new(one),
            }],
            lambda: 0.0,
            mu: 0.0,
            provenance: Provenance::Base,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Evaluate `tau` on every member and `kappa` on every unordered pair
    /// (including each member with itself) at `cfg.count` random points.
    pub fn check(&self, cfg: &SampleConfig) -> Result<FamilyCheck> {
        let per_sample: Vec<Result<PointCheck>> = (0..cfg.count as u64)
            .into_par_iter()
            .map(|i| self.point_check(&self.domain.sample(cfg, i)?))
            .collect();
        let mut out = FamilyCheck::default();
        let (mut lf, mut mf) = (RatioFit::default(), RatioFit::default());
        for r in per_sample {
            let c = r?;
            out.tau.merge(&c.tau);
            out.kappa.merge(&c.kappa);
            lf.merge(&c.lambda_fit);
            mf.merge(&c.mu_fit);
            out.samples += 1;
        }
        out.lambda_fit = lf.value().map(|z| z.re);
        out.mu_fit = mf.value().map(|z| z.re);
        Ok(out)
    }

    /// Residuals and fitted eigenvalues at a single point.
    pub fn check_at(&self, p: &CMatrix) -> Result<FamilyCheck> {
        let c = self.point_check(p)?;
        Ok(FamilyCheck {
            tau: c.tau,
            kappa: c.kappa,
            lambda_fit: c.lambda_fit.value().map(|z| z.re),
            mu_fit: c.mu_fit.value().map(|z| z.re),
            samples: 1,
        })
    }

    fn point_check(&self, p: &CMatrix) -> Result<PointCheck> {
        let eval = self.evaluate_at(p)?;
        let mut out = PointCheck::default();
        for k in 0..eval.values.len() {
            let (v, tau) = (eval.values[k], eval.tau(k));
            out.tau.push(relative_residual(tau, v * self.lambda));
            out.lambda_fit.push(v, tau);
            for l in k..eval.values.len() {
                let prod = v * eval.values[l];
                let kappa = eval.kappa(k, l);
                out.kappa.push(relative_residual(kappa, prod * self.mu));
                out.mu_fit.push(prod, kappa);
            }
        }
        Ok(out)
    }

    /// Values and directional jets of every member at `p`.
    pub fn evaluate_at(&self, p: &CMatrix) -> Result<PointEvaluation> {
        let jets = self
            .members
            .iter()
            .map(|m| directional_jets(m.field.as_ref(), p, &self.domain.basis))
            .collect::<Result<Vec<_>>>()?;
        let values = self.members.iter().map(|m| m.field.eval(p)).collect();
        Ok(PointEvaluation { values, jets })
    }
}

#[derive(Default)]
struct PointCheck {
    tau: ResidualStats,
    kappa: ResidualStats,
    lambda_fit: RatioFit,
    mu_fit: RatioFit,
}

/// Member values and directional jets at one point.
#[derive(Clone, Debug)]
pub struct PointEvaluation {
    pub values: Vec<Complex64>,
    pub jets: Vec<Vec<Jet2>>,
}

impl PointEvaluation {
    pub fn tau(&self, k: usize) -> Complex64 {
        self.jets[k].iter().map(|j| j.d2).sum()
    }

    pub fn kappa(&self, k: usize, l: usize) -> Complex64 {
        pair_sum(&self.jets[k], &self.jets[l])
    }
}

/// A polynomial in the members of a family, evaluated on jets.
type JetFn = Arc<dyn Fn(&[Jet2]) -> Jet2 + Send + Sync>;

#[derive(Clone)]
pub struct Polynomial {
    pub degree: u32,
    pub label: String,
    f: JetFn,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {})", self.label, self.degree)
    }
}

impl Polynomial {
    /// A polynomial claimed homogeneous of `degree`; checked by
    /// [`Polynomial::check_homogeneous`] before use.
    pub fn new(
        degree: u32,
        label: impl Into<String>,
        f: impl Fn(&[Jet2]) -> Jet2 + Send + Sync + 'static,
    ) -> Self {
        Self {
            degree,
            label: label.into(),
            f: Arc::new(f),
        }
    }

    /// `prod_k x_k^{e_k}`.
    pub fn monomial(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        let label = exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| if e == 1 { format!("x{k}") } else { format!("x{k}^{e}") })
            .collect::<Vec<_>>()
            .join("*");
        Self::new(degree, label, move |x: &[Jet2]| {
            let mut acc = Jet2::constant(Complex64::new(1.0, 0.0));
            for (v, &e) in x.iter().zip(&exponents) {
                for _ in 0..e {
                    acc *= *v;
                }
            }
            acc
        })
    }

    pub fn eval(&self, x: &[Jet2]) -> Jet2 {
        (self.f)(x)
    }

    /// Probe `P(c x) = c^d P(x)` at random complex `x` and `c`.
    pub fn check_homogeneous(&self, arity: usize, cfg: &SampleConfig) -> Result<()> {
        let cfg = cfg.derive("homogeneity");
        for i in 0..3u64 {
            let x: Vec<Jet2> = random_complex_vector(&cfg, i, arity).into_iter().map(Jet2::constant).collect();
            let c = random_complex_vector(&cfg.derive("scale"), i, 1)[0] + Complex64::new(0.5, 0.0);
            let scaled: Vec<Jet2> = x.iter().map(|v| v.scale(c)).collect();
            let lhs = self.eval(&scaled).v;
            let rhs = self.eval(&x).v * c.powu(self.degree);
            if (lhs - rhs).norm() > HOMOGENEITY_TOLERANCE * rhs.norm().max(1.0) {
                return Err(Error::NotHomogeneous { degree: self.degree });
            }
        }
        Ok(())
    }
}

/// Exponent vectors of all monomials of `degree` in `arity` variables, in
/// lexicographic order, at most `limit` of them.
pub fn monomials(arity: usize, degree: u32, limit: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, arity: usize, left: u32, limit: usize, out: &mut Vec<Vec<u32>>) {
        if out.len() >= limit {
            return;
        }
        if prefix.len() + 1 == arity {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(prefix, arity, left - e, limit, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if arity > 0 {
        go(&mut Vec::new(), arity, degree, limit, &mut out);
    }
    out
}

struct PolynomialField {
    inputs: Vec<Field>,
    poly: Polynomial,
}

impl ScalarField for PolynomialField {
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        let x: Vec<Jet2> = self.inputs.iter().map(|f| f.eval_jet(q)).collect();
        self.poly.eval(&x)
    }
}

/// Degree-`d` polynomials in the members of `family`, with
/// `(d lambda + d(d-1) mu, d^2 mu)`. Without explicit generators every
/// monomial of degree `d` is used, capped at [`MAX_FAMILY_MEMBERS`].
pub fn polynomial_family(family: &EigenFamily, d: u32, generators: Option<Vec<Polynomial>>) -> Result<EigenFamily> {
    if d == 0 {
        return Err(Error::InvalidFamily("polynomial degree must be positive".into()));
    }
    let arity = family.len();
    let generators = match generators {
        Some(g) => g,
        None => monomials(arity, d, MAX_FAMILY_MEMBERS)
            .into_iter()
            .map(Polynomial::monomial)
            .collect(),
    };
    let cfg = SampleConfig::new(u64::from(d), 3);
    for g in &generators {
        if g.degree != d {
            return Err(Error::NotHomogeneous { degree: d });
        }
        g.check_homogeneous(arity, &cfg)?;
    }
    let inputs: Vec<Field> = family.members.iter().map(|m| m.field.clone()).collect();
    let members = generators
        .into_iter()
        .take(MAX_FAMILY_MEMBERS)
        .map(|poly| Member {
            label: poly.label.clone(),
            field: Arc::new(PolynomialField {
                inputs: inputs.clone(),
                poly,
            }) as Field,
        })
        .collect();
    let df = f64::from(d);
    EigenFamily::new(
        format!("{} ^{d}", family.name),
        family.domain.clone(),
        members,
        df * family.lambda + df * (df - 1.0) * family.mu,
        df * df * family.mu,
        Provenance::Polynomial { degree: d },
    )
}

struct ProductField {
    left: Field,
    right: Field,
    split: usize,
}

impl ScalarField for ProductField {
    fn eval_jet(&self, q: &JMatrix) -> Jet2 {
        let rest = q.rows() - self.split;
        let a = q.submatrix(0, 0, self.split, self.split);
        let b = q.submatrix(self.split, self.split, rest, rest);
        self.left.eval_jet(&a) * self.right.eval_jet(&b)
    }
}

/// `{(p_1, p_2) -> phi_1(p_1) phi_2(p_2)}` with `(lambda_1 + lambda_2, mu_1 + mu_2)`.
pub fn product_family(first: &EigenFamily, second: &EigenFamily) -> EigenFamily {
    let split = first.domain.size;
    let mut members = Vec::with_capacity(first.len() * second.len());
    for a in &first.members {
        for b in &second.members {
            members.push(Member {
                label: format!("{}*{}", a.label, b.label),
                field: Arc::new(ProductField {
                    left: a.field.clone(),
                    right: b.field.clone(),
                    split,
                }),
            });
        }
    }
    EigenFamily {
        name: format!("{} x {}", first.name, second.name),
        domain: Domain::product(&first.domain, &second.domain),
        members,
        lambda: first.lambda + second.lambda,
        mu: first.mu + second.mu,
        provenance: Provenance::Product,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{grassmannian_family_members, quat_grassmannian_psi};
    use crate::lie::{cartan_split, Space};

    fn quaternionic_family(m: usize, n: usize, alpha: usize) -> EigenFamily {
        let space = Space::QuaternionicGrassmannian { m, n };
        let pair = cartan_split(space).unwrap();
        EigenFamily::from_eigenfunctions(&pair, grassmannian_family_members(space, alpha).unwrap()).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(2, 2, 10), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(4, 3, 1000).len(), 20);
        assert_eq!(monomials(4, 3, 7).len(), 7);
        assert!(monomials(0, 2, 10).is_empty());
    }

    #[test]
    fn degree_one_keeps_eigenvalues() {
        let f = quaternionic_family(1, 1, 2);
        let p = polynomial_family(&f, 1, None).unwrap();
        assert_eq!((p.lambda, p.mu), (f.lambda, f.mu));
        assert_eq!(p.len(), f.len());
    }

    #[test]
    fn quadratic_eigenvalues_and_residuals() {
        let f = quaternionic_family(1, 1, 2);
        let p = polynomial_family(&f, 2, None).unwrap();
        assert_eq!((p.lambda, p.mu), (-4.0 * 2.0 - 2.0, -4.0));
        let check = p.check(&SampleConfig::new(1, 10)).unwrap();
        assert!(check.tau.max <= 1e-7 && check.kappa.max <= 1e-7, "{check:?}");
        assert!((check.lambda_fit.unwrap() + 10.0).abs() < 1e-7);
    }

    #[test]
    fn explicit_generator_product_of_two_members() {
        let f = quaternionic_family(1, 1, 2);
        let prod = Polynomial::new(2, "x0*x1", |x: &[Jet2]| x[0] * x[1]);
        let p = polynomial_family(&f, 2, Some(vec![prod])).unwrap();
        assert_eq!(p.len(), 1);
        let check = p.check(&SampleConfig::new(2, 10)).unwrap();
        assert!(check.tau.max <= 1e-7, "{check:?}");
    }

    #[test]
    fn non_homogeneous_generator_is_rejected() {
        let f = quaternionic_family(1, 1, 2);
        let bad = Polynomial::new(2, "x0^2+x1", |x: &[Jet2]| x[0] * x[0] + x[1]);
        assert!(matches!(
            polynomial_family(&f, 2, Some(vec![bad])),
            Err(Error::NotHomogeneous { degree: 2 })
        ));
        assert!(polynomial_family(&f, 0, None).is_err());
    }

    #[test]
    fn product_with_constant_is_unchanged() {
        let f = quaternionic_family(1, 1, 2);
        let one = EigenFamily::constant(Domain::group(Group::su(2)).unwrap());
        let p = product_family(&f, &one);
        assert_eq!((p.lambda, p.mu), (f.lambda, f.mu));
        assert_eq!(p.domain.dimension(), f.domain.dimension() + 3);
        let check = p.check(&SampleConfig::new(3, 5)).unwrap();
        assert!(check.tau.max <= 1e-8 && check.kappa.max <= 1e-8, "{check:?}");
    }

    #[test]
    fn product_of_two_quaternionic_families() {
        let a = quaternionic_family(1, 1, 2);
        let b = quaternionic_family(1, 1, 1);
        let ab = product_family(&a, &b);
        let ba = product_family(&b, &a);
        assert_eq!((ab.lambda, ab.mu), (-8.0, -2.0));
        assert_eq!((ab.lambda, ab.mu), (ba.lambda, ba.mu));
        let check = ab.check(&SampleConfig::new(4, 5)).unwrap();
        assert!(check.tau.max <= 1e-8 && check.kappa.max <= 1e-8, "{check:?}");
    }

    #[test]
    fn product_tension_decomposes() {
        let f1 = quat_grassmannian_psi(1, 1, 1, 2).unwrap();
        let f2 = quat_grassmannian_psi(1, 1, 3, 1).unwrap();
        let pair = cartan_split(f1.space).unwrap();
        let a = EigenFamily::from_eigenfunctions(&pair, vec![f1.clone()]).unwrap();
        let b = EigenFamily::from_eigenfunctions(&pair, vec![f2.clone()]).unwrap();
        let ab = product_family(&a, &b);
        let cfg = SampleConfig::new(5, 5);
        for i in 0..5 {
            let p = ab.domain.sample(&cfg, i).unwrap();
            let (p1, p2) = (p.submatrix(0, 0, 4, 4), p.submatrix(4, 4, 4, 4));
            let tau = ab.evaluate_at(&p).unwrap().tau(0);
            let t1 = crate::ops::tension(&f1, &p1, &pair.p_basis).unwrap();
            let t2 = crate::ops::tension(&f2, &p2, &pair.p_basis).unwrap();
            let expected = t1 * f2.eval(&p2) + f1.eval(&p1) * t2;
            assert!(relative_residual(tau, expected) <= 1e-9);
        }
    }
}
