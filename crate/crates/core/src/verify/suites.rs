//! Claim suites. Each suite returns its claims in the order of
//! [`super::Target::claim_names`].

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use super::{size_tag, ClaimResult, RunConfig, DEFAULT_TOLERANCE};
use crate::ambient::{
    projective_family, random_sphere_point, sphere_family, AmbientField, ProjectiveCoordinate, SphereCoordinate,
};
use crate::cartan::{inverse_symmetry_residual, quaternionic_closed_form, CartanMap};
use crate::catalog::{default_functions, grassmannian_family_members, Eigenfunction};
use crate::constructions::{polynomial_family, product_family, EigenFamily, FamilyCheck};
use crate::error::Result;
use crate::lie::{
    algebra_basis, canonical, cartan_split, gram_residual, project_onto, square_sum, Group, Space, SpaceKind,
    SymmetricPair,
};
use crate::matrix::{curve_jet, mat_exp, CMatrix, JMatrix, Jet2};
use crate::ops::{
    conformality, directional_jets, directional_matrix_jets, image_frame, pair_sum, relative_residual, ScalarField,
    K_INVARIANCE_TOLERANCE,
};
use crate::sampling::{membership_residual, random_k_point, random_point, SampleConfig};
use crate::stats::{RatioFit, ResidualStats};

const CLOSED_FORM_TOLERANCE: f64 = 1e-12;
const HARMONIC_TOLERANCE: f64 = 1e-9;
const PULLBACK_TOLERANCE: f64 = 1e-10;
const VERTICAL_TOLERANCE: f64 = 1e-12;
const ISOTROPY_TOLERANCE: f64 = 1e-12;
const IMAGE_MEMBERSHIP_TOLERANCE: f64 = 1e-10;
const INVERSE_SYMMETRY_TOLERANCE: f64 = 1e-12;
const POLYNOMIAL_TOLERANCE: f64 = 1e-7;
const SQUARE_SUM_TOLERANCE: f64 = 1e-15;
const ALGEBRA_SUM_TOLERANCE: f64 = 1e-14;
const LEIBNIZ_TOLERANCE: f64 = 1e-9;
const SYMMETRY_TOLERANCE: f64 = 1e-12;
const FD_TOLERANCE: f64 = 1e-5;
const FD_STEP: f64 = 1e-4;
const FD_DIRECTIONS: u64 = 10;
const GRAM_TOLERANCE: f64 = 1e-14;
const EIGENSPACE_TOLERANCE: f64 = 1e-14;
const BRACKET_TOLERANCE: f64 = 1e-12;
const K_FIXED_TOLERANCE: f64 = 1e-10;
const MEMBERSHIP_TOLERANCE: f64 = 1e-10;
const MEMBERSHIP_SAMPLES: u64 = 1000;
const MEMBERSHIP_RADIUS: f64 = 2.0;
const EXPM_TOLERANCE: f64 = 1e-12;
const EXPM_NORM: f64 = 2.0;
const ROTATION_TOLERANCE: f64 = 1e-10;
/// Points per space for the cheap structural properties.
const PROPERTY_POINTS: usize = 20;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Collects the claims of one job.
struct Claims<'a> {
    cfg: &'a RunConfig,
    prefix: String,
    space: String,
    params: String,
    out: Vec<ClaimResult>,
}

impl<'a> Claims<'a> {
    fn new(cfg: &'a RunConfig, prefix: String, space: impl Into<String>, params: impl Into<String>) -> Self {
        Self {
            cfg,
            prefix,
            space: space.into(),
            params: params.into(),
            out: Vec::new(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: &str,
        samples: usize,
        stats: &ResidualStats,
        default_tol: f64,
        expected: Option<f64>,
        measured: Option<f64>,
        note: Option<String>,
    ) {
        let tol = self.cfg.tol_for(default_tol);
        self.out.push(ClaimResult {
            id: format!("{}.{name}", self.prefix),
            space: self.space.clone(),
            params: self.params.clone(),
            samples,
            max_residual: stats.max,
            mean_residual: stats.mean(),
            expected,
            measured,
            tol,
            pass: stats.passes(tol),
            note,
        });
    }

    /// `name` with the stats and fit of an eigenvalue tally.
    fn eigen(&mut self, name: &str, samples: usize, stats: &ResidualStats, fit: &RatioFit, expected: f64, tol: f64) {
        let measured = fit.value().map(|z| z.re);
        self.push(name, samples, stats, tol, Some(expected), measured, None);
    }
}

/// Residuals of `tau = lambda phi` and `kappa = mu phi psi` with best fits.
#[derive(Default)]
struct EigenTally {
    tau: ResidualStats,
    kappa: ResidualStats,
    lambda_fit: RatioFit,
    mu_fit: RatioFit,
}

impl EigenTally {
    fn tau(&mut self, value: Complex64, tau: Complex64, lambda: f64) {
        self.tau.push(relative_residual(tau, value * lambda));
        self.lambda_fit.push(value, tau);
    }

    fn kappa(&mut self, product: Complex64, kappa: Complex64, mu: f64) {
        self.kappa.push(relative_residual(kappa, product * mu));
        self.mu_fit.push(product, kappa);
    }

    fn emit(&self, claims: &mut Claims, samples: usize, lambda: f64, mu: f64, tol: f64) {
        claims.eigen("lambda", samples, &self.tau, &self.lambda_fit, lambda, tol);
        claims.eigen("mu", samples, &self.kappa, &self.mu_fit, mu, tol);
    }
}

fn params_of(space: Space) -> String {
    let (m, n) = space.sizes();
    if space.kind().is_grassmannian() {
        format!("m={m},n={n}")
    } else {
        format!("n={n}")
    }
}

/// Indices of functions grouped by family key, in first-seen order.
fn families(functions: &[Eigenfunction]) -> Vec<Vec<usize>> {
    let mut keys: Vec<&str> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, f) in functions.iter().enumerate() {
        match keys.iter().position(|k| *k == f.family) {
            Some(j) => out[j].push(i),
            None => {
                keys.push(&f.family);
                out.push(vec![i]);
            }
        }
    }
    out
}

/// Everything measured at one sample point of a space.
struct SpaceSample {
    values: Vec<Complex64>,
    direct: Vec<Complex64>,
    horizontal: Vec<Vec<Jet2>>,
    vertical: Vec<Vec<Jet2>>,
    image: Vec<Vec<Jet2>>,
    harmonic: f64,
    pullback: f64,
    stretch: f64,
    vertical_kill: f64,
    isotropy: f64,
    image_membership: f64,
    inverse_symmetry: f64,
    quaternionic: Option<f64>,
}

fn eta_jets(f: &Eigenfunction, maps: &[JMatrix]) -> Vec<Jet2> {
    maps.iter().map(|m| f.eta.eval_generic(m)).collect()
}

/// The Cartan map and its jets are computed once per point; every catalog
/// function `eta o Phi` is then evaluated on those jets.
fn space_sample(
    pair: &SymmetricPair,
    functions: &[Eigenfunction],
    points: &SampleConfig,
    isotropy: &SampleConfig,
    index: u64,
) -> Result<SpaceSample> {
    let p = random_point(pair.group(), points, index)?;
    let map = CartanMap::new(pair);
    let base = map.apply(&p);
    let horizontal = directional_matrix_jets(&map, &p, &pair.p_basis)?;
    let vertical = directional_matrix_jets(&map, &p, &pair.k_basis)?;
    let image = image_frame(pair, &p)
        .iter()
        .map(|w| curve_jet(&base, w))
        .collect::<Result<Vec<_>>>()?;

    let size = pair.matrix_size();
    let mut lap = CMatrix::zeros(size, size);
    for m in horizontal.iter().chain(&vertical) {
        lap = &lap + &m.d2();
    }
    let harmonic = project_onto(&pair.algebra.elements, &(&base.adjoint() * &lap)).max_abs();

    let diffs: Vec<CMatrix> = horizontal.iter().map(JMatrix::d1).collect();
    let mut pullback: f64 = 0.0;
    let mut stretch = 0.0;
    for (a, da) in diffs.iter().enumerate() {
        stretch += da.inner(da);
        for (b, db) in diffs.iter().enumerate().skip(a) {
            let target = if a == b { 4.0 } else { 0.0 };
            pullback = pullback.max((da.inner(db) - target).abs() / 4.0);
        }
    }
    let stretch = stretch / diffs.len().max(1) as f64;
    let vertical_kill = vertical.iter().map(|m| m.d1().max_abs()).fold(0.0, f64::max);

    let k = random_k_point(pair, isotropy, index)?;
    let isotropy = map.apply(&(&p * &k)).distance(&base);
    let quaternionic = match pair.space {
        Space::QuaternionicGrassmannian { m, n } => Some(quaternionic_closed_form(m, n, &p)?.distance(&base)),
        _ => None,
    };

    Ok(SpaceSample {
        values: functions.iter().map(|f| f.eta.eval_generic(&base)).collect(),
        direct: functions.iter().map(|f| f.eval_direct(&p)).collect(),
        horizontal: functions.iter().map(|f| eta_jets(f, &horizontal)).collect(),
        vertical: functions.iter().map(|f| eta_jets(f, &vertical)).collect(),
        image: functions.iter().map(|f| eta_jets(f, &image)).collect(),
        harmonic,
        pullback,
        stretch,
        vertical_kill,
        isotropy,
        image_membership: membership_residual(pair.group(), &base),
        inverse_symmetry: inverse_symmetry_residual(pair, &p),
        quaternionic,
    })
}

fn tension_of(jets: &[Jet2]) -> Complex64 {
    jets.iter().map(|j| j.d2).sum()
}

fn stats_of(values: impl IntoIterator<Item = f64>) -> ResidualStats {
    let mut s = ResidualStats::default();
    for v in values {
        s.push(v);
    }
    s
}

pub(super) fn space_claims(space: Space, cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let pair = cartan_split(space)?;
    let base_cfg = SampleConfig::new(cfg.seed, cfg.samples);
    let functions = default_functions(space, &base_cfg)?;
    let groups = families(&functions);
    let points = base_cfg.derive(&format!("points:{space}"));
    let isotropy = base_cfg.derive(&format!("isotropy:{space}"));
    let samples = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| space_sample(&pair, &functions, &points, &isotropy, i))
        .collect::<Result<Vec<_>>>()?;
    let n_samples = samples.len();
    let (lambda, mu) = space.claimed_eigenvalues();
    let (m, n) = space.sizes();

    let mut eigen = EigenTally::default();
    let mut composition_tau = ResidualStats::default();
    let mut composition_fit = RatioFit::default();
    let mut composition_kappa = ResidualStats::default();
    let mut invariance = ResidualStats::default();
    let mut closed_form = ResidualStats::default();
    let mut image_eigen = EigenTally::default();
    let image_lambda = -((m + n) as f64) / 2.0;
    let image_mu = -0.25;
    let (mut sign_neg, mut sign_pos) = (ResidualStats::default(), ResidualStats::default());

    for s in &samples {
        for (k, &v) in s.values.iter().enumerate() {
            let tau = tension_of(&s.horizontal[k]);
            let tau_image = tension_of(&s.image[k]);
            eigen.tau(v, tau, lambda);
            sign_neg.push(relative_residual(tau, v * -lambda.abs()));
            sign_pos.push(relative_residual(tau, v * lambda.abs()));
            closed_form.push(relative_residual(s.direct[k], v));
            invariance.push(relative_residual(tau, tau + tension_of(&s.vertical[k])));
            composition_tau.push(relative_residual(tau, tau_image * 4.0));
            composition_fit.push(tau_image, tau);
            image_eigen.tau(v, tau_image, image_lambda);
        }
        for family in &groups {
            for (a, &k) in family.iter().enumerate() {
                for &l in &family[a..] {
                    let product = s.values[k] * s.values[l];
                    let kappa = pair_sum(&s.horizontal[k], &s.horizontal[l]);
                    let kappa_image = pair_sum(&s.image[k], &s.image[l]);
                    eigen.kappa(product, kappa, mu);
                    composition_kappa.push(relative_residual(kappa, kappa_image * 4.0));
                    image_eigen.kappa(product, kappa_image, image_mu);
                }
            }
        }
    }

    let mut claims = Claims::new(
        cfg,
        format!("{}.{}", space.kind().slug(), size_tag(space)),
        space.to_string(),
        params_of(space),
    );
    eigen.emit(&mut claims, n_samples, lambda, mu, DEFAULT_TOLERANCE);
    if space.kind() == SpaceKind::SuSp {
        let fit = eigen.lambda_fit.value().map(|z| z.re);
        let negative = fit.is_none_or(|x| x < 0.0);
        let (chosen, other) = if negative { (&sign_neg, &sign_pos) } else { (&sign_pos, &sign_neg) };
        let note = format!(
            "resolved sign: {}; residual with the opposite sign {:.3e}",
            if negative { "negative" } else { "positive" },
            other.max
        );
        claims.push("lambda-sign", n_samples, chosen, DEFAULT_TOLERANCE, None, fit, Some(note));
    }
    claims.push("closed-form", n_samples, &closed_form, CLOSED_FORM_TOLERANCE, None, None, None);
    claims.push(
        "function-k-invariance",
        n_samples,
        &invariance,
        K_INVARIANCE_TOLERANCE,
        None,
        None,
        None,
    );
    let harmonic = stats_of(samples.iter().map(|s| s.harmonic));
    claims.push("harmonic", n_samples, &harmonic, HARMONIC_TOLERANCE, Some(0.0), None, None);
    let pullback = stats_of(samples.iter().map(|s| s.pullback));
    let stretch = samples.iter().map(|s| s.stretch).sum::<f64>() / n_samples as f64;
    claims.push("pullback", n_samples, &pullback, PULLBACK_TOLERANCE, Some(4.0), Some(stretch), None);
    let vertical = stats_of(samples.iter().map(|s| s.vertical_kill));
    claims.push("vertical-kill", n_samples, &vertical, VERTICAL_TOLERANCE, Some(0.0), None, None);
    let isotropy = stats_of(samples.iter().map(|s| s.isotropy));
    claims.push("cartan-k-invariance", n_samples, &isotropy, ISOTROPY_TOLERANCE, None, None, None);
    let membership = stats_of(samples.iter().map(|s| s.image_membership));
    claims.push("image-membership", n_samples, &membership, IMAGE_MEMBERSHIP_TOLERANCE, None, None, None);
    let inverse = stats_of(samples.iter().map(|s| s.inverse_symmetry));
    claims.push("inverse-symmetry", n_samples, &inverse, INVERSE_SYMMETRY_TOLERANCE, None, None, None);
    let fit = composition_fit.value().map(|z| z.re);
    claims.push("composition-tau", n_samples, &composition_tau, DEFAULT_TOLERANCE, Some(4.0), fit, None);
    claims.push("composition-kappa", n_samples, &composition_kappa, DEFAULT_TOLERANCE, Some(4.0), None, None);
    if space.kind() == SpaceKind::QuaternionicGrassmannian {
        let quaternionic = stats_of(samples.iter().filter_map(|s| s.quaternionic));
        claims.push("quaternionic-form", n_samples, &quaternionic, CLOSED_FORM_TOLERANCE, None, None, None);
        claims.eigen(
            "image-tau",
            n_samples,
            &image_eigen.tau,
            &image_eigen.lambda_fit,
            image_lambda,
            DEFAULT_TOLERANCE,
        );
        claims.eigen(
            "image-kappa",
            n_samples,
            &image_eigen.kappa,
            &image_eigen.mu_fit,
            image_mu,
            DEFAULT_TOLERANCE,
        );
    }
    Ok(claims.out)
}

/// Largest entrywise difference.
fn entry_gap(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    Ok(a.try_sub(b)?.max_abs())
}

pub(super) fn square_sum_claims(cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let (mut y, mut x, mut d) = (ResidualStats::default(), ResidualStats::default(), ResidualStats::default());
    let sizes = 2..=8usize;
    for n in sizes.clone() {
        let gens = canonical(n);
        let half = (n as f64 - 1.0) / 2.0;
        let id = CMatrix::identity(n);
        let ys: Vec<CMatrix> = gens.pairs().map(|(r, s)| gens.y(r, s)).collect();
        let xs: Vec<CMatrix> = gens.pairs().map(|(r, s)| gens.x(r, s)).collect();
        let ds: Vec<CMatrix> = (1..=n).map(|t| gens.d(t)).collect();
        y.push(entry_gap(&square_sum(&ys)?, &id.scale(c(-half)))?);
        x.push(entry_gap(&square_sum(&xs)?, &id.scale(c(half)))?);
        d.push(entry_gap(&square_sum(&ds)?, &id)?);
    }
    let mut algebras = ResidualStats::default();
    let mut groups: Vec<Group> = Vec::new();
    for n in 2..=6 {
        groups.extend([Group::so(n), Group::su(n), Group::u(n)]);
    }
    groups.extend((1..=4).map(Group::sp));
    for g in &groups {
        let size = g.matrix_size();
        let expected = -(g.dimension() as f64) / size as f64;
        let sum = square_sum(&algebra_basis(*g)?.elements)?;
        algebras.push(entry_gap(&sum, &CMatrix::identity(size).scale(c(expected)))?);
    }
    let count = sizes.count();
    let mut claims = Claims::new(cfg, "square-sums".into(), "canonical generators", "n=2..8");
    claims.push("y", count, &y, SQUARE_SUM_TOLERANCE, None, None, Some("sum Y^2 = -(n-1)/2 I".into()));
    claims.push("x", count, &x, SQUARE_SUM_TOLERANCE, None, None, Some("sum X^2 = (n-1)/2 I".into()));
    claims.push("d", count, &d, SQUARE_SUM_TOLERANCE, None, None, Some("sum D^2 = I".into()));
    claims.push(
        "algebras",
        groups.len(),
        &algebras,
        ALGEBRA_SUM_TOLERANCE,
        None,
        None,
        Some("sum Z^2 = -(dim g / N) I for so, su, u (n=2..6) and sp (n=1..4)".into()),
    );
    Ok(claims.out)
}

type AmbientOps = fn(&dyn AmbientField, &[Complex64]) -> Result<(Complex64, Complex64)>;
type AmbientPairing = fn(&dyn AmbientField, &dyn AmbientField, &[Complex64]) -> Result<Complex64>;

/// Eigen tallies of ambient families at random points of `S^(2N-1)`.
#[allow(clippy::too_many_arguments)]
fn ambient_claims<F: AmbientField>(
    cfg: &RunConfig,
    prefix: String,
    space: String,
    params: String,
    coords: usize,
    families: &[Vec<F>],
    lambda: f64,
    mu: f64,
    ops: AmbientOps,
    pairing: AmbientPairing,
) -> Result<Vec<ClaimResult>> {
    let points = SampleConfig::new(cfg.seed, cfg.samples).derive(&prefix);
    let per_sample = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let x = random_sphere_point(coords, &points, i);
            let mut tally = EigenTally::default();
            for family in families {
                for (a, f) in family.iter().enumerate() {
                    let (tau, _) = ops(f, &x)?;
                    tally.tau(f.eval(&x), tau, lambda);
                    for g in &family[a..] {
                        tally.kappa(f.eval(&x) * g.eval(&x), pairing(f, g, &x)?, mu);
                    }
                }
            }
            Ok(tally)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = EigenTally::default();
    for t in &per_sample {
        total.tau.merge(&t.tau);
        total.kappa.merge(&t.kappa);
        total.lambda_fit.merge(&t.lambda_fit);
        total.mu_fit.merge(&t.mu_fit);
    }
    let mut claims = Claims::new(cfg, prefix, space, params);
    total.emit(&mut claims, per_sample.len(), lambda, mu, DEFAULT_TOLERANCE);
    Ok(claims.out)
}

pub(super) fn sphere_claims(n: usize, cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let dim = 2 * n - 1;
    ambient_claims(
        cfg,
        format!("sphere.n{n}"),
        format!("S^{dim}"),
        format!("n={n}"),
        n,
        &[sphere_family(n)],
        -(dim as f64),
        -1.0,
        crate::ambient::sphere_ops,
        crate::ambient::sphere_conformality,
    )
}

pub(super) fn projective_claims(n: usize, cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let families = (1..=n)
        .map(|alpha| projective_family(n, alpha))
        .collect::<Result<Vec<Vec<ProjectiveCoordinate>>>>()?;
    ambient_claims(
        cfg,
        format!("cpn.n{n}"),
        format!("CP^{n}"),
        format!("n={n}"),
        n + 1,
        &families,
        -4.0 * (n as f64 + 1.0),
        -4.0,
        crate::ambient::cpn_ops,
        crate::ambient::cpn_conformality,
    )
}

fn indexed_family(space: Space, alpha: usize) -> Result<EigenFamily> {
    let pair = cartan_split(space)?;
    EigenFamily::from_eigenfunctions(&pair, grassmannian_family_members(space, alpha)?)
}

fn family_claims(
    cfg: &RunConfig,
    prefix: String,
    space: String,
    params: String,
    family: &EigenFamily,
    check: &FamilyCheck,
    tol: f64,
) -> Vec<ClaimResult> {
    let mut claims = Claims::new(cfg, prefix, space, params);
    let note = Some(format!("{} members", family.len()));
    claims.push("lambda", check.samples, &check.tau, tol, Some(family.lambda), check.lambda_fit, note.clone());
    claims.push("mu", check.samples, &check.kappa, tol, Some(family.mu), check.mu_fit, note);
    claims.out
}

pub(super) fn polynomial_claims(space: Space, alpha: usize, degree: u32, cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let family = polynomial_family(&indexed_family(space, alpha)?, degree, None)?;
    let prefix = format!("polynomial.{}.{}.alpha{alpha}.d{degree}", space.kind().slug(), size_tag(space));
    let check = family.check(&SampleConfig::new(cfg.seed, cfg.samples).derive(&prefix))?;
    Ok(family_claims(
        cfg,
        prefix,
        space.to_string(),
        format!("{},alpha={alpha},d={degree}", params_of(space)),
        &family,
        &check,
        POLYNOMIAL_TOLERANCE,
    ))
}

/// One factor of a product: an indexed family, or the constant function on a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Indexed { space: Space, alpha: usize },
    Constant(Space),
}

impl Factor {
    fn family(self) -> Result<EigenFamily> {
        match self {
            Factor::Indexed { space, alpha } => indexed_family(space, alpha),
            Factor::Constant(space) => Ok(EigenFamily::constant(crate::constructions::Domain::quotient(
                &cartan_split(space)?,
            ))),
        }
    }

    fn tag(self) -> String {
        match self {
            Factor::Indexed { space, alpha } => format!("{}-{}-alpha{alpha}", space.kind().slug(), size_tag(space)),
            Factor::Constant(space) => format!("constant-{}-{}", space.kind().slug(), size_tag(space)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductCase {
    pub first: Factor,
    pub second: Factor,
}

impl ProductCase {
    pub fn defaults() -> Vec<ProductCase> {
        let quat = Space::QuaternionicGrassmannian { m: 1, n: 1 };
        let complex = Space::ComplexGrassmannian { m: 1, n: 1 };
        vec![
            ProductCase {
                first: Factor::Indexed { space: quat, alpha: 2 },
                second: Factor::Indexed { space: quat, alpha: 1 },
            },
            ProductCase {
                first: Factor::Indexed { space: quat, alpha: 2 },
                second: Factor::Indexed { space: complex, alpha: 1 },
            },
            ProductCase {
                first: Factor::Indexed { space: quat, alpha: 2 },
                second: Factor::Constant(complex),
            },
        ]
    }

    pub fn tag(&self) -> String {
        format!("{}-x-{}", self.first.tag(), self.second.tag())
    }
}

pub(super) fn product_claims(case: &ProductCase, cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let family = product_family(&case.first.family()?, &case.second.family()?);
    let prefix = format!("product.{}", case.tag());
    let check = family.check(&SampleConfig::new(cfg.seed, cfg.samples).derive(&prefix))?;
    Ok(family_claims(
        cfg,
        prefix,
        family.domain.name.clone(),
        case.tag(),
        &family,
        &check,
        DEFAULT_TOLERANCE,
    ))
}

/// Unit-norm random element of an algebra.
fn random_direction(basis: &[CMatrix], cfg: &SampleConfig, index: u64) -> CMatrix {
    let mut rng = cfg.rng(index);
    let (rows, cols) = basis[0].shape();
    let mut z = CMatrix::zeros(rows, cols);
    let mut norm2 = 0.0;
    for b in basis {
        let t: f64 = rng.random_range(-1.0..=1.0);
        norm2 += t * t;
        z = &z + &b.scale(c(t));
    }
    z.scale(c(1.0 / norm2.sqrt().max(f64::MIN_POSITIVE)))
}

/// Relative errors of the jet derivatives of `f` at `p` along `z` against
/// central differences of `f(p exp(sz))` at step [`FD_STEP`].
fn finite_difference_residual(f: &dyn ScalarField, p: &CMatrix, z: &CMatrix) -> Result<f64> {
    let jet = f.eval_jet(&curve_jet(p, z)?);
    let plus = f.eval(&(p * &mat_exp(&z.scale(c(FD_STEP)))?));
    let minus = f.eval(&(p * &mat_exp(&z.scale(c(-FD_STEP)))?));
    let d1 = (plus - minus) / (2.0 * FD_STEP);
    let d2 = (plus - jet.v * 2.0 + minus) / (FD_STEP * FD_STEP);
    Ok(relative_residual(d1, jet.d1).max(relative_residual(d2, jet.d2)))
}

/// Per-space structural checks.
#[derive(Default)]
struct PropertyTally {
    leibniz: ResidualStats,
    symmetry: ResidualStats,
    fd: ResidualStats,
    gram: ResidualStats,
    eigenspaces: ResidualStats,
    brackets: ResidualStats,
    k_fixed: ResidualStats,
}

impl PropertyTally {
    fn merge(&mut self, o: &PropertyTally) {
        self.leibniz.merge(&o.leibniz);
        self.symmetry.merge(&o.symmetry);
        self.fd.merge(&o.fd);
        self.gram.merge(&o.gram);
        self.eigenspaces.merge(&o.eigenspaces);
        self.brackets.merge(&o.brackets);
        self.k_fixed.merge(&o.k_fixed);
    }
}

fn space_properties(space: Space, cfg: &RunConfig) -> Result<PropertyTally> {
    let pair = cartan_split(space)?;
    let base = SampleConfig::new(cfg.seed, cfg.samples).derive(&format!("properties:{space}"));
    let functions = default_functions(space, &base)?;
    let f = &functions[0];
    let g = &functions[functions.len() - 1];
    let basis = &pair.algebra.elements;
    let points = base.derive("points");
    let mut t = PropertyTally::default();
    let product = |q: &JMatrix| f.eval_jet(q) * g.eval_jet(q);
    for i in 0..cfg.samples.min(PROPERTY_POINTS) as u64 {
        let p = random_point(pair.group(), &points, i)?;
        let jf = directional_jets(f, &p, basis)?;
        let jg = directional_jets(g, &p, basis)?;
        let jp = directional_jets(&product, &p, basis)?;
        let (vf, vg) = (f.eval(&p), g.eval(&p));
        let expected = tension_of(&jf) * vg + pair_sum(&jf, &jg) * 2.0 + vf * tension_of(&jg);
        t.leibniz.push(relative_residual(tension_of(&jp), expected));
        let kfg = conformality(f, g, &p, basis)?;
        let kgf = conformality(g, f, &p, basis)?;
        t.symmetry.push(relative_residual(kfg, kgf));
        let k = random_k_point(&pair, &base.derive("isotropy"), i)?;
        t.k_fixed.push(pair.involution.apply(&k).distance(&k));
    }
    let directions = base.derive("directions");
    for i in 0..FD_DIRECTIONS {
        let p = random_point(pair.group(), &points, 1000 + i)?;
        let z = random_direction(basis, &directions, i);
        t.fd.push(finite_difference_residual(f, &p, &z)?);
    }
    t.gram.push(pair.algebra.orthonormality_residual());
    let split: Vec<CMatrix> = pair.k_basis.iter().chain(&pair.p_basis).cloned().collect();
    t.gram.push(gram_residual(&split));
    t.eigenspaces.push(pair.eigenspace_residual());
    t.brackets.push(pair.bracket_residual());
    Ok(t)
}

/// Largest relative change of `(tau, kappa)` of a coordinate function under
/// a unitary change of ambient coordinates applied to both the function and the point.
fn rotation_residual(
    f: &dyn AmbientField,
    x: &[Complex64],
    u: &CMatrix,
    ops: AmbientOps,
) -> Result<f64> {
    let ui = u.adjoint();
    let rotated = |z: &[Jet2]| {
        let back: Vec<Jet2> = (0..z.len())
            .map(|r| (0..z.len()).map(|s| z[s].scale(ui[(r, s)])).sum())
            .collect();
        f.eval_jet(&back)
    };
    let ux: Vec<Complex64> = (0..x.len()).map(|r| (0..x.len()).map(|s| u[(r, s)] * x[s]).sum()).collect();
    let (t0, k0) = ops(f, x)?;
    let (t1, k1) = ops(&rotated, &ux)?;
    Ok(relative_residual(t1, t0).max(relative_residual(k1, k0)))
}

pub(super) fn property_claims(cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
    let spaces: Vec<Space> = SpaceKind::ALL.into_iter().flat_map(super::default_sizes).collect();
    let tallies = spaces
        .par_iter()
        .map(|s| space_properties(*s, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut t = PropertyTally::default();
    for x in &tallies {
        t.merge(x);
    }

    let mut groups: Vec<Group> = Vec::new();
    for s in &spaces {
        if !groups.contains(&s.group()) {
            groups.push(s.group());
        }
    }
    let base = SampleConfig::new(cfg.seed, cfg.samples).derive("properties:sampling");
    let wide = SampleConfig {
        radius: MEMBERSHIP_RADIUS,
        ..base
    };
    let membership = groups
        .par_iter()
        .map(|g| {
            let cfg = wide.derive(&g.to_string());
            let mut s = ResidualStats::default();
            for i in 0..MEMBERSHIP_SAMPLES {
                s.push(membership_residual(*g, &random_point(*g, &cfg, i)?));
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut member = ResidualStats::default();
    for s in &membership {
        member.merge(s);
    }

    let expm_cfg = base.derive("expm");
    let mut expm = ResidualStats::default();
    for i in 0..cfg.samples as u64 {
        let size = 2 + (i as usize % 7);
        let v = crate::sampling::random_complex_vector(&expm_cfg, i, size * size);
        let a = CMatrix::from_vec(size, size, v);
        let a = a.scale(c(EXPM_NORM / a.norm()));
        let prod = &mat_exp(&a)? * &mat_exp(&a.scale(c(-1.0)))?;
        expm.push(prod.distance(&CMatrix::identity(size)));
    }

    let rot_cfg = base.derive("rotation");
    let mut rotation = ResidualStats::default();
    for i in 0..cfg.samples.min(PROPERTY_POINTS) as u64 {
        let x = random_sphere_point(2, &rot_cfg, i);
        let u = random_point(Group::u(2), &rot_cfg.derive("unitary"), i)?;
        rotation.push(rotation_residual(&SphereCoordinate { j: 1 }, &x, &u, crate::ambient::sphere_ops)?);
        rotation.push(rotation_residual(
            &ProjectiveCoordinate { j: 1, k: 2 },
            &x,
            &u,
            crate::ambient::cpn_ops,
        )?);
    }

    let n_spaces = spaces.len();
    let points = n_spaces * cfg.samples.min(PROPERTY_POINTS);
    let mut claims = Claims::new(cfg, "properties".into(), "all default spaces", "");
    claims.push("leibniz", points, &t.leibniz, LEIBNIZ_TOLERANCE, None, None, None);
    claims.push("kappa-symmetry", points, &t.symmetry, SYMMETRY_TOLERANCE, None, None, None);
    claims.push(
        "jet-vs-fd",
        n_spaces * FD_DIRECTIONS as usize,
        &t.fd,
        FD_TOLERANCE,
        None,
        None,
        Some(format!("central differences, h = {FD_STEP:e}")),
    );
    claims.push("gram", n_spaces, &t.gram, GRAM_TOLERANCE, None, None, None);
    claims.push("involution-eigenspaces", n_spaces, &t.eigenspaces, EIGENSPACE_TOLERANCE, None, None, None);
    claims.push("brackets", n_spaces, &t.brackets, BRACKET_TOLERANCE, None, None, None);
    claims.push("k-fixed", points, &t.k_fixed, K_FIXED_TOLERANCE, None, None, None);
    claims.push(
        "membership",
        groups.len() * MEMBERSHIP_SAMPLES as usize,
        &member,
        MEMBERSHIP_TOLERANCE,
        None,
        None,
        Some(format!("radius {MEMBERSHIP_RADIUS}")),
    );
    claims.push("expm-inverse", cfg.samples, &expm, EXPM_TOLERANCE, None, None, None);
    claims.push("ambient-rotation", 2 * cfg.samples.min(PROPERTY_POINTS), &rotation, ROTATION_TOLERANCE, None, None, None);
    Ok(claims.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{image_ops, quotient_values};

    /// The shared-jet path agrees with the generic operators.
    #[test]
    fn sample_jets_match_generic_operators() {
        for space in [Space::QuaternionicGrassmannian { m: 1, n: 1 }, Space::SuSp { n: 2 }] {
            let pair = cartan_split(space).unwrap();
            let cfg = SampleConfig::new(3, 2);
            let functions = default_functions(space, &cfg).unwrap();
            let s = space_sample(&pair, &functions, &cfg, &cfg.derive("k"), 1).unwrap();
            let p = random_point(pair.group(), &cfg, 1).unwrap();
            for (k, f) in functions.iter().enumerate() {
                let q = quotient_values(&pair, f, &p).unwrap();
                assert!((tension_of(&s.horizontal[k]) - q.tau_horizontal).norm() < 1e-12);
                assert!((pair_sum(&s.horizontal[k], &s.horizontal[k]) - q.kappa_horizontal).norm() < 1e-12);
                let (tau_n, kappa_n) = image_ops(&pair, &f.eta, &p).unwrap();
                assert!((tension_of(&s.image[k]) - tau_n).norm() < 1e-12);
                assert!((pair_sum(&s.image[k], &s.image[k]) - kappa_n).norm() < 1e-12);
                assert!((s.values[k] - f.eval(&p)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn families_group_by_key() {
        let space = Space::ComplexGrassmannian { m: 1, n: 1 };
        let fns = default_functions(space, &SampleConfig::default()).unwrap();
        assert_eq!(families(&fns), vec![vec![0], vec![1]]);
    }

    #[test]
    fn tolerance_override_applies_to_every_claim() {
        let cfg = RunConfig {
            samples: 3,
            tol: Some(1e-20),
            ..RunConfig::default()
        };
        let claims = space_claims(Space::QuaternionicGrassmannian { m: 1, n: 1 }, &cfg).unwrap();
        assert!(claims.iter().all(|c| c.tol == 1e-20));
        assert!(claims.iter().any(|c| !c.pass));
    }
}
