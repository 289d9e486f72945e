//! Verification harness: runs every claim suite and collects a report.
//!
//! Claims are grouped into jobs (one per space and size, one per auxiliary
//! suite). Jobs and their sample loops run in parallel; results are gathered
//! in plan order, so a report is a pure function of its [`RunConfig`].

mod emit;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::{Space, SpaceKind};
use crate::sampling::GENERATOR_NAME;

pub use emit::{emit, emit_to_path, Format};
pub use report::{format_float, ClaimResult, ReportHeader, VerificationReport};

/// Default tolerance of eigenvalue claims.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
/// Largest matrix size accepted from `--m` / `--n`.
pub const MAX_MATRIX_SIZE: usize = 12;

/// A selectable group of claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Linear eigenfunctions and the Cartan map on one family of spaces.
    Space(SpaceKind),
    /// Square sums of canonical generators.
    SquareSums,
    /// Coordinate functions on odd spheres.
    Sphere,
    /// Homogeneous coordinate quotients on complex projective space.
    ProjectiveSpace,
    /// Polynomial families of degree 2 and 3.
    Polynomial,
    /// Products of two families.
    Product,
    /// Structural properties of the numerical machinery.
    Properties,
}

impl Target {
    pub fn all() -> Vec<Target> {
        SpaceKind::ALL
            .into_iter()
            .map(Target::Space)
            .chain([
                Target::SquareSums,
                Target::Sphere,
                Target::ProjectiveSpace,
                Target::Polynomial,
                Target::Product,
                Target::Properties,
            ])
            .collect()
    }

    pub fn slug(self) -> &'static str {
        match self {
            Target::Space(kind) => kind.slug(),
            Target::SquareSums => "square-sums",
            Target::Sphere => "sphere",
            Target::ProjectiveSpace => "cpn",
            Target::Polynomial => "polynomial",
            Target::Product => "product",
            Target::Properties => "properties",
        }
    }

    pub fn description(self) -> String {
        match self {
            Target::Space(kind) => {
                let (l, m) = kind.symbolic_eigenvalues();
                format!("{} with (lambda, mu) = ({l}, {m})", kind.symbolic_name())
            }
            Target::SquareSums => "sums of squares of canonical generators".into(),
            Target::Sphere => "z_j/|z| on S^(2n-1), (-(2n-1), -1)".into(),
            Target::ProjectiveSpace => "z_j conj(z_k)/|z|^2 on CP^n, (-4(n+1), -4)".into(),
            Target::Polynomial => "degree-d monomials, (d lambda + d(d-1) mu, d^2 mu)".into(),
            Target::Product => "products of families, (lambda1 + lambda2, mu1 + mu2)".into(),
            Target::Properties => "Leibniz rule, jets vs finite differences, bases, brackets, sampling".into(),
        }
    }

    /// Final component of every claim id the target produces.
    pub fn claim_names(self) -> &'static [&'static str] {
        match self {
            Target::Space(SpaceKind::SuSp) => &[
                "lambda",
                "mu",
                "lambda-sign",
                "closed-form",
                "function-k-invariance",
                "harmonic",
                "pullback",
                "vertical-kill",
                "cartan-k-invariance",
                "image-membership",
                "inverse-symmetry",
                "composition-tau",
                "composition-kappa",
            ],
            Target::Space(SpaceKind::QuaternionicGrassmannian) => &[
                "lambda",
                "mu",
                "closed-form",
                "function-k-invariance",
                "harmonic",
                "pullback",
                "vertical-kill",
                "cartan-k-invariance",
                "image-membership",
                "inverse-symmetry",
                "composition-tau",
                "composition-kappa",
                "quaternionic-form",
                "image-tau",
                "image-kappa",
            ],
            Target::Space(_) => &[
                "lambda",
                "mu",
                "closed-form",
                "function-k-invariance",
                "harmonic",
                "pullback",
                "vertical-kill",
                "cartan-k-invariance",
                "image-membership",
                "inverse-symmetry",
                "composition-tau",
                "composition-kappa",
            ],
            Target::SquareSums => &["y", "x", "d", "algebras"],
            Target::Sphere | Target::ProjectiveSpace | Target::Polynomial | Target::Product => {
                &["lambda", "mu"]
            }
            Target::Properties => &[
                "leibniz",
                "kappa-symmetry",
                "jet-vs-fd",
                "gram",
                "involution-eigenspaces",
                "brackets",
                "k-fixed",
                "membership",
                "expm-inverse",
                "ambient-rotation",
            ],
        }
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Target::all()
            .into_iter()
            .find(|t| t.slug() == s)
            .ok_or_else(|| Error::Config(format!("unknown target `{s}`")))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// Parse a comma-separated selection; `all` selects every target.
pub fn parse_targets(s: &str) -> Result<Vec<Target>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Target::all());
        } else {
            out.push(part.parse()?);
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|t| seen.insert(*t));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub targets: Vec<Target>,
    /// Overrides the default sizes of the selected spaces.
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub samples: usize,
    /// Replaces every claim's own tolerance when set.
    pub tol: Option<f64>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            targets: Target::all(),
            m: None,
            n: None,
            samples: 100,
            tol: None,
            seed: 0,
        }
    }
}

/// Sizes checked when no override is given.
pub fn default_sizes(kind: SpaceKind) -> Vec<Space> {
    let pairs: &[(usize, usize)] = match kind {
        SpaceKind::QuaternionicGrassmannian | SpaceKind::ComplexGrassmannian => &[(1, 1), (1, 2), (2, 2)],
        SpaceKind::RealGrassmannian => &[(2, 1), (1, 2), (2, 2)],
        SpaceKind::SuSo | SpaceKind::SoU => &[(0, 2), (0, 3)],
        SpaceKind::SpU => &[(0, 1), (0, 2)],
        SpaceKind::SuSp => &[(0, 2)],
    };
    pairs.iter().map(|&(m, n)| kind.with_sizes(m, n)).collect()
}

impl RunConfig {
    pub fn only(targets: Vec<Target>) -> Self {
        Self {
            targets,
            ..Self::default()
        }
    }

    /// Tolerance for a claim whose own tolerance is `default`.
    pub fn tol_for(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    /// Spaces checked for one kind, after applying `--m` / `--n`.
    pub fn sizes(&self, kind: SpaceKind) -> Vec<Space> {
        if kind.is_grassmannian() {
            if self.m.is_none() && self.n.is_none() {
                return default_sizes(kind);
            }
            vec![kind.with_sizes(self.m.unwrap_or(1), self.n.unwrap_or(1))]
        } else {
            match self.n {
                Some(n) => vec![kind.with_sizes(0, n)],
                None => default_sizes(kind),
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be positive".into()));
        }
        if let Some(t) = self.tol {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::Config(format!("tolerance must be positive and finite, got {t}")));
            }
        }
        for target in &self.targets {
            if let Target::Space(kind) = target {
                for space in self.sizes(*kind) {
                    validate_space(space)?;
                }
            }
        }
        Ok(())
    }
}

fn validate_space(space: Space) -> Result<()> {
    space
        .validate()
        .map_err(|e| Error::Config(e.to_string()))?;
    let size = space.group().matrix_size();
    if size > MAX_MATRIX_SIZE {
        return Err(Error::Config(format!(
            "{space} uses {size}x{size} matrices; the limit is {MAX_MATRIX_SIZE}"
        )));
    }
    if let Space::RealGrassmannian { m, n } = space {
        if m < 2 && n < 2 {
            return Err(Error::Config(format!(
                "{space}: linear eigenfunctions need a diagonal block of size at least 2"
            )));
        }
    }
    Ok(())
}

/// One unit of parallel work.
#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Space(Space),
    SquareSums,
    Sphere(usize),
    ProjectiveSpace(usize),
    Polynomial { space: Space, alpha: usize, degree: u32 },
    Product(suites::ProductCase),
    Properties,
}

impl Job {
    pub fn target(&self) -> Target {
        match self {
            Job::Space(s) => Target::Space(s.kind()),
            Job::SquareSums => Target::SquareSums,
            Job::Sphere(_) => Target::Sphere,
            Job::ProjectiveSpace(_) => Target::ProjectiveSpace,
            Job::Polynomial { .. } => Target::Polynomial,
            Job::Product(_) => Target::Product,
            Job::Properties => Target::Properties,
        }
    }

    /// Prefix shared by the ids of the job's claims.
    pub fn id_prefix(&self) -> String {
        match self {
            Job::Space(s) => format!("{}.{}", s.kind().slug(), size_tag(*s)),
            Job::SquareSums => "square-sums".into(),
            Job::Sphere(n) => format!("sphere.n{n}"),
            Job::ProjectiveSpace(n) => format!("cpn.n{n}"),
            Job::Polynomial { space, alpha, degree } => format!(
                "polynomial.{}.{}.alpha{alpha}.d{degree}",
                space.kind().slug(),
                size_tag(*space)
            ),
            Job::Product(case) => format!("product.{}", case.tag()),
            Job::Properties => "properties".into(),
        }
    }

    fn run(&self, cfg: &RunConfig) -> Result<Vec<ClaimResult>> {
        match self {
            Job::Space(space) => suites::space_claims(*space, cfg),
            Job::SquareSums => suites::square_sum_claims(cfg),
            Job::Sphere(n) => suites::sphere_claims(*n, cfg),
            Job::ProjectiveSpace(n) => suites::projective_claims(*n, cfg),
            Job::Polynomial { space, alpha, degree } => suites::polynomial_claims(*space, *alpha, *degree, cfg),
            Job::Product(case) => suites::product_claims(case, cfg),
            Job::Properties => suites::property_claims(cfg),
        }
    }
}

/// `m1n2` or `n2`.
pub fn size_tag(space: Space) -> String {
    let (m, n) = space.sizes();
    if space.kind().is_grassmannian() {
        format!("m{m}n{n}")
    } else {
        format!("n{n}")
    }
}

/// The jobs a configuration runs, in report order.
pub fn plan(cfg: &RunConfig) -> Result<Vec<Job>> {
    cfg.validate()?;
    let mut jobs = Vec::new();
    for target in &cfg.targets {
        match target {
            Target::Space(kind) => jobs.extend(cfg.sizes(*kind).into_iter().map(Job::Space)),
            Target::SquareSums => jobs.push(Job::SquareSums),
            Target::Sphere => jobs.extend([2, 3].map(Job::Sphere)),
            Target::ProjectiveSpace => jobs.extend([1, 2].map(Job::ProjectiveSpace)),
            Target::Polynomial => {
                for (space, alpha) in [
                    (Space::QuaternionicGrassmannian { m: 1, n: 1 }, 2),
                    (Space::ComplexGrassmannian { m: 1, n: 2 }, 1),
                ] {
                    for degree in [2, 3] {
                        jobs.push(Job::Polynomial { space, alpha, degree });
                    }
                }
            }
            Target::Product => jobs.extend(suites::ProductCase::defaults().into_iter().map(Job::Product)),
            Target::Properties => jobs.push(Job::Properties),
        }
    }
    Ok(jobs)
}

/// Run every selected claim.
pub fn run(cfg: &RunConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let jobs = plan(cfg)?;
    let results: Vec<Result<Vec<ClaimResult>>> = jobs.par_iter().map(|job| job.run(cfg)).collect();
    let mut claims = Vec::new();
    for r in results {
        claims.extend(r?);
    }
    Ok(VerificationReport {
        header: header(cfg),
        claims,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

pub fn header(cfg: &RunConfig) -> ReportHeader {
    ReportHeader {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        generator: GENERATOR_NAME.into(),
        seed: cfg.seed,
        samples: cfg.samples,
        tol_override: cfg.tol,
        targets: cfg.targets.iter().map(|t| t.slug().to_string()).collect(),
    }
}
