//! Operators on spheres and complex projective spaces from the ambient
//! Euclidean space, without any Lie group machinery.
//!
//! A function on `S^{2N-1}` is given by its degree-0 homogeneous extension to
//! `C^N \ {0}`. Radial derivatives of such an extension vanish, so at `|x| = 1`
//! the Euclidean Laplacian and gradient pairing, summed over the `2N` real
//! axes `z_k + t` and `z_k + i t`, are the intrinsic `tau` and `kappa` of the
//! unit sphere.
//!
//! `CP^n` is handled through the Hopf fibration `S^{2n+1} -> CP^n`. Its fibres
//! are totally geodesic great circles, so for a circle-invariant function the
//! operators on `CP^n` are the sphere operators minus the contribution of the
//! fibre direction `d/dt f(e^{it} x)`, which itself vanishes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Jet2;
use crate::sampling::{random_complex_vector, SampleConfig};

/// Points closer than this to the unit sphere are used as they are.
pub const SPHERE_TOLERANCE: f64 = 1e-12;
/// Points within this distance are normalised; farther ones are rejected.
pub const NORMALIZE_TOLERANCE: f64 = 1e-6;
/// Relative tolerance for the homogeneity and circle-invariance probes.
pub const INVARIANCE_TOLERANCE: f64 = 1e-12;

const PROBE_SCALES: [f64; 3] = [0.37, 1.9, 7.3];
const PROBE_ANGLES: [f64; 3] = [0.7, 2.3, -1.1];

/// A complex-valued function on `C^N \ {0}`, evaluated on jets of the coordinates.
pub trait AmbientField: Send + Sync {
    fn eval_jet(&self, z: &[Jet2]) -> Jet2;

    fn eval(&self, z: &[Complex64]) -> Complex64 {
        let jets: Vec<Jet2> = z.iter().map(|&c| Jet2::constant(c)).collect();
        self.eval_jet(&jets).v
    }
}

impl<F> AmbientField for F
where
    F: Fn(&[Jet2]) -> Jet2 + Send + Sync,
{
    fn eval_jet(&self, z: &[Jet2]) -> Jet2 {
        self(z)
    }
}

/// `|z|^2` with `z` and `conj(z)` both differentiated.
pub fn norm_squared(z: &[Jet2]) -> Jet2 {
    z.iter().map(|&w| w * w.conj()).sum()
}

/// `z_j / |z|`, 1-based.
#[derive(Clone, Copy, Debug)]
pub struct SphereCoordinate {
    pub j: usize,
}

impl AmbientField for SphereCoordinate {
    fn eval_jet(&self, z: &[Jet2]) -> Jet2 {
        z[self.j - 1] * norm_squared(z).sqrt().recip()
    }
}

/// `z_j conj(z_k) / |z|^2`, 1-based.
#[derive(Clone, Copy, Debug)]
pub struct ProjectiveCoordinate {
    pub j: usize,
    pub k: usize,
}

impl AmbientField for ProjectiveCoordinate {
    fn eval_jet(&self, z: &[Jet2]) -> Jet2 {
        z[self.j - 1] * z[self.k - 1].conj() * norm_squared(z).recip()
    }
}

/// `{z_j / |z| : 1 <= j <= n}` on `S^{2n-1}`.
pub fn sphere_family(n: usize) -> Vec<SphereCoordinate> {
    (1..=n).map(|j| SphereCoordinate { j }).collect()
}

/// `{z_j conj(z_k) / |z|^2 : 1 <= j <= alpha < k <= n+1}` on `CP^n`.
pub fn projective_family(n: usize, alpha: usize) -> Result<Vec<ProjectiveCoordinate>> {
    if alpha == 0 || alpha > n {
        return Err(Error::IndexOutOfRange {
            name: "alpha",
            value: alpha,
            max: n,
        });
    }
    Ok((1..=alpha)
        .flat_map(|j| (alpha + 1..=n + 1).map(move |k| ProjectiveCoordinate { j, k }))
        .collect())
}

/// `x` itself if on the unit sphere, `x / |x|` with `true` if within
/// [`NORMALIZE_TOLERANCE`], otherwise [`Error::OffSphere`].
pub fn to_sphere(x: &[Complex64]) -> Result<(Vec<Complex64>, bool)> {
    let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let off = (norm - 1.0).abs();
    if off <= SPHERE_TOLERANCE {
        Ok((x.to_vec(), false))
    } else if off <= NORMALIZE_TOLERANCE {
        Ok((x.iter().map(|z| z / norm).collect(), true))
    } else {
        Err(Error::OffSphere { norm })
    }
}

/// Random point of the unit sphere in `C^n`.
pub fn random_sphere_point(n: usize, cfg: &SampleConfig, index: u64) -> Vec<Complex64> {
    let v = random_complex_vector(cfg, index, n);
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Jets of `f` along the `2N` real coordinate axes through `x`.
pub fn axis_jets(f: &dyn AmbientField, x: &[Complex64]) -> Vec<Jet2> {
    let base: Vec<Jet2> = x.iter().map(|&c| Jet2::constant(c)).collect();
    let mut out = Vec::with_capacity(2 * x.len());
    for k in 0..x.len() {
        for dir in [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)] {
            let mut z = base.clone();
            z[k] = Jet2::new(x[k], dir, Complex64::new(0.0, 0.0));
            out.push(f.eval_jet(&z));
        }
    }
    out
}

/// Jet of `f` along `t -> (1 + t) x`.
pub fn radial_jet(f: &dyn AmbientField, x: &[Complex64]) -> Jet2 {
    let z: Vec<Jet2> = x.iter().map(|&c| Jet2::new(c, c, Complex64::new(0.0, 0.0))).collect();
    f.eval_jet(&z)
}

/// Jet of `f` along the Hopf circle `t -> e^{it} x`.
pub fn hopf_jet(f: &dyn AmbientField, x: &[Complex64]) -> Jet2 {
    let i = Complex64::new(0.0, 1.0);
    let z: Vec<Jet2> = x.iter().map(|&c| Jet2::new(c, i * c, -c)).collect();
    f.eval_jet(&z)
}

/// `f(c x) = f(x)` for a few `c > 0`.
pub fn check_degree_zero(f: &dyn AmbientField, x: &[Complex64]) -> Result<()> {
    let v = f.eval(x);
    for c in PROBE_SCALES {
        let y: Vec<Complex64> = x.iter().map(|z| z * c).collect();
        let d = (f.eval(&y) - v).norm();
        if d > INVARIANCE_TOLERANCE * v.norm().max(1.0) {
            return Err(Error::NotInvariant(format!("f(c x) != f(x) at c = {c} (difference {d:e})")));
        }
    }
    Ok(())
}

/// `f(e^{i theta} x) = f(x)` for a few angles.
pub fn check_circle_invariant(f: &dyn AmbientField, x: &[Complex64]) -> Result<()> {
    let v = f.eval(x);
    for theta in PROBE_ANGLES {
        let u = Complex64::from_polar(1.0, theta);
        let y: Vec<Complex64> = x.iter().map(|z| z * u).collect();
        let d = (f.eval(&y) - v).norm();
        if d > INVARIANCE_TOLERANCE * v.norm().max(1.0) {
            return Err(Error::NotInvariant(format!(
                "f(e^(i theta) x) != f(x) at theta = {theta} (difference {d:e})"
            )));
        }
    }
    Ok(())
}

fn sum_d2(jets: &[Jet2]) -> Complex64 {
    jets.iter().map(|j| j.d2).sum()
}

fn pair_d1(a: &[Jet2], b: &[Jet2]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.d1 * y.d1).sum()
}

/// `(tau(f)(x), kappa(f, f)(x))` on the unit sphere.
pub fn sphere_ops(f: &dyn AmbientField, x: &[Complex64]) -> Result<(Complex64, Complex64)> {
    let (x, _) = to_sphere(x)?;
    check_degree_zero(f, &x)?;
    let jets = axis_jets(f, &x);
    Ok((sum_d2(&jets), pair_d1(&jets, &jets)))
}

/// `kappa(f, g)(x)` on the unit sphere.
pub fn sphere_conformality(f: &dyn AmbientField, g: &dyn AmbientField, x: &[Complex64]) -> Result<Complex64> {
    let (x, _) = to_sphere(x)?;
    check_degree_zero(f, &x)?;
    check_degree_zero(g, &x)?;
    Ok(pair_d1(&axis_jets(f, &x), &axis_jets(g, &x)))
}

/// `(tau(f), kappa(f, f))` on `CP^n` at the class of `x` in `S^{2n+1}`.
pub fn cpn_ops(f: &dyn AmbientField, x: &[Complex64]) -> Result<(Complex64, Complex64)> {
    let (x, _) = to_sphere(x)?;
    check_circle_invariant(f, &x)?;
    let (tau, kappa) = sphere_ops(f, &x)?;
    let h = hopf_jet(f, &x);
    Ok((tau - h.d2, kappa - h.d1 * h.d1))
}

/// `kappa(f, g)` on `CP^n` at the class of `x`.
pub fn cpn_conformality(f: &dyn AmbientField, g: &dyn AmbientField, x: &[Complex64]) -> Result<Complex64> {
    let (x, _) = to_sphere(x)?;
    check_circle_invariant(f, &x)?;
    check_circle_invariant(g, &x)?;
    let kappa = sphere_conformality(f, g, &x)?;
    Ok(kappa - hopf_jet(f, &x).d1 * hopf_jet(g, &x).d1)
}

/// Euclidean Laplacian of `f` at any nonzero `x`, with no sphere check.
pub fn euclidean_laplacian(f: &dyn AmbientField, x: &[Complex64]) -> Complex64 {
    sum_d2(&axis_jets(f, x))
}
