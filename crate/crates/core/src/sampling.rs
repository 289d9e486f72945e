//! Deterministic sampling of group points.
//!
//! A point is `exp(sum c_k Z_k)` over an orthonormal algebra basis with the
//! coefficients drawn uniformly from `[-radius, radius]`. Every sample is a
//! pure function of `(seed, stream, index)`: the generator is ChaCha8 keyed
//! by the seed, with the sample index selecting the ChaCha stream, so samples
//! can be produced in any order or in parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lie::{algebra_basis, Group, GroupKind, SymmetricPair};
use crate::matrix::{mat_exp, symplectic_form, CMatrix};

pub const GENERATOR_NAME: &str = "ChaCha8Rng(seed, stream=index)";
pub const DEFAULT_RADIUS: f64 = 1.5;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub radius: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            count: 100,
            radius: DEFAULT_RADIUS,
        }
    }
}

impl SampleConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        Self {
            seed,
            count,
            ..Self::default()
        }
    }

    /// Independent configuration for a named purpose, so that different
    /// suites never share random streams.
    pub fn derive(&self, purpose: &str) -> Self {
        Self {
            seed: mix(self.seed, purpose),
            ..*self
        }
    }

    /// Generator for sample `index`.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// FNV-1a over the purpose string, folded into the seed.
fn mix(seed: u64, purpose: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in purpose.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Exponential of a random combination of `basis` with coefficients in `[-radius, radius]`.
pub fn random_exp(basis: &[CMatrix], size: usize, cfg: &SampleConfig, index: u64) -> Result<CMatrix> {
    let mut rng = cfg.rng(index);
    let mut a = CMatrix::zeros(size, size);
    if cfg.radius > 0.0 {
        for z in basis {
            let c: f64 = rng.random_range(-cfg.radius..=cfg.radius);
            a = &a + &z.scale(c.into());
        }
    }
    mat_exp(&a)
}

pub fn random_point(group: Group, cfg: &SampleConfig, index: u64) -> Result<CMatrix> {
    let basis = algebra_basis(group)?;
    random_exp(&basis.elements, group.matrix_size(), cfg, index)
}

/// Random element of the isotropy subgroup `K` of a symmetric pair.
pub fn random_k_point(pair: &SymmetricPair, cfg: &SampleConfig, index: u64) -> Result<CMatrix> {
    random_exp(&pair.k_basis, pair.matrix_size(), cfg, index)
}

/// Uniform random vector in `[-1, 1]^len + i [-1, 1]^len`.
pub fn random_complex_vector(cfg: &SampleConfig, index: u64, len: usize) -> Vec<num_complex::Complex64> {
    let mut rng = cfg.rng(index);
    (0..len)
        .map(|_| num_complex::Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
        .collect()
}

/// Largest Frobenius residual of the group's defining equations:
/// unitarity, plus realness and `det = 1` for `SO`, `det = 1` for `SU`, and
/// `q^t J q = J` for `Sp`.
pub fn membership_residual(group: Group, q: &CMatrix) -> f64 {
    let size = group.matrix_size();
    if q.shape() != (size, size) {
        return f64::INFINITY;
    }
    let identity = CMatrix::identity(size);
    let unitary = (q * &q.adjoint()).distance(&identity);
    let one = num_complex::Complex64::new(1.0, 0.0);
    match group.kind {
        GroupKind::Unitary => unitary,
        GroupKind::SpecialUnitary => unitary.max((q.determinant() - one).norm()),
        GroupKind::SpecialOrthogonal => {
            let real = q.distance(&q.conj()) / 2.0;
            let orth = (&q.transpose() * q).distance(&identity);
            unitary.max(real).max(orth).max((q.determinant() - one).norm())
        }
        GroupKind::Symplectic => {
            let j = symplectic_form(group.n);
            unitary.max((&(&q.transpose() * &j) * q).distance(&j))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn zero_radius_gives_identity() {
        let cfg = SampleConfig {
            radius: 0.0,
            ..SampleConfig::default()
        };
        assert_eq!(random_point(Group::su(3), &cfg, 7).unwrap(), CMatrix::identity(3));
    }

    #[test]
    fn sampling_is_deterministic() {
        let cfg = SampleConfig::new(42, 1);
        let a = random_point(Group::so(3), &cfg, 0).unwrap();
        let b = random_point(Group::so(3), &cfg, 0).unwrap();
        assert_eq!(a, b);
        let c = random_point(Group::so(3), &cfg, 1).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn symplectic_samples_are_members() {
        let cfg = SampleConfig::new(3, 20);
        for i in 0..20 {
            let q = random_point(Group::sp(2), &cfg, i).unwrap();
            assert!(membership_residual(Group::sp(2), &q) <= 1e-10);
        }
    }

    #[test]
    fn membership_residual_examples() {
        assert_eq!(membership_residual(Group::u(3), &CMatrix::identity(3)), 0.0);
        let theta = 0.7f64;
        let d = CMatrix::diagonal(&[Complex64::from_polar(1.0, theta), Complex64::from_polar(1.0, -theta)]);
        assert!(membership_residual(Group::su(2), &d) < 1e-15);
        let mut q = CMatrix::identity(3);
        q[(0, 1)] = Complex64::new(1e-3, 0.0);
        // ||q^t q - I||_F = sqrt(2 e^2 + e^4) for q = I + e E_12.
        let e: f64 = 1e-3;
        let r = membership_residual(Group::so(3), &q);
        assert!((r - (2.0 * e * e + e.powi(4)).sqrt()).abs() < 1e-15, "{r}");
    }

    #[test]
    fn derived_configs_differ() {
        let cfg = SampleConfig::new(0, 10);
        assert_ne!(cfg.derive("a").seed, cfg.derive("b").seed);
        assert_eq!(cfg.derive("a"), cfg.derive("a"));
    }
}
